//! Permutations and small permutation groups held as explicit element sets.

mod auto;
mod group;
mod mult;
mod perm;

pub use auto::automorphism_group;
pub use group::{closure, ConjugacyClass, PermGroup, DEFAULT_CAP};
pub use mult::{
    dis_element_form, is_group_isotope, left_translations, multiplication_groups,
    multiplication_groups_with_cap, positive_displacement_group, DisElementForm,
    MultiplicationGroups,
};
pub(crate) use mult::isotope_group_table;
pub use perm::Permutation;

/// Conjugacy classes of `g`. See [`PermGroup::conjugacy_classes`].
pub fn conjugacy_classes(g: &PermGroup) -> Vec<ConjugacyClass> {
    g.conjugacy_classes()
}

pub fn is_regular(g: &PermGroup) -> bool {
    g.is_regular()
}
