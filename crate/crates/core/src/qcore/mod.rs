//! Cayley-table algebra: divisions, identity checking, the Cayley and
//! squaring kernels, congruences, the quadrangle criterion and canonical
//! forms.

mod canon;
pub mod fixtures;
mod identity;
mod kernel;
mod quadrangle;
mod table;

pub use canon::{canonical_form, canonical_labeling, find_isomorphism, shell_sequence, table_isomorphic};
pub use identity::{check_identity, identity_witness, IdentityKind};
pub(crate) use identity::require_twisted_ward;
pub use kernel::{
    cayley_kernel, is_congruence, kernel_size_report, squaring_kernel, squaring_map, KernelReport,
    Partition,
};
pub use quadrangle::quadrangle_criterion;
pub use table::{CayleyTable, StructureFlags};
pub(crate) use table::{content_lines, parse_numbers};

pub fn classify_structure(t: &CayleyTable) -> StructureFlags {
    t.classify()
}
