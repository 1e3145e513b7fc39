use super::{closure, PermGroup, Permutation, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::groupcat::is_group;
use crate::qcore::{require_twisted_ward, CayleyTable};

/// The left multiplication group and the three displacement groups of a
/// left quasigroup.
#[derive(Clone, Debug)]
pub struct MultiplicationGroups {
    /// generated by all `L_x`
    pub lmlt: PermGroup,
    /// generated by all `L_x L_y^-1`
    pub dis_plus: PermGroup,
    /// generated by all `L_x^-1 L_y`
    pub dis_minus: PermGroup,
    /// generated by both kinds of displacements
    pub dis: PermGroup,
}

/// The left translations `L_x` as permutations.
pub fn left_translations(t: &CayleyTable) -> Result<Vec<Permutation>> {
    t.rows()
        .enumerate()
        .map(|(x, row)| {
            Permutation::from_images(row.to_vec())
                .map_err(|_| Error::Structural(format!("row {x} is not a permutation")))
        })
        .collect()
}

/// Generators `L_e L_x^-1` for fixed `e = 0`; they generate all of `Dis+`.
fn positive_displacements(ls: &[Permutation]) -> Vec<Permutation> {
    let e = &ls[0];
    ls.iter().map(|l| e.compose(&l.inverse())).filter(|p| !p.is_identity()).collect()
}

/// Generators `L_x^-1 L_e` for fixed `e = 0`.
fn negative_displacements(ls: &[Permutation]) -> Vec<Permutation> {
    let e = &ls[0];
    ls.iter().map(|l| l.inverse().compose(e)).filter(|p| !p.is_identity()).collect()
}

pub fn multiplication_groups(t: &CayleyTable) -> Result<MultiplicationGroups> {
    multiplication_groups_with_cap(t, DEFAULT_CAP)
}

pub fn multiplication_groups_with_cap(t: &CayleyTable, cap: usize) -> Result<MultiplicationGroups> {
    let n = t.n();
    let ls = left_translations(t)?;
    let plus = positive_displacements(&ls);
    let minus = negative_displacements(&ls);
    let both: Vec<Permutation> = plus.iter().chain(minus.iter()).cloned().collect();
    Ok(MultiplicationGroups {
        lmlt: closure(n, &ls, cap)?,
        dis_plus: closure(n, &plus, cap)?,
        dis_minus: closure(n, &minus, cap)?,
        dis: closure(n, &both, cap)?,
    })
}

/// `Dis+` of a left quasigroup.
pub fn positive_displacement_group(t: &CayleyTable) -> Result<PermGroup> {
    let ls = left_translations(t)?;
    closure(t.n(), &positive_displacements(&ls), DEFAULT_CAP)
}

/// A quasigroup is isotopic to a group iff its positive displacement group
/// acts regularly.
pub fn is_group_isotope(t: &CayleyTable) -> Result<bool> {
    t.require_quasigroup()?;
    // Dis+ is transitive-regular only if its order is n; stop the closure early otherwise.
    match closure(t.n(), &positive_displacements(&left_translations(t)?), t.n()) {
        Ok(g) => Ok(g.is_regular()),
        Err(Error::Overflow { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Result of [`dis_element_form`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisElementForm {
    /// The unique square.
    pub e: usize,
    /// `Dis = {L_x^-1 L_e}` as sets, and `x <> y = (x/e)*(e\y)` is a group
    /// with identity `e`.
    pub verified: bool,
}

/// For a twisted Ward quasigroup: checks that the displacement group is
/// exactly `{L_x^-1 L_e : x}` and that the isotope `x <> y = (x/e)*(e\y)` is
/// a group with identity `e`.
pub fn dis_element_form(t: &CayleyTable) -> Result<DisElementForm> {
    t.require_quasigroup()?;
    require_twisted_ward(t)?;
    let n = t.n();
    let e = t.at(0, 0);
    if (0..n).any(|x| t.at(x, x) != e) {
        return Err(Error::Consistency("squaring map of a twisted Ward quasigroup is not constant".into()));
    }
    let ls = left_translations(t)?;
    let groups = multiplication_groups(t)?;
    let mut expected: Vec<Permutation> = ls.iter().map(|l| l.inverse().compose(&ls[e])).collect();
    expected.sort_unstable();
    expected.dedup();
    let sets_agree = groups.dis.elements() == expected.as_slice();

    let diamond = isotope_group_table(t, e)?;
    let group_ok = match is_group(&diamond) {
        Ok(_) => (0..n).all(|x| diamond.at(e, x) == x && diamond.at(x, e) == x),
        Err(_) => false,
    };
    Ok(DisElementForm { e, verified: sets_agree && group_ok })
}

/// `x <> y = (x / e) * (e \ y)`.
pub(crate) fn isotope_group_table(t: &CayleyTable, e: usize) -> Result<CayleyTable> {
    let ld = t.left_division_table()?;
    let rd = t.right_division_table()?;
    CayleyTable::from_fn(t.n(), |x, y| t.at(rd.at(x, e), ld.at(e, y)))
}
