//! Finite groups given by Cayley tables: recognition, enumeration up to
//! isomorphism, and the counts `q(n)` and `p(n)`.

use std::fmt;

use rayon::prelude::*;

use crate::enumerate::enumerate_tw_left_quasigroups;
use crate::error::{Error, Result};
use crate::permgrp::automorphism_group;
use crate::qcore::{canonical_form, CayleyTable};
use crate::search::{self, Law, SearchConfig};

pub const MAX_GROUP_ORDER: usize = 12;

/// A group table normalized so that element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FiniteGroup {
    table: CayleyTable,
}

/// Why a table is not a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupFailure {
    NotQuasigroup,
    /// `(x*y)*z != x*(y*z)`
    NotAssociative { x: usize, y: usize, z: usize },
    NoIdentity,
}

impl fmt::Display for GroupFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFailure::NotQuasigroup => f.write_str("not a quasigroup"),
            GroupFailure::NotAssociative { x, y, z } => {
                write!(f, "not associative at (x, y, z) = ({x}, {y}, {z})")
            }
            GroupFailure::NoIdentity => f.write_str("no two-sided identity"),
        }
    }
}

/// Checks the group axioms in the order: quasigroup, associativity, identity.
/// On success the identity is relabeled to 0.
pub fn is_group(t: &CayleyTable) -> std::result::Result<FiniteGroup, GroupFailure> {
    if !t.is_quasigroup() {
        return Err(GroupFailure::NotQuasigroup);
    }
    let n = t.n();
    for x in 0..n {
        for y in 0..n {
            let xy = t.at(x, y);
            for z in 0..n {
                if t.at(xy, z) != t.at(x, t.at(y, z)) {
                    return Err(GroupFailure::NotAssociative { x, y, z });
                }
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|x| t.at(e, x) == x && t.at(x, e) == x))
        .ok_or(GroupFailure::NoIdentity)?;
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, e);
    Ok(FiniteGroup { table: t.relabel(&swap) })
}

impl FiniteGroup {
    pub fn from_table(t: &CayleyTable) -> Result<Self> {
        is_group(t).map_err(|f| Error::Input(format!("not a group: {f}")))
    }

    /// The cyclic group `Z_n` with `x*y = x + y mod n`.
    pub fn cyclic(n: usize) -> Self {
        FiniteGroup {
            table: CayleyTable::from_fn(n, |x, y| (x + y) % n).unwrap(),
        }
    }

    /// Direct product; the element `(a, b)` is `a * |h| + b`.
    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order();
        let table = CayleyTable::from_fn(self.order() * m, |x, y| {
            self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
        })
        .unwrap();
        FiniteGroup { table }
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.n()
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table.at(x, y)
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.table.row(x).iter().position(|&v| v == 0).unwrap()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Whether `images` is an automorphism.
    pub fn is_automorphism(&self, images: &[usize]) -> bool {
        let n = self.order();
        images.len() == n
            && crate::permgrp::Permutation::from_images(images.to_vec()).is_ok()
            && (0..n).all(|x| (0..n).all(|y| images[self.mul(x, y)] == self.mul(images[x], images[y])))
    }

    /// Whether `images` is an endomorphism.
    pub fn is_endomorphism(&self, images: &[usize]) -> bool {
        let n = self.order();
        images.len() == n
            && images.iter().all(|&v| v < n)
            && (0..n).all(|x| (0..n).all(|y| images[self.mul(x, y)] == self.mul(images[x], images[y])))
    }
}

/// The shared table format with a `# identity 0` comment line.
impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# identity 0")?;
        write!(f, "{}", self.table)
    }
}

fn check_range(n: usize) -> Result<()> {
    if !(1..=MAX_GROUP_ORDER).contains(&n) {
        return Err(Error::Range { n, min: 1, max: MAX_GROUP_ORDER });
    }
    Ok(())
}

/// All groups of order `n` up to isomorphism, each in canonical form, sorted.
pub fn enumerate_groups(n: usize) -> Result<Vec<FiniteGroup>> {
    check_range(n)?;
    let cfg = SearchConfig {
        n,
        law: Law::Associative,
        latin_columns: true,
        identity_zero: true,
    };
    let classes = search::collect(cfg, None, |t| Some(canonical_form(t)))?;
    classes
        .into_iter()
        .map(|t| {
            is_group(&t).map_err(|f| Error::Consistency(format!("search produced a non-group: {f}")))
        })
        .collect()
}

/// Number of conjugacy classes of `Aut(g)`.
pub fn automorphism_class_count(g: &FiniteGroup) -> usize {
    automorphism_group(g.table()).conjugacy_classes().len()
}

/// `q(n)`: sum over groups `G` of order `n` of the number of conjugacy
/// classes of `Aut(G)`, i.e. the number of twisted Ward quasigroups of
/// order `n` up to isomorphism.
pub fn q_count(n: usize) -> Result<usize> {
    Ok(enumerate_groups(n)?.par_iter().map(automorphism_class_count).sum())
}

/// Number of partitions of `n`, by dynamic programming over the largest part.
pub fn partition_number(n: usize) -> u128 {
    // ways[m] = partitions of m into parts <= current part size
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            ways[m] += ways[m - part];
        }
    }
    ways[n]
}

/// One column of the counts table. `ell` is `None` when not computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountsTable {
    pub n: usize,
    pub ell: Option<usize>,
    pub q: usize,
    pub p: u128,
}

impl fmt::Display for CountsTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ell {
            Some(ell) => write!(f, "n={} ell={} q={} p={}", self.n, ell, self.q, self.p),
            None => write!(f, "n={} ell=? q={} p={}", self.n, self.q, self.p),
        }
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Assembles `(ell, q, p)` for order `n`. `ell` comes from exhaustive
/// enumeration when `with_ell` is set; enumeration errors (including the time
/// budget) propagate.
pub fn counts_row(n: usize, with_ell: Option<std::time::Duration>) -> Result<CountsTable> {
    let q = q_count(n)?;
    let p = partition_number(n);
    let ell = match with_ell {
        Some(budget) => Some(enumerate_tw_left_quasigroups(n, Some(budget))?.total),
        None => None,
    };
    let row = CountsTable { n, ell, q, p };
    if let Some(ell) = ell {
        if n > 1 && (ell as u128) < q as u128 + p {
            return Err(Error::Consistency(format!("{row}: ell < q + p")));
        }
        if is_prime(n) && (ell as u128 != q as u128 + p || q != n - 1) {
            return Err(Error::Consistency(format!("{row}: prime order but ell != q + p = n - 1 + p")));
        }
    }
    Ok(row)
}
