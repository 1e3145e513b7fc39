use std::collections::HashMap;
use std::hash::Hash;

use super::identity::require_twisted_ward;
use super::CayleyTable;
use crate::error::{Error, Result};

/// A partition of `0..n`. Blocks are sorted internally and ordered by their
/// least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    /// Groups elements with equal keys.
    pub fn from_key<K: Eq + Hash>(n: usize, mut key: impl FnMut(usize) -> K) -> Self {
        let mut index: HashMap<K, usize> = HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = Vec::with_capacity(n);
        for x in 0..n {
            let b = *index.entry(key(x)).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(x);
            block_of.push(b);
        }
        Partition { blocks, block_of }
    }

    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut owner = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Input("empty block".into()));
            }
            for &x in block {
                if x >= n {
                    return Err(Error::Input(format!("element {x} out of range 0..{n}")));
                }
                if owner[x] != usize::MAX {
                    return Err(Error::Input(format!("element {x} lies in two blocks")));
                }
                owner[x] = i;
            }
        }
        if let Some(x) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::Input(format!("element {x} is in no block")));
        }
        Ok(Self::from_key(n, |x| owner[x]))
    }

    pub fn singletons(n: usize) -> Self {
        Self::from_key(n, |x| x)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }
}

/// `x ~ y` iff rows `x` and `y` are equal.
pub fn cayley_kernel(t: &CayleyTable) -> Partition {
    Partition::from_key(t.n(), |x| t.row(x).to_vec())
}

/// `x = y` iff `x*x = y*y`.
pub fn squaring_kernel(t: &CayleyTable) -> Partition {
    Partition::from_key(t.n(), |x| t.at(x, x))
}

pub fn squaring_map(t: &CayleyTable) -> Vec<usize> {
    t.squaring_map()
}

/// Whether `p` is compatible with the operation and its left division.
pub fn is_congruence(t: &CayleyTable, p: &Partition) -> Result<bool> {
    if p.degree() != t.n() {
        return Err(Error::Input(format!(
            "partition of {} points for a table of order {}",
            p.degree(),
            t.n()
        )));
    }
    let ld = t.left_division_table()?;
    let n = t.n();
    let blocks = p.len();
    // block of (x op y) keyed by (block x, block y); must be single-valued
    for table in [t, &ld] {
        let mut seen = vec![usize::MAX; blocks * blocks];
        for x in 0..n {
            for y in 0..n {
                let key = p.block_of(x) * blocks + p.block_of(y);
                let b = p.block_of(table.at(x, y));
                if seen[key] == usize::MAX {
                    seen[key] = b;
                } else if seen[key] != b {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Sizes of the two kernels of a twisted Ward left quasigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    /// Size of each Cayley-kernel block, blocks ordered by least element.
    pub block_sizes_sim: Vec<usize>,
    /// Size of each squaring-kernel block, blocks ordered by least element.
    pub block_sizes_equiv: Vec<usize>,
    /// Number of Cayley-kernel blocks (distinct rows).
    pub sim_classes: usize,
    /// Number of squaring-kernel blocks (distinct squares).
    pub equiv_classes: usize,
    /// Every squaring block has `sim_classes` elements.
    pub equiv_uniform: bool,
    /// Every Cayley block has `equiv_classes` elements.
    pub sim_uniform: bool,
    /// `n = sim_classes * equiv_classes`.
    pub product_law_holds: bool,
}

impl KernelReport {
    pub fn all_laws_hold(&self) -> bool {
        self.equiv_uniform && self.sim_uniform && self.product_law_holds
    }
}

pub fn kernel_size_report(t: &CayleyTable) -> Result<KernelReport> {
    require_twisted_ward(t)?;
    let sim = cayley_kernel(t);
    let equiv = squaring_kernel(t);
    let block_sizes_sim = sim.block_sizes();
    let block_sizes_equiv = equiv.block_sizes();
    Ok(KernelReport {
        equiv_uniform: block_sizes_equiv.iter().all(|&s| s == sim.len()),
        sim_uniform: block_sizes_sim.iter().all(|&s| s == equiv.len()),
        product_law_holds: t.n() == sim.len() * equiv.len(),
        sim_classes: sim.len(),
        equiv_classes: equiv.len(),
        block_sizes_sim,
        block_sizes_equiv,
    })
}
