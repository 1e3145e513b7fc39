//! Cell-by-cell backtracking over partial Cayley tables with identity
//! propagation, shared by group enumeration and twisted Ward enumeration.
//!
//! Rows are always kept injective (left quasigroup); columns optionally.
//! Whenever a cell is assigned, every instance of the law touching that cell
//! is re-evaluated: a violated instance fails the branch, and an instance
//! with exactly one unknown outermost product forces that product.
//!
//! Symmetry is broken with the least-number heuristic: elements that appear
//! nowhere in the partial table are interchangeable, so only the smallest of
//! them is tried as a new value.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::qcore::CayleyTable;

const EMPTY: u8 = u8::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Law {
    /// `(x*y)*(x*z) = (y*y)*(y*z)`
    TwistedWard,
    /// `(x*y)*z = x*(y*z)`
    Associative,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct SearchConfig {
    pub n: usize,
    pub law: Law,
    pub latin_columns: bool,
    /// Element 0 is a two-sided identity.
    pub identity_zero: bool,
}

#[derive(Clone)]
struct Partial {
    cfg: SearchConfig,
    n: usize,
    cells: Vec<u8>,
    row_used: Vec<u32>,
    col_used: Vec<u32>,
    /// `row_inv[x*n + v] = y` when `x*y = v`
    row_inv: Vec<u8>,
    row_free: Vec<u8>,
    col_free: Vec<u8>,
    trail: Vec<u16>,
    queue: Vec<u16>,
    order: std::sync::Arc<Vec<u16>>,
}

impl Partial {
    fn new(cfg: SearchConfig) -> Option<Self> {
        let n = cfg.n;
        assert!((1..=16).contains(&n), "search supports orders 1..=16");
        let mut order = Vec::with_capacity(n * n);
        for s in 0..n {
            for i in 0..s {
                order.push((i * n + s) as u16);
            }
            for j in 0..=s {
                order.push((s * n + j) as u16);
            }
        }
        let mut p = Partial {
            cfg,
            n,
            cells: vec![EMPTY; n * n],
            row_used: vec![0; n],
            col_used: vec![0; n],
            row_inv: vec![EMPTY; n * n],
            row_free: vec![n as u8; n],
            col_free: vec![n as u8; n],
            trail: Vec::with_capacity(n * n),
            queue: Vec::with_capacity(n * n),
            order: std::sync::Arc::new(order),
        };
        if cfg.identity_zero {
            for y in 0..n {
                if !p.assign(0, y, y as u8) || !p.assign(y, 0, y as u8) {
                    return None;
                }
            }
        }
        if p.propagate() {
            Some(p)
        } else {
            None
        }
    }

    #[inline]
    fn get(&self, x: usize, y: usize) -> u8 {
        self.cells[x * self.n + y]
    }

    fn assign(&mut self, x: usize, y: usize, v: u8) -> bool {
        let idx = x * self.n + y;
        let cur = self.cells[idx];
        if cur != EMPTY {
            return cur == v;
        }
        let bit = 1u32 << v;
        if self.row_used[x] & bit != 0 {
            return false;
        }
        if self.cfg.latin_columns && self.col_used[y] & bit != 0 {
            return false;
        }
        self.cells[idx] = v;
        self.row_used[x] |= bit;
        self.col_used[y] |= bit;
        self.row_inv[x * self.n + v as usize] = y as u8;
        self.row_free[x] -= 1;
        self.col_free[y] -= 1;
        self.trail.push(idx as u16);
        self.queue.push(idx as u16);
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let idx = self.trail.pop().unwrap() as usize;
            let (x, y) = (idx / self.n, idx % self.n);
            let v = self.cells[idx];
            let bit = 1u32 << v;
            self.cells[idx] = EMPTY;
            self.row_used[x] &= !bit;
            self.col_used[y] &= !bit;
            self.row_inv[x * self.n + v as usize] = EMPTY;
            self.row_free[x] += 1;
            self.col_free[y] += 1;
        }
        self.queue.clear();
    }

    /// Equates the products `a*b` and `c*d` where both factors are known.
    #[inline]
    fn equate(&mut self, a: u8, b: u8, c: u8, d: u8) -> bool {
        let l = self.get(a as usize, b as usize);
        let r = self.get(c as usize, d as usize);
        match (l == EMPTY, r == EMPTY) {
            (false, false) => l == r,
            (false, true) => self.assign(c as usize, d as usize, l),
            (true, false) => self.assign(a as usize, b as usize, r),
            (true, true) => true,
        }
    }

    fn tw_instance(&mut self, x: usize, y: usize, z: usize) -> bool {
        if x == y {
            return true;
        }
        let u = self.get(x, y);
        let v = self.get(x, z);
        let s = self.get(y, y);
        let w = self.get(y, z);
        if u == EMPTY || v == EMPTY || s == EMPTY || w == EMPTY {
            return true;
        }
        self.equate(u, v, s, w)
    }

    fn assoc_instance(&mut self, x: usize, y: usize, z: usize) -> bool {
        let u = self.get(x, y);
        let v = self.get(y, z);
        if u == EMPTY || v == EMPTY {
            return true;
        }
        self.equate(u, z as u8, x as u8, v)
    }

    fn check_cell(&mut self, idx: usize) -> bool {
        let n = self.n;
        let (a, b) = (idx / n, idx % n);
        match self.cfg.law {
            Law::TwistedWard => {
                for t in 0..n {
                    // (x,y) = (a,b); (x,z) = (a,b); (y,z) = (a,b)
                    if !self.tw_instance(a, b, t) || !self.tw_instance(a, t, b) || !self.tw_instance(t, a, b) {
                        return false;
                    }
                }
                if a == b {
                    for x in 0..n {
                        for z in 0..n {
                            if !self.tw_instance(x, a, z) {
                                return false;
                            }
                        }
                    }
                }
                // (a,b) as the outer product of the left side: x*y = a, x*z = b
                for x in 0..n {
                    let y = self.row_inv[x * n + a];
                    let z = self.row_inv[x * n + b];
                    if y != EMPTY && z != EMPTY && !self.tw_instance(x, y as usize, z as usize) {
                        return false;
                    }
                }
                // (a,b) as the outer product of the right side: y*y = a, y*z = b
                for y in 0..n {
                    if self.get(y, y) as usize != a {
                        continue;
                    }
                    let z = self.row_inv[y * n + b];
                    if z == EMPTY {
                        continue;
                    }
                    for x in 0..n {
                        if !self.tw_instance(x, y, z as usize) {
                            return false;
                        }
                    }
                }
            }
            Law::Associative => {
                for t in 0..n {
                    // (x,y) = (a,b); (y,z) = (a,b)
                    if !self.assoc_instance(a, b, t) || !self.assoc_instance(t, a, b) {
                        return false;
                    }
                }
                for t in 0..n {
                    // (x*y, z) = (a, b)
                    let y = self.row_inv[t * n + a];
                    if y != EMPTY && !self.assoc_instance(t, y as usize, b) {
                        return false;
                    }
                    // (x, y*z) = (a, b)
                    let z = self.row_inv[t * n + b];
                    if z != EMPTY && !self.assoc_instance(a, t, z as usize) {
                        return false;
                    }
                }
            }
        }
        // last free cell of a row or column
        if self.row_free[a] == 1 {
            let y = (0..n).find(|&y| self.get(a, y) == EMPTY).unwrap();
            let v = (!self.row_used[a] & ((1u32 << n) - 1)).trailing_zeros() as u8;
            if !self.assign(a, y, v) {
                return false;
            }
        }
        if self.cfg.latin_columns && self.col_free[b] == 1 {
            let x = (0..n).find(|&x| self.get(x, b) == EMPTY).unwrap();
            let v = (!self.col_used[b] & ((1u32 << n) - 1)).trailing_zeros() as u8;
            if !self.assign(x, b, v) {
                return false;
            }
        }
        true
    }

    fn propagate(&mut self) -> bool {
        while let Some(idx) = self.queue.pop() {
            if !self.check_cell(idx as usize) {
                self.queue.clear();
                return false;
            }
        }
        true
    }

    fn next_cell(&self) -> Option<usize> {
        self.order.iter().map(|&i| i as usize).find(|&i| self.cells[i] == EMPTY)
    }

    /// Values worth trying at `idx` under the least-number heuristic.
    fn candidates(&self, idx: usize) -> Vec<u8> {
        let n = self.n;
        let (x, y) = (idx / n, idx % n);
        let mut mentioned: u32 = (1 << x) | (1 << y);
        if self.cfg.identity_zero {
            mentioned |= 1;
        }
        for &i in &self.trail {
            let i = i as usize;
            let (a, b) = (i / n, i % n);
            if self.cfg.identity_zero && (a == 0 || b == 0) {
                continue;
            }
            mentioned |= (1 << a) | (1 << b) | (1 << self.cells[i]);
        }
        let mut blocked = self.row_used[x];
        if self.cfg.latin_columns {
            blocked |= self.col_used[y];
        }
        let mut out = Vec::new();
        let mut fresh_taken = false;
        for v in 0..n {
            if blocked & (1 << v) != 0 {
                continue;
            }
            if mentioned & (1 << v) != 0 {
                out.push(v as u8);
            } else if !fresh_taken {
                fresh_taken = true;
                out.push(v as u8);
            }
        }
        out
    }

    fn children(&mut self) -> Vec<Partial> {
        let Some(idx) = self.next_cell() else {
            return Vec::new();
        };
        let (x, y) = (idx / self.n, idx % self.n);
        let mut out = Vec::new();
        for v in self.candidates(idx) {
            let mark = self.trail.len();
            if self.assign(x, y, v) && self.propagate() {
                out.push(self.clone());
            }
            self.undo(mark);
        }
        out
    }

    fn is_complete(&self) -> bool {
        self.trail.len() == self.n * self.n
    }

    fn to_table(&self) -> CayleyTable {
        CayleyTable::new(self.n, self.cells.iter().map(|&v| v as usize).collect()).unwrap()
    }

    /// Depth-first search of this subtree; `leaf` sees every complete table.
    fn solve(&mut self, leaf: &mut dyn FnMut(&CayleyTable), ctl: &Control) -> bool {
        if ctl.tick() {
            return false;
        }
        let Some(idx) = self.next_cell() else {
            leaf(&self.to_table());
            return true;
        };
        let (x, y) = (idx / self.n, idx % self.n);
        for v in self.candidates(idx) {
            let mark = self.trail.len();
            if self.assign(x, y, v) && self.propagate() && !self.solve(leaf, ctl) {
                self.undo(mark);
                return false;
            }
            self.undo(mark);
        }
        true
    }
}

struct Control {
    deadline: Option<Instant>,
    stop: AtomicBool,
    nodes: AtomicUsize,
}

impl Control {
    /// True once the deadline has passed.
    fn tick(&self) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return true;
        }
        let count = self.nodes.fetch_add(1, Ordering::Relaxed);
        if count % 4096 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.stop.store(true, Ordering::Relaxed);
                    return true;
                }
            }
        }
        false
    }
}

/// Splits the tree into independent subtrees, searches them in parallel, and
/// collects `key(table)` for every complete table into one sorted set.
///
/// `key` returns `None` to drop a table.
pub(crate) fn collect<K>(
    cfg: SearchConfig,
    deadline: Option<Instant>,
    key: K,
) -> Result<BTreeSet<CayleyTable>>
where
    K: Fn(&CayleyTable) -> Option<CayleyTable> + Sync,
{
    let Some(root) = Partial::new(cfg) else {
        return Ok(BTreeSet::new());
    };
    let target = 64 * rayon::current_num_threads().max(1);
    let mut frontier = vec![root];
    let mut done: Vec<Partial> = Vec::new();
    while !frontier.is_empty() && frontier.len() + done.len() < target {
        let mut next = Vec::new();
        for mut p in frontier {
            if p.is_complete() {
                done.push(p);
            } else {
                next.extend(p.children());
            }
        }
        frontier = next;
    }
    frontier.extend(done);
    let total = frontier.len();
    let ctl = Control {
        deadline,
        stop: AtomicBool::new(false),
        nodes: AtomicUsize::new(0),
    };
    let completed = AtomicUsize::new(0);
    let sets: Vec<BTreeSet<CayleyTable>> = frontier
        .into_par_iter()
        .map(|mut unit| {
            let mut found = BTreeSet::new();
            let finished = unit.solve(
                &mut |t| {
                    if let Some(k) = key(t) {
                        found.insert(k);
                    }
                },
                &ctl,
            );
            if finished {
                completed.fetch_add(1, Ordering::Relaxed);
            }
            found
        })
        .collect();
    let completed = completed.into_inner();
    if completed < total {
        return Err(Error::Budget { completed, total });
    }
    Ok(sets.into_iter().flatten().collect())
}
