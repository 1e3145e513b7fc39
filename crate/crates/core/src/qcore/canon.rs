//! Canonical forms of Cayley tables under simultaneous relabeling.
//!
//! Entries are compared in *shell order*: positions are grouped by
//! `max(row, col)`, and each shell `s` is read row-major, i.e.
//! `(0,s), (1,s), .., (s-1,s), (s,0), .., (s,s)`. The canonical form is the
//! relabeled table whose shell-order sequence is lexicographically least.
//!
//! The search assigns new labels in increasing order. A label is either
//! forced, because an entry inside the already-labeled square evaluates to
//! an unlabeled element (the least choice is always the next fresh label),
//! or chosen, when a shell starts and its index has no preimage yet. Only
//! the second case branches, so tables generated by few elements (groups,
//! quasigroups) have a search tree of roughly `n * |Aut|` leaves.

use super::CayleyTable;

const NONE: usize = usize::MAX;

/// Row-major positions in shell order.
fn shell_positions(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n);
    for s in 0..n {
        for i in 0..s {
            out.push((i, s));
        }
        for j in 0..=s {
            out.push((s, j));
        }
    }
    out
}

struct Search<'a> {
    t: &'a CayleyTable,
    n: usize,
    positions: Vec<(usize, usize)>,
    /// label -> element
    elem_of: Vec<usize>,
    /// element -> label
    label_of: Vec<usize>,
    count: usize,
    seq: Vec<usize>,
    best: Option<(Vec<usize>, Vec<usize>)>,
    /// Position at which the current path became strictly smaller than `best`.
    less_at: Option<usize>,
    generation: u64,
}

impl<'a> Search<'a> {
    fn new(t: &'a CayleyTable) -> Self {
        let n = t.n();
        Search {
            t,
            n,
            positions: shell_positions(n),
            elem_of: vec![NONE; n],
            label_of: vec![NONE; n],
            count: 0,
            seq: vec![0; n * n],
            best: None,
            less_at: None,
            generation: 0,
        }
    }

    fn assign(&mut self, elem: usize) -> usize {
        let label = self.count;
        self.label_of[elem] = label;
        self.elem_of[label] = elem;
        self.count += 1;
        label
    }

    fn unassign_to(&mut self, mark: usize) {
        while self.count > mark {
            self.count -= 1;
            let e = self.elem_of[self.count];
            self.label_of[e] = NONE;
            self.elem_of[self.count] = NONE;
        }
    }

    fn descend(&mut self, s: usize) {
        if s == self.n {
            let better = match &self.best {
                None => true,
                Some(_) => self.less_at.is_some(),
            };
            if better {
                self.best = Some((self.seq.clone(), self.elem_of.clone()));
                self.less_at = None;
                self.generation += 1;
            }
            return;
        }
        if self.count == s {
            for u in 0..self.n {
                if self.label_of[u] == NONE {
                    self.assign(u);
                    self.process_shell(s);
                    self.unassign_to(s);
                }
            }
        } else {
            self.process_shell(s);
        }
    }

    fn process_shell(&mut self, s: usize) {
        let mark = self.count;
        let entry_less = self.less_at;
        let entry_gen = self.generation;
        let start = s * s;
        let mut pruned = false;
        for p in start..start + 2 * s + 1 {
            let (i, j) = self.positions[p];
            let v = self.t.at(self.elem_of[i], self.elem_of[j]);
            let val = match self.label_of[v] {
                NONE => self.assign(v),
                l => l,
            };
            self.seq[p] = val;
            if self.less_at.is_none() {
                if let Some((best, _)) = &self.best {
                    if val > best[p] {
                        pruned = true;
                        break;
                    }
                    if val < best[p] {
                        self.less_at = Some(p);
                    }
                }
            }
        }
        if !pruned {
            self.descend(s + 1);
        }
        self.unassign_to(mark);
        self.less_at = if self.generation != entry_gen { None } else { entry_less };
    }
}

/// The canonical form of `t` together with the relabeling that produces it:
/// `map[x]` is the new name of element `x`.
pub fn canonical_labeling(t: &CayleyTable) -> (CayleyTable, Vec<usize>) {
    let mut search = Search::new(t);
    search.descend(0);
    let (_, elem_of) = search.best.expect("search visits at least one leaf");
    let mut map = vec![0; t.n()];
    for (label, &e) in elem_of.iter().enumerate() {
        map[e] = label;
    }
    (t.relabel(&map), map)
}

pub fn canonical_form(t: &CayleyTable) -> CayleyTable {
    canonical_labeling(t).0
}

/// The table's entries listed in shell order (the order canonical forms minimize).
pub fn shell_sequence(t: &CayleyTable) -> Vec<usize> {
    shell_positions(t.n()).into_iter().map(|(i, j)| t.at(i, j)).collect()
}

pub fn table_isomorphic(a: &CayleyTable, b: &CayleyTable) -> bool {
    a.n() == b.n() && canonical_form(a) == canonical_form(b)
}

/// An isomorphism `a -> b` as an image vector, if one exists.
pub fn find_isomorphism(a: &CayleyTable, b: &CayleyTable) -> Option<Vec<usize>> {
    if a.n() != b.n() {
        return None;
    }
    let (ca, ma) = canonical_labeling(a);
    let (cb, mb) = canonical_labeling(b);
    if ca != cb {
        return None;
    }
    let mut mb_inv = vec![0; b.n()];
    for (x, &l) in mb.iter().enumerate() {
        mb_inv[l] = x;
    }
    Some(ma.iter().map(|&l| mb_inv[l]).collect())
}
