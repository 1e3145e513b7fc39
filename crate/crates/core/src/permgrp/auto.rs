use super::{PermGroup, Permutation};
use crate::qcore::CayleyTable;

const UNSET: usize = usize::MAX;

/// Cheap isomorphism invariant of a single element.
fn element_invariant(t: &CayleyTable, x: usize) -> (bool, usize, usize, usize) {
    let n = t.n();
    let mut image = vec![false; n];
    for &v in t.row(x) {
        image[v] = true;
    }
    (
        t.at(x, x) == x,
        (0..n).filter(|&y| t.at(x, y) == y).count(),
        (0..n).filter(|&y| t.at(y, x) == y).count(),
        image.iter().filter(|&&b| b).count(),
    )
}

/// Elements in the order the search assigns them: each pick is the least
/// element outside the subalgebra generated by the earlier picks.
fn generating_sequence(t: &CayleyTable) -> Vec<usize> {
    let n = t.n();
    let mut inside = vec![false; n];
    let mut members = Vec::new();
    let mut gens = Vec::new();
    while let Some(g) = (0..n).find(|&x| !inside[x]) {
        gens.push(g);
        inside[g] = true;
        members.push(g);
        // close under the operation
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for j in 0..=i {
                let b = members[j];
                for v in [t.at(a, b), t.at(b, a)] {
                    if !inside[v] {
                        inside[v] = true;
                        members.push(v);
                    }
                }
            }
            i += 1;
        }
    }
    gens
}

struct AutSearch<'a> {
    t: &'a CayleyTable,
    n: usize,
    gens: Vec<usize>,
    invariants: Vec<(bool, usize, usize, usize)>,
    map: Vec<usize>,
    used: Vec<bool>,
    trail: Vec<usize>,
    found: Vec<Permutation>,
}

impl AutSearch<'_> {
    fn set(&mut self, x: usize, v: usize) -> bool {
        if self.map[x] != UNSET {
            return self.map[x] == v;
        }
        if self.used[v] || self.invariants[x] != self.invariants[v] {
            return false;
        }
        self.map[x] = v;
        self.used[v] = true;
        self.trail.push(x);
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            self.used[self.map[x]] = false;
            self.map[x] = UNSET;
        }
    }

    /// Forces `map(a*b) = map(a)*map(b)` over all mapped pairs until nothing changes.
    fn propagate(&mut self) -> bool {
        let mut changed = true;
        while changed {
            changed = false;
            let mapped: Vec<usize> = self.trail.clone();
            for &a in &mapped {
                for &b in &mapped {
                    let target = self.t.at(self.map[a], self.map[b]);
                    let prod = self.t.at(a, b);
                    if self.map[prod] == UNSET {
                        if !self.set(prod, target) {
                            return false;
                        }
                        changed = true;
                    } else if self.map[prod] != target {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, depth: usize) {
        if depth == self.gens.len() {
            debug_assert!(self.map.iter().all(|&v| v != UNSET));
            self.found.push(Permutation::from_images(self.map.clone()).unwrap());
            return;
        }
        let g = self.gens[depth];
        if self.map[g] != UNSET {
            self.run(depth + 1);
            return;
        }
        for v in 0..self.n {
            let mark = self.trail.len();
            if self.set(g, v) && self.propagate() {
                self.run(depth + 1);
            }
            self.undo(mark);
        }
    }
}

/// All permutations `p` with `p(x*y) = p(x)*p(y)`.
pub fn automorphism_group(t: &CayleyTable) -> PermGroup {
    let n = t.n();
    let mut search = AutSearch {
        t,
        n,
        gens: generating_sequence(t),
        invariants: (0..n).map(|x| element_invariant(t, x)).collect(),
        map: vec![UNSET; n],
        used: vec![false; n],
        trail: Vec::new(),
        found: Vec::new(),
    };
    search.run(0);
    PermGroup::from_closed_elements(n, search.found)
}
