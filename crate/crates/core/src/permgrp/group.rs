use std::collections::{HashSet, VecDeque};

use super::Permutation;
use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 1_000_000;

/// A permutation group held as its full element list (sorted by image
/// vector) together with a generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

/// A conjugacy class, represented by its least element in image order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub size: usize,
}

/// The group generated by `generators` on `degree` points.
pub fn closure(degree: usize, generators: &[Permutation], cap: usize) -> Result<PermGroup> {
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::Input(format!(
            "generator of degree {} in a group of degree {degree}",
            g.degree()
        )));
    }
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(g) = queue.pop_front() {
        for s in generators {
            let h = g.compose(s);
            if !seen.contains(&h) {
                if seen.len() >= cap {
                    return Err(Error::Overflow { cap });
                }
                seen.insert(h.clone());
                queue.push_back(h);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(PermGroup {
        degree,
        elements,
        generators: generators.to_vec(),
    })
}

impl PermGroup {
    /// Wraps an element list that is already known to be a group.
    pub(crate) fn from_closed_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let generators = small_generating_set(degree, &elements);
        PermGroup { degree, elements, generators }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    pub fn is_transitive(&self) -> bool {
        if self.degree == 0 {
            return true;
        }
        let mut seen = vec![false; self.degree];
        for g in &self.elements {
            seen[g.apply(0)] = true;
        }
        seen.iter().all(|&s| s)
    }

    /// Transitive, and only the identity fixes a point.
    pub fn is_regular(&self) -> bool {
        self.order() == self.degree
            && self.is_transitive()
            && self
                .elements
                .iter()
                .all(|g| g.is_identity() || (0..self.degree).all(|x| !g.fixes(x)))
    }

    /// Conjugacy classes ordered by size, then by representative.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let index = |p: &Permutation| self.elements.binary_search(p).expect("closed group");
        let mut done = vec![false; self.order()];
        let mut classes = Vec::new();
        // elements are sorted, so the first unvisited element is the least of its class
        for i in 0..self.order() {
            if done[i] {
                continue;
            }
            let x = &self.elements[i];
            let mut size = 0;
            let mut stack = vec![i];
            done[i] = true;
            while let Some(j) = stack.pop() {
                size += 1;
                for g in &self.generators {
                    let k = index(&g.conjugate(&self.elements[j]));
                    if !done[k] {
                        done[k] = true;
                        stack.push(k);
                    }
                }
            }
            classes.push(ConjugacyClass { representative: x.clone(), size });
        }
        classes.sort_by(|a, b| (a.size, &a.representative).cmp(&(b.size, &b.representative)));
        classes
    }

    /// Whether `a` and `b` are conjugate by an element of the group.
    pub fn are_conjugate(&self, a: &Permutation, b: &Permutation) -> bool {
        self.elements.iter().any(|g| &g.conjugate(a) == b)
    }
}

/// Greedy: keep each element not already in the span of the previous picks.
fn small_generating_set(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
    for g in elements {
        if span.len() == elements.len() {
            break;
        }
        if !span.contains(g) {
            gens.push(g.clone());
            let group = closure(degree, &gens, usize::MAX).expect("unbounded cap");
            span = group.elements.into_iter().collect();
        }
    }
    gens
}
