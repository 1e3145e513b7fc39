//! Builders for twisted Ward (left) quasigroups, recovery of the group data
//! from a twisted Ward quasigroup, and isomorphism of presentations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::groupcat::{enumerate_groups, is_group, FiniteGroup};
use crate::permgrp::{automorphism_group, isotope_group_table, Permutation};
use crate::qcore::{
    cayley_kernel, content_lines, find_isomorphism, parse_numbers, require_twisted_ward,
    table_isomorphic, CayleyTable,
};

/// A group, an automorphism `psi` and a constant `c`, presenting the
/// quasigroup `x*y = c psi(x^-1 y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwqSpec {
    group: FiniteGroup,
    psi: Permutation,
    c: usize,
}

impl TwqSpec {
    pub fn new(group: FiniteGroup, psi: Permutation, c: usize) -> Result<Self> {
        let n = group.order();
        if psi.degree() != n {
            return Err(Error::Input(format!("psi has degree {}, group has order {n}", psi.degree())));
        }
        if !group.is_automorphism(psi.images()) {
            return Err(Error::Input(format!("psi = [{psi}] is not an automorphism")));
        }
        if c >= n {
            return Err(Error::Input(format!("c = {c} out of range for order {n}")));
        }
        Ok(TwqSpec { group, psi, c })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn psi(&self) -> &Permutation {
        &self.psi
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }
}

/// Group table, then `# psi` and the images of psi, then `# c` and c.
impl fmt::Display for TwqSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.group)?;
        writeln!(f, "# psi")?;
        writeln!(f, "{}", self.psi)?;
        writeln!(f, "# c")?;
        writeln!(f, "{}", self.c)
    }
}

impl FromStr for TwqSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = content_lines(text).collect();
        let n = match lines.first() {
            Some(&(lineno, line)) => match parse_numbers(lineno, line)?.as_slice() {
                [n] => *n,
                _ => return Err(Error::Input(format!("line {lineno}: expected the order n"))),
            },
            None => return Err(Error::Input("empty spec text".into())),
        };
        if lines.len() != n + 3 {
            return Err(Error::Input(format!(
                "expected {} content lines (n, {n} rows, psi, c), got {}",
                n + 3,
                lines.len()
            )));
        }
        let rows = lines[1..=n]
            .iter()
            .map(|&(lineno, line)| parse_numbers(lineno, line))
            .collect::<Result<Vec<_>>>()?;
        let table = CayleyTable::from_rows(&rows)?;
        let group = FiniteGroup::from_table(&table)?;
        if group.table() != &table {
            return Err(Error::Input("group table must have identity 0".into()));
        }
        let psi: Permutation = lines[n + 1].1.parse()?;
        let (lineno, line) = lines[n + 2];
        let c = match parse_numbers(lineno, line)?.as_slice() {
            [c] => *c,
            _ => return Err(Error::Input(format!("line {lineno}: expected the constant c"))),
        };
        TwqSpec::new(group, psi, c)
    }
}

/// `x*y = c psi(x^-1 y)`.
pub fn build_twq(spec: &TwqSpec) -> CayleyTable {
    let g = &spec.group;
    CayleyTable::from_fn(g.order(), |x, y| g.mul(spec.c, spec.psi.apply(g.mul(g.inverse(x), y))))
        .expect("group operations stay in range")
}

/// A table built by [`build_affine`] with its computed tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineTable {
    pub table: CayleyTable,
    /// `phi psi = psi phi` and `phi^2 + phi psi = 0` hold pointwise.
    pub twisted_ward: bool,
}

/// `x*y = phi(x) + psi(y) + c` over an abelian group, with `phi` an
/// endomorphism given by its images.
pub fn build_affine(group: &FiniteGroup, phi: &[usize], psi: &Permutation, c: usize) -> Result<AffineTable> {
    let n = group.order();
    if !group.is_abelian() {
        return Err(Error::Input("affine construction needs an abelian group".into()));
    }
    if !group.is_endomorphism(phi) {
        return Err(Error::Input(format!("phi = {phi:?} is not an endomorphism")));
    }
    if psi.degree() != n || !group.is_automorphism(psi.images()) {
        return Err(Error::Input(format!("psi = [{psi}] is not an automorphism")));
    }
    if c >= n {
        return Err(Error::Input(format!("c = {c} out of range for order {n}")));
    }
    let table = CayleyTable::from_fn(n, |x, y| group.mul(group.mul(phi[x], psi.apply(y)), c))?;
    let twisted_ward = (0..n).all(|x| {
        phi[psi.apply(x)] == psi.apply(phi[x]) && group.mul(phi[phi[x]], phi[psi.apply(x)]) == 0
    });
    Ok(AffineTable { table, twisted_ward })
}

/// Every row equal to `f`.
pub fn build_permutational(f: &Permutation) -> CayleyTable {
    let n = f.degree();
    CayleyTable::from_fn(n, |_, y| f.apply(y)).expect("permutation images stay in range")
}

/// Maps `f_x` of the carrier `X x A`, flattened as `x * |A| + a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockFamily {
    x_size: usize,
    a_size: usize,
    maps: Vec<Permutation>,
}

/// `f_{f_x1^[1](y,b)} f_x1 != f_{f_x2^[1](y,b)} f_x2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockRejection {
    pub x1: usize,
    pub x2: usize,
    pub y: usize,
    pub b: usize,
}

impl fmt::Display for BlockRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "composite map differs for x = {} and x = {} at (y, b) = ({}, {})",
            self.x1, self.x2, self.y, self.b
        )
    }
}

impl BlockFamily {
    pub fn new(x_size: usize, a_size: usize, maps: Vec<Permutation>) -> Result<Self> {
        if x_size == 0 || a_size == 0 {
            return Err(Error::Input("block sizes must be positive".into()));
        }
        if maps.len() != x_size {
            return Err(Error::Input(format!("expected {x_size} maps, got {}", maps.len())));
        }
        if let Some(m) = maps.iter().find(|m| m.degree() != x_size * a_size) {
            return Err(Error::Input(format!("map of degree {} on a carrier of size {}", m.degree(), x_size * a_size)));
        }
        Ok(BlockFamily { x_size, a_size, maps })
    }

    pub fn x_size(&self) -> usize {
        self.x_size
    }

    pub fn a_size(&self) -> usize {
        self.a_size
    }

    pub fn map(&self, x: usize) -> &Permutation {
        &self.maps[x]
    }

    /// `f_x^[1](y, b)`.
    pub fn first(&self, x: usize, y: usize, b: usize) -> usize {
        self.maps[x].apply(y * self.a_size + b) / self.a_size
    }

    /// `f_x^[2](y, b)`.
    pub fn second(&self, x: usize, y: usize, b: usize) -> usize {
        self.maps[x].apply(y * self.a_size + b) % self.a_size
    }

    fn composite(&self, x: usize, y: usize, b: usize) -> Permutation {
        self.maps[self.first(x, y, b)].compose(&self.maps[x])
    }
}

/// `|X| |A|` on the first line, then the images of each `f_x`.
impl fmt::Display for BlockFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.x_size, self.a_size)?;
        for m in &self.maps {
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for BlockFamily {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (lineno, header) = lines.next().ok_or_else(|| Error::Input("empty block family text".into()))?;
        let (x_size, a_size) = match parse_numbers(lineno, header)?.as_slice() {
            [x, a] => (*x, *a),
            _ => return Err(Error::Input(format!("line {lineno}: expected |X| and |A|"))),
        };
        let maps = lines.map(|(_, line)| line.parse::<Permutation>()).collect::<Result<Vec<_>>>()?;
        BlockFamily::new(x_size, a_size, maps)
    }
}

/// `(x,a)*(y,b) = f_x(y,b)`, accepted iff `f_{f_x^[1](y,b)} f_x` does not
/// depend on `x`.
pub fn build_block(fam: &BlockFamily) -> std::result::Result<CayleyTable, BlockRejection> {
    for y in 0..fam.x_size {
        for b in 0..fam.a_size {
            let base = fam.composite(0, y, b);
            if let Some(x2) = (1..fam.x_size).find(|&x| fam.composite(x, y, b) != base) {
                return Err(BlockRejection { x1: 0, x2, y, b });
            }
        }
    }
    let a = fam.a_size;
    Ok(CayleyTable::from_fn(fam.x_size * a, |u, v| fam.maps[u / a].apply(v)).expect("maps stay in range"))
}

/// Splits a twisted Ward left quasigroup along its Cayley kernel.
pub fn decompose_block(t: &CayleyTable) -> Result<BlockFamily> {
    decompose_with_labeling(t).map(|(fam, _)| fam)
}

/// Also returns the relabeling `element -> x * |A| + a` under which the
/// block table equals `t`.
pub fn decompose_with_labeling(t: &CayleyTable) -> Result<(BlockFamily, Vec<usize>)> {
    t.require_left_quasigroup()?;
    require_twisted_ward(t)?;
    let kernel = cayley_kernel(t);
    let blocks = kernel.blocks();
    let a_size = blocks[0].len();
    if blocks.iter().any(|b| b.len() != a_size) {
        return Err(Error::Consistency(format!("Cayley kernel blocks are not uniform: {:?}", kernel.block_sizes())));
    }
    let mut flat = vec![0; t.n()];
    for (x, block) in blocks.iter().enumerate() {
        for (a, &elem) in block.iter().enumerate() {
            flat[elem] = x * a_size + a;
        }
    }
    let maps = blocks
        .iter()
        .map(|block| {
            let rep = block[0];
            let mut images = vec![0; t.n()];
            for v in 0..t.n() {
                images[flat[v]] = flat[t.at(rep, v)];
            }
            Permutation::from_images(images).expect("rows of a left quasigroup are bijective")
        })
        .collect();
    Ok((BlockFamily::new(blocks.len(), a_size, maps)?, flat))
}

/// Reads off `(X, <>, psi, c)` from a twisted Ward quasigroup: `e` is the
/// unique square, `x <> y = (x/e)*(e\y)`, `psi = L_e`, `c = e`. The result is
/// relabeled so the identity is 0 and every step is checked.
pub fn recover_structure(t: &CayleyTable) -> Result<TwqSpec> {
    t.require_quasigroup()?;
    require_twisted_ward(t)?;
    let n = t.n();
    let e = t.at(0, 0);
    if (0..n).any(|x| t.at(x, x) != e) {
        return Err(Error::Consistency("squaring map is not constant".into()));
    }
    let diamond = isotope_group_table(t, e)?;
    let group = is_group(&diamond)
        .map_err(|f| Error::Consistency(format!("isotope is not a group: {f}")))?;
    if (0..n).any(|x| diamond.at(e, x) != x || diamond.at(x, e) != x) {
        return Err(Error::Consistency(format!("{e} is not the identity of the isotope")));
    }
    let psi = Permutation::from_images(t.row(e).to_vec())?;
    let inv = |x: usize| (0..n).find(|&y| diamond.at(x, y) == e).unwrap();
    let automorphic = (0..n).all(|x| (0..n).all(|y| psi.apply(diamond.at(x, y)) == diamond.at(psi.apply(x), psi.apply(y))));
    if !automorphic {
        return Err(Error::Consistency("L_e is not an automorphism of the isotope".into()));
    }
    if (0..n).any(|x| (0..n).any(|y| t.at(x, y) != psi.apply(diamond.at(inv(x), y)))) {
        return Err(Error::Consistency("x*y != psi(x^-1 y) for the recovered data".into()));
    }
    // is_group moved e to 0 by swapping the two labels
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, e);
    let swap = Permutation::from_images(swap).unwrap();
    let spec = TwqSpec::new(group, swap.conjugate(&psi), 0)?;
    if build_twq(&spec) != t.relabel(swap.images()) || !table_isomorphic(&build_twq(&spec), t) {
        return Err(Error::Consistency("rebuilt table does not match the input".into()));
    }
    Ok(spec)
}

/// Isomorphism of presentations: the groups are isomorphic and, along an
/// isomorphism, the automorphisms are conjugate in the automorphism group.
/// The constants play no role.
pub fn twq_spec_isomorphic(s1: &TwqSpec, s2: &TwqSpec) -> bool {
    if s1.order() != s2.order() {
        return false;
    }
    let Some(alpha) = find_isomorphism(s1.group.table(), s2.group.table()) else {
        return false;
    };
    // Any other isomorphism differs by an automorphism, which only moves the
    // transported psi within its conjugacy class.
    let alpha = Permutation::from_images(alpha).unwrap();
    let transported = alpha.inverse().compose(&s2.psi).compose(&alpha);
    automorphism_group(s1.group.table()).are_conjugate(&transported, &s1.psi)
}

/// One spec per conjugacy class of `Aut(G)` for each group `G` of order `n`,
/// with `c = 0`.
pub fn representative_specs(n: usize) -> Result<Vec<TwqSpec>> {
    let mut specs = Vec::new();
    for group in enumerate_groups(n)? {
        for class in automorphism_group(group.table()).conjugacy_classes() {
            specs.push(TwqSpec::new(group.clone(), class.representative, 0)?);
        }
    }
    Ok(specs)
}

/// Every `(G, psi, c)` with `G` of order `n` from the group catalog.
pub fn all_specs(n: usize) -> Result<Vec<TwqSpec>> {
    let mut specs = Vec::new();
    for group in enumerate_groups(n)? {
        for psi in automorphism_group(group.table()).elements() {
            for c in 0..n {
                specs.push(TwqSpec::new(group.clone(), psi.clone(), c)?);
            }
        }
    }
    Ok(specs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{check_identity, fixtures, IdentityKind};

    fn c3() -> FiniteGroup {
        FiniteGroup::cyclic(3)
    }

    fn doubling() -> Permutation {
        Permutation::from_images(vec![0, 2, 1]).unwrap()
    }

    #[test]
    fn twq_examples() {
        let id = TwqSpec::new(c3(), Permutation::identity(3), 0).unwrap();
        assert_eq!(build_twq(&id), CayleyTable::from_rows(&[[0, 1, 2], [2, 0, 1], [1, 2, 0]]).unwrap());
        let sq = TwqSpec::new(c3(), doubling(), 0).unwrap();
        assert_eq!(build_twq(&sq), CayleyTable::from_rows(&[[0, 2, 1], [1, 0, 2], [2, 1, 0]]).unwrap());
        let c2 = TwqSpec::new(FiniteGroup::cyclic(2), Permutation::identity(2), 0).unwrap();
        assert_eq!(build_twq(&c2), CayleyTable::from_rows(&[[0, 1], [1, 0]]).unwrap());
        let not_aut = Permutation::from_images(vec![1, 0, 2]).unwrap();
        assert!(matches!(TwqSpec::new(c3(), not_aut, 0), Err(Error::Input(_))));
    }

    #[test]
    fn spec_text_round_trip() {
        let spec = TwqSpec::new(FiniteGroup::cyclic(4), Permutation::from_images(vec![0, 3, 2, 1]).unwrap(), 2).unwrap();
        let text = spec.to_string();
        assert!(text.contains("# psi\n0 3 2 1\n# c\n2\n"));
        assert_eq!(text.parse::<TwqSpec>().unwrap(), spec);
    }

    #[test]
    fn affine_examples() {
        let out = build_affine(&c3(), &[0, 2, 1], &Permutation::identity(3), 0).unwrap();
        assert!(out.twisted_ward);
        assert_eq!(out.table, build_twq(&TwqSpec::new(c3(), Permutation::identity(3), 0).unwrap()));

        let out = build_affine(&c3(), &[0, 1, 2], &Permutation::identity(3), 0).unwrap();
        assert!(!out.twisted_ward);
        assert!(!check_identity(&out.table, IdentityKind::TwistedWard).unwrap());

        let out = build_affine(&FiniteGroup::cyclic(2), &[0, 0], &Permutation::identity(2), 1).unwrap();
        assert!(out.twisted_ward);
        assert!(out.table.is_permutational());

        let s3 = crate::groupcat::enumerate_groups(6).unwrap().into_iter().find(|g| !g.is_abelian()).unwrap();
        assert!(build_affine(&s3, &[0; 6], &Permutation::identity(6), 0).is_err());
    }

    #[test]
    fn affine_tag_matches_identity() {
        let g = FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2));
        let endos: Vec<Vec<usize>> = (0..4usize.pow(4))
            .map(|code| (0..4).map(|i| (code / 4usize.pow(i)) % 4).collect::<Vec<_>>())
            .filter(|m| g.is_endomorphism(m))
            .collect();
        assert_eq!(endos.len(), 16);
        for phi in &endos {
            for psi in automorphism_group(g.table()).elements() {
                let out = build_affine(&g, phi, psi, 3).unwrap();
                let holds = check_identity(&out.table, IdentityKind::TwistedWard).unwrap();
                // the identity is equivalent to phi^2 + psi phi = 0 alone
                let exact = (0..4).all(|x| g.mul(phi[phi[x]], psi.apply(phi[x])) == 0);
                assert_eq!(holds, exact);
                assert!(!out.twisted_ward || holds);
            }
        }
    }

    #[test]
    fn permutational_examples() {
        let f = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(build_permutational(&f), CayleyTable::from_rows(&[[1, 2, 0]; 3]).unwrap());
        let t = build_permutational(&Permutation::identity(2));
        assert_eq!(t, CayleyTable::from_rows(&[[0, 1], [0, 1]]).unwrap());
        assert!(!t.is_quasigroup());
        for kind in [IdentityKind::Rack, IdentityKind::Rump, IdentityKind::TwistedWard] {
            assert!(check_identity(&build_permutational(&f), kind).unwrap());
        }
    }

    #[test]
    fn block_round_trips() {
        let four = decompose_block(&fixtures::four_element()).unwrap();
        assert_eq!((four.x_size(), four.a_size()), (2, 2));
        let six = decompose_block(&fixtures::six_element()).unwrap();
        assert_eq!((six.x_size(), six.a_size()), (2, 3));
        assert_eq!(six.to_string().parse::<BlockFamily>().unwrap(), six);
        for (fam, t) in [(four, fixtures::four_element()), (six, fixtures::six_element())] {
            let built = build_block(&fam).unwrap();
            assert!(table_isomorphic(&built, &t));
            assert_eq!(decompose_block(&built).unwrap(), fam);
        }
        let q = fixtures::c3_subtraction();
        let fam = decompose_block(&q).unwrap();
        assert_eq!(fam.a_size(), 1);
        for x in 0..3 {
            assert_eq!(fam.map(x).images(), q.row(x));
        }
    }

    #[test]
    fn block_rejection_has_witness() {
        let f0 = Permutation::identity(4);
        let f1 = Permutation::from_images(vec![2, 3, 0, 1]).unwrap();
        let g = Permutation::from_images(vec![1, 0, 2, 3]).unwrap();
        let fam = BlockFamily::new(2, 2, vec![f0, g]).unwrap();
        let rej = build_block(&fam).unwrap_err();
        assert_ne!(fam.composite(rej.x1, rej.y, rej.b), fam.composite(rej.x2, rej.y, rej.b));
        let ok = BlockFamily::new(2, 2, vec![f1.clone(), f1]).unwrap();
        assert!(build_block(&ok).unwrap().is_permutational());
    }

    #[test]
    fn recover_examples() {
        let sq = build_twq(&TwqSpec::new(c3(), doubling(), 0).unwrap());
        let spec = recover_structure(&sq).unwrap();
        assert!(table_isomorphic(spec.group().table(), c3().table()));
        assert_eq!(spec.psi(), &doubling());
        assert!(table_isomorphic(&build_twq(&spec), &sq));

        let spec = recover_structure(&CayleyTable::from_rows(&[[0, 1], [1, 0]]).unwrap()).unwrap();
        assert_eq!(spec.psi(), &Permutation::identity(2));
        assert_eq!(spec.c(), 0);

        let c4 = build_twq(&TwqSpec::new(FiniteGroup::cyclic(4), Permutation::identity(4), 2).unwrap());
        let spec = recover_structure(&c4).unwrap();
        assert!(table_isomorphic(spec.group().table(), FiniteGroup::cyclic(4).table()));
        assert!(table_isomorphic(&build_twq(&spec), &c4));

        assert!(matches!(recover_structure(&fixtures::c3_addition()), Err(Error::IdentityViolation { .. })));
    }

    #[test]
    fn spec_isomorphism_examples() {
        let id0 = TwqSpec::new(c3(), Permutation::identity(3), 0).unwrap();
        let id2 = TwqSpec::new(c3(), Permutation::identity(3), 2).unwrap();
        let sq = TwqSpec::new(c3(), doubling(), 0).unwrap();
        assert!(twq_spec_isomorphic(&id0, &id2));
        assert!(!twq_spec_isomorphic(&id0, &sq));
        assert!(table_isomorphic(&build_twq(&id0), &build_twq(&id2)));
        assert!(!table_isomorphic(&build_twq(&id0), &build_twq(&sq)));
    }

    #[test]
    fn representative_counts() {
        for (n, q) in [(1, 1), (2, 1), (3, 2), (4, 5), (6, 5)] {
            assert_eq!(representative_specs(n).unwrap().len(), q);
        }
    }
}
