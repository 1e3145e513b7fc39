use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An `n x n` operation table on the elements `0..n`; `entry(x, y)` is `x * y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTable {
    n: usize,
    entries: Vec<usize>,
}

/// Structural flags of a table. See [`CayleyTable::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructureFlags {
    pub is_left_quasigroup: bool,
    pub is_quasigroup: bool,
    pub is_permutational: bool,
    pub is_faithful: bool,
}

fn is_permutation(values: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = vec![false; n];
    for v in values {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

impl CayleyTable {
    /// Builds a table from row-major entries.
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("a table needs at least one element".into()));
        }
        if entries.len() != n * n {
            return Err(Error::Input(format!(
                "expected {} entries for n = {n}, got {}",
                n * n,
                entries.len()
            )));
        }
        if let Some(pos) = entries.iter().position(|&v| v >= n) {
            return Err(Error::Input(format!(
                "entry {} at ({}, {}) is out of range 0..{n}",
                entries[pos],
                pos / n,
                pos % n
            )));
        }
        Ok(CayleyTable { n, entries })
    }

    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (x, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::Input(format!(
                    "row {x} has {} entries, expected {n}",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        Self::new(n, entries)
    }

    /// Tabulates `f` over all pairs. `f` must return values below `n`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                entries.push(f(x, y));
            }
        }
        Self::new(n, entries)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Unchecked product; panics on out-of-range arguments.
    #[inline]
    pub fn at(&self, x: usize, y: usize) -> usize {
        self.entries[x * self.n + y]
    }

    #[inline]
    pub fn row(&self, x: usize) -> &[usize] {
        &self.entries[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.entries.chunks(self.n)
    }

    pub fn column(&self, y: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).map(move |x| self.at(x, y))
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    fn check_element(&self, x: usize) -> Result<()> {
        if x >= self.n {
            return Err(Error::Input(format!(
                "element {x} out of range 0..{}",
                self.n
            )));
        }
        Ok(())
    }

    /// `x * y`.
    pub fn op(&self, x: usize, y: usize) -> Result<usize> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.at(x, y))
    }

    /// Left division: the unique `u` with `x * u = y`.
    pub fn ldiv(&self, x: usize, y: usize) -> Result<usize> {
        self.check_element(x)?;
        self.check_element(y)?;
        if !self.row_is_permutation(x) {
            return Err(Error::Structural(format!("row {x} is not a permutation")));
        }
        Ok(self.row(x).iter().position(|&v| v == y).unwrap())
    }

    /// Right division: the `z` with `z * y = x`, or `None` when column `y`
    /// does not contain `x` exactly once.
    pub fn rdiv(&self, x: usize, y: usize) -> Result<Option<usize>> {
        self.check_element(x)?;
        self.check_element(y)?;
        let mut hits = (0..self.n).filter(|&z| self.at(z, y) == x);
        let first = hits.next();
        Ok(match (first, hits.next()) {
            (Some(z), None) => Some(z),
            _ => None,
        })
    }

    pub fn row_is_permutation(&self, x: usize) -> bool {
        is_permutation(self.row(x).iter().copied(), self.n)
    }

    pub fn column_is_permutation(&self, y: usize) -> bool {
        is_permutation(self.column(y), self.n)
    }

    pub fn is_left_quasigroup(&self) -> bool {
        (0..self.n).all(|x| self.row_is_permutation(x))
    }

    pub fn is_quasigroup(&self) -> bool {
        self.is_left_quasigroup() && (0..self.n).all(|y| self.column_is_permutation(y))
    }

    pub fn is_permutational(&self) -> bool {
        self.rows().all(|r| r == self.row(0))
    }

    pub fn is_faithful(&self) -> bool {
        let mut rows: Vec<&[usize]> = self.rows().collect();
        rows.sort_unstable();
        rows.windows(2).all(|w| w[0] != w[1])
    }

    pub fn classify(&self) -> StructureFlags {
        StructureFlags {
            is_left_quasigroup: self.is_left_quasigroup(),
            is_quasigroup: self.is_quasigroup(),
            is_permutational: self.is_permutational(),
            is_faithful: self.is_faithful(),
        }
    }

    pub(crate) fn require_left_quasigroup(&self) -> Result<()> {
        match (0..self.n).find(|&x| !self.row_is_permutation(x)) {
            Some(x) => Err(Error::Structural(format!(
                "not a left quasigroup: row {x} is not a permutation"
            ))),
            None => Ok(()),
        }
    }

    pub(crate) fn require_quasigroup(&self) -> Result<()> {
        self.require_left_quasigroup()?;
        match (0..self.n).find(|&y| !self.column_is_permutation(y)) {
            Some(y) => Err(Error::Structural(format!(
                "not a quasigroup: column {y} is not a permutation"
            ))),
            None => Ok(()),
        }
    }

    /// The table of `x \ y`. Requires a left quasigroup.
    pub fn left_division_table(&self) -> Result<CayleyTable> {
        self.require_left_quasigroup()?;
        let n = self.n;
        let mut entries = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                entries[x * n + self.at(x, y)] = y;
            }
        }
        Ok(CayleyTable { n, entries })
    }

    /// The table of `x / y`. Requires a quasigroup.
    pub fn right_division_table(&self) -> Result<CayleyTable> {
        self.require_quasigroup()?;
        let n = self.n;
        let mut entries = vec![0; n * n];
        for z in 0..n {
            for y in 0..n {
                entries[self.at(z, y) * n + y] = z;
            }
        }
        Ok(CayleyTable { n, entries })
    }

    /// The isomorphic copy obtained by renaming every element `x` to `map[x]`.
    /// `map` must be a bijection of `0..n`.
    pub fn relabel(&self, map: &[usize]) -> CayleyTable {
        assert_eq!(map.len(), self.n, "relabeling has the wrong degree");
        let n = self.n;
        let mut entries = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                entries[map[x] * n + map[y]] = map[self.at(x, y)];
            }
        }
        CayleyTable { n, entries }
    }

    pub fn squaring_map(&self) -> Vec<usize> {
        (0..self.n).map(|x| self.at(x, x)).collect()
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[usize]> = self.rows().collect();
        f.debug_tuple("CayleyTable").field(&rows).finish()
    }
}

/// The shared text format: `n`, then `n` rows of `n` space-separated entries.
impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Non-empty lines that are not `#` comments.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_numbers(lineno: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::Input(format!("line {lineno}: '{tok}' is not an integer")))
        })
        .collect()
}

impl FromStr for CayleyTable {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (lineno, header) = lines
            .next()
            .ok_or_else(|| Error::Input("empty table text".into()))?;
        let n = match parse_numbers(lineno, header)?.as_slice() {
            [n] => *n,
            _ => return Err(Error::Input(format!("line {lineno}: expected the order n"))),
        };
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (lineno, line) = lines
                .next()
                .ok_or_else(|| Error::Input(format!("expected {n} rows, got {}", rows.len())))?;
            rows.push(parse_numbers(lineno, line)?);
        }
        if let Some((lineno, _)) = lines.next() {
            return Err(Error::Input(format!("line {lineno}: trailing content")));
        }
        CayleyTable::from_rows(&rows)
    }
}
