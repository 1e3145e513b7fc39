//! Set-theoretic solutions `r(x,y) = (x o y, x . y)` of the Yang-Baxter
//! equation and their correspondences with left quasigroups.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qcore::{content_lines, parse_numbers, CayleyTable};

/// The three braiding classes with a left quasigroup counterpart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BraidKind {
    /// `x . y = x`, paired with racks
    Derived,
    /// `r^2 = 1`, paired with Rump left quasigroups
    Involutive,
    /// `r^2 = r`, paired with twisted Ward left quasigroups
    Idempotent,
}

impl BraidKind {
    pub const ALL: [BraidKind; 3] = [BraidKind::Derived, BraidKind::Involutive, BraidKind::Idempotent];

    pub fn name(self) -> &'static str {
        match self {
            BraidKind::Derived => "derived",
            BraidKind::Involutive => "involutive",
            BraidKind::Idempotent => "idempotent",
        }
    }
}

impl fmt::Display for BraidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BraidKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BraidKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown braiding kind '{s}'")))
    }
}

/// A map `r: X x X -> X x X` held as its two component tables. No row or
/// column conditions are imposed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Braiding {
    circ: CayleyTable,
    bullet: CayleyTable,
}

/// Which of the three component equations fails, and where.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct YbFailure {
    /// 1, 2 or 3
    pub law: u8,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl fmt::Display for YbFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YB{} fails at (x, y, z) = ({}, {}, {})", self.law, self.x, self.y, self.z)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidProperties {
    pub derived: bool,
    pub involutive: bool,
    pub idempotent: bool,
    pub left_nondegenerate: bool,
    pub nondegenerate: bool,
    pub latin: bool,
}

impl Braiding {
    pub fn new(circ: CayleyTable, bullet: CayleyTable) -> Result<Self> {
        if circ.n() != bullet.n() {
            return Err(Error::Input(format!("component sizes differ: {} and {}", circ.n(), bullet.n())));
        }
        Ok(Braiding { circ, bullet })
    }

    /// `r(x,y) = (y, x)`.
    pub fn flip(n: usize) -> Self {
        Braiding {
            circ: CayleyTable::from_fn(n, |_, y| y).unwrap(),
            bullet: CayleyTable::from_fn(n, |x, _| x).unwrap(),
        }
    }

    pub fn n(&self) -> usize {
        self.circ.n()
    }

    pub fn circ(&self) -> &CayleyTable {
        &self.circ
    }

    pub fn bullet(&self) -> &CayleyTable {
        &self.bullet
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        (self.circ.at(x, y), self.bullet.at(x, y))
    }

    fn first_yb_failure(&self) -> Option<YbFailure> {
        let (c, b) = (&self.circ, &self.bullet);
        let n = self.n();
        for x in 0..n {
            for y in 0..n {
                let (xcy, xby) = (c.at(x, y), b.at(x, y));
                for z in 0..n {
                    let ycz = c.at(y, z);
                    let ybz = b.at(y, z);
                    let law = if c.at(x, ycz) != c.at(xcy, c.at(xby, z)) {
                        1
                    } else if b.at(xcy, c.at(xby, z)) != c.at(b.at(x, ycz), ybz) {
                        2
                    } else if b.at(xby, z) != b.at(b.at(x, ycz), ybz) {
                        3
                    } else {
                        continue;
                    };
                    return Some(YbFailure { law, x, y, z });
                }
            }
        }
        None
    }

    /// `(r x 1)(1 x r)(r x 1) = (1 x r)(r x 1)(1 x r)` evaluated on triples.
    fn composition_holds(&self) -> bool {
        let r12 = |(x, y, z): (usize, usize, usize)| {
            let (u, v) = self.apply(x, y);
            (u, v, z)
        };
        let r23 = |(x, y, z): (usize, usize, usize)| {
            let (u, v) = self.apply(y, z);
            (x, u, v)
        };
        let n = self.n();
        (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| r12(r23(r12((x, y, z)))) == r23(r12(r23((x, y, z))))))
        })
    }

    /// The first failing component equation, if any.
    pub fn yb_witness(&self) -> Result<Option<YbFailure>> {
        let witness = self.first_yb_failure();
        if witness.is_none() != self.composition_holds() {
            return Err(Error::Consistency(
                "component equations and composed maps disagree on the braid relation".into(),
            ));
        }
        Ok(witness)
    }

    /// Checks YB1-YB3 and the composed-map form; the two must agree.
    pub fn is_braiding(&self) -> Result<bool> {
        Ok(self.yb_witness()?.is_none())
    }

    pub fn properties(&self) -> BraidProperties {
        let n = self.n();
        let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
        let twice = |(x, y)| {
            let (u, v) = self.apply(x, y);
            self.apply(u, v)
        };
        let left_nondegenerate = self.circ.is_left_quasigroup();
        BraidProperties {
            derived: pairs().all(|(x, y)| self.bullet.at(x, y) == x),
            involutive: pairs().all(|p| twice(p) == p),
            idempotent: pairs().all(|(x, y)| twice((x, y)) == self.apply(x, y)),
            left_nondegenerate,
            nondegenerate: left_nondegenerate && (0..n).all(|y| self.bullet.column_is_permutation(y)),
            latin: self.circ.is_quasigroup(),
        }
    }
}

/// `n`, the `o` table, a `# bullet` line, then the `.` table.
impl fmt::Display for Braiding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.circ)?;
        writeln!(f, "# bullet")?;
        for row in self.bullet.rows() {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Braiding {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = content_lines(text).collect();
        let n = match lines.first() {
            Some(&(lineno, line)) => match parse_numbers(lineno, line)?.as_slice() {
                [n] => *n,
                _ => return Err(Error::Input(format!("line {lineno}: expected the order n"))),
            },
            None => return Err(Error::Input("empty braiding text".into())),
        };
        if lines.len() != 2 * n + 1 {
            return Err(Error::Input(format!("expected {} content lines, got {}", 2 * n + 1, lines.len())));
        }
        let rows = lines[1..]
            .iter()
            .map(|&(lineno, line)| parse_numbers(lineno, line))
            .collect::<Result<Vec<_>>>()?;
        Braiding::new(CayleyTable::from_rows(&rows[..n])?, CayleyTable::from_rows(&rows[n..])?)
    }
}

/// The braiding of a left quasigroup: `x o y = x\y` and
/// `x . y` is `x`, `(x\y)*x` or `(x\y)*(x\y)` according to `kind`.
pub fn to_braiding(t: &CayleyTable, kind: BraidKind) -> Result<Braiding> {
    let circ = t.left_division_table()?;
    let bullet = CayleyTable::from_fn(t.n(), |x, y| {
        let d = circ.at(x, y);
        match kind {
            BraidKind::Derived => x,
            BraidKind::Involutive => t.at(d, x),
            BraidKind::Idempotent => t.at(d, d),
        }
    })?;
    Ok(Braiding { circ, bullet })
}

/// `x*y = x \o y`, the inverse of [`to_braiding`].
pub fn from_braiding(b: &Braiding) -> Result<CayleyTable> {
    b.circ.left_division_table()
}

/// Reads `t_circ` as the `o` table itself and completes it with
/// `x . y` equal to `x`, `(x o y) \o x` or `(x o y) \o (x o y)`.
pub fn induced_bullet(t_circ: &CayleyTable, kind: BraidKind) -> Result<Braiding> {
    let ld = t_circ.left_division_table()?;
    let bullet = CayleyTable::from_fn(t_circ.n(), |x, y| {
        let xy = t_circ.at(x, y);
        match kind {
            BraidKind::Derived => x,
            BraidKind::Involutive => ld.at(xy, x),
            BraidKind::Idempotent => ld.at(xy, xy),
        }
    })?;
    Ok(Braiding { circ: t_circ.clone(), bullet })
}

/// The customary rack convention `r(x,y) = (x*y, x)`, kept as an alias
/// alongside the division form used by [`to_braiding`].
pub fn customary_rack_braiding(t: &CayleyTable) -> Braiding {
    Braiding {
        circ: t.clone(),
        bullet: CayleyTable::from_fn(t.n(), |x, _| x).unwrap(),
    }
}
