use std::fmt;
use std::str::FromStr;

use super::CayleyTable;
use crate::error::{Error, Result};

/// The three-variable identities the library can check on a left quasigroup.
///
/// The `*Div` variants are the forms in which the left division of the
/// operation appears; they are the conditions on `(X, o)` for the map
/// `r(x, y) = (x o y, x . y)` with the bullet induced from `o` (see
/// [`crate::braid::induced_bullet`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    /// `(x*y)*(x*z) = x*(y*z)`
    Rack,
    /// `(x*y)*(x*z) = (y*x)*(y*z)`
    Rump,
    /// `(x*y)*(x*z) = (y*y)*(y*z)`
    TwistedWard,
    /// `(x*y)*(x*z) = y*z`
    Ward,
    /// `x*(y*z) = (x*y)*(x*z)`; coincides with [`IdentityKind::Rack`].
    RackDiv,
    /// `x*(y*z) = (x*y)*(((x*y)\x)*z)`
    RumpDiv,
    /// `x*(y*z) = (x*y)*(((x*y)\(x*y))*z)`
    TwistedWardDiv,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 7] = [
        IdentityKind::Rack,
        IdentityKind::Rump,
        IdentityKind::TwistedWard,
        IdentityKind::Ward,
        IdentityKind::RackDiv,
        IdentityKind::RumpDiv,
        IdentityKind::TwistedWardDiv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Rack => "rack",
            IdentityKind::Rump => "rump",
            IdentityKind::TwistedWard => "tw",
            IdentityKind::Ward => "ward",
            IdentityKind::RackDiv => "rack-div",
            IdentityKind::RumpDiv => "rump-div",
            IdentityKind::TwistedWardDiv => "tw-div",
        }
    }

    fn sides(self, t: &CayleyTable, ld: &CayleyTable, x: usize, y: usize, z: usize) -> (usize, usize) {
        let m = |a, b| t.at(a, b);
        match self {
            IdentityKind::Rack | IdentityKind::RackDiv => {
                (m(m(x, y), m(x, z)), m(x, m(y, z)))
            }
            IdentityKind::Rump => (m(m(x, y), m(x, z)), m(m(y, x), m(y, z))),
            IdentityKind::TwistedWard => (m(m(x, y), m(x, z)), m(m(y, y), m(y, z))),
            IdentityKind::Ward => (m(m(x, y), m(x, z)), m(y, z)),
            IdentityKind::RumpDiv => {
                let xy = m(x, y);
                (m(x, m(y, z)), m(xy, m(ld.at(xy, x), z)))
            }
            IdentityKind::TwistedWardDiv => {
                let xy = m(x, y);
                (m(x, m(y, z)), m(xy, m(ld.at(xy, xy), z)))
            }
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown identity '{s}'")))
    }
}

/// First triple `(x, y, z)` (in lexicographic order) at which the identity
/// fails, or `None` if it holds everywhere.
pub fn identity_witness(t: &CayleyTable, kind: IdentityKind) -> Result<Option<(usize, usize, usize)>> {
    let ld = t.left_division_table()?;
    let n = t.n();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (lhs, rhs) = kind.sides(t, &ld, x, y, z);
                if lhs != rhs {
                    return Ok(Some((x, y, z)));
                }
            }
        }
    }
    Ok(None)
}

/// Whether `t` satisfies `kind` for all triples. Errors if `t` is not a
/// left quasigroup.
pub fn check_identity(t: &CayleyTable, kind: IdentityKind) -> Result<bool> {
    Ok(identity_witness(t, kind)?.is_none())
}

/// Errors with the witness triple unless `t` is a twisted Ward left quasigroup.
pub(crate) fn require_twisted_ward(t: &CayleyTable) -> Result<()> {
    match identity_witness(t, IdentityKind::TwistedWard)? {
        Some(witness) => Err(Error::IdentityViolation {
            identity: IdentityKind::TwistedWard.to_string(),
            witness,
        }),
        None => Ok(()),
    }
}
