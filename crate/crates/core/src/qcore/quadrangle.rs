use super::CayleyTable;
use crate::error::Result;

/// Whether the quasigroup `t` satisfies the quadrangle criterion: whenever
/// `a1c1 = a2c2`, `a1d1 = a2d2` and `b1c1 = b2c2`, also `b1d1 = b2d2`.
///
/// Given `a1, a2, c1` the divisions force `c2`; each `d1` forces `d2`, and
/// each `b1` forces `b2`, so the scan is `O(n^5)` instead of `O(n^8)`.
pub fn quadrangle_criterion(t: &CayleyTable) -> Result<bool> {
    let ld = t.left_division_table()?;
    let rd = t.right_division_table()?;
    let n = t.n();
    for a1 in 0..n {
        for a2 in 0..n {
            for c1 in 0..n {
                let c2 = ld.at(a2, t.at(a1, c1));
                for d1 in 0..n {
                    let d2 = ld.at(a2, t.at(a1, d1));
                    for b1 in 0..n {
                        let b2 = rd.at(t.at(b1, c1), c2);
                        if t.at(b1, d1) != t.at(b2, d2) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::qcore::fixtures;

    /// Literal eight-fold scan of the criterion.
    fn quadrangle_naive(t: &CayleyTable) -> bool {
        let n = t.n();
        let m = |a, b| t.at(a, b);
        for a1 in 0..n {
            for a2 in 0..n {
                for c1 in 0..n {
                    for c2 in 0..n {
                        if m(a1, c1) != m(a2, c2) {
                            continue;
                        }
                        for d1 in 0..n {
                            for d2 in 0..n {
                                if m(a1, d1) != m(a2, d2) {
                                    continue;
                                }
                                for b1 in 0..n {
                                    for b2 in 0..n {
                                        if m(b1, c1) == m(b2, c2) && m(b1, d1) != m(b2, d2) {
                                            return false;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }

    #[test]
    fn c3_subtraction_satisfies() {
        assert!(quadrangle_criterion(&fixtures::c3_subtraction()).unwrap());
    }

    #[test]
    fn agrees_with_naive_scan() {
        // a loop of order 5 that is not a group
        let rows = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ];
        let t = CayleyTable::from_rows(&rows).unwrap();
        assert!(t.is_quasigroup());
        assert!(!quadrangle_naive(&t));
        assert!(!quadrangle_criterion(&t).unwrap());
        for t in [fixtures::cyclic(4), fixtures::c3_subtraction()] {
            assert_eq!(quadrangle_naive(&t), quadrangle_criterion(&t).unwrap());
        }
    }

    #[test]
    fn requires_quasigroup() {
        assert!(matches!(
            quadrangle_criterion(&fixtures::four_element()),
            Err(Error::Structural(_))
        ));
    }
}
