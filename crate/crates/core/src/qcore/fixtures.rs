//! Small reference tables used throughout the tests and by the CLI.

use super::CayleyTable;

/// A 4-element twisted Ward left quasigroup whose Cayley kernel is not a
/// congruence: rows 0 and 1 coincide, yet `1*0 = 0` and `1*1 = 2` have
/// different rows.
pub fn four_element() -> CayleyTable {
    CayleyTable::from_rows(&[[0, 2, 1, 3], [0, 2, 1, 3], [3, 1, 2, 0], [3, 1, 2, 0]]).unwrap()
}

/// A 6-element twisted Ward left quasigroup that is neither permutational
/// nor a quasigroup; Cayley-kernel blocks have size 3, squaring-kernel blocks
/// size 2.
pub fn six_element() -> CayleyTable {
    let a = [1, 0, 3, 2, 4, 5];
    let b = [2, 3, 0, 1, 5, 4];
    CayleyTable::from_rows(&[a, b, a, b, a, b]).unwrap()
}

/// `x * y = x + y mod 3`.
pub fn c3_addition() -> CayleyTable {
    CayleyTable::from_fn(3, |x, y| (x + y) % 3).unwrap()
}

/// `x * y = y - x mod 3`.
pub fn c3_subtraction() -> CayleyTable {
    CayleyTable::from_fn(3, |x, y| (y + 3 - x) % 3).unwrap()
}

/// The cyclic group of order `n` under addition.
pub fn cyclic(n: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |x, y| (x + y) % n).unwrap()
}
