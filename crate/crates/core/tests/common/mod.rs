#![allow(dead_code)]

use tward::CayleyTable;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for v in 0..n {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

/// Calls `f` on every left quasigroup of order `n` (`(n!)^n` tables).
pub fn for_each_left_quasigroup(n: usize, mut f: impl FnMut(&CayleyTable)) {
    let perms = permutations(n);
    let mut choice = vec![0usize; n];
    loop {
        let rows: Vec<&[usize]> = choice.iter().map(|&i| perms[i].as_slice()).collect();
        f(&CayleyTable::from_rows(&rows).unwrap());
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < perms.len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Every latin square of order `n`, by row-wise backtracking.
pub fn quasigroups(n: usize) -> Vec<CayleyTable> {
    fn rec(n: usize, perms: &[Vec<usize>], rows: &mut Vec<Vec<usize>>, out: &mut Vec<CayleyTable>) {
        if rows.len() == n {
            out.push(CayleyTable::from_rows(rows).unwrap());
            return;
        }
        for p in perms {
            if rows.iter().all(|r| (0..n).all(|y| r[y] != p[y])) {
                rows.push(p.clone());
                rec(n, perms, rows, out);
                rows.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &permutations(n), &mut Vec::new(), &mut out);
    out
}

/// Latin squares of order `n` whose first row and first column are `0..n`.
pub fn reduced_quasigroups(n: usize) -> Vec<CayleyTable> {
    fn rec(n: usize, perms: &[Vec<usize>], rows: &mut Vec<Vec<usize>>, out: &mut Vec<CayleyTable>) {
        if rows.len() == n {
            out.push(CayleyTable::from_rows(rows).unwrap());
            return;
        }
        let x = rows.len();
        for p in perms {
            if p[0] == x && rows.iter().all(|r| (0..n).all(|y| r[y] != p[y])) {
                rows.push(p.clone());
                rec(n, perms, rows, out);
                rows.pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![(0..n).collect::<Vec<_>>()];
    rec(n, &permutations(n), &mut rows, &mut out);
    out
}

/// Applies an isotopy `(a, b, c)`: the result maps `a(x), b(y)` to `c(x*y)`.
pub fn isotope(t: &CayleyTable, a: &[usize], b: &[usize], c: &[usize]) -> CayleyTable {
    let n = t.n();
    let mut entries = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            entries[a[x] * n + b[y]] = c[t.at(x, y)];
        }
    }
    CayleyTable::new(n, entries).unwrap()
}
