//! Dense linear algebra over a prime field `F_p`, entries stored reduced in `u64`.
//!
//! Primes used here stay below 2^31, so products fit without overflow.

use crate::arith::inv_mod;

pub type Row = Vec<u64>;

/// Row-reduces in place to reduced echelon form, drops zero rows, and returns
/// the pivot columns.
pub fn rref(rows: &mut Vec<Row>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for k in 0..rows.len() {
            if k != r && rows[k][c] != 0 {
                let f = rows[k][c];
                for j in 0..ncols {
                    let sub = f * rows[r][j] % p;
                    rows[k][j] = (rows[k][j] + p - sub) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Reduces `v` against an RREF basis; zero iff `v` lies in the span.
pub fn reduce(v: &mut [u64], basis: &[Row], pivots: &[usize], p: u64) {
    for (row, &c) in basis.iter().zip(pivots) {
        let f = v[c];
        if f != 0 {
            for (x, &b) in v.iter_mut().zip(row) {
                *x = (*x + p - f * b % p) % p;
            }
        }
    }
}

pub fn in_span(v: &[u64], basis: &[Row], pivots: &[usize], p: u64) -> bool {
    let mut w = v.to_vec();
    reduce(&mut w, basis, pivots, p);
    w.iter().all(|&x| x == 0)
}

/// Basis of `{x : M x = 0}` for an `m x n` matrix given by rows.
pub fn nullspace(m: &[Row], ncols: usize, p: u64) -> Vec<Row> {
    let mut rows: Vec<Row> = m.to_vec();
    let pivots = if rows.is_empty() {
        Vec::new()
    } else {
        rref(&mut rows, p)
    };
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![0u64; ncols];
            x[f] = 1;
            for (row, &c) in rows.iter().zip(&pivots) {
                x[c] = (p - row[f]) % p;
            }
            x
        })
        .collect()
}

/// Characteristic polynomial `det(X I - A)`, coefficients from the constant
/// term upward, via reduction to Hessenberg form.
pub fn char_poly(a: &[Row], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Row> = a.to_vec();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = inv_mod(h[m][m - 1], p);
        for i in m + 1..n {
            let u = h[i][m - 1] * inv % p;
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let sub = u * h[m][j] % p;
                h[i][j] = (h[i][j] + p - sub) % p;
            }
            for row in h.iter_mut() {
                row[m] = (row[m] + u * row[i]) % p;
            }
        }
    }
    // polys[m] = char poly of the leading m x m block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let hm = h[m - 1][m - 1];
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % p;
            next[k] = (next[k] + p - hm * c % p) % p;
        }
        let mut t = 1u64;
        for i in 1..m {
            t = t * h[m - i][m - i - 1] % p;
            let f = t * h[m - i - 1][m - 1] % p;
            if f == 0 {
                continue;
            }
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                next[k] = (next[k] + p - f * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

pub fn eval_poly(coeffs: &[u64], x: u64, p: u64) -> u64 {
    coeffs.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}
