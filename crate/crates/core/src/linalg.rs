//! Dense exact linear algebra over a [`Field`]. Pivots are always the first
//! nonzero entry in row order, so results are deterministic.

use crate::error::{Error, Result};
use crate::scalars::{Field, Scalar};

pub type Matrix<S> = Vec<Vec<S>>;

pub fn zeros<F: Field>(f: &F, rows: usize, cols: usize) -> Matrix<F::Elem> {
    vec![vec![f.zero(); cols]; rows]
}

pub fn identity<F: Field>(f: &F, n: usize) -> Matrix<F::Elem> {
    let mut m = zeros(f, n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = f.one();
    }
    m
}

pub fn mat_mul<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let cols = b.first().map_or(0, Vec::len);
    let mut out = zeros(f, a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b[k].iter().enumerate() {
                if !y.is_zero() {
                    out[i][j] = out[i][j].add(&x.mul(y));
                }
            }
        }
    }
    out
}

pub fn transpose<S: Clone>(a: &Matrix<S>, cols: usize) -> Matrix<S> {
    (0..cols)
        .map(|j| a.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Rank by fraction-free (Bareiss) elimination.
pub fn rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = f.one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                for j in c + 1..cols {
                    a[i][j] = a[i][j].mul(&a[r][c]).div(&prev).expect("nonzero pivot");
                }
                continue;
            }
            for j in c + 1..cols {
                let t = a[i][j].mul(&a[r][c]).sub(&a[i][c].mul(&a[r][j]));
                a[i][j] = t.div(&prev).expect("nonzero pivot");
            }
            a[i][c] = f.zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Reduced row echelon form; returns the nonzero rows and the pivot columns.
pub fn rref<F: Field>(_f: &F, m: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for j in c..cols {
            a[r][j] = a[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let factor = a[i][c].clone();
            for j in c..cols {
                if !a[r][j].is_zero() {
                    a[i][j] = a[i][j].sub(&factor.mul(&a[r][j]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Basis of `{x : m x = 0}`, one vector per free column, each scaled so its
/// first nonzero entry is 1.
pub fn nullspace<F: Field>(f: &F, m: &Matrix<F::Elem>, cols: usize) -> Vec<Vec<F::Elem>> {
    let (r, pivots) = rref(f, m);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![f.zero(); cols];
        v[free] = f.one();
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = row[free].neg();
        }
        out.push(normalize_leading(v));
    }
    out
}

/// Scales `v` so that its first nonzero entry is 1.
pub fn normalize_leading<S: Scalar>(v: Vec<S>) -> Vec<S> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) if !lead.is_one() => {
            let inv = lead.inv().expect("nonzero");
            v.iter().map(|x| x.mul(&inv)).collect()
        }
        _ => v,
    }
}

/// Indices of the first linearly independent vectors, scanning in order.
pub fn independent_prefix<F: Field>(_f: &F, vectors: &[Vec<F::Elem>]) -> Vec<usize> {
    let mut basis: Vec<(usize, Vec<F::Elem>)> = Vec::new(); // (pivot, reduced vector)
    let mut keep = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut w = v.clone();
        for (p, b) in &basis {
            if !w[*p].is_zero() {
                let c = w[*p].clone();
                for (x, y) in w.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x = x.sub(&c.mul(y));
                    }
                }
            }
        }
        if let Some(p) = w.iter().position(|x| !x.is_zero()) {
            let inv = w[p].inv().expect("nonzero");
            let w: Vec<_> = w.iter().map(|x| x.mul(&inv)).collect();
            basis.push((p, w));
            keep.push(idx);
        }
    }
    keep
}

/// Solves `m x = b`, returning `None` when inconsistent.
pub fn solve<F: Field>(
    f: &F,
    m: &Matrix<F::Elem>,
    b: &[F::Elem],
    cols: usize,
) -> Option<Vec<F::Elem>> {
    let aug: Matrix<F::Elem> = m
        .iter()
        .zip(b)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(f, &aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![f.zero(); cols];
    for (row, &pc) in r.iter().zip(&pivots) {
        x[pc] = row[cols].clone();
    }
    Some(x)
}

pub fn inverse<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    let n = m.len();
    let aug: Matrix<F::Elem> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
            r
        })
        .collect();
    let (r, pivots) = rref(f, &aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::DivisionByZero);
    }
    Ok(r.into_iter().map(|row| row[n..].to_vec()).collect())
}
