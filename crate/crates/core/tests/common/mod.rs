//! A deliberately naive oracle for ungraded algebras with zero differential:
//! dense matrices over ℚ, Hochschild homology from the bar complex and
//! cyclic homology from Connes' quotient complex `C_n / (1 - t)`. Over a
//! field the cohomology with coefficients in `A^*` has the same
//! dimensions, so the library's answers must match exactly.

#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::Zero;

type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Structure constants `mult[i][j][k]` of `e_i e_j = Σ_k c e_k`.
pub struct Algebra {
    pub dim: usize,
    pub mult: Vec<Vec<Vec<i64>>>,
}

#[allow(clippy::needless_range_loop)]
fn dense_rank(mut m: Vec<Vec<Q>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &piv;
                for j in 0..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// All tuples of length `len` over `0..dim`, lexicographic.
fn tuples(dim: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..dim).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

fn index(t: &[usize], dim: usize) -> usize {
    t.iter().fold(0, |acc, &i| acc * dim + i)
}

/// Hochschild boundary `C_n → C_{n-1}` with `C_n = A^{⊗ n+1}`, as a dense
/// matrix with rows indexed by `C_{n-1}`.
fn boundary(a: &Algebra, n: usize) -> Vec<Vec<Q>> {
    let d = a.dim;
    let src = tuples(d, n + 1);
    let mut m = vec![vec![q(0); src.len()]; d.pow(n as u32)];
    for (col, t) in src.iter().enumerate() {
        for i in 0..n {
            // d_i multiplies slots i and i+1.
            for (k, &c) in a.mult[t[i]][t[i + 1]].iter().enumerate() {
                if c != 0 {
                    let mut s = t[..i].to_vec();
                    s.push(k);
                    s.extend_from_slice(&t[i + 2..]);
                    let sgn = if i % 2 == 0 { 1 } else { -1 };
                    m[index(&s, d)][col] += q(sgn * c);
                }
            }
        }
        // d_n moves a_n to the front.
        for (k, &c) in a.mult[t[n]][t[0]].iter().enumerate() {
            if c != 0 {
                let mut s = vec![k];
                s.extend_from_slice(&t[1..n]);
                let sgn = if n.is_multiple_of(2) { 1 } else { -1 };
                m[index(&s, d)][col] += q(sgn * c);
            }
        }
    }
    m
}

/// `1 - t` on `C_n` with `t(a_0, …, a_n) = (-1)^n (a_n, a_0, …, a_{n-1})`.
fn one_minus_t(a: &Algebra, n: usize) -> Vec<Vec<Q>> {
    let d = a.dim;
    let src = tuples(d, n + 1);
    let mut m = vec![vec![q(0); src.len()]; src.len()];
    for (col, t) in src.iter().enumerate() {
        m[col][col] += q(1);
        let mut s = vec![t[n]];
        s.extend_from_slice(&t[..n]);
        let sgn = if n.is_multiple_of(2) { -1 } else { 1 };
        m[index(&s, d)][col] += q(sgn);
    }
    m
}

fn hstack(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().chain(y).cloned().collect())
        .collect()
}

pub fn hh(a: &Algebra, n: usize) -> usize {
    let dim = a.dim.pow(n as u32 + 1);
    let out = if n == 0 { 0 } else { dense_rank(boundary(a, n)) };
    dim - out - dense_rank(boundary(a, n + 1))
}

pub fn hc(a: &Algebra, n: usize) -> usize {
    let t = |k: usize| one_minus_t(a, k);
    let quotient_dim = a.dim.pow(n as u32 + 1) - dense_rank(t(n));
    // Rank of b̄: C^λ_k → C^λ_{k-1} is dim(b C_k + I_{k-1}) - dim I_{k-1}.
    let bar_rank = |k: usize| {
        if k == 0 {
            return 0;
        }
        dense_rank(hstack(&boundary(a, k), &t(k - 1))) - dense_rank(t(k - 1))
    };
    quotient_dim - bar_rank(n) - bar_rank(n + 1)
}

pub fn ground_field() -> Algebra {
    Algebra {
        dim: 1,
        mult: vec![vec![vec![1]]],
    }
}

pub fn dual_numbers() -> Algebra {
    // e_0 = 1, e_1 = x, x² = 0.
    Algebra {
        dim: 2,
        mult: vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]],
    }
}

/// Path algebra of `1 → 2`: e_1, e_2, f with e_1 f = f = f e_2.
pub fn a2_path() -> Algebra {
    let mut mult = vec![vec![vec![0; 3]; 3]; 3];
    mult[0][0][0] = 1;
    mult[1][1][1] = 1;
    mult[0][2][2] = 1;
    mult[2][1][2] = 1;
    Algebra { dim: 3, mult }
}
