//! Independent reference arithmetic and random generators shared by the
//! integration tests. The reference routines work on raw coefficient
//! vectors and never call into the library's arithmetic.

#![allow(dead_code)]

mod checks;
#[allow(unused_imports)]
pub use checks::*;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use simpade_core::appbasis::popov_basis;
use simpade_core::{Poly, PolyMatrix, PrimeField, ProblemInstance, Shift};

pub type Coeffs = Vec<u64>;

pub fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn trim(mut a: Coeffs) -> Coeffs {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn naive_mul(a: &[u64], b: &[u64], p: u64) -> Coeffs {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    trim(out)
}

pub fn naive_add(a: &[u64], b: &[u64], p: u64) -> Coeffs {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(out)
}

pub fn naive_neg(a: &[u64], p: u64) -> Coeffs {
    a.iter().map(|&c| (p - c) % p).collect()
}

/// Determinant by Laplace expansion along the first column.
pub fn cofactor_det(m: &[Vec<Coeffs>], p: u64) -> Coeffs {
    let n = m.len();
    if n == 0 {
        return vec![1];
    }
    if n == 1 {
        return trim(m[0][0].clone());
    }
    let mut acc: Coeffs = Vec::new();
    for i in 0..n {
        if m[i][0].is_empty() {
            continue;
        }
        let minor: Vec<Vec<Coeffs>> = (0..n)
            .filter(|&r| r != i)
            .map(|r| m[r][1..].to_vec())
            .collect();
        let mut term = naive_mul(&m[i][0], &cofactor_det(&minor, p), p);
        if i % 2 == 1 {
            term = naive_neg(&term, p);
        }
        acc = naive_add(&acc, &term, p);
    }
    acc
}

/// First row of `adj(m)`: entry `j` is `(-1)^j det(m without row j and column 0)`.
pub fn cofactor_adjoint_first_row(m: &[Vec<Coeffs>], p: u64) -> Vec<Coeffs> {
    let n = m.len();
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<Coeffs>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| m[r][1..].to_vec())
                .collect();
            let d = cofactor_det(&minor, p);
            if j % 2 == 1 {
                trim(naive_neg(&d, p))
            } else {
                d
            }
        })
        .collect()
}

/// Full adjoint by cofactors: `adj[i][j] = (-1)^(i+j) det(m without row j, column i)`.
pub fn cofactor_adjoint(m: &[Vec<Coeffs>], p: u64) -> Vec<Vec<Coeffs>> {
    let n = m.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let minor: Vec<Vec<Coeffs>> = (0..n)
                        .filter(|&r| r != j)
                        .map(|r| {
                            (0..n)
                                .filter(|&c| c != i)
                                .map(|c| m[r][c].clone())
                                .collect()
                        })
                        .collect();
                    let d = cofactor_det(&minor, p);
                    if (i + j) % 2 == 1 {
                        trim(naive_neg(&d, p))
                    } else {
                        d
                    }
                })
                .collect()
        })
        .collect()
}

/// Reference product of coefficient matrices.
pub fn naive_mat_mul(a: &[Vec<Coeffs>], b: &[Vec<Coeffs>], cols: usize, p: u64) -> Vec<Vec<Coeffs>> {
    let inner = b.len();
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(Vec::new(), |acc, k| {
                        naive_add(&acc, &naive_mul(&row[k], &b[k][j], p), p)
                    })
                })
                .collect()
        })
        .collect()
}

pub fn rand_coeffs(rng: &mut ChaCha8Rng, p: u64, len: usize) -> Coeffs {
    (0..len).map(|_| rng.gen_range(0..p)).collect()
}

pub fn rand_poly(rng: &mut ChaCha8Rng, f: PrimeField, len: usize) -> Poly {
    Poly::new(f, rand_coeffs(rng, f.modulus(), len))
}

pub fn rand_matrix(rng: &mut ChaCha8Rng, f: PrimeField, rows: usize, cols: usize, len: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zero(f, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            let l = rng.gen_range(0..=len);
            m.set(i, j, rand_poly(rng, f, l));
        }
    }
    m
}

/// Unimodular matrix from random elementary row operations.
pub fn rand_unimodular(rng: &mut ChaCha8Rng, f: PrimeField, n: usize, ops: usize) -> PolyMatrix {
    let mut u = PolyMatrix::identity(f, n);
    if n < 2 {
        if n == 1 {
            u.set(0, 0, Poly::constant(f, rng.gen_range(1..f.modulus())));
        }
        return u;
    }
    for _ in 0..ops {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        match rng.gen_range(0..3) {
            0 => u.swap_rows(i, j),
            1 => {
                let c = rng.gen_range(1..f.modulus());
                for p in u.row_mut(i) {
                    *p = p.scale(c);
                }
            }
            _ => {
                let l = rng.gen_range(1..=3);
                let q = rand_poly(rng, f, l);
                let src = u.row(j).to_vec();
                for (t, s) in u.row_mut(i).iter_mut().zip(&src) {
                    *t = &*t + &(&q * s);
                }
            }
        }
    }
    u
}

/// Random instance with `n` series; moduli degrees drawn from `deg_range`,
/// either all `x^d` (uniform) or random monic polynomials of mixed degree.
pub fn rand_instance(
    rng: &mut ChaCha8Rng,
    p: u64,
    n: usize,
    deg_range: std::ops::RangeInclusive<usize>,
    uniform: bool,
) -> ProblemInstance {
    let f = gf(p);
    let common = rng.gen_range(deg_range.clone());
    let mut series = Vec::new();
    let mut moduli = Vec::new();
    let mut bounds = vec![0usize];
    for _ in 0..n {
        let d = if uniform { common } else { rng.gen_range(deg_range.clone()) };
        let g = if uniform || rng.gen_bool(0.3) {
            Poly::monomial(f, 1, d)
        } else {
            let mut c = rand_coeffs(rng, p, d);
            c.push(1);
            Poly::new(f, c)
        };
        moduli.push(g);
        series.push(rand_poly(rng, f, d));
        bounds.push(rng.gen_range(0..=d));
    }
    let max_deg = moduli.iter().map(|g| g.degree().unwrap()).max().unwrap();
    bounds[0] = rng.gen_range(1..=max_deg);
    ProblemInstance::new(series, moduli, bounds).unwrap()
}

/// A random shifted Popov approximant basis; its determinant is `x^D`.
pub fn rand_popov_basis(rng: &mut ChaCha8Rng, p: u64, n: usize, max_order: usize) -> PolyMatrix {
    let f = gf(p);
    let m = rng.gen_range(1..=n);
    let a = rand_matrix(rng, f, n, m, max_order);
    let s = Shift::new((0..n).map(|_| rng.gen_range(-6..=6)).collect());
    let d = rng.gen_range(0..=max_order);
    popov_basis(d, &a, &s).unwrap().basis
}

pub fn example1() -> ProblemInstance {
    ProblemInstance::from_coeffs(
        2,
        &[vec![1, 0, 1, 0, 1], vec![1, 0, 0, 0, 1], vec![1, 0, 0, 1, 1]],
        &vec![vec![0, 0, 0, 0, 0, 1]; 3],
        &[5, 3, 4, 5],
    )
    .unwrap()
}

/// The two printed solution rows of Example 1's completion.
pub fn example1_solution_rows() -> PolyMatrix {
    PolyMatrix::from_coeffs(
        gf(2),
        &[
            vec![vec![1, 0, 0, 0, 1], vec![1, 0, 1], vec![1], vec![1, 0, 0, 1]],
            vec![vec![0, 1, 0, 1], vec![0, 1], vec![0, 1, 0, 1], vec![0, 1, 0, 1, 1]],
        ],
    )
    .unwrap()
}

/// The 4x4 Popov basis printed for Example 1 under shift `N`.
pub fn duality_g() -> PolyMatrix {
    PolyMatrix::from_coeffs(
        gf(2),
        &[
            vec![vec![0, 1], vec![], vec![0, 1], vec![]],
            vec![vec![1], vec![1, 0, 1], vec![], vec![]],
            vec![vec![], vec![1], vec![1, 0, 1], vec![]],
            vec![vec![], vec![0, 1], vec![1, 1], vec![1]],
        ],
    )
    .unwrap()
}

/// The 5x5 intersection basis printed for the split of Example 1, order 7.
pub fn intersection_g() -> PolyMatrix {
    PolyMatrix::from_coeffs(
        gf(2),
        &[
            vec![vec![0, 0, 0, 0, 0, 0, 0, 0, 1], vec![], vec![], vec![], vec![]],
            vec![vec![1, 1, 0, 1], vec![1, 0, 0, 0, 1], vec![1], vec![], vec![1]],
            vec![vec![1, 1, 1, 1], vec![1], vec![1, 1], vec![1], vec![1]],
            vec![vec![1, 1, 0, 1, 1], vec![1], vec![1], vec![0, 0, 1], vec![1]],
            vec![vec![1, 0, 0, 0, 1], vec![1], vec![], vec![1, 1], vec![1, 1]],
        ],
    )
    .unwrap()
}

pub fn to_coeff_matrix(m: &PolyMatrix) -> Vec<Vec<Coeffs>> {
    m.to_coeffs()
}
