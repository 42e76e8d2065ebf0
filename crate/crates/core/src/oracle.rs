//! Brute-force solution spaces by dense linear algebra over GF(p).
//!
//! The coefficients of `λ` (`N_0` unknowns) map linearly to the coefficients
//! of `rem(λ S_i, g_i)`; solutions are exactly the kernel of the map to the
//! coefficients of index `N_i .. deg g_i - 1`. Nothing here calls into the
//! polynomial or matrix code used by the solvers: all arithmetic is done on
//! raw `u64` vectors.

use crate::error::{Error, Result};
use crate::simpade::{ProblemInstance, SolutionSpec};

/// Upper bound on `N_0 * (n + 1) * max deg g_i`.
pub const ORACLE_CELL_LIMIT: usize = 1_000_000;

/// A GF(p)-basis of all solutions `λ`, as ascending coefficient vectors of
/// length `N_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace {
    pub basis: Vec<Vec<u64>>,
    pub dim: usize,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<u64>], cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(r) = (row..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, r);
        let inv = invmod(m[row][col], p);
        for v in m[row].iter_mut() {
            *v = mulmod(*v, inv, p);
        }
        for r in 0..m.len() {
            if r != row && m[r][col] != 0 {
                let c = m[r][col];
                for j in 0..cols {
                    let sub = mulmod(c, m[row][j], p);
                    m[r][j] = (m[r][j] + p - sub) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

fn rank(vectors: &[Vec<u64>], cols: usize, p: u64) -> usize {
    let mut m = vectors.to_vec();
    rref(&mut m, cols, p).len()
}

fn check_size(instance: &ProblemInstance) -> Result<()> {
    let cells = instance.bounds()[0]
        .saturating_mul(instance.n() + 1)
        .saturating_mul(instance.max_modulus_degree());
    if cells > ORACLE_CELL_LIMIT {
        return Err(Error::OracleTooLarge {
            cells,
            limit: ORACLE_CELL_LIMIT,
        });
    }
    Ok(())
}

/// All `λ` with `deg λ < N_0` and `deg rem(λ S_i, g_i) < N_i` for every `i`.
pub fn oracle_solution_space(instance: &ProblemInstance) -> Result<SolutionSpace> {
    check_size(instance)?;
    let p = instance.field().modulus();
    let n0 = instance.bounds()[0];

    // One row per linear condition, one column per coefficient of λ.
    let mut conditions: Vec<Vec<u64>> = Vec::new();
    for i in 0..instance.n() {
        let g = instance.moduli()[i].coeffs();
        let dg = g.len() - 1;
        let lead_inv = invmod(g[dg], p);
        let ni = instance.bounds()[i + 1];
        // columns[k] = coefficients of rem(x^k S_i, g_i), length dg.
        let mut cur = vec![0u64; dg];
        for (j, &c) in instance.series()[i].coeffs().iter().enumerate() {
            cur[j] = c;
        }
        let mut columns = Vec::with_capacity(n0);
        for _ in 0..n0 {
            columns.push(cur.clone());
            if dg == 0 {
                continue;
            }
            // cur <- x * cur mod g
            let top = cur[dg - 1];
            cur.rotate_right(1);
            cur[0] = 0;
            if top != 0 {
                let c = mulmod(top, lead_inv, p);
                for j in 0..dg {
                    cur[j] = (cur[j] + p - mulmod(c, g[j], p)) % p;
                }
            }
        }
        for j in ni..dg {
            conditions.push(columns.iter().map(|col| col[j]).collect());
        }
    }

    let pivots = rref(&mut conditions, n0, p);
    let mut basis = Vec::new();
    for free in (0..n0).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; n0];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - conditions[r][free]) % p;
        }
        basis.push(v);
    }
    let dim = basis.len();
    Ok(SolutionSpace { basis, dim })
}

/// Whether the GF(p)-span of `{x^j λ_i : 0 <= j < -δ_i}` equals the oracle
/// solution space.
pub fn spec_matches_oracle(spec: &SolutionSpec, instance: &ProblemInstance) -> Result<bool> {
    let space = oracle_solution_space(instance)?;
    let p = instance.field().modulus();
    let n0 = instance.bounds()[0];
    if spec.lambdas.len() != spec.deltas.len() {
        return Ok(false);
    }
    let mut expansion: Vec<Vec<u64>> = Vec::new();
    for (lambda, &delta) in spec.lambdas.iter().zip(&spec.deltas) {
        let c = lambda.coeffs();
        for j in 0..(-delta).max(0) as usize {
            if c.len() + j > n0 {
                return Ok(false);
            }
            let mut v = vec![0u64; n0];
            v[j..j + c.len()].copy_from_slice(c);
            expansion.push(v);
        }
    }
    let r_spec = rank(&expansion, n0, p);
    let mut union = expansion;
    union.extend(space.basis.iter().cloned());
    Ok(r_spec == space.dim && rank(&union, n0, p) == space.dim)
}
