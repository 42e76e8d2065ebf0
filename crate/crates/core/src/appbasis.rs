//! Shifted minimal approximant bases.
//!
//! For `A` of size `r x m`, an order-`d` approximant is a row vector `p`
//! with `p A = 0 mod x^d`. The functions here return `r x r` bases of all
//! such vectors that are `s`-row reduced, together with their `s`-row
//! degrees.

use crate::error::Result;
use crate::ffpoly::Poly;
use crate::polymat::{popov_canonical, shifted_row_degrees, PolyMatrix, Shift};

/// Orders at or below this are handled by the iterative algorithm.
pub const PM_BASIS_THRESHOLD: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximantBasis {
    pub basis: PolyMatrix,
    /// Shifted row degrees of `basis` under `shift`.
    pub degrees: Vec<i64>,
    pub order: usize,
    pub shift: Shift,
}

/// The rows of a minimal approximant basis with negative shifted degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativePart {
    pub basis: PolyMatrix,
    pub degrees: Vec<i64>,
}

impl NegativePart {
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }
}

/// Iterative order basis: raises the order by one per step.
///
/// At each step the constant residual of the current basis is eliminated
/// row by row, visiting rows by increasing shifted degree (lowest index on
/// ties). Rows that survive elimination become pivots and are multiplied by
/// `x`. The result is in shifted weak Popov form with pivots on the
/// diagonal, so the tracked degrees are exact.
pub fn m_basis(order: usize, a: &PolyMatrix, s: &Shift) -> Result<ApproximantBasis> {
    s.check_len(a.rows())?;
    let f = a.field();
    let r = a.rows();
    let mut basis = PolyMatrix::identity(f, r);
    let mut residual = a.truncate(order);
    let mut degrees: Vec<i64> = s.entries().to_vec();

    let mut visit: Vec<usize> = (0..r).collect();
    for k in 0..order {
        visit.sort_by_key(|&i| (degrees[i], i));
        // (row, pivot column, reduced constant residual, inverse of pivot value)
        let mut pivots: Vec<(usize, usize, Vec<u64>, u64)> = Vec::new();
        for &i in &visit {
            let mut c: Vec<u64> = residual.row(i).iter().map(|p| p.coeff(k)).collect();
            if c.iter().all(|&v| v == 0) {
                continue;
            }
            for (pr, pc, prow, pinv) in &pivots {
                if c[*pc] == 0 {
                    continue;
                }
                let factor = f.mul(c[*pc], *pinv);
                let neg = f.neg(factor);
                for (cj, &pj) in c.iter_mut().zip(prow) {
                    *cj = f.sub(*cj, f.mul(factor, pj));
                }
                let (src_basis, src_res): (Vec<Poly>, Vec<Poly>) =
                    (basis.row(*pr).to_vec(), residual.row(*pr).to_vec());
                for (t, sp) in basis.row_mut(i).iter_mut().zip(&src_basis) {
                    t.add_scaled_shifted(neg, 0, sp);
                }
                for (t, sp) in residual.row_mut(i).iter_mut().zip(&src_res) {
                    t.add_scaled_shifted(neg, 0, sp);
                }
            }
            if let Some(pc) = c.iter().position(|&v| v != 0) {
                let inv = f.inv(c[pc])?;
                pivots.push((i, pc, c, inv));
            }
        }
        for (i, _, _, _) in &pivots {
            for p in basis.row_mut(*i).iter_mut() {
                *p = p.shift(1);
            }
            for p in residual.row_mut(*i).iter_mut() {
                *p = p.shift(1).truncate(order);
            }
            degrees[*i] += 1;
        }
    }
    Ok(ApproximantBasis {
        basis,
        degrees,
        order,
        shift: s.clone(),
    })
}

/// Divide-and-conquer order basis with the default base-case threshold.
pub fn pm_basis(order: usize, a: &PolyMatrix, s: &Shift) -> Result<ApproximantBasis> {
    pm_basis_with_threshold(order, a, s, PM_BASIS_THRESHOLD)
}

/// Splits the order in halves: a basis `F1` for the low half, then a basis
/// `F2` of the residual `F1 A / x^h` under the shift given by `F1`'s
/// degrees; the product `F2 F1` is a basis for the full order.
pub fn pm_basis_with_threshold(
    order: usize,
    a: &PolyMatrix,
    s: &Shift,
    threshold: usize,
) -> Result<ApproximantBasis> {
    s.check_len(a.rows())?;
    let threshold = threshold.max(1);
    let a = a.truncate(order);
    let (basis, degrees) = pm_rec(order, &a, s.entries(), threshold)?;
    Ok(ApproximantBasis {
        basis,
        degrees,
        order,
        shift: s.clone(),
    })
}

fn pm_rec(
    order: usize,
    a: &PolyMatrix,
    s: &[i64],
    threshold: usize,
) -> Result<(PolyMatrix, Vec<i64>)> {
    if order <= threshold {
        let res = m_basis(order, a, &Shift::from(s))?;
        return Ok((res.basis, res.degrees));
    }
    let half = order.div_ceil(2);
    let (f1, d1) = pm_rec(half, &a.truncate(half), s, threshold)?;
    let residual = f1.mul(a)?.quo_xk(half).truncate(order - half);
    let (f2, d2) = pm_rec(order - half, &residual, &d1, threshold)?;
    Ok((f2.mul(&f1)?, d2))
}

/// Minimal approximant basis in shifted Popov form; canonical for the given
/// order, matrix and shift.
pub fn popov_basis(order: usize, a: &PolyMatrix, s: &Shift) -> Result<ApproximantBasis> {
    let res = pm_basis(order, a, s)?;
    let basis = popov_canonical(&res.basis, s)?;
    let degrees = shifted_row_degrees(&basis, s)?
        .finite()
        .expect("approximant basis has no zero row");
    Ok(ApproximantBasis {
        basis,
        degrees,
        order,
        shift: s.clone(),
    })
}

/// Rows of the shifted Popov approximant basis with negative shifted degree.
pub fn neg_min_basis(order: usize, a: &PolyMatrix, s: &Shift) -> Result<NegativePart> {
    let full = popov_basis(order, a, s)?;
    let keep: Vec<usize> = (0..full.degrees.len())
        .filter(|&i| full.degrees[i] < 0)
        .collect();
    Ok(NegativePart {
        basis: full.basis.select_rows(&keep),
        degrees: keep.iter().map(|&i| full.degrees[i]).collect(),
    })
}
