//! Row reduction by successive cancellation, shifted Popov normalization, and
//! row-space membership.

use super::degrees::{is_row_reduced, row_pivot, shifted_leading_matrix, shifted_row_degrees};
use super::{PolyMatrix, Shift};
use crate::error::{Error, Result};
use crate::ffpoly::{FieldMatrix, Poly};

/// `row[target] -= c * x^k * row[source]`
fn sub_row_multiple(m: &mut PolyMatrix, target: usize, source: usize, c: u64, k: usize) {
    let f = m.field();
    let neg = f.neg(c);
    let src: Vec<Poly> = m.row(source).to_vec();
    for (t, s) in m.row_mut(target).iter_mut().zip(&src) {
        t.add_scaled_shifted(neg, k, s);
    }
}

/// `row[target] -= q * row[source]`
fn sub_row_poly_multiple(m: &mut PolyMatrix, target: usize, source: usize, q: &Poly) {
    let src: Vec<Poly> = m.row(source).to_vec();
    for (t, s) in m.row_mut(target).iter_mut().zip(&src) {
        if !s.is_zero() {
            *t = &*t - &(q * s);
        }
    }
}

/// Shifted weak Popov form by successive cancellation of pivot collisions.
///
/// Returns the transformed matrix and, per row, its pivot column (the
/// rightmost column reaching the row's shifted degree) and shifted degree.
/// Pivot columns are pairwise distinct on return. A row cancelling to zero
/// means the input was not of full row rank.
pub fn weak_popov(a: &PolyMatrix, s: &Shift) -> Result<(PolyMatrix, Vec<(usize, i64)>)> {
    s.check_len(a.cols())?;
    let f = a.field();
    let mut m = a.clone();
    loop {
        let mut piv = Vec::with_capacity(m.rows());
        for i in 0..m.rows() {
            piv.push(row_pivot(m.row(i), s.entries()).ok_or(Error::Singular)?);
        }
        // Most expensive conflicting row first: maximal degree, lowest index.
        let mut target: Option<usize> = None;
        for i in 0..m.rows() {
            let shares = (0..m.rows()).any(|j| j != i && piv[j].0 == piv[i].0);
            if shares && target.is_none_or(|t| piv[i].1 > piv[t].1) {
                target = Some(i);
            }
        }
        let Some(t) = target else {
            return Ok((m, piv));
        };
        let col = piv[t].0;
        let mut source: Option<usize> = None;
        for j in 0..m.rows() {
            if j != t && piv[j].0 == col && source.is_none_or(|r| piv[j].1 < piv[r].1) {
                source = Some(j);
            }
        }
        let r = source.expect("conflict has a partner");
        let k = (piv[t].1 - piv[r].1) as usize;
        let lt = leading_coeff_at(&m, t, col, piv[t].1 - s[col]);
        let lr = leading_coeff_at(&m, r, col, piv[r].1 - s[col]);
        let c = f.mul(lt, f.inv(lr)?);
        sub_row_multiple(&mut m, t, r, c, k);
    }
}

fn leading_coeff_at(m: &PolyMatrix, i: usize, j: usize, deg: i64) -> u64 {
    m.get(i, j).coeff(deg as usize)
}

/// The unique shifted Popov form of the row space of a square nonsingular
/// matrix.
///
/// Weak Popov by cancellation, rows ordered by pivot, then every non-pivot
/// entry of a pivot column is reduced below the pivot degree, and pivots are
/// made monic.
pub fn popov_canonical(a: &PolyMatrix, s: &Shift) -> Result<PolyMatrix> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let (mut m, piv) = weak_popov(a, s)?;
    let mut order = vec![0usize; n];
    for (i, &(c, _)) in piv.iter().enumerate() {
        order[c] = i;
    }
    m = m.select_rows(&order);
    reduce_pivot_columns(&mut m, s)?;
    let f = m.field();
    for i in 0..n {
        let lc = m.get(i, i).leading_coeff();
        if lc != 1 {
            let inv = f.inv(lc)?;
            for p in m.row_mut(i).iter_mut() {
                *p = p.scale(inv);
            }
        }
    }
    Ok(m)
}

// Input: weak Popov with pivot of row i in column i.
fn reduce_pivot_columns(m: &mut PolyMatrix, s: &Shift) -> Result<()> {
    let n = m.rows();
    let pivot_deg: Vec<usize> = (0..n)
        .map(|i| m.get(i, i).degree().expect("pivot entry is nonzero"))
        .collect();
    for i in 0..n {
        loop {
            // Largest reducible term of row i under (shifted degree, column).
            let mut best: Option<(i64, usize)> = None;
            for k in 0..n {
                if k == i {
                    continue;
                }
                if let Some(d) = m.get(i, k).degree() {
                    if d >= pivot_deg[k] {
                        let key = (d as i64 + s[k], k);
                        if best.is_none_or(|b| key > b) {
                            best = Some(key);
                        }
                    }
                }
            }
            let Some((_, k)) = best else { break };
            let q = m.get(i, k).quo(m.get(k, k))?;
            sub_row_poly_multiple(m, i, k, &q);
        }
    }
    Ok(())
}

/// Whether `v` lies in the K[x]-row space of `a`, where `a` must be
/// `s`-row reduced.
///
/// Successive cancellation: the shifted leading vector of `v` is written as
/// a combination of leading rows of `a` of no larger shifted degree and
/// cancelled, which strictly lowers the shifted degree of `v`.
pub fn row_space_membership(v: &[Poly], a: &PolyMatrix, s: &Shift) -> Result<bool> {
    if v.len() != a.cols() {
        return Err(Error::Dimension(format!(
            "vector of length {} against {} columns",
            v.len(),
            a.cols()
        )));
    }
    s.check_len(a.cols())?;
    if !is_row_reduced(a, s)? {
        return Err(Error::NotRowReduced);
    }
    let f = a.field();
    let degs = shifted_row_degrees(a, s)?
        .finite()
        .expect("row reduced implies no zero row");
    let lm = if a.rows() > 0 {
        shifted_leading_matrix(a, s)?
    } else {
        FieldMatrix::zero(f, 0, a.cols())
    };
    let mut v: Vec<Poly> = v.to_vec();
    loop {
        let Some((_, dv)) = row_pivot(&v, s.entries()) else {
            return Ok(true);
        };
        let candidates: Vec<usize> = (0..a.rows()).filter(|&i| degs[i] <= dv).collect();
        let lead: Vec<u64> = (0..a.cols())
            .map(|j| {
                let k = dv - s[j];
                if k >= 0 {
                    v[j].coeff(k as usize)
                } else {
                    0
                }
            })
            .collect();
        if candidates.is_empty() {
            return Ok(false);
        }
        let rows: Vec<Vec<u64>> = candidates.iter().map(|&i| lm.row(i).to_vec()).collect();
        let sub = FieldMatrix::from_rows(f, &rows);
        let Some(c) = sub.solve_left(&lead) else {
            return Ok(false);
        };
        for (&i, &ci) in candidates.iter().zip(&c) {
            if ci == 0 {
                continue;
            }
            let k = (dv - degs[i]) as usize;
            let neg = f.neg(ci);
            for (vj, aj) in v.iter_mut().zip(a.row(i)) {
                vj.add_scaled_shifted(neg, k, aj);
            }
        }
    }
}

/// Mutual row-space inclusion of two row-reduced matrices.
pub fn row_space_equal(a: &PolyMatrix, sa: &Shift, b: &PolyMatrix, sb: &Shift) -> Result<bool> {
    if a.cols() != b.cols() {
        return Ok(false);
    }
    for i in 0..a.rows() {
        if !row_space_membership(a.row(i), b, sb)? {
            return Ok(false);
        }
    }
    for i in 0..b.rows() {
        if !row_space_membership(b.row(i), a, sa)? {
            return Ok(false);
        }
    }
    Ok(true)
}
