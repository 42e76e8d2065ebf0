use super::PolyMatrix;
use crate::error::{Error, Result};
use crate::ffpoly::Poly;

/// Determinant by fraction-free (Bareiss) elimination over GF(p)[x].
pub fn determinant(a: &PolyMatrix) -> Result<Poly> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let f = a.field();
    let n = a.rows();
    if n == 0 {
        return Ok(Poly::one(f));
    }
    let mut m = a.clone();
    let mut negate = false;
    let mut prev = Poly::one(f);
    for k in 0..n - 1 {
        if m.get(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                return Ok(Poly::zero(f));
            };
            m.swap_rows(k, p);
            negate = !negate;
        }
        let pivot = m.get(k, k).clone();
        for i in k + 1..n {
            let lead = m.get(i, k).clone();
            for j in k + 1..n {
                let num = &(&pivot * m.get(i, j)) - &(&lead * m.get(k, j));
                let (q, r) = num.divrem(&prev)?;
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m.set(i, j, q);
            }
            m.set(i, k, Poly::zero(f));
        }
        prev = pivot;
    }
    let det = m.get(n - 1, n - 1).clone();
    Ok(if negate { -&det } else { det })
}
