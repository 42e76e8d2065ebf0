//! First row of the adjoint of a polynomial matrix with determinant `x^D`.
//!
//! Since `det F = x^D`, `F(1)` is invertible over every field, so the
//! solution of `w F = x^D e_1` is computed as a power series around `x = 1`:
//! substitute `x -> x + 1`, invert the constant term, lift the inverse by
//! Newton iteration to the required precision, and substitute back.

use crate::error::{Error, Result};
use crate::ffpoly::Poly;
use crate::polymat::{determinant, PolyMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointRow {
    /// First row of `adj(F)`.
    pub row: Vec<Poly>,
    /// `D` with `det F = x^D`.
    pub exponent: usize,
}

fn check_square(f: &PolyMatrix) -> Result<()> {
    if !f.is_square() {
        return Err(Error::NotSquare {
            rows: f.rows(),
            cols: f.cols(),
        });
    }
    Ok(())
}

/// Diagonal entries monic and strictly dominating the degrees of their
/// columns, as in any shifted Popov form. Then `deg det F` is the sum of the
/// diagonal degrees and `det F` is monic.
fn diagonal_dominant_degree(f: &PolyMatrix) -> Option<usize> {
    let mut total = 0;
    for j in 0..f.cols() {
        let diag = f.get(j, j);
        if !diag.is_monic() {
            return None;
        }
        let dj = diag.degree()?;
        for i in 0..f.rows() {
            if i != j && f.get(i, j).degree().is_some_and(|d| d >= dj) {
                return None;
            }
        }
        total += dj;
    }
    Some(total)
}

/// The exponent `D` such that `det F = x^D`, or an error if the determinant
/// is not a power of `x`.
pub fn det_power_of_x(f: &PolyMatrix) -> Result<usize> {
    check_square(f)?;
    let field = f.field();
    if let Some(d) = diagonal_dominant_degree(f) {
        // det F - x^D has degree < D; it vanishes iff it vanishes at D+1 points.
        if (d as u64) < field.modulus() {
            for alpha in 0..=d as u64 {
                let got = f.eval(alpha).determinant()?;
                if got != field.pow(alpha, d as u64) {
                    return Err(Error::DeterminantNotMonomial);
                }
            }
            return Ok(d);
        }
    }
    let det = determinant(f)?;
    match det.degree() {
        Some(d) if det == Poly::monomial(field, 1, d) => Ok(d),
        _ => Err(Error::DeterminantNotMonomial),
    }
}

/// The polynomial row vector `w` with `w F = v`, computed by series lifting
/// around `x = 1` to `precision` terms.
pub fn lifted_vector_solve(v: &[Poly], f: &PolyMatrix, precision: usize) -> Result<Vec<Poly>> {
    check_square(f)?;
    if v.len() != f.rows() {
        return Err(Error::Dimension(format!(
            "vector of length {} against {}x{} matrix",
            v.len(),
            f.rows(),
            f.cols()
        )));
    }
    let field = f.field();
    let n = f.rows();
    let shifted = f.map(|p| p.taylor_shift(1));
    let inv0 = shifted
        .eval(0)
        .inverse()
        .map_err(|_| Error::SingularAtExpansionPoint)?;

    let mut inverse = PolyMatrix::from_field_matrix(&inv0);
    let two = PolyMatrix::identity(field, n).map(|p| p.scale(2));
    let mut prec = 1;
    while prec < precision {
        prec = (2 * prec).min(precision);
        let err = shifted.truncate(prec).mul(&inverse)?.truncate(prec);
        let correction = two.map(Poly::clone);
        let correction = subtract(&correction, &err);
        inverse = inverse.mul(&correction)?.truncate(prec);
    }

    let v_shifted: Vec<Poly> = v.iter().map(|p| p.taylor_shift(1)).collect();
    let w_shifted = inverse.left_mul_vector(&v_shifted)?;
    let back = field.modulus() - 1;
    let w: Vec<Poly> = w_shifted
        .iter()
        .map(|p| p.truncate(precision).taylor_shift(back))
        .collect();

    if f.left_mul_vector(&w)? != v {
        return Err(Error::NotPolynomial(precision));
    }
    Ok(w)
}

fn subtract(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let mut out = a.clone();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out.set(i, j, a.get(i, j) - b.get(i, j));
        }
    }
    out
}

/// First row of `adj(F)` for `F` with `det F = x^D`.
///
/// The entries are cofactors of `F` with the first column removed, so their
/// degrees are bounded by the sum of the remaining column degrees; for a
/// shifted Popov `F` that bound is at most `D`.
pub fn adjoint_first_row(f: &PolyMatrix) -> Result<AdjointRow> {
    let exponent = det_power_of_x(f)?;
    let field = f.field();
    let n = f.rows();
    if n == 0 {
        return Ok(AdjointRow {
            row: Vec::new(),
            exponent,
        });
    }
    let cofactor_bound: usize = f.column_degrees()[1..]
        .iter()
        .map(|d| d.unwrap_or(0))
        .sum();
    let mut v = vec![Poly::zero(field); n];
    v[0] = Poly::monomial(field, 1, exponent);
    let row = lifted_vector_solve(&v, f, exponent.max(cofactor_bound) + 1)?;
    Ok(AdjointRow { row, exponent })
}
