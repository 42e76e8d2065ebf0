use std::fmt;
use std::ops::Index;

use super::PolyMatrix;
use crate::error::{Error, Result};
use crate::ffpoly::{FieldMatrix, Poly};

/// Integer column weights; the `s`-degree of a row is `max_j (deg v_j + s_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Shift(Vec<i64>);

impl Shift {
    pub fn new(entries: Vec<i64>) -> Self {
        Shift(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Shift(vec![0; n])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn negated(&self) -> Shift {
        Shift(self.0.iter().map(|&s| -s).collect())
    }

    pub(crate) fn check_len(&self, expected: usize) -> Result<()> {
        if self.0.len() != expected {
            return Err(Error::ShiftLength {
                expected,
                got: self.0.len(),
            });
        }
        Ok(())
    }
}

impl From<Vec<i64>> for Shift {
    fn from(v: Vec<i64>) -> Self {
        Shift(v)
    }
}

impl From<&[i64]> for Shift {
    fn from(v: &[i64]) -> Self {
        Shift(v.to_vec())
    }
}

impl Index<usize> for Shift {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

/// A shifted degree; `NegInfinity` (the degree of zero) orders below every
/// finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn of(p: &Poly, shift: i64) -> Degree {
        match p.degree() {
            None => Degree::NegInfinity,
            Some(d) => Degree::Finite(d as i64 + shift),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RowDegrees(pub Vec<Degree>);

impl RowDegrees {
    pub fn entries(&self) -> &[Degree] {
        &self.0
    }

    /// All entries as integers, or `None` if some row is zero.
    pub fn finite(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|d| d.finite()).collect()
    }
}

impl From<Vec<i64>> for RowDegrees {
    fn from(v: Vec<i64>) -> Self {
        RowDegrees(v.into_iter().map(Degree::Finite).collect())
    }
}

pub fn vector_shifted_degree(v: &[Poly], s: &Shift) -> Result<Degree> {
    s.check_len(v.len())?;
    Ok(v.iter()
        .zip(s.entries())
        .map(|(p, &sj)| Degree::of(p, sj))
        .max()
        .unwrap_or(Degree::NegInfinity))
}

/// Rightmost column reaching the row's shifted degree, with that degree.
pub(crate) fn row_pivot(row: &[Poly], s: &[i64]) -> Option<(usize, i64)> {
    let mut best: Option<(usize, i64)> = None;
    for (j, p) in row.iter().enumerate() {
        if let Some(d) = p.degree() {
            let sd = d as i64 + s[j];
            if best.is_none_or(|(_, b)| sd >= b) {
                best = Some((j, sd));
            }
        }
    }
    best
}

pub fn shifted_row_degrees(a: &PolyMatrix, s: &Shift) -> Result<RowDegrees> {
    s.check_len(a.cols())?;
    Ok(RowDegrees(
        (0..a.rows())
            .map(|i| {
                a.row(i)
                    .iter()
                    .zip(s.entries())
                    .map(|(p, &sj)| Degree::of(p, sj))
                    .max()
                    .unwrap_or(Degree::NegInfinity)
            })
            .collect(),
    ))
}

pub fn shifted_leading_matrix(a: &PolyMatrix, s: &Shift) -> Result<FieldMatrix> {
    let degs = shifted_row_degrees(a, s)?;
    let mut lm = FieldMatrix::zero(a.field(), a.rows(), a.cols());
    for (i, d) in degs.entries().iter().enumerate() {
        let d = d.finite().ok_or(Error::ZeroRow(i))?;
        for j in 0..a.cols() {
            let k = d - s[j];
            if k >= 0 {
                lm.set(i, j, a.get(i, j).coeff(k as usize));
            }
        }
    }
    Ok(lm)
}

/// Full row rank of the shifted leading matrix. Zero rows give `false`.
pub fn is_row_reduced(a: &PolyMatrix, s: &Shift) -> Result<bool> {
    s.check_len(a.cols())?;
    match shifted_leading_matrix(a, s) {
        Ok(lm) => Ok(lm.rank() == a.rows()),
        Err(Error::ZeroRow(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Shifted Popov form for a square matrix: unit lower triangular shifted
/// leading matrix, and every diagonal entry strictly dominates the degrees of
/// the other entries in its column.
pub fn is_popov(a: &PolyMatrix, s: &Shift) -> Result<bool> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    s.check_len(a.cols())?;
    let lm = match shifted_leading_matrix(a, s) {
        Ok(lm) => lm,
        Err(Error::ZeroRow(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    if !lm.is_unit_lower_triangular() {
        return Ok(false);
    }
    for j in 0..a.cols() {
        let diag = a.get(j, j).degree();
        for i in 0..a.rows() {
            if i != j && a.get(i, j).degree() >= diag {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::PrimeField;

    fn gf2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn m(rows: &[&[&[u64]]]) -> PolyMatrix {
        let rows: Vec<Vec<Vec<u64>>> = rows
            .iter()
            .map(|r| r.iter().map(|c| c.to_vec()).collect())
            .collect();
        PolyMatrix::from_coeffs(gf2(), &rows).unwrap()
    }

    #[test]
    fn degree_sentinel_orders_below_integers() {
        assert!(Degree::NegInfinity < Degree::Finite(i64::MIN));
        assert!(Degree::Finite(-3) < Degree::Finite(0));
    }

    #[test]
    fn identity_degrees_and_reducedness() {
        let f = gf2();
        let id = PolyMatrix::identity(f, 3);
        assert_eq!(
            shifted_row_degrees(&id, &Shift::zeros(3)).unwrap(),
            RowDegrees::from(vec![0, 0, 0])
        );
        let s = Shift::new(vec![4, -2, 7]);
        assert!(is_row_reduced(&id, &s).unwrap());
        assert!(is_popov(&id, &s).unwrap());
    }

    #[test]
    fn zero_row_reports_neg_infinity() {
        let a = m(&[&[&[1], &[0, 1]], &[&[], &[]]]);
        let d = shifted_row_degrees(&a, &Shift::zeros(2)).unwrap();
        assert_eq!(d.0[1], Degree::NegInfinity);
        assert_eq!(
            shifted_leading_matrix(&a, &Shift::zeros(2)),
            Err(Error::ZeroRow(1))
        );
        assert!(!is_row_reduced(&a, &Shift::zeros(2)).unwrap());
    }

    #[test]
    fn shift_length_is_checked() {
        let a = PolyMatrix::identity(gf2(), 2);
        assert_eq!(
            shifted_row_degrees(&a, &Shift::zeros(3)),
            Err(Error::ShiftLength {
                expected: 2,
                got: 3
            })
        );
    }

    #[test]
    fn stacked_constant_rows_are_not_reduced() {
        let a = m(&[&[&[1]], &[&[1]]]);
        let lm = shifted_leading_matrix(&a, &Shift::zeros(1)).unwrap();
        assert_eq!(lm.to_rows(), vec![vec![1], vec![1]]);
        assert!(!is_row_reduced(&a, &Shift::zeros(1)).unwrap());
    }

    #[test]
    fn x_identity_leading_matrix() {
        let a = m(&[&[&[0, 1], &[]], &[&[], &[0, 1]]]);
        let lm = shifted_leading_matrix(&a, &Shift::zeros(2)).unwrap();
        assert!(lm.is_unit_lower_triangular());
        assert!(is_popov(&a, &Shift::zeros(2)).unwrap());
    }

    #[test]
    fn popov_predicate_checks_both_conditions() {
        let s = Shift::zeros(2);
        // [[x, 1], [1, x]]: leading matrix I, off-diagonals dominated.
        assert!(is_popov(&m(&[&[&[0, 1], &[1]], &[&[1], &[0, 1]]]), &s).unwrap());
        // [[x, 0], [x^2, x]]: both pivots in column 0.
        assert!(!is_popov(&m(&[&[&[0, 1], &[]], &[&[0, 0, 1], &[0, 1]]]), &s).unwrap());
        // [[x, 0], [x, 1]] with s = 0: LM = [[1,0],[1,0]].
        assert!(!is_popov(&m(&[&[&[0, 1], &[]], &[&[0, 1], &[1]]]), &s).unwrap());
        // [[x^2, 0], [x, 1]] with s = (0, 1): LM = [[1,0],[1,1]], deg x < deg x^2.
        assert!(
            is_popov(&m(&[&[&[0, 0, 1], &[]], &[&[0, 1], &[1]]]), &Shift::new(vec![0, 1])).unwrap()
        );
        assert!(matches!(
            is_popov(&PolyMatrix::zero(gf2(), 1, 2), &s),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn row_pivot_is_rightmost() {
        let f = gf2();
        let row = vec![Poly::x(f), Poly::x(f), Poly::one(f)];
        assert_eq!(row_pivot(&row, &[0, 0, 0]), Some((1, 1)));
        assert_eq!(row_pivot(&row, &[0, 0, 1]), Some((2, 1)));
    }
}
