//! Polynomial matrices and the shifted-degree machinery built on them.

mod degrees;
mod det;
mod reduce;

use std::fmt;

use crate::error::{Error, Result};
use crate::ffpoly::{mul, FieldMatrix, Poly, PrimeField};

pub use degrees::{
    is_popov, is_row_reduced, shifted_leading_matrix, shifted_row_degrees, vector_shifted_degree,
    Degree, RowDegrees, Shift,
};
pub use det::determinant;
pub use reduce::{popov_canonical, row_space_equal, row_space_membership, weak_popov};

/// Dense `rows x cols` matrix of polynomials over a single prime field.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            field,
            rows,
            cols,
            entries: vec![Poly::zero(field); rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = PolyMatrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, Poly::one(field));
        }
        m
    }

    pub fn from_rows(field: PrimeField, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            for e in r {
                if e.field() != field {
                    return Err(Error::FieldMismatch(field.modulus(), e.field().modulus()));
                }
                entries.push(e);
            }
        }
        Ok(PolyMatrix {
            field,
            rows: nrows,
            cols,
            entries,
        })
    }

    /// Build from nested ascending coefficient lists (row-major).
    pub fn from_coeffs(field: PrimeField, rows: &[Vec<Vec<u64>>]) -> Result<Self> {
        PolyMatrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|c| Poly::new(field, c.clone())).collect())
                .collect(),
        )
    }

    pub fn to_coeffs(&self) -> Vec<Vec<Vec<u64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.coeffs().to_vec()).collect())
            .collect()
    }

    /// A single row vector `1 x n`.
    pub fn row_vector(field: PrimeField, v: Vec<Poly>) -> Result<Self> {
        PolyMatrix::from_rows(field, vec![v])
    }

    /// A single column vector `n x 1`.
    pub fn column_vector(field: PrimeField, v: Vec<Poly>) -> Result<Self> {
        PolyMatrix::from_rows(field, v.into_iter().map(|p| vec![p]).collect())
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Poly {
        &mut self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        debug_assert_eq!(v.field(), self.field);
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Poly] {
        &mut self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.row(i).iter().all(Poly::is_zero)
    }

    /// Maximal entry degree; `None` for the zero matrix.
    pub fn degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(Poly::degree).max()
    }

    pub fn column_degrees(&self) -> Vec<Option<usize>> {
        (0..self.cols)
            .map(|j| (0..self.rows).filter_map(|i| self.get(i, j).degree()).max())
            .collect()
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.modulus(),
                other.field.modulus(),
            ));
        }
        let a_refs: Vec<&[u64]> = self.entries.iter().map(Poly::coeffs).collect();
        let b_refs: Vec<&[u64]> = other.entries.iter().map(Poly::coeffs).collect();
        if let Some(prod) =
            mul::mat_mul_coeffs(self.field, &a_refs, &b_refs, (self.rows, self.cols, other.cols))
        {
            let entries = prod.into_iter().map(|c| Poly::from_reduced(self.field, c)).collect();
            return Ok(PolyMatrix {
                field: self.field,
                rows: self.rows,
                cols: other.cols,
                entries,
            });
        }
        let mut out = PolyMatrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    let slot = out.get_mut(i, j);
                    *slot = &*slot + &prod;
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix, `v * self`.
    pub fn left_mul_vector(&self, v: &[Poly]) -> Result<Vec<Poly>> {
        if v.len() != self.rows {
            return Err(Error::Dimension(format!(
                "vector of length {} times {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = vec![Poly::zero(self.field); self.cols];
        for (k, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                let b = self.get(k, j);
                if !b.is_zero() {
                    *slot = &*slot + &a.try_mul(b)?;
                }
            }
        }
        Ok(out)
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        PolyMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Entrywise reduction modulo `x^k`.
    pub fn truncate(&self, k: usize) -> PolyMatrix {
        self.map(|p| p.truncate(k))
    }

    /// Entrywise quotient by `x^k`.
    pub fn quo_xk(&self, k: usize) -> PolyMatrix {
        self.map(|p| p.quo_xk(k))
    }

    pub fn neg(&self) -> PolyMatrix {
        self.map(|p| -p)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> PolyMatrix {
        let mut entries = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            entries.extend_from_slice(self.row(i));
        }
        PolyMatrix {
            field: self.field,
            rows: idx.len(),
            cols: self.cols,
            entries,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (jj, &j) in idx.iter().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    /// Evaluate every entry at `a`.
    pub fn eval(&self, a: u64) -> FieldMatrix {
        let rows: Vec<Vec<u64>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.eval(a)).collect())
            .collect();
        if self.cols == 0 {
            return FieldMatrix::zero(self.field, self.rows, 0);
        }
        FieldMatrix::from_rows(self.field, &rows)
    }

    /// Constant matrix lifted to a polynomial matrix.
    pub fn from_field_matrix(m: &FieldMatrix) -> PolyMatrix {
        let f = m.field();
        let mut out = PolyMatrix::zero(f, m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(i, j, Poly::constant(f, m.get(i, j)));
            }
        }
        out
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{} over {}]", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
