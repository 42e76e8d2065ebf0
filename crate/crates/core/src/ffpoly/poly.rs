use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{FieldElement, PrimeField};
use super::mul::mul_coeffs;
use crate::error::{Error, Result};

const NEWTON_DIVISION_THRESHOLD: usize = 64;

/// Dense univariate polynomial over GF(p), coefficients in ascending degree.
///
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl Poly {
    /// Build from ascending coefficients; values are reduced mod p.
    pub fn new(field: PrimeField, mut coeffs: Vec<u64>) -> Poly {
        for c in coeffs.iter_mut() {
            *c = field.reduce(*c);
        }
        Poly::from_reduced(field, coeffs)
    }

    pub(crate) fn from_reduced(field: PrimeField, mut coeffs: Vec<u64>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_i64s(field: PrimeField, coeffs: &[i64]) -> Poly {
        Poly::from_reduced(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: PrimeField) -> Poly {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Poly {
        Poly::constant(field, 1)
    }

    pub fn constant(field: PrimeField, c: u64) -> Poly {
        Poly::new(field, vec![c])
    }

    /// `c * x^k`
    pub fn monomial(field: PrimeField, c: u64, k: usize) -> Poly {
        let c = field.reduce(c);
        if c == 0 {
            return Poly::zero(field);
        }
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Poly { field, coeffs }
    }

    pub fn x(field: PrimeField) -> Poly {
        Poly::monomial(field, 1, 1)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u64> {
        self.coeffs
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// `None` for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    #[inline]
    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    fn check_field(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.modulus(),
                other.field.modulus(),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Poly) -> Poly {
        let f = self.field;
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (&self.coeffs, &other.coeffs)
        } else {
            (&other.coeffs, &self.coeffs)
        };
        let mut out = long.clone();
        for (o, s) in out.iter_mut().zip(short) {
            *o = f.add(*o, *s);
        }
        Poly::from_reduced(f, out)
    }

    fn sub_unchecked(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = self.coeffs.clone();
        out.resize(n, 0);
        for (o, s) in out.iter_mut().zip(&other.coeffs) {
            *o = f.sub(*o, *s);
        }
        Poly::from_reduced(f, out)
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        Poly::from_reduced(self.field, mul_coeffs(self.field, &self.coeffs, &other.coeffs))
    }

    /// `self += c * x^shift * other`, in place.
    pub fn add_scaled_shifted(&mut self, c: u64, shift: usize, other: &Poly) {
        assert_eq!(self.field, other.field, "polynomials over different fields");
        let f = self.field;
        let c = f.reduce(c);
        if c == 0 || other.is_zero() {
            return;
        }
        let need = shift + other.coeffs.len();
        if self.coeffs.len() < need {
            self.coeffs.resize(need, 0);
        }
        for (o, &s) in self.coeffs[shift..].iter_mut().zip(&other.coeffs) {
            *o = f.add(*o, f.mul(c, s));
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn scale(&self, c: u64) -> Poly {
        let f = self.field;
        let c = f.reduce(c);
        if c == 0 {
            return Poly::zero(f);
        }
        Poly {
            field: f,
            coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly {
            field: self.field,
            coeffs,
        }
    }

    /// Reduce modulo `x^k`.
    pub fn truncate(&self, k: usize) -> Poly {
        let n = self.coeffs.len().min(k);
        Poly::from_reduced(self.field, self.coeffs[..n].to_vec())
    }

    /// Quotient by `x^k`, dropping the low coefficients.
    pub fn quo_xk(&self, k: usize) -> Poly {
        if k >= self.coeffs.len() {
            return Poly::zero(self.field);
        }
        Poly {
            field: self.field,
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// `a = q*b + r` with `deg r < deg b`.
    pub fn divrem(&self, b: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(b)?;
        let f = self.field;
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let da = match self.degree() {
            Some(da) if da >= db => da,
            _ => return Ok((Poly::zero(f), self.clone())),
        };
        let qlen = da - db + 1;
        if qlen > NEWTON_DIVISION_THRESHOLD && db > NEWTON_DIVISION_THRESHOLD {
            let q = self.quo_newton(b, qlen);
            let r = self.sub_unchecked(&q.mul_unchecked(b));
            return Ok((q, r));
        }
        let lc_inv = f.inv(b.leading_coeff())?;
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; qlen];
        for k in (0..qlen).rev() {
            let c = f.mul(r[k + db], lc_inv);
            q[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &bj) in b.coeffs.iter().enumerate() {
                r[k + j] = f.sub(r[k + j], f.mul(c, bj));
            }
        }
        r.truncate(db);
        Ok((Poly::from_reduced(f, q), Poly::from_reduced(f, r)))
    }

    pub fn rem(&self, b: &Poly) -> Result<Poly> {
        Ok(self.divrem(b)?.1)
    }

    pub fn quo(&self, b: &Poly) -> Result<Poly> {
        Ok(self.divrem(b)?.0)
    }

    // Quotient through the reversed-series reciprocal of b.
    fn quo_newton(&self, b: &Poly, qlen: usize) -> Poly {
        let f = self.field;
        let rev_b: Vec<u64> = b.coeffs.iter().rev().copied().collect();
        let inv = series_inverse(f, &rev_b, qlen);
        let rev_a: Vec<u64> = self.coeffs.iter().rev().take(qlen).copied().collect();
        let mut prod = mul_coeffs(f, &rev_a, &inv);
        prod.truncate(qlen);
        prod.resize(qlen, 0);
        prod.reverse();
        Poly::from_reduced(f, prod)
    }

    /// Power-series inverse modulo `x^k`; requires a nonzero constant term.
    pub fn inverse_series(&self, k: usize) -> Result<Poly> {
        if self.coeff(0) == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(Poly::from_reduced(
            self.field,
            series_inverse(self.field, &self.coeffs, k),
        ))
    }

    pub fn eval(&self, a: u64) -> u64 {
        let f = self.field;
        let a = f.reduce(a);
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, a), c))
    }

    /// The polynomial `a(x + alpha)`.
    pub fn substitute_shift(&self, alpha: FieldElement) -> Result<Poly> {
        if alpha.field() != self.field {
            return Err(Error::FieldMismatch(
                self.field.modulus(),
                alpha.field().modulus(),
            ));
        }
        Ok(self.taylor_shift(alpha.value()))
    }

    pub(crate) fn taylor_shift(&self, alpha: u64) -> Poly {
        let f = self.field;
        if alpha == 0 || self.coeffs.len() < 2 {
            return self.clone();
        }
        // Horner in (x + alpha): out <- out * (x + alpha) + c.
        let n = self.coeffs.len();
        let mut out = vec![0u64; n];
        let mut len = 0;
        for &c in self.coeffs.iter().rev() {
            for k in (1..=len).rev() {
                out[k] = f.add(out[k - 1], f.mul(out[k], alpha));
            }
            out[0] = f.add(f.mul(out[0], alpha), c);
            len += 1;
            if len == n {
                break;
            }
        }
        Poly::from_reduced(f, out)
    }
}

fn series_inverse(f: PrimeField, a: &[u64], k: usize) -> Vec<u64> {
    let c0_inv = f.inv(a[0]).expect("constant term checked by caller");
    let mut g = vec![c0_inv];
    let mut prec = 1;
    while prec < k {
        prec = (2 * prec).min(k);
        let a_trunc = &a[..a.len().min(prec)];
        let mut e = mul_coeffs(f, a_trunc, &g);
        e.resize(prec, 0);
        // e <- 2 - a*g
        for v in e.iter_mut() {
            *v = f.neg(*v);
        }
        e[0] = f.add(e[0], 2 % f.modulus());
        let mut next = mul_coeffs(f, &g, &e);
        next.resize(prec, 0);
        g = next;
    }
    g.truncate(k);
    g
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}*x")?,
                (_, 1) => write!(f, "x^{k}")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("polynomials over different fields")
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("polynomials over different fields")
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("polynomials over different fields")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = self.field;
        Poly {
            field: f,
            coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn bits(f: PrimeField, c: &[u64]) -> Poly {
        Poly::new(f, c.to_vec())
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let f = gf(5);
        let a = Poly::new(f, vec![1, 2, 5, 0, 10]);
        assert_eq!(a.coeffs(), &[1, 2]);
        assert_eq!(a.degree(), Some(1));
        assert_eq!(Poly::new(f, vec![0, 0]).degree(), None);
    }

    #[test]
    fn gf2_square_of_x_plus_one() {
        let f = gf(2);
        let a = bits(f, &[1, 1]);
        assert_eq!(&a * &a, bits(f, &[1, 0, 1]));
    }

    #[test]
    fn gf2_product_from_first_example() {
        let f = gf(2);
        // (x^3 + x)(x^4 + x^2 + 1) = x^7 + x
        let a = bits(f, &[0, 1, 0, 1]);
        let b = bits(f, &[1, 0, 1, 0, 1]);
        assert_eq!(&a * &b, bits(f, &[0, 1, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn unit_and_annihilator() {
        let f = gf(97);
        let a = Poly::new(f, vec![3, 0, 96, 5]);
        assert_eq!(&a * &Poly::one(f), a);
        assert!((&a * &Poly::zero(f)).is_zero());
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let a = Poly::one(gf(2));
        let b = Poly::one(gf(3));
        assert_eq!(a.try_mul(&b), Err(Error::FieldMismatch(2, 3)));
        assert!(a.divrem(&b).is_err());
    }

    #[test]
    fn remainders_from_first_example() {
        let f = gf(2);
        let x5 = Poly::monomial(f, 1, 5);
        let s1 = bits(f, &[1, 0, 1, 0, 1]);
        let l1 = bits(f, &[1, 0, 0, 0, 1]);
        let l2 = bits(f, &[0, 1, 0, 1]);
        assert_eq!((&l1 * &s1).rem(&x5).unwrap(), bits(f, &[1, 0, 1]));
        assert_eq!((&l2 * &s1).rem(&x5).unwrap(), bits(f, &[0, 1]));
    }

    #[test]
    fn remainder_by_one_is_zero() {
        let f = gf(97);
        let a = Poly::new(f, vec![4, 5, 6]);
        assert!(a.rem(&Poly::one(f)).unwrap().is_zero());
        assert_eq!(a.divrem(&Poly::zero(f)), Err(Error::DivisionByZero));
    }

    #[test]
    fn taylor_shift_examples() {
        let f3 = gf(3);
        let x2 = Poly::monomial(f3, 1, 2);
        assert_eq!(
            x2.substitute_shift(f3.element(1)).unwrap(),
            Poly::new(f3, vec![1, 2, 1])
        );
        assert_eq!(x2.substitute_shift(f3.element(0)).unwrap(), x2);
        let f2 = gf(2);
        let x5 = Poly::monomial(f2, 1, 5);
        let once = x5.substitute_shift(f2.element(1)).unwrap();
        assert_ne!(once, x5);
        assert_eq!(once.substitute_shift(f2.element(1)).unwrap(), x5);
    }

    #[test]
    fn display() {
        let f = gf(5);
        assert_eq!(Poly::new(f, vec![1, 0, 3, 1]).to_string(), "x^3 + 3*x^2 + 1");
        assert_eq!(Poly::zero(f).to_string(), "0");
    }
}
