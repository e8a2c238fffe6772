//! Exact formal-series algebra over inverse powers of the variable.
//!
//! A [`FormalSeries`] stores rational coefficients `c_0..c_N` of
//!
//! ```text
//! x^p * (c_0 + c_1/x + c_2/x^2 + ... + c_N/x^N)
//! ```
//!
//! `N` is the truncation order: coefficients beyond it are unknown, not
//! zero, so every binary operation truncates its result to the smaller
//! order of the two operands and the result carries that guaranteed-valid
//! order. The exponent offset `p` exists only so a cubic head polynomial
//! is representable; it is zero for every other series in this crate, and
//! the transforming operations (powers, exponential, re-expansion) require
//! it to be zero.
//!
//! A [`ShiftedSeries`] holds coefficients `d_0..d_N` of
//! `d_0 + d_1/(x+s) + d_2/(x+s)^2 + ...` for a rational shift `s`.
//! [`FormalSeries::reexpand`] converts between the two representations by
//! triangular inversion of the binomial shift kernel, and
//! [`ShiftedSeries::to_inverse_powers`] applies the kernel forward.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{binomial_general, rat_int, rational_pow, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("exponent offsets differ: {left} vs {right}")]
    OffsetMismatch { left: i64, right: i64 },
    #[error("operation requires exponent offset 0, found {0}")]
    UnsupportedOffset(i64),
    #[error("leading coefficient must be 1")]
    NonUnitLeading,
    #[error("constant term must be 0")]
    NonzeroConstant,
    #[error("division by a series with zero leading coefficient")]
    ZeroLeading,
    #[error("argument scale factor must be nonzero")]
    ZeroScale,
}

/// Truncated series with exact rational coefficients; see the module docs
/// for the representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSeries {
    coeffs: Vec<Rational>,
    offset: i64,
}

impl FormalSeries {
    /// Series with offset 0 from its coefficient list. The list length
    /// fixes the truncation order; it must be non-empty.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Self::with_offset(coeffs, 0)
    }

    /// Series `x^offset * sum c_n x^(-n)`.
    pub fn with_offset(coeffs: Vec<Rational>, offset: i64) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least c_0");
        FormalSeries { coeffs, offset }
    }

    /// An exact polynomial in `1/x`, zero-padded out to `order`. Padding is
    /// sound here because a polynomial's tail coefficients really are zero.
    pub fn from_polynomial(coeffs: &[Rational], order: usize) -> Self {
        assert!(coeffs.len() <= order + 1, "polynomial longer than order");
        let mut full = coeffs.to_vec();
        full.resize(order + 1, Rational::zero());
        Self::new(full)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Rational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Self::from_polynomial(&[Rational::one()], order)
    }

    /// Truncation order `N` (inclusive); the series has `N + 1` coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Drops coefficients beyond `order`; `order` must not exceed the
    /// current truncation order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self::with_offset(self.coeffs[..=order].to_vec(), self.offset)
    }

    pub fn scalar_mul(&self, c: &Rational) -> Self {
        Self::with_offset(self.coeffs.iter().map(|x| x * c).collect(), self.offset)
    }

    pub fn neg(&self) -> Self {
        self.scalar_mul(&rat_int(-1))
    }

    /// Coefficient-wise sum, truncated to the smaller order. The offsets
    /// must agree, otherwise the terms would not align.
    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        if self.offset != other.offset {
            return Err(SeriesError::OffsetMismatch {
                left: self.offset,
                right: other.offset,
            });
        }
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        Ok(Self::with_offset(coeffs, self.offset))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    /// Cauchy product, truncated to the smaller order; exponent offsets add.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self::with_offset(coeffs, self.offset + other.offset)
    }

    /// Quotient `q` with `q * other == self` up to the truncation order;
    /// offsets subtract. `other` must have a nonzero leading coefficient.
    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        let b0 = &other.coeffs[0];
        if b0.is_zero() {
            return Err(SeriesError::ZeroLeading);
        }
        let n = self.order().min(other.order());
        let mut q: Vec<Rational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                acc -= &other.coeffs[j] * &q[k - j];
            }
            q.push(acc / b0);
        }
        Ok(Self::with_offset(q, self.offset - other.offset))
    }

    /// `self^r` for rational `r`, by the triangular recurrence for powers
    /// of a unit series. Requires offset 0 and leading coefficient 1.
    pub fn pow(&self, r: &Rational) -> Result<Self, SeriesError> {
        if self.offset != 0 {
            return Err(SeriesError::UnsupportedOffset(self.offset));
        }
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NonUnitLeading);
        }
        let n = self.order();
        let mut f: Vec<Rational> = Vec::with_capacity(n + 1);
        f.push(Rational::one());
        let r_plus_one = r + Rational::one();
        for m in 1..=n {
            // m*f_m = sum_{k=1}^{m} ((r+1)k - m) a_k f_{m-k}
            let mut acc = Rational::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let weight = &r_plus_one * rat_int(k as i64) - rat_int(m as i64);
                acc += weight * &self.coeffs[k] * &f[m - k];
            }
            f.push(acc / rat_int(m as i64));
        }
        Ok(Self::new(f))
    }

    /// `exp(self)` by the derivative recurrence. Requires offset 0 and a
    /// zero constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if self.offset != 0 {
            return Err(SeriesError::UnsupportedOffset(self.offset));
        }
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let n = self.order();
        let mut f: Vec<Rational> = Vec::with_capacity(n + 1);
        f.push(Rational::one());
        for m in 1..=n {
            // m*f_m = sum_{k=1}^{m} k a_k f_{m-k}
            let mut acc = Rational::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc += rat_int(k as i64) * &self.coeffs[k] * &f[m - k];
            }
            f.push(acc / rat_int(m as i64));
        }
        Ok(Self::new(f))
    }

    /// Substitutes `x -> lambda * x`: coefficient `c_n` picks up
    /// `lambda^(offset - n)`.
    pub fn scale_argument(&self, lambda: &Rational) -> Result<Self, SeriesError> {
        if lambda.is_zero() {
            return Err(SeriesError::ZeroScale);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c * rational_pow(lambda, (self.offset - n as i64) as i32))
            .collect();
        Ok(Self::with_offset(coeffs, self.offset))
    }

    /// Rewrites `sum c_n x^(-n)` as `sum d_n (x+s)^(-n)` up to the same
    /// order, by triangular inversion of the forward kernel
    /// `c_k = sum_{j<=k} C(-j, k-j) d_j s^(k-j)`. Requires offset 0.
    pub fn reexpand(&self, shift: &Rational) -> Result<ShiftedSeries, SeriesError> {
        if self.offset != 0 {
            return Err(SeriesError::UnsupportedOffset(self.offset));
        }
        let n = self.order();
        let mut d: Vec<Rational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for (j, dj) in d.iter().enumerate() {
                if dj.is_zero() {
                    continue;
                }
                acc -= shift_kernel(j, k) * dj * rational_pow(shift, (k - j) as i32);
            }
            d.push(acc);
        }
        Ok(ShiftedSeries::new(shift.clone(), d))
    }
}

impl fmt::Display for FormalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() && self.coeffs.len() > 1 {
                continue;
            }
            let power = self.offset - n as i64;
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            let mag = c.abs();
            match power {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*x")?,
                _ => write!(f, "{mag}*x^{power}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The binomial shift kernel `C(-j, k-j)`.
fn shift_kernel(j: usize, k: usize) -> Rational {
    binomial_general(&rat_int(-(j as i64)), (k - j) as u32)
}

/// Series `d_0 + d_1/(x+s) + d_2/(x+s)^2 + ...` with a rational shift `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedSeries {
    shift: Rational,
    coeffs: Vec<Rational>,
}

impl ShiftedSeries {
    pub fn new(shift: Rational, coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least d_0");
        ShiftedSeries { shift, coeffs }
    }

    pub fn shift(&self) -> &Rational {
        &self.shift
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Expands back into plain inverse powers of `x` through the forward
    /// kernel `c_k = sum_{j<=k} C(-j, k-j) d_j s^(k-j)`.
    pub fn to_inverse_powers(&self) -> FormalSeries {
        let n = self.order();
        let mut c: Vec<Rational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = Rational::zero();
            for (j, dj) in self.coeffs.iter().enumerate().take(k + 1) {
                if dj.is_zero() {
                    continue;
                }
                acc += shift_kernel(j, k) * dj * rational_pow(&self.shift, (k - j) as i32);
            }
            c.push(acc);
        }
        FormalSeries::new(c)
    }
}

impl fmt::Display for ShiftedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() && self.coeffs.len() > 1 {
                continue;
            }
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            let mag = c.abs();
            if n == 0 {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}/(x+{})^{n}", self.shift)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn series(vals: &[(i64, i64)]) -> FormalSeries {
        FormalSeries::new(vals.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn add_requires_matching_offsets() {
        let a = series(&[(1, 1), (1, 12)]);
        let b = FormalSeries::with_offset(vec![rat(1, 1), rat(-1, 12)], 3);
        assert_eq!(
            a.add(&b),
            Err(SeriesError::OffsetMismatch { left: 0, right: 3 })
        );
    }

    #[test]
    fn add_examples() {
        let a = series(&[(1, 1), (1, 12)]);
        let b = series(&[(0, 1), (-1, 12)]);
        assert_eq!(a.add(&b).unwrap(), series(&[(1, 1), (0, 1)]));
        let z = FormalSeries::zero(1);
        assert_eq!(a.add(&z).unwrap(), a);
    }

    #[test]
    fn mul_hand_checked_product() {
        let a = series(&[(1, 1), (1, 12), (0, 1)]);
        let b = series(&[(1, 1), (-1, 12), (0, 1)]);
        assert_eq!(a.mul(&b), series(&[(1, 1), (0, 1), (-1, 144)]));
    }

    #[test]
    fn mul_identity_and_offset_addition() {
        let a = FormalSeries::with_offset(vec![rat(8, 1), rat(4, 1)], 3);
        let one = FormalSeries::from_polynomial(&[rat(1, 1)], 1);
        let prod = a.mul(&one);
        assert_eq!(prod.coeffs(), a.coeffs());
        assert_eq!(prod.offset(), 3);
        let b = FormalSeries::with_offset(vec![rat(1, 1), rat(1, 2)], -1);
        assert_eq!(a.mul(&b).offset(), 2);
    }

    #[test]
    fn div_solves_triangular_system() {
        let one = FormalSeries::one(2);
        let b = series(&[(1, 1), (1, 12), (1, 288)]);
        let q = one.div(&b).unwrap();
        assert_eq!(q, series(&[(1, 1), (-1, 12), (1, 288)]));
        // mul-oracle: q * b == 1
        assert_eq!(q.mul(&b), FormalSeries::one(2));
        let a = series(&[(3, 1), (1, 7), (5, 9)]);
        assert_eq!(a.div(&a).unwrap(), FormalSeries::one(2));
    }

    #[test]
    fn div_rejects_zero_leading_coefficient() {
        let a = FormalSeries::one(1);
        let b = series(&[(0, 1), (1, 1)]);
        assert_eq!(a.div(&b), Err(SeriesError::ZeroLeading));
    }

    #[test]
    fn pow_binomial_expansion() {
        let a = FormalSeries::from_polynomial(&[rat(1, 1), rat(1, 6)], 3);
        let p = a.pow(&rat(-1, 2)).unwrap();
        // C(-1/2, 2)/36 = (3/8)/36 = 1/96
        assert_eq!(p.coeff(0), &rat(1, 1));
        assert_eq!(p.coeff(1), &rat(-1, 12));
        assert_eq!(p.coeff(2), &rat(1, 96));
        assert_eq!(a.pow(&rat(0, 1)).unwrap(), FormalSeries::one(3));
    }

    #[test]
    fn pow_requires_unit_leading_coefficient() {
        let a = series(&[(2, 1), (1, 6)]);
        assert_eq!(a.pow(&rat(1, 2)), Err(SeriesError::NonUnitLeading));
    }

    #[test]
    fn exp_termwise_exponential() {
        let z = FormalSeries::zero(3);
        assert_eq!(z.exp().unwrap(), FormalSeries::one(3));
        let a = FormalSeries::from_polynomial(&[rat(0, 1), rat(1, 1)], 3);
        assert_eq!(
            a.exp().unwrap(),
            series(&[(1, 1), (1, 1), (1, 2), (1, 6)])
        );
        let bad = series(&[(1, 1), (1, 1)]);
        assert_eq!(bad.exp(), Err(SeriesError::NonzeroConstant));
    }

    #[test]
    fn scale_argument_examples() {
        let a = series(&[(1, 1), (1, 12)]);
        assert_eq!(a.scale_argument(&rat(1, 1)).unwrap(), a);
        assert_eq!(
            a.scale_argument(&rat(2, 1)).unwrap(),
            series(&[(1, 1), (1, 24)])
        );
        assert_eq!(
            a.scale_argument(&rat(0, 1)),
            Err(SeriesError::ZeroScale)
        );
    }

    #[test]
    fn scale_argument_applies_offset_power() {
        // x^1 * (1 + 1/x) scaled by 2 becomes 2x * (1 + 1/(2x)) = x * (2 + 1/x)
        let a = FormalSeries::with_offset(vec![rat(1, 1), rat(1, 1)], 1);
        let scaled = a.scale_argument(&rat(2, 1)).unwrap();
        assert_eq!(scaled.coeffs(), &[rat(2, 1), rat(1, 1)]);
        assert_eq!(scaled.offset(), 1);
    }

    #[test]
    fn reexpand_zero_shift_is_identity() {
        let a = series(&[(1, 1), (1, 12), (1, 288), (5, 7)]);
        let d = a.reexpand(&rat(0, 1)).unwrap();
        assert_eq!(d.coeffs(), a.coeffs());
    }

    #[test]
    fn reexpand_round_trips_through_forward_kernel() {
        let a = series(&[(1, 1), (-1, 8), (1, 128), (5, 1024), (-21, 32768)]);
        for s in [rat(1, 4), rat(-1, 6), rat(2, 1)] {
            let d = a.reexpand(&s).unwrap();
            assert_eq!(d.to_inverse_powers(), a, "round trip failed for s={s}");
        }
    }

    #[test]
    fn display_offset_series() {
        let k = FormalSeries::with_offset(
            vec![rat(8, 1), rat(4, 1), rat(1, 1), rat(1, 30), rat(-11, 240)],
            3,
        );
        assert_eq!(format!("{k}"), "8*x^3 + 4*x^2 + 1*x + 1/30 - 11/240*x^-1");
    }
}
