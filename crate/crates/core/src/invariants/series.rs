use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, Serializer};

use super::poly::{serialize_bigints, IntPolynomial};
use crate::{Error, Result};

/// Power series with integer coefficients known through `z^order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Pads with zeros or truncates to `order + 1` coefficients.
    pub fn new(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_i64s(c: &[i64], order: usize) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect(), order)
    }

    pub fn from_poly(p: &IntPolynomial, order: usize) -> Self {
        Self::new(p.coeffs().to_vec(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![BigInt::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> &BigInt {
        &self.coeffs[d]
    }

    /// Same series known to a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise the truncation order");
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    /// `1 / self`; the constant term must be `±1`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::Precondition(format!("series inverse needs a unit constant term, got {c0}")));
        }
        let d = self.order();
        let mut inv = vec![BigInt::zero(); d + 1];
        inv[0] = c0.clone();
        for k in 1..=d {
            let mut acc = BigInt::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &inv[k - j];
            }
            // c0 · inv_k = −acc, and c0 = 1/c0.
            inv[k] = -acc * c0;
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    /// Expansion of `num / den` through `z^order`.
    pub fn ratio(num: &IntPolynomial, den: &IntPolynomial, order: usize) -> Result<Self> {
        Self::from_poly(num, order).div(&Self::from_poly(den, order))
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        assert_eq!(self.order(), rhs.order(), "series of different orders");
        TruncatedSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| f(a, b)).collect() }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order(), "series of different orders");
        let d = self.order();
        let mut out = vec![BigInt::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for j in 0..=d - i {
                out[i + j] += a * &rhs.coeffs[j];
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_bigints(&self.coeffs, s)
    }
}
