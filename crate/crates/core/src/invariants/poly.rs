use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

/// Polynomial in one variable with arbitrary-precision integer coefficients,
/// `coeffs[d]` being the coefficient of degree `d`. Trailing zeros are
/// stripped, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c · z^d`.
    pub fn monomial(c: BigInt, d: usize) -> Self {
        let mut v = vec![BigInt::zero(); d];
        v.push(c);
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// `p(c·z)`.
    pub fn scale_var(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        let mut pw = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pw);
            pw *= &c;
        }
        Self::new(out)
    }

    /// Exact division of every coefficient by `d`; `None` if some coefficient
    /// is not a multiple.
    pub fn div_exact(&self, d: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !(c % d).is_zero() {
                return None;
            }
            out.push(c / d);
        }
        Some(Self::new(out))
    }

    /// The unique polynomial of degree `< values.len()` through
    /// `(0, values[0]), (1, values[1]), …`, provided it has integer
    /// coefficients (Newton forward differences, cleared of denominators).
    pub fn interpolate(values: &[BigInt]) -> Option<Self> {
        let m = values.len();
        if m == 0 {
            return Some(Self::zero());
        }
        let mut diffs = values.to_vec();
        let mut leading = Vec::with_capacity(m);
        for k in 0..m {
            leading.push(diffs[0].clone());
            for j in 0..m - 1 - k {
                diffs[j] = &diffs[j + 1] - &diffs[j];
            }
        }
        // p(z) = Σ Δ^k p(0) · z(z−1)…(z−k+1) / k!; multiply through by (m−1)!.
        let fact = |k: usize| (1..=k).fold(BigInt::one(), |a, i| a * i);
        let big = fact(m - 1);
        let mut acc = Self::zero();
        let mut falling = Self::one();
        for (k, d) in leading.iter().enumerate() {
            let w = d * (&big / fact(k));
            acc = acc + &falling * &Self::constant(w);
            falling = &falling * &Self::from_i64s(&[-(k as i64), 1]);
        }
        acc.div_exact(&big)
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> IntPolynomial {
        self + &-rhs
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> IntPolynomial {
        &self - &rhs
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let a = c.abs();
            let sep = if first { "" } else { " " };
            let body = match (d, a.is_one()) {
                (0, _) => a.to_string(),
                (1, true) => "z".to_string(),
                (1, false) => format!("{a}z"),
                (_, true) => format!("z^{d}"),
                (_, false) => format!("{a}z^{d}"),
            };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, "{sep}{sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Coefficients serialize as JSON integers when they fit in 64 bits and as
/// decimal strings otherwise.
pub(crate) fn serialize_bigints<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        match x.to_i64() {
            Some(v) => seq.serialize_element(&v)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_bigints(&self.coeffs, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = IntPolynomial::from_i64s(&[1, -1]);
        let q = &p * &p;
        assert_eq!(q, IntPolynomial::from_i64s(&[1, -2, 1]));
        assert!((&q - &q).is_zero());
        assert_eq!(IntPolynomial::from_i64s(&[0, 0, 0]).degree(), None);
        assert_eq!(q.eval_i64(3), BigInt::from(4));
        assert_eq!(q.to_string(), "1 - 2z + z^2");
        assert_eq!(p.scale_var(-1), IntPolynomial::from_i64s(&[1, 1]));
    }

    #[test]
    fn interpolation() {
        let p = IntPolynomial::from_i64s(&[5, -3, 0, 7, -1]);
        let vals: Vec<BigInt> = (0..6).map(|x| p.eval_i64(x)).collect();
        assert_eq!(IntPolynomial::interpolate(&vals), Some(p));
        // z(z−1)/2 is integer-valued but not integral.
        let vals: Vec<BigInt> = (0..3).map(|x: i64| BigInt::from(x * (x - 1) / 2)).collect();
        assert_eq!(IntPolynomial::interpolate(&vals), None);
    }
}
