use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::IntPolynomial;
use crate::graph::MultiDigraph;
use crate::{Error, Result};

/// Largest matrix [`perm_i_plus_a`] accepts.
pub const PERMANENT_CAP: usize = 20;

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        sign
    } else {
        sign * &m[n - 1][n - 1]
    }
}

/// Ryser's formula with Gray-code updates of the row sums.
pub fn permanent(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sums = vec![BigInt::zero(); n];
    let mut total = BigInt::zero();
    let mut gray = 0u64;
    for step in 1u64..1 << n {
        let j = step.trailing_zeros() as usize;
        gray ^= 1 << j;
        let adding = gray >> j & 1 == 1;
        for (s, row) in sums.iter_mut().zip(m) {
            if adding {
                *s += &row[j];
            } else {
                *s -= &row[j];
            }
        }
        let prod = sums.iter().fold(BigInt::one(), |a, s| a * s);
        if (n - gray.count_ones() as usize) % 2 == 0 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    total
}

fn shifted(g: &MultiDigraph, diag: i64, off: i64) -> Vec<Vec<BigInt>> {
    let n = g.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from(off) * g.get(i, j) + if i == j { BigInt::from(diag) } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// `det(I − A)`.
pub fn det_i_minus_a(g: &MultiDigraph) -> BigInt {
    determinant(shifted(g, 1, -1))
}

/// `det(I − zA)`, interpolated from its values at `z = 0, …, n`.
pub fn det_i_minus_za(g: &MultiDigraph) -> IntPolynomial {
    let n = g.n();
    let a = shifted(g, 0, 1);
    let values: Vec<BigInt> = (0..=n as i64)
        .map(|z| {
            let m = (0..n)
                .map(|i| (0..n).map(|j| BigInt::from(i == j) - &a[i][j] * z).collect())
                .collect();
            determinant(m)
        })
        .collect();
    IntPolynomial::interpolate(&values).expect("a determinant of integer polynomials is integral")
}

/// `perm(I + A)`.
pub fn perm_i_plus_a(g: &MultiDigraph) -> Result<BigInt> {
    if g.n() > PERMANENT_CAP {
        return Err(Error::SizeCap { what: "permanent", n: g.n(), cap: PERMANENT_CAP });
    }
    Ok(permanent(&shifted(g, 1, 1)))
}

/// `(A^ℓ)_{ii}` for `ℓ = 0..=order`, by repeated vector–matrix products.
pub fn closed_walk_counts(g: &MultiDigraph, i: usize, order: usize) -> Vec<BigInt> {
    let n = g.n();
    let mut v: Vec<BigInt> = (0..n).map(|j| BigInt::from(j == i)).collect();
    let mut out = Vec::with_capacity(order + 1);
    for _ in 0..=order {
        out.push(v[i].clone());
        let mut next = vec![BigInt::zero(); n];
        for (u, vu) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (w, k) in g.successors(u) {
                next[w] += vu * k;
            }
        }
        v = next;
    }
    out
}
