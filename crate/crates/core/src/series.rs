//! Integer power series in one variable, truncated at a fixed degree.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::{Error, Int, Result};

/// Power series `Σ c_k t^k` known for `0 <= k <= max_deg`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<Int>,
}

impl TruncatedSeries {
    /// Series with the given leading coefficients, zero-padded up to `max_deg`.
    /// Coefficients beyond `max_deg` are dropped.
    pub fn new(mut coeffs: Vec<Int>, max_deg: usize) -> Self {
        coeffs.resize(max_deg + 1, Int::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], max_deg: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| Int::from(c)).collect(), max_deg)
    }

    pub fn zero(max_deg: usize) -> Self {
        Self::new(Vec::new(), max_deg)
    }

    pub fn one(max_deg: usize) -> Self {
        Self::monomial(0, max_deg)
    }

    /// `t^k`, or zero if `k > max_deg`.
    pub fn monomial(k: usize, max_deg: usize) -> Self {
        let mut s = Self::zero(max_deg);
        if k <= max_deg {
            s.coeffs[k] = Int::one();
        }
        s
    }

    pub fn max_deg(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`; zero beyond the truncation.
    pub fn coeff(&self, k: usize) -> Int {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.coeffs.iter().any(Signed::is_negative)
    }

    pub fn truncate(&self, max_deg: usize) -> Self {
        Self::new(self.coeffs.iter().take(max_deg + 1).cloned().collect(), max_deg)
    }

    /// Sum, truncated at the smaller of the two truncation degrees.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.max_deg().min(other.max_deg());
        Self::new((0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(), n)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.max_deg().min(other.max_deg());
        Self::new((0..=n).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect(), n)
    }

    pub fn scale(&self, c: &Int) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.max_deg().min(other.max_deg());
        let mut out = vec![Int::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse; requires constant term ±1.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !c0.abs().is_one() {
            return Err(Error::NotInvertible);
        }
        let n = self.max_deg();
        let mut inv = vec![Int::zero(); n + 1];
        inv[0] = c0.clone();
        for k in 1..=n {
            let mut acc = Int::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &inv[k - j];
            }
            inv[k] = -(acc * c0);
        }
        Ok(Self { coeffs: inv })
    }

    /// Multiplication by `t^k`, keeping the truncation degree.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.max_deg();
        let mut out = vec![Int::zero(); n + 1];
        if k <= n {
            out[k..].clone_from_slice(&self.coeffs[..=n - k]);
        }
        Self { coeffs: out }
    }

    /// `t^k` times the series, truncated at `max_deg` (which may exceed the
    /// current truncation by up to `k`).
    pub fn shift_into(&self, k: usize, max_deg: usize) -> Self {
        debug_assert!(max_deg <= self.max_deg() + k);
        let mut coeffs = vec![Int::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs, max_deg)
    }

    /// Substitution `t ↦ t^m`, truncated at `max_deg`.
    pub fn substitute_power(&self, m: usize, max_deg: usize) -> Self {
        assert!(m >= 1);
        let mut out = vec![Int::zero(); max_deg + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if k * m > max_deg {
                break;
            }
            out[k * m] = c.clone();
        }
        Self { coeffs: out }
    }

    /// `Π 1/(1 - t^d)` over `degrees`.
    pub fn free_algebra(degrees: &[usize], max_deg: usize) -> Self {
        let mut coeffs = vec![Int::zero(); max_deg + 1];
        coeffs[0] = Int::one();
        for &d in degrees {
            assert!(d >= 1, "generator degree must be positive");
            // in-place multiplication by the geometric series in t^d
            for k in d..=max_deg {
                let prev = coeffs[k - d].clone();
                coeffs[k] += prev;
            }
        }
        Self { coeffs }
    }
}

impl fmt::Display for TruncatedSeries {
    /// Space-separated coefficients from degree 0.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], n: usize) -> TruncatedSeries {
        TruncatedSeries::from_i64(c, n)
    }

    #[test]
    fn geometric_inverse() {
        let one_minus_t = s(&[1, -1], 5);
        assert_eq!(one_minus_t.inverse().unwrap(), s(&[1, 1, 1, 1, 1, 1], 5));
        assert_eq!(s(&[2, 1], 3).inverse(), Err(Error::NotInvertible));
        assert_eq!(s(&[-1], 2).inverse().unwrap(), s(&[-1], 2));
    }

    #[test]
    fn free_algebra_partitions() {
        assert_eq!(TruncatedSeries::free_algebra(&[1, 2, 3], 6), s(&[1, 1, 2, 3, 4, 5, 7], 6));
        assert_eq!(TruncatedSeries::free_algebra(&[], 3), s(&[1], 3));
    }

    #[test]
    fn product_truncates_to_smaller() {
        let a = s(&[1, 1], 4);
        let b = s(&[1, 1], 2);
        assert_eq!(a.mul(&b), s(&[1, 2, 1], 2));
        assert_eq!(a.shift(3), s(&[0, 0, 0, 1, 1], 4));
        assert_eq!(a.substitute_power(2, 4), s(&[1, 0, 1], 4));
    }
}
