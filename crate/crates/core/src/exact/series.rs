use super::UniPoly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Formal power series over the integers, truncated at a fixed order.
///
/// Stores the coefficients of `x^0 .. x^N` exactly; every operation keeps all
/// coefficients below the truncation order exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Truncate a polynomial to a series of the given order.
    pub fn from_poly(p: &UniPoly, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        for (i, c) in s.coeffs.iter_mut().enumerate() {
            *c = p.coeff(i);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn sub(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order(), "series orders must match");
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Multiply by `x^k`, truncating at the order.
    pub fn shifted(&self, k: usize) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.order());
        for i in k..=self.order() {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order(), "series orders must match");
        let mut out = TruncatedSeries::zero(self.order());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(self.coeffs.len() - i).enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Multiplicative inverse up to the truncation order.
    ///
    /// Requires constant term 1 or -1 so the inverse stays integral.
    pub fn invert(&self) -> Result<TruncatedSeries> {
        let c0 = &self.coeffs[0];
        if !(c0.magnitude().is_one()) {
            return Err(Error::NonUnitConstant(c0.to_string()));
        }
        let mut out = TruncatedSeries::zero(self.order());
        out.coeffs[0] = c0.clone(); // 1/c0 = c0 when c0 = ±1
        for k in 1..=self.order() {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out.coeffs[k - i];
                }
            }
            out.coeffs[k] = -(c0 * acc);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(cs: &[i64]) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: cs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// Plain long division 1 / d, kept separate from `invert` as an oracle.
    fn long_division_inverse(d: &[i64], order: usize) -> Vec<i64> {
        let mut rem = vec![0i64; order + 2];
        rem[0] = 1;
        let mut q = vec![0i64; order + 1];
        for (k, qk) in q.iter_mut().enumerate() {
            *qk = rem[k] / d[0];
            for (j, &dj) in d.iter().enumerate() {
                if k + j <= order + 1 {
                    rem[k + j] -= *qk * dj;
                }
            }
        }
        q
    }

    #[test]
    fn geometric_series() {
        let inv = series(&[1, -1, 0, 0, 0]).invert().unwrap();
        assert_eq!(inv, series(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn quadratic_denominator_matches_long_division() {
        let inv = series(&[1, -3, 1, 0, 0]).invert().unwrap();
        assert_eq!(inv, series(&[1, 3, 8, 21, 55]));
        let oracle = long_division_inverse(&[1, -3, 1], 4);
        assert_eq!(oracle, vec![1, 3, 8, 21, 55]);
    }

    #[test]
    fn identity_inverts_to_itself() {
        for order in [0, 3, 7] {
            let one = TruncatedSeries::one(order);
            assert_eq!(one.invert().unwrap(), one);
        }
    }

    #[test]
    fn negative_unit_constant() {
        let s = series(&[-1, 2, 0]);
        let inv = s.invert().unwrap();
        assert_eq!(s.mul(&inv), TruncatedSeries::one(2));
    }

    #[test]
    fn non_unit_constant_rejected() {
        assert!(series(&[2, 1]).invert().is_err());
        assert!(series(&[0, 1]).invert().is_err());
    }

    #[test]
    fn product_with_inverse_is_one() {
        let s = series(&[1, 5, -7, 2, 9, -4]);
        assert_eq!(s.mul(&s.invert().unwrap()), TruncatedSeries::one(5));
    }
}
