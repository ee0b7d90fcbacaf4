use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Dense univariate polynomial with exact integer coefficients.
///
/// The variable is contextual: `x` for series work, `t` for t-binomials.
/// Coefficients are stored by ascending degree with no trailing zeros, so the
/// zero polynomial is the empty vector and its degree is `None`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// Coefficients by ascending degree; trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    /// The monomial `c * x^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, deg: usize) -> BigInt {
        self.coeffs.get(deg).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluation at 1, i.e. the coefficient sum.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiply by `x^k`.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Render with an explicit variable name, e.g. `4*x^2 - 1`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mag = c.magnitude().to_string();
            if out.is_empty() {
                if c.sign() == num_bigint::Sign::Minus {
                    out.push('-');
                }
            } else if c.sign() == num_bigint::Sign::Minus {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let unit_coeff = mag == "1" && deg > 0;
            if !unit_coeff {
                out.push_str(&mag);
            }
            if deg > 0 {
                if !unit_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if deg > 1 {
                    out.push_str(&format!("^{deg}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}
