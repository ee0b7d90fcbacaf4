use super::UniPoly;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Sparse bivariate polynomial in `q` and `t` with exact integer coefficients.
///
/// Keyed by `(q_degree, t_degree)`; zero coefficients are never stored, so the
/// term map doubles as the support.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, q: usize, t: usize) -> BigInt {
        self.terms.get(&(q, t)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, q: usize, t: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((q, t)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(q, t));
        }
    }

    pub fn add_assign(&mut self, rhs: &BiPoly) {
        for (&(q, t), c) in &rhs.terms {
            self.add_term(q, t, c.clone());
        }
    }

    /// Terms in lexicographic `(q_degree, t_degree)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &BigInt)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn eval(&self, q: &BigInt, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(qd, td), c) in &self.terms {
            acc += c * q.pow(qd as u32) * t.pow(td as u32);
        }
        acc
    }

    /// Substitute t = 1, leaving a polynomial in q.
    pub fn at_t_one(&self) -> UniPoly {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (&(qd, _), c) in &self.terms {
            if coeffs.len() <= qd {
                coeffs.resize(qd + 1, BigInt::zero());
            }
            coeffs[qd] += c;
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Substitute q = 1, leaving a polynomial in t.
    pub fn at_q_one(&self) -> UniPoly {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (&(_, td), c) in &self.terms {
            if coeffs.len() <= td {
                coeffs.resize(td + 1, BigInt::zero());
            }
            coeffs[td] += c;
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// The t-degrees present among terms of q-degree `q`, ascending.
    pub fn t_degrees_at_q(&self, q: usize) -> Vec<usize> {
        self.terms
            .range((q, 0)..=(q, usize::MAX))
            .map(|(&(_, td), _)| td)
            .collect()
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(qd, td), c) in &self.terms {
            let mag = c.magnitude().to_string();
            if first {
                if c.sign() == num_bigint::Sign::Minus {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.sign() == num_bigint::Sign::Minus {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != "1" || (qd == 0 && td == 0) {
                factors.push(mag);
            }
            for (var, deg) in [("q", qd), ("t", td)] {
                match deg {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{deg}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn zero_coefficients_not_stored() {
        let mut p = BiPoly::zero();
        p.add_term(1, 2, BigInt::from(3));
        p.add_term(1, 2, BigInt::from(-3));
        assert!(p.is_zero());
        p.add_term(0, 0, BigInt::zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn display_matches_expected_form() {
        let mut p = BiPoly::zero();
        p.add_term(0, 0, BigInt::one());
        p.add_term(1, 1, BigInt::one());
        p.add_term(1, 2, BigInt::from(2));
        p.add_term(2, 3, BigInt::one());
        assert_eq!(p.to_string(), "1 + q*t + 2*q*t^2 + q^2*t^3");
    }

    #[test]
    fn specializations() {
        let mut p = BiPoly::zero();
        p.add_term(0, 0, BigInt::one());
        p.add_term(1, 1, BigInt::one());
        p.add_term(1, 2, BigInt::from(2));
        p.add_term(2, 3, BigInt::one());
        assert_eq!(p.at_t_one().coeffs().to_vec(), vec![
            BigInt::from(1),
            BigInt::from(3),
            BigInt::from(1)
        ]);
        assert_eq!(p.at_q_one().eval_one(), BigInt::from(5));
        assert_eq!(p.eval(&BigInt::one(), &BigInt::one()), BigInt::from(5));
        assert_eq!(p.t_degrees_at_q(1), vec![1, 2]);
    }
}
