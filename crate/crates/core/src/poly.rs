use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Sparse polynomial `Σ c_e u^e` with positive integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ExponentPolynomial(BTreeMap<u64, u64>);

impl ExponentPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    /// Each element of the multiset becomes one `u^e` term.
    pub fn from_exponents<I: IntoIterator<Item = u64>>(exponents: I) -> Self {
        let mut p = Self::new();
        for e in exponents {
            p.add_term(e, 1);
        }
        p
    }

    pub fn add_term(&mut self, exponent: u64, coefficient: u64) {
        if coefficient > 0 {
            *self.0.entry(exponent).or_insert(0) += coefficient;
        }
    }

    pub fn coefficient(&self, exponent: u64) -> u64 {
        self.0.get(&exponent).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    /// Sum of coefficients, the value at `u = 1`.
    pub fn mass(&self) -> u64 {
        self.0.values().sum()
    }

    /// Derivative at `u = 1`: `Σ c_e · e`.
    pub fn weighted_mass(&self) -> u64 {
        self.0.iter().map(|(e, c)| e * c).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

/// Descending exponents, e.g. `54u^18 + 18u^6 + 9u^2` or `9u^9 + 72`.
impl fmt::Display for ExponentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, &c)) in self.0.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match (e, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("u")?,
                (1, c) => write!(f, "{c}u")?,
                (e, 1) => write!(f, "u^{e}")?,
                (e, c) => write!(f, "{c}u^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packaging_a_multiset() {
        let p = ExponentPolynomial::from_exponents([0, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3]);
        assert_eq!(p.to_string(), "5u^3 + 3u^2 + 2u + 1");
        assert_eq!(p.mass(), 11);
        assert_eq!(p.weighted_mass(), 2 + 6 + 15);
    }

    #[test]
    fn display_forms() {
        let mut p = ExponentPolynomial::new();
        assert_eq!(p.to_string(), "0");
        p.add_term(9, 9);
        p.add_term(0, 72);
        assert_eq!(p.to_string(), "9u^9 + 72");
        assert_eq!(ExponentPolynomial::from_exponents([4]).to_string(), "u^4");
        p.add_term(5, 0);
        assert_eq!(p.coefficient(5), 0);
        assert_eq!(p.terms().count(), 2);
    }
}
