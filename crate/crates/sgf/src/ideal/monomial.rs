use std::fmt;

use serde::{Deserialize, Serialize};

/// Monomial in the weighted polynomial ring, stored as an exponent vector
/// with its weighted degree cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u64,
}

impl Monomial {
    /// Builds a monomial from exponents under the given generator weights.
    pub fn new(exps: Vec<u32>, weights: &[u64]) -> Self {
        assert_eq!(exps.len(), weights.len());
        let degree = exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    /// The variable `x_{i+1}` (zero-based index `i`).
    pub fn variable(i: usize, weights: &[u64]) -> Self {
        let mut exps = vec![0; weights.len()];
        exps[i] = 1;
        Monomial {
            exps,
            degree: weights[i],
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a + b)
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `other / self`, if the division is exact.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(&b, &a)| b - a)
            .collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u64]) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial::new(exps, weights)
    }

    /// True when the supports are disjoint (the gcd of the monomials is 1).
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn shares_variable(&self, other: &Monomial) -> bool {
        !self.coprime(other)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_caching_and_arithmetic() {
        let w = &[3u64, 4, 5];
        let m = Monomial::new(vec![0, 2, 0], w);
        assert_eq!(m.degree(), 8);
        let v = Monomial::new(vec![1, 0, 1], w);
        assert_eq!(v.degree(), 8);
        assert_eq!(m.mul(&v).degree(), 16);
        assert_eq!(m.lcm(&v, w).exps(), &[1, 2, 1]);
        assert!(m.coprime(&v));
        assert!(!m.divides(&v));
        let q = Monomial::new(vec![0, 1, 0], w)
            .divide_into(&m)
            .unwrap();
        assert_eq!(q.exps(), &[0, 1, 0]);
        assert_eq!(q.degree(), 4);
    }

    #[test]
    fn display() {
        let w = &[3u64, 4, 5];
        assert_eq!(Monomial::one(3).to_string(), "1");
        assert_eq!(Monomial::variable(0, w).to_string(), "x1");
        assert_eq!(Monomial::new(vec![2, 0, 1], w).to_string(), "x1^2*x3");
    }
}
