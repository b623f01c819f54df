use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::order::MonomialOrder;

/// A binomial `lead - tail` with unit coefficients, oriented so that
/// `lead > tail` in the monomial order it was built with.
///
/// Binomials with equal weighted degree on both sides are exactly the
/// elements of the defining toric ideal, since the algebra map sends every
/// monomial of weighted degree `d` to `t^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Binomial {
    lead: Monomial,
    tail: Monomial,
}

impl Binomial {
    /// Orients `a - b`; `None` when the difference is zero.
    pub fn from_pair(a: Monomial, b: Monomial, order: &MonomialOrder) -> Option<Binomial> {
        match order.cmp(&a, &b) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Binomial { lead: a, tail: b }),
            Ordering::Less => Some(Binomial { lead: b, tail: a }),
        }
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn tail(&self) -> &Monomial {
        &self.tail
    }

    /// True when both monomials have the same weighted degree, the
    /// membership criterion for the toric ideal.
    pub fn is_balanced(&self) -> bool {
        self.lead.degree() == self.tail.degree()
    }

    pub fn degree(&self) -> u64 {
        self.lead.degree()
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.tail)
    }
}

/// Membership of a binomial in the toric ideal of the semigroup whose
/// weights the monomials were built with: degree balance is exact.
pub fn toric_membership(b: &Binomial) -> bool {
    b.is_balanced()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toric_membership_examples() {
        let ord = MonomialOrder::grevlex(&[3, 4, 5]);
        let b = Binomial::from_pair(
            Monomial::new(vec![0, 2, 0], ord.weights()),
            Monomial::new(vec![1, 0, 1], ord.weights()),
            &ord,
        )
        .unwrap();
        assert!(toric_membership(&b));

        let b = Binomial::from_pair(
            Monomial::new(vec![1, 0, 0], ord.weights()),
            Monomial::new(vec![0, 1, 0], ord.weights()),
            &ord,
        )
        .unwrap();
        assert!(!toric_membership(&b));

        let ord = MonomialOrder::grevlex(&[10, 11, 13, 14]);
        let b = Binomial::from_pair(
            Monomial::new(vec![1, 0, 0, 1], ord.weights()),
            Monomial::new(vec![0, 1, 1, 0], ord.weights()),
            &ord,
        )
        .unwrap();
        assert!(toric_membership(&b));
    }

    #[test]
    fn orientation_and_zero() {
        let ord = MonomialOrder::grevlex(&[2, 3]);
        let a = Monomial::new(vec![3, 0], ord.weights());
        let b = Monomial::new(vec![0, 2], ord.weights());
        let bin1 = Binomial::from_pair(a.clone(), b.clone(), &ord).unwrap();
        let bin2 = Binomial::from_pair(b, a.clone(), &ord).unwrap();
        assert_eq!(bin1, bin2);
        assert!(Binomial::from_pair(a.clone(), a, &ord).is_none());
    }
}
