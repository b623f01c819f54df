use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

use super::binomial::Binomial;
use super::buchberger::{buchberger, normal_form};
use super::monomial::Monomial;
use super::mu::{mu, MuReport};
use super::order::{MonomialOrder, Tiebreak};

/// A 2 x n matrix with monomial top row and single variables on the bottom,
/// together with the binomial ideal of its 2 x 2 minors.
///
/// The bottom row is a permutation of the variables, stored as zero-based
/// variable indices. Constant degree offset between the rows makes every
/// minor degree-balanced, hence an element of the toric ideal.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PresentationIdeal {
    top: Vec<Monomial>,
    bottom: Vec<usize>,
    minors: Vec<Binomial>,
    alpha: u64,
}

impl PresentationIdeal {
    /// Validates the degree offset and derives the minor set.
    pub fn new(
        top: Vec<Monomial>,
        bottom: Vec<usize>,
        order: &MonomialOrder,
    ) -> Result<Self> {
        if top.is_empty() {
            return Err(Error::EmptyInput);
        }
        assert_eq!(top.len(), bottom.len());
        let weights = order.weights();
        let mut offset: Option<i64> = None;
        for (f, &v) in top.iter().zip(&bottom) {
            let o = f.degree() as i64 - weights[v] as i64;
            match offset {
                None => offset = Some(o),
                Some(prev) if prev == o => {}
                Some(_) => return Err(Error::NotEquidegree),
            }
        }
        let alpha = offset.unwrap();
        if alpha < 0 {
            return Err(Error::NotEquidegree);
        }
        let n = top.len();
        let mut minors = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let xi = Monomial::variable(bottom[i], weights);
                let xj = Monomial::variable(bottom[j], weights);
                let m = Binomial::from_pair(top[i].mul(&xj), top[j].mul(&xi), order)
                    .expect("distinct minor monomials");
                debug_assert!(m.is_balanced());
                minors.push(m);
            }
        }
        Ok(PresentationIdeal {
            top,
            bottom,
            minors,
            alpha: alpha as u64,
        })
    }

    pub fn top(&self) -> &[Monomial] {
        &self.top
    }

    /// Zero-based variable indices of the bottom row.
    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn minors(&self) -> &[Binomial] {
        &self.minors
    }

    /// The constant degree offset between the rows.
    pub fn alpha(&self) -> u64 {
        self.alpha
    }
}

/// Outcome of comparing the minor ideal with the full toric ideal.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdealEqualityReport {
    pub equal: bool,
    /// A minimal generator of the toric ideal that the minors miss, when
    /// `equal` is false.
    pub failing: Option<Binomial>,
    pub mu: MuReport,
}

/// Decides whether the minor ideal equals the toric ideal of `h`.
///
/// Containment of the minors holds by degree balance; equality holds
/// exactly when every witness generator from the verified sweep reduces to
/// zero against the Groebner basis of the minors.
pub fn ideal_equals_toric(
    p: &PresentationIdeal,
    h: &NumericalSemigroup,
    degree_bound: Option<u64>,
    tiebreak: Tiebreak,
    limits: &Limits,
) -> Result<IdealEqualityReport> {
    let order = MonomialOrder::new(h.generators(), tiebreak);
    let max_minor_degree = p.minors.iter().map(|m| m.degree()).max().unwrap();
    let bound = degree_bound
        .unwrap_or_else(|| super::mu::default_degree_bound(h))
        .max(max_minor_degree);
    let report = mu(h, Some(bound), tiebreak, limits)?;
    let gb = buchberger(&p.minors, &order, limits.pair_budget)?;
    let failing = report
        .witnesses
        .iter()
        .find(|w| normal_form(w, &gb, &order).is_some())
        .cloned();
    Ok(IdealEqualityReport {
        equal: failing.is_none(),
        failing,
        mu: report,
    })
}
