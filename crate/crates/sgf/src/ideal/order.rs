use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;

/// Tie-breaking rule applied after comparing weighted degrees.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Tiebreak {
    Lex,
    #[default]
    RevLex,
}

impl std::str::FromStr for Tiebreak {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(Tiebreak::Lex),
            "revlex" => Ok(Tiebreak::RevLex),
            other => Err(format!("unknown order {other:?}, expected lex or revlex")),
        }
    }
}

/// Monomial order: weighted degree first, then the configured tiebreak on
/// exponent vectors. Total, multiplicative, and with 1 minimal, because all
/// weights are positive.
#[derive(Clone, Debug)]
pub struct MonomialOrder {
    weights: Vec<u64>,
    tiebreak: Tiebreak,
}

impl MonomialOrder {
    pub fn new(weights: &[u64], tiebreak: Tiebreak) -> Self {
        MonomialOrder {
            weights: weights.to_vec(),
            tiebreak,
        }
    }

    /// Weighted degree with reverse-lexicographic ties, the default.
    pub fn grevlex(weights: &[u64]) -> Self {
        Self::new(weights, Tiebreak::RevLex)
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn tiebreak(&self) -> Tiebreak {
        self.tiebreak
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        match self.tiebreak {
            Tiebreak::Lex => {
                for (x, y) in a.exps().iter().zip(b.exps()) {
                    match x.cmp(y) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            Tiebreak::RevLex => {
                // Larger means the last differing exponent is smaller.
                for (x, y) in a.exps().iter().zip(b.exps()).rev() {
                    match x.cmp(y) {
                        Ordering::Equal => {}
                        ord => return ord.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}
