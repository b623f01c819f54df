//! The graded Eagon-Northcott complex of a 2 x n presentation matrix.
//!
//! For a matrix with monomial top row `f_1..f_n` and variable bottom row,
//! the terms are `C_0 = S` and `C_q = K_{q+1} x U_{q-1}` for
//! `1 <= q <= n-1`, with free basis labeled by pairs `(L, l)` of a
//! `(q+1)`-subset `L` and `0 <= l <= q-1`. The differentials mix the two
//! Koszul differentials, the one with coefficients `f_i` and the one with
//! coefficients `x_i`. When the minor ideal has maximal height the complex
//! resolves the quotient ring, and the last term's twists read off the
//! generator degrees of the canonical module.

use std::collections::HashMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{hilbert::monomial_count_table, Monomial, PresentationIdeal};
use crate::semigroup::NumericalSemigroup;
use crate::theorem::MIN_EMBEDDING_DIMENSION;

/// A single `+m` or `-m` term inside a differential entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedMonomial {
    pub sign: i8,
    pub monomial: Monomial,
}

/// Matrix entry: a tiny sum of signed monomials. Empty means zero. The
/// first differential has the two-term minors; all higher differentials
/// carry single terms.
pub type Entry = Vec<SignedMonomial>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EnMatrix {
    pub rows: usize,
    pub cols: usize,
    /// Row-major entries: `entries[r][c]` maps source generator `c` into
    /// target generator `r`.
    pub entries: Vec<Vec<Entry>>,
}

/// One free term of the complex.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EnTerm {
    pub rank: usize,
    /// Degrees of the free generators; the summand for degree `t` is the
    /// twisted module `S(-t)`.
    pub degrees: Vec<u64>,
    /// Basis labels `(L, l)`, `L` in colex order, `l` ascending within.
    pub labels: Vec<(Vec<usize>, usize)>,
}

impl EnTerm {
    /// Twists as shifts: the summand list `S(t)` with `t = -degree`.
    pub fn twists(&self) -> Vec<i64> {
        self.degrees.iter().map(|&d| -(d as i64)).collect()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GradedComplex {
    pub weights: Vec<u64>,
    pub alpha: u64,
    /// Sum of the top-row degrees.
    pub b_total: u64,
    /// Terms `C_0 .. C_{n-1}`.
    pub terms: Vec<EnTerm>,
    /// `diffs[q-1]` is `d_q : C_q -> C_{q-1}`.
    pub diffs: Vec<EnMatrix>,
}

fn colex_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut subsets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    subsets.sort_by(|a, b| {
        a.iter()
            .rev()
            .zip(b.iter().rev())
            .find_map(|(x, y)| (x != y).then(|| x.cmp(y)))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    subsets
}

fn binomial_coefficient(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut result = 1usize;
    for i in 0..k.min(n - k) {
        result = result * (n - i) / (i + 1);
    }
    result
}

/// Builds the complex for a validated presentation over the semigroup's
/// grading. The degree offset was already checked by the presentation; the
/// minimum embedding dimension is enforced here.
pub fn build_en_complex(p: &PresentationIdeal, h: &NumericalSemigroup) -> Result<GradedComplex> {
    let n = p.top().len();
    if n < MIN_EMBEDDING_DIMENSION {
        return Err(Error::EmbeddingDimensionTooSmall {
            n,
            min: MIN_EMBEDDING_DIMENSION,
        });
    }
    let weights = h.generators().to_vec();
    let alpha = p.alpha();
    let tops = p.top();
    let degrees_top: Vec<u64> = tops.iter().map(|f| f.degree()).collect();
    let b_total: u64 = degrees_top.iter().sum();

    let mut terms = Vec::with_capacity(n);
    terms.push(EnTerm {
        rank: 1,
        degrees: vec![0],
        labels: vec![(Vec::new(), 0)],
    });
    for q in 1..n {
        let mut labels = Vec::new();
        let mut degrees = Vec::new();
        for lambda in colex_subsets(n, q + 1) {
            let lambda_degree: u64 = lambda.iter().map(|&k| degrees_top[k]).sum();
            for l in 0..q {
                degrees.push(lambda_degree - (l as u64 + 1) * alpha);
                labels.push((lambda.clone(), l));
            }
        }
        debug_assert_eq!(labels.len(), binomial_coefficient(n, q + 1) * q);
        terms.push(EnTerm {
            rank: labels.len(),
            degrees,
            labels,
        });
    }

    let variable = |k: usize| Monomial::variable(p.bottom()[k], &weights);

    let mut diffs = Vec::with_capacity(n - 1);
    for q in 1..n {
        let source = &terms[q];
        let target = &terms[q - 1];
        let target_index: HashMap<(Vec<usize>, usize), usize> = target
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let mut entries = vec![vec![Entry::new(); source.rank]; target.rank];
        for (c, (lambda, l)) in source.labels.iter().enumerate() {
            if q == 1 {
                // Bottom differential: the 2 x 2 minor of the pair.
                let (i, j) = (lambda[0], lambda[1]);
                entries[0][c] = vec![
                    SignedMonomial {
                        sign: 1,
                        monomial: tops[i].mul(&variable(j)),
                    },
                    SignedMonomial {
                        sign: -1,
                        monomial: tops[j].mul(&variable(i)),
                    },
                ];
                continue;
            }
            for (pos, &idx) in lambda.iter().enumerate() {
                let sign = if pos % 2 == 0 { 1i8 } else { -1 };
                let reduced: Vec<usize> = lambda
                    .iter()
                    .copied()
                    .filter(|&x| x != idx)
                    .collect();
                // Koszul part with top-row coefficients, lowering the
                // y1 exponent.
                if *l <= q - 2 {
                    let r = target_index[&(reduced.clone(), *l)];
                    debug_assert!(entries[r][c].is_empty());
                    entries[r][c] = vec![SignedMonomial {
                        sign,
                        monomial: tops[idx].clone(),
                    }];
                }
                // Koszul part with variable coefficients, lowering the
                // y2 exponent.
                if *l >= 1 {
                    let r = target_index[&(reduced, *l - 1)];
                    debug_assert!(entries[r][c].is_empty());
                    entries[r][c] = vec![SignedMonomial {
                        sign,
                        monomial: variable(idx),
                    }];
                }
            }
        }
        diffs.push(EnMatrix {
            rows: target.rank,
            cols: source.rank,
            entries,
        });
    }

    Ok(GradedComplex {
        weights,
        alpha,
        b_total,
        terms,
        diffs,
    })
}

/// Exact verification that consecutive differentials compose to zero and
/// every entry is homogeneous of the degree its twists force. Also checks
/// the single-term shape of all higher differentials.
pub fn verify_complex(c: &GradedComplex) -> bool {
    // Homogeneity and entry shape.
    for (qm1, d) in c.diffs.iter().enumerate() {
        let source = &c.terms[qm1 + 1];
        let target = &c.terms[qm1];
        for r in 0..d.rows {
            for col in 0..d.cols {
                let entry = &d.entries[r][col];
                if qm1 >= 1 && entry.len() > 1 {
                    return false;
                }
                let expected = source.degrees[col] as i64 - target.degrees[r] as i64;
                for term in entry {
                    if term.monomial.degree() as i64 != expected {
                        return false;
                    }
                    if term.sign != 1 && term.sign != -1 {
                        return false;
                    }
                }
            }
        }
    }
    // d_q . d_{q+1} = 0, expanded symbolically.
    for q in 1..c.diffs.len() {
        let outer = &c.diffs[q - 1];
        let inner = &c.diffs[q];
        for r in 0..outer.rows {
            for col in 0..inner.cols {
                let mut acc: HashMap<Vec<u32>, i64> = HashMap::new();
                for k in 0..outer.cols {
                    for a in &outer.entries[r][k] {
                        for b in &inner.entries[k][col] {
                            let prod = a.monomial.mul(&b.monomial);
                            *acc.entry(prod.exps().to_vec()).or_insert(0) +=
                                a.sign as i64 * b.sign as i64;
                        }
                    }
                }
                if acc.values().any(|&v| v != 0) {
                    return false;
                }
            }
        }
    }
    true
}

/// Euler-characteristic certificate of acyclicity in every degree up to
/// `up_to`: the alternating sum of the terms' Hilbert functions must
/// telescope to the Hilbert function of the semigroup ring, which is the
/// 0/1 membership indicator.
pub fn verify_exactness_by_hilbert(
    c: &GradedComplex,
    h: &NumericalSemigroup,
    up_to: u64,
) -> bool {
    let counts = monomial_count_table(&c.weights, up_to);
    for d in 0..=up_to {
        let mut sum: i128 = 0;
        for (q, term) in c.terms.iter().enumerate() {
            let sign = if q % 2 == 0 { 1i128 } else { -1 };
            for &t in &term.degrees {
                if d >= t {
                    sum += sign * counts[(d - t) as usize] as i128;
                }
            }
        }
        let expected = h.contains(d as i64) as i128;
        if sum != expected {
            return false;
        }
    }
    true
}

/// Default window for the Hilbert comparison: twice the total top-row
/// degree, far past every twist of the complex.
pub fn default_hilbert_window(c: &GradedComplex) -> u64 {
    2 * c.b_total
}

/// Generator degrees of the canonical module read from the last term:
/// `b - t` over the twists `t` of `C_{n-1}`, sorted ascending. Equal to
/// the pseudo-Frobenius numbers whenever the cyclic structure holds.
pub fn canonical_presentation_degrees(c: &GradedComplex) -> Vec<u64> {
    let last = c.terms.last().unwrap();
    let mut out: Vec<u64> = last.degrees.iter().map(|&t| c.b_total - t).collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Limits;
    use crate::ideal::Tiebreak;
    use crate::theorem::build_cyclic_presentation;

    fn complex_for(gens: &[u64], alpha: u64) -> (NumericalSemigroup, GradedComplex) {
        let h = NumericalSemigroup::new(gens).unwrap();
        let (_, _, p) =
            build_cyclic_presentation(&h, alpha, Tiebreak::RevLex, &Limits::default()).unwrap();
        let c = build_en_complex(&p, &h).unwrap();
        (h, c)
    }

    #[test]
    fn ranks_and_twists_for_herzog_example() {
        let (_, c) = complex_for(&[3, 4, 5], 1);
        let ranks: Vec<usize> = c.terms.iter().map(|t| t.rank).collect();
        assert_eq!(ranks, vec![1, 3, 2]);
        assert_eq!(c.b_total, 15);
        let mut twists = c.terms[2].twists();
        twists.sort_unstable();
        assert_eq!(twists, vec![-14, -13]);
        // First term carries the three minors.
        assert_eq!(c.diffs[0].cols, 3);
    }

    #[test]
    fn rank_formula_and_euler_characteristic() {
        for (gens, alpha) in [(&[3, 4, 5][..], 1), (&[4, 5, 6, 7][..], 1), (&[5, 7, 9, 11, 13][..], 2)] {
            let (_, c) = complex_for(gens, alpha);
            let n = c.weights.len();
            let mut euler: i64 = 0;
            for (q, term) in c.terms.iter().enumerate() {
                let expected = if q == 0 {
                    1
                } else {
                    binomial_coefficient(n, q + 1) * q
                };
                assert_eq!(term.rank, expected);
                euler += if q % 2 == 0 {
                    term.rank as i64
                } else {
                    -(term.rank as i64)
                };
            }
            assert_eq!(euler, 0);
        }
    }

    #[test]
    fn differentials_compose_to_zero() {
        for (gens, alpha) in [(&[3, 4, 5][..], 1), (&[5, 7, 9, 11, 13][..], 2)] {
            let (_, c) = complex_for(gens, alpha);
            assert!(verify_complex(&c));
        }
    }

    #[test]
    fn sign_flip_is_caught() {
        let (_, mut c) = complex_for(&[3, 4, 5], 1);
        let entry = &mut c.diffs[1].entries[0][0];
        assert!(!entry.is_empty());
        entry[0].sign = -entry[0].sign;
        assert!(!verify_complex(&c));
    }

    #[test]
    fn first_differential_is_the_minor_row() {
        let h = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        let (_, _, p) =
            build_cyclic_presentation(&h, 1, Tiebreak::RevLex, &Limits::default()).unwrap();
        let c = build_en_complex(&p, &h).unwrap();
        // Each column of d_1 is +- one minor.
        for (col, minor) in c.diffs[0].entries[0].iter().zip(p.minors()) {
            let monos: Vec<&Monomial> = col.iter().map(|t| &t.monomial).collect();
            assert!(monos.contains(&minor.lead()) && monos.contains(&minor.tail()));
            assert_eq!(col.len(), 2);
            assert_eq!(col[0].sign * col[1].sign, -1);
        }
    }

    #[test]
    fn hilbert_certificate() {
        let (h, c) = complex_for(&[3, 4, 5], 1);
        assert!(verify_exactness_by_hilbert(&c, &h, 30));
        assert!(verify_exactness_by_hilbert(&c, &h, default_hilbert_window(&c)));

        // Corrupting a twist breaks the count.
        let mut bad = c.clone();
        bad.terms[2].degrees[0] += 1;
        assert!(!verify_exactness_by_hilbert(&bad, &h, 30));
    }

    #[test]
    fn canonical_degrees_match_pseudo_frobenius() {
        let (h, c) = complex_for(&[3, 4, 5], 1);
        assert_eq!(canonical_presentation_degrees(&c), h.pseudo_frobenius());

        let (h, c) = complex_for(&[5, 7, 9, 11, 13], 2);
        assert_eq!(canonical_presentation_degrees(&c), vec![2, 4, 6, 8]);
        assert_eq!(canonical_presentation_degrees(&c), h.pseudo_frobenius());
        // Last-term twists are the arithmetic progression shifted by the
        // total degree.
        let mut twists = c.terms.last().unwrap().twists();
        twists.sort_unstable();
        let expect: Vec<i64> = (1..=4)
            .map(|i| i * c.alpha as i64 - c.b_total as i64)
            .collect();
        assert_eq!(twists, expect);
    }

    #[test]
    fn small_embedding_dimension_is_rejected() {
        let h = NumericalSemigroup::new(&[2, 3]).unwrap();
        let order = crate::ideal::MonomialOrder::grevlex(h.generators());
        let p = PresentationIdeal::new(
            vec![
                Monomial::new(vec![0, 1], h.generators()),
                Monomial::new(vec![2, 0], h.generators()),
            ],
            vec![0, 1],
            &order,
        )
        .unwrap();
        assert!(matches!(
            build_en_complex(&p, &h),
            Err(Error::EmbeddingDimensionTooSmall { n: 2, .. })
        ));
    }
}
