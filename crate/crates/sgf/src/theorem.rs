//! Decision pipeline for the structure of the defining ideal.
//!
//! For a semigroup with at least three minimal generators, the following
//! are equivalent: the toric ideal is the 2 x 2 minor ideal of some 2 x n
//! matrix with variable bottom row; it is the minor ideal of the cyclic
//! matrix built from positive powers; and some pseudo-Frobenius number
//! `alpha` has `(n-1) * alpha` outside the semigroup. When they hold,
//! the exponents come from minimal multiples, the top-row degree offset is
//! `alpha`, the pseudo-Frobenius numbers are exactly the multiples
//! `alpha, ..., (n-1) alpha`, and the semigroup is almost symmetric.
//! This module decides the numeric condition, constructs the cyclic
//! presentation, and verifies every consequence computationally.

use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::ideal::{
    ideal_equals_toric, IdealEqualityReport, Monomial, MonomialOrder, PresentationIdeal, Tiebreak,
};
use crate::rfmatrix::{cyclic_certificates, CyclicCertificate, RfMatrix};
use crate::semigroup::NumericalSemigroup;

/// Minimum embedding dimension for the pipeline.
pub const MIN_EMBEDDING_DIMENSION: usize = 3;

/// Consequence checks, all of which must hold when a witness exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssertionChecks {
    /// Each cyclic exponent is the minimal multiple landing in the
    /// complement submonoid, minus one.
    pub ell_minimality: bool,
    /// Top-row degrees exceed the matching variable weights by `alpha`.
    pub degree_offset: bool,
    /// The pseudo-Frobenius numbers are exactly `alpha, ..., (n-1) alpha`.
    pub pf_multiples: bool,
    /// The semigroup is almost symmetric.
    pub almost_symmetric: bool,
}

impl AssertionChecks {
    pub fn all(&self) -> bool {
        self.ell_minimality && self.degree_offset && self.pf_multiples && self.almost_symmetric
    }
}

/// Serializable summary of a cyclic presentation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CyclicPresentation {
    /// One-based generator indices in walk order.
    pub permutation: Vec<usize>,
    /// Cyclic exponents; `ells[0]` belongs to the corner.
    pub ells: Vec<u64>,
    /// Top row monomials in walk order.
    pub top: Vec<String>,
    /// Bottom row variables in walk order.
    pub bottom: Vec<String>,
}

/// Full verification record for one semigroup.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TheoremReport {
    pub n: usize,
    pub pf: Vec<u64>,
    /// Pseudo-Frobenius numbers `alpha` with `(n-1) alpha` outside `H`.
    pub witnesses: Vec<u64>,
    /// Smallest witness, when any exists.
    pub alpha: Option<u64>,
    pub presentation: Option<CyclicPresentation>,
    pub assertion_checks: Option<AssertionChecks>,
    /// Minor ideal equals the toric ideal, when a presentation exists.
    pub ideal_equal: Option<bool>,
    pub mu: usize,
    pub almost_symmetric: bool,
}

/// Pseudo-Frobenius witnesses for the determinantal structure: all
/// `alpha` in `PF(H)` with `(n-1) * alpha` outside `H`, ascending.
pub fn presentation_witnesses(h: &NumericalSemigroup) -> Result<Vec<u64>> {
    let n = h.embedding_dimension();
    if n < MIN_EMBEDDING_DIMENSION {
        return Err(Error::EmbeddingDimensionTooSmall {
            n,
            min: MIN_EMBEDDING_DIMENSION,
        });
    }
    Ok(h.pseudo_frobenius()
        .iter()
        .copied()
        .filter(|&alpha| !h.contains((n as i64 - 1) * alpha as i64))
        .collect())
}

/// Constructs the cyclic presentation for a witness `alpha`.
///
/// Picks the first RF-matrix of `alpha` admitting cyclic form (one must
/// exist when `alpha` is a genuine witness; anything else is reported as a
/// violation, never swallowed) and returns the permutation, the exponent
/// vector, and the 2 x n presentation in walk order. Every exponent is
/// cross-checked against the minimal-multiple formula on the spot.
pub fn build_cyclic_presentation(
    h: &NumericalSemigroup,
    alpha: u64,
    tiebreak: Tiebreak,
    limits: &Limits,
) -> Result<(RfMatrix, CyclicCertificate, PresentationIdeal)> {
    let witnesses = presentation_witnesses(h)?;
    if !witnesses.contains(&alpha) {
        return Err(Error::NotPseudoFrobenius {
            alpha: alpha as i64,
        });
    }
    let mut found = cyclic_certificates(h, alpha, limits)?;
    if found.is_empty() {
        return Err(Error::TheoremViolation(format!(
            "witness alpha = {alpha} admits no cyclic row-factorization matrix for {:?}",
            h.generators()
        )));
    }
    let (matrix, cert) = found.swap_remove(0);
    for (k, &orig) in cert.permutation.iter().enumerate() {
        let expect = h.min_multiple_in_complement(orig) - 1;
        if cert.ells[k] != expect {
            return Err(Error::TheoremViolation(format!(
                "cyclic exponent {} at position {k} differs from minimal-multiple value {expect}",
                cert.ells[k]
            )));
        }
    }
    let presentation = presentation_from_certificate(h, &cert, tiebreak)?;
    Ok((matrix, cert, presentation))
}

/// The 2 x n matrix of a certificate: in walk coordinates the top row is
/// `(x_{p2}^{l2}, ..., x_{pn}^{ln}, x_{p1}^{l1})` over `(x_{p1}, ..., x_{pn})`.
pub fn presentation_from_certificate(
    h: &NumericalSemigroup,
    cert: &CyclicCertificate,
    tiebreak: Tiebreak,
) -> Result<PresentationIdeal> {
    let weights = h.generators();
    let order = MonomialOrder::new(weights, tiebreak);
    let n = cert.permutation.len();
    let mut top = Vec::with_capacity(n);
    let mut bottom = Vec::with_capacity(n);
    for k in 0..n {
        let next = (k + 1) % n;
        let var = cert.permutation[next];
        let mut exps = vec![0u32; n];
        exps[var] = cert.ells[next] as u32;
        top.push(Monomial::new(exps, weights));
        bottom.push(cert.permutation[k]);
    }
    PresentationIdeal::new(top, bottom, &order)
}

/// Runs the full pipeline and verifies every consequence.
///
/// With a witness: builds the presentation, recomputes the exponents
/// independently, checks the degree offset, the pseudo-Frobenius
/// arithmetic progression, almost symmetry, and finally ideal equality.
/// Any failed consequence is an internal violation error. Without a
/// witness the report carries the generator count and symmetry data only.
pub fn verify_theorem(
    h: &NumericalSemigroup,
    tiebreak: Tiebreak,
    limits: &Limits,
) -> Result<TheoremReport> {
    let witnesses = presentation_witnesses(h)?;
    let n = h.embedding_dimension();
    let pf = h.pseudo_frobenius().to_vec();
    let almost_symmetric = h.is_almost_symmetric();

    if witnesses.is_empty() {
        let mu = crate::ideal::mu(h, None, tiebreak, limits)?;
        return Ok(TheoremReport {
            n,
            pf,
            witnesses,
            alpha: None,
            presentation: None,
            assertion_checks: None,
            ideal_equal: None,
            mu: mu.total,
            almost_symmetric,
        });
    }

    let alpha = witnesses[0];
    if witnesses.len() != 1 {
        // The progression in the consequences forces a unique witness.
        return Err(Error::TheoremViolation(format!(
            "multiple witnesses {witnesses:?} for {:?}",
            h.generators()
        )));
    }
    let (_, cert, presentation) = build_cyclic_presentation(h, alpha, tiebreak, limits)?;

    let ell_minimality = cert
        .permutation
        .iter()
        .enumerate()
        .all(|(k, &orig)| cert.ells[k] == h.min_multiple_in_complement(orig) - 1);
    let weights = h.generators();
    let degree_offset = presentation
        .top()
        .iter()
        .zip(presentation.bottom())
        .all(|(f, &v)| f.degree() == weights[v] + alpha);
    let expected_pf: Vec<u64> = (1..n as u64).map(|i| i * alpha).collect();
    let pf_multiples = pf == expected_pf;
    let checks = AssertionChecks {
        ell_minimality,
        degree_offset,
        pf_multiples,
        almost_symmetric,
    };
    if !checks.all() {
        return Err(Error::TheoremViolation(format!(
            "witness alpha = {alpha} but consequence checks failed: {checks:?} for {:?}",
            h.generators()
        )));
    }
    if h.semigroup_type() != n - 1 {
        return Err(Error::TheoremViolation(format!(
            "witness alpha = {alpha} but type {} differs from n - 1 = {}",
            h.semigroup_type(),
            n - 1
        )));
    }

    let equality: IdealEqualityReport = ideal_equals_toric(&presentation, h, None, tiebreak, limits)?;
    if !equality.equal {
        return Err(Error::TheoremViolation(format!(
            "cyclic presentation for alpha = {alpha} misses generator {} of the toric ideal",
            equality.failing.as_ref().unwrap()
        )));
    }

    Ok(TheoremReport {
        n,
        pf,
        witnesses,
        alpha: Some(alpha),
        presentation: Some(summarize(&cert, &presentation)),
        assertion_checks: Some(checks),
        ideal_equal: Some(true),
        mu: equality.mu.total,
        almost_symmetric,
    })
}

fn summarize(cert: &CyclicCertificate, p: &PresentationIdeal) -> CyclicPresentation {
    CyclicPresentation {
        permutation: cert.permutation.iter().map(|&i| i + 1).collect(),
        ells: cert.ells.clone(),
        top: p.top().iter().map(|f| f.to_string()).collect(),
        bottom: p.bottom().iter().map(|&v| format!("x{}", v + 1)).collect(),
    }
}

/// Refutation record for semigroups without a witness.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ContrapositiveReport {
    /// Cyclic certificates found across all pseudo-Frobenius numbers,
    /// with the outcome of the ideal comparison for each.
    pub certificates: Vec<(u64, CyclicCertificate, bool)>,
    /// True when no certificate produced ideal equality, as the
    /// equivalence demands.
    pub consistent: bool,
}

/// Exhaustive cross-check for a semigroup without a witness: no cyclic
/// RF-matrix of any pseudo-Frobenius number may present the full toric
/// ideal, otherwise the equivalence would be violated.
pub fn refute_cyclic_presentations(
    h: &NumericalSemigroup,
    tiebreak: Tiebreak,
    limits: &Limits,
) -> Result<ContrapositiveReport> {
    let mut certificates = Vec::new();
    let mut consistent = true;
    for &alpha in h.pseudo_frobenius() {
        for (_, cert) in cyclic_certificates(h, alpha, limits)? {
            let p = presentation_from_certificate(h, &cert, tiebreak)?;
            let equal = ideal_equals_toric(&p, h, None, tiebreak, limits)?.equal;
            if equal {
                consistent = false;
            }
            certificates.push((alpha, cert, equal));
        }
    }
    Ok(ContrapositiveReport {
        certificates,
        consistent,
    })
}
