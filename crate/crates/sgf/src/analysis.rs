//! Full single-semigroup pipeline and its serializable document.

use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::en_complex::{
    build_en_complex, canonical_presentation_degrees, default_hilbert_window, verify_complex,
    verify_exactness_by_hilbert,
};
use crate::error::Result;
use crate::ideal::{mu, MuReport, Tiebreak};
use crate::semigroup::NumericalSemigroup;
use crate::theorem::{
    build_cyclic_presentation, verify_theorem, TheoremReport, MIN_EMBEDDING_DIMENSION,
};

/// Options honored by the pipeline.
#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    pub tiebreak: Tiebreak,
    pub limits: Limits,
    /// Overrides the generator sweep bound.
    pub max_degree: Option<u64>,
    /// Skips the complex construction and its certificates.
    pub no_en: bool,
}

/// Summary of the complex certificates.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EnSummary {
    pub ranks: Vec<usize>,
    /// Twist lists per term, as shifts.
    pub twists: Vec<Vec<i64>>,
    pub complex_ok: bool,
    pub hilbert_ok: bool,
    pub hilbert_window: u64,
    pub canonical_degrees: Vec<u64>,
    pub canonical_matches_pf: bool,
}

/// Everything the pipeline computed for one semigroup. Round-trips
/// losslessly through JSON.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AnalysisDocument {
    pub schema: String,
    pub input_generators: Vec<u64>,
    pub minimal_generators: Vec<u64>,
    /// True when the input was reduced to a smaller minimal system.
    pub reduced: bool,
    pub embedding_dimension: usize,
    pub frobenius: i64,
    pub genus: usize,
    pub pf: Vec<u64>,
    #[serde(rename = "type")]
    pub semigroup_type: usize,
    pub almost_symmetric: bool,
    /// True when some pseudo-Frobenius witness makes the ideal
    /// determinantal.
    pub determinantal: bool,
    /// Full pipeline report; absent below the minimum embedding dimension.
    pub theorem: Option<TheoremReport>,
    pub mu: MuReport,
    pub en: Option<EnSummary>,
}

pub const ANALYSIS_SCHEMA: &str = "sgf.analysis.v1";

/// Runs the pipeline: invariants, witnesses, presentation, generator
/// counts, and complex certificates.
pub fn analyze(raw_generators: &[u64], options: &AnalyzeOptions) -> Result<AnalysisDocument> {
    let h = NumericalSemigroup::with_limits(raw_generators, &options.limits)?;
    let mut sorted_input = raw_generators.to_vec();
    sorted_input.sort_unstable();
    sorted_input.dedup();
    let reduced = h.generators() != sorted_input.as_slice();

    let n = h.embedding_dimension();
    let theorem = if n >= MIN_EMBEDDING_DIMENSION {
        Some(verify_theorem(&h, options.tiebreak, &options.limits)?)
    } else {
        None
    };
    let mu_report = mu(&h, options.max_degree, options.tiebreak, &options.limits)?;
    let determinantal = theorem
        .as_ref()
        .map(|t| !t.witnesses.is_empty())
        .unwrap_or(false);

    let en = if determinantal && !options.no_en {
        let alpha = theorem.as_ref().unwrap().alpha.unwrap();
        let (_, _, presentation) =
            build_cyclic_presentation(&h, alpha, options.tiebreak, &options.limits)?;
        let complex = build_en_complex(&presentation, &h)?;
        let window = default_hilbert_window(&complex);
        let canonical = canonical_presentation_degrees(&complex);
        Some(EnSummary {
            ranks: complex.terms.iter().map(|t| t.rank).collect(),
            twists: complex.terms.iter().map(|t| t.twists()).collect(),
            complex_ok: verify_complex(&complex),
            hilbert_ok: verify_exactness_by_hilbert(&complex, &h, window),
            hilbert_window: window,
            canonical_matches_pf: canonical == h.pseudo_frobenius(),
            canonical_degrees: canonical,
        })
    } else {
        None
    };

    Ok(AnalysisDocument {
        schema: ANALYSIS_SCHEMA.to_string(),
        input_generators: raw_generators.to_vec(),
        minimal_generators: h.generators().to_vec(),
        reduced,
        embedding_dimension: n,
        frobenius: h.frobenius(),
        genus: h.genus(),
        pf: h.pseudo_frobenius().to_vec(),
        semigroup_type: h.semigroup_type(),
        almost_symmetric: h.is_almost_symmetric(),
        determinantal,
        theorem,
        mu: mu_report,
        en,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_negative_example() {
        let doc = analyze(&[4, 6, 7, 9], &AnalyzeOptions::default()).unwrap();
        assert_eq!(doc.pf, vec![2, 3, 5]);
        assert_eq!(doc.mu.total, 6);
        assert!(doc.almost_symmetric);
        assert!(!doc.determinantal);
        assert!(doc.en.is_none());
    }

    #[test]
    fn analyze_positive_example() {
        let doc = analyze(&[3, 4, 5], &AnalyzeOptions::default()).unwrap();
        assert!(doc.determinantal);
        let en = doc.en.unwrap();
        assert!(en.complex_ok && en.hilbert_ok && en.canonical_matches_pf);
        assert_eq!(en.ranks, vec![1, 3, 2]);
    }

    #[test]
    fn analyze_two_generators_skips_theorem() {
        let doc = analyze(&[2, 3], &AnalyzeOptions::default()).unwrap();
        assert!(doc.theorem.is_none());
        assert_eq!(doc.mu.total, 1);
        assert!(!doc.determinantal);
    }

    #[test]
    fn reduction_is_reported() {
        let doc = analyze(&[2, 3, 4], &AnalyzeOptions::default()).unwrap();
        assert!(doc.reduced);
        assert_eq!(doc.minimal_generators, vec![2, 3]);
    }

    #[test]
    fn json_round_trip_is_lossless() {
        for gens in [&[3, 4, 5][..], &[4, 6, 7, 9], &[2, 3]] {
            let doc = analyze(gens, &AnalyzeOptions::default()).unwrap();
            let json = serde_json::to_string(&doc).unwrap();
            let back: AnalysisDocument = serde_json::from_str(&json).unwrap();
            let json2 = serde_json::to_string(&back).unwrap();
            assert_eq!(json, json2);
        }
    }
}
