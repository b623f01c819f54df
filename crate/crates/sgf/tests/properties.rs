//! Property tests over randomized semigroups plus the exhaustive
//! membership/normal-form agreement sweep.

use proptest::prelude::*;

use sgf::config::Limits;
use sgf::ideal::{
    buchberger, fiber, hilbert_coefficients, mu, normal_form, toric_membership, Binomial,
    Monomial, MonomialOrder, Tiebreak,
};
use sgf::scan::exhaustive_targets;
use sgf::semigroup::NumericalSemigroup;
use sgf::Error;

fn arb_semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    proptest::collection::vec(2u64..40, 2..5)
        .prop_filter_map("gcd 1 and nontrivial", |gens| {
            NumericalSemigroup::new(&gens).ok()
        })
}

/// Small generators keep the toric-ideal sweeps cheap.
fn arb_small_semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    proptest::collection::vec(2u64..20, 2..5)
        .prop_filter_map("gcd 1 and nontrivial", |gens| {
            NumericalSemigroup::new(&gens).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn membership_matches_coefficient_search(h in arb_semigroup(), m in -5i64..120) {
        prop_assert_eq!(h.contains(m), brute_force_member(h.generators(), m));
    }

    #[test]
    fn everything_past_frobenius_is_a_member(h in arb_semigroup()) {
        for m in h.frobenius() + 1..h.frobenius() + 80 {
            prop_assert!(h.contains(m));
        }
        for &g in h.gaps() {
            prop_assert!(!h.contains(g as i64));
        }
    }

    #[test]
    fn construction_is_idempotent(h in arb_semigroup()) {
        let again = NumericalSemigroup::new(h.generators()).unwrap();
        prop_assert_eq!(&h, &again);
    }

    #[test]
    fn pf_is_pseudo_frobenius_by_definition(h in arb_semigroup()) {
        // Every gap is classified correctly against the defining test.
        for &g in h.gaps() {
            let is_pf = h
                .generators()
                .iter()
                .all(|&a| h.contains(g as i64 + a as i64));
            prop_assert_eq!(h.pseudo_frobenius().contains(&g), is_pf);
        }
        prop_assert_eq!(
            h.pseudo_frobenius().last().copied(),
            Some(h.frobenius() as u64)
        );
    }

    #[test]
    fn apery_duality(h in arb_semigroup(), offset in 0u64..25) {
        // Any member works as the Apery base, not just a generator.
        let bases = [h.generators()[0], h.frobenius() as u64 + 1 + offset];
        for m in bases {
            let ap = h.apery_set(m).unwrap();
            let mut dual: Vec<u64> = ap
                .iter()
                .filter(|&&w| ap.iter().all(|&w2| w2 == w || !h.contains(w2 as i64 - w as i64)))
                .map(|&w| w - m)
                .collect();
            dual.sort_unstable();
            prop_assert_eq!(dual.as_slice(), h.pseudo_frobenius());
        }
    }

    #[test]
    fn min_multiple_is_at_least_two(h in arb_semigroup()) {
        for i in 0..h.embedding_dimension() {
            prop_assert!(h.min_multiple_in_complement(i) >= 2);
        }
    }

    #[test]
    fn hilbert_sum_counts_members(h in arb_semigroup()) {
        let f = h.frobenius() as u64;
        let sum: u64 = hilbert_coefficients(&h, f).iter().map(|&c| c as u64).sum();
        prop_assert_eq!(sum, f + 1 - h.genus() as u64);
    }

    #[test]
    fn reduced_groebner_basis_ignores_generator_order(
        h in arb_small_semigroup(),
        seed in 0usize..6,
    ) {
        // Witnesses of the toric ideal, fed in rotated order, give the
        // same reduced basis.
        let limits = Limits::default();
        let report = match mu(&h, None, Tiebreak::RevLex, &limits) {
            Ok(r) => r,
            Err(Error::BoundTooSmall { .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        if report.witnesses.len() < 2 {
            return Ok(());
        }
        let order = MonomialOrder::grevlex(h.generators());
        let gb1 = buchberger(&report.witnesses, &order, limits.pair_budget).unwrap();
        let mut rotated = report.witnesses.clone();
        let shift = seed % rotated.len();
        rotated.rotate_left(shift);
        let gb2 = buchberger(&rotated, &order, limits.pair_budget).unwrap();
        prop_assert_eq!(gb1, gb2);
    }
}

/// Frozen generator counts for small semigroups of each classical flavor:
/// 3-generated non-symmetric, 4-generated symmetric, 4-generated
/// pseudo-symmetric. Values verified by the dual-oracle sweep; this pins
/// them against regressions.
#[test]
fn frozen_generator_counts() {
    let limits = Limits::default();
    for (gens, expected) in [
        (&[4, 5, 11][..], 3),
        (&[5, 6, 7, 8][..], 5),
        (&[5, 6, 7, 9][..], 5),
        (&[6, 7, 8, 9, 10][..], 9),
    ] {
        let h = NumericalSemigroup::new(gens).unwrap();
        let report = mu(&h, None, Tiebreak::RevLex, &limits).unwrap();
        assert_eq!(report.total, expected, "mu changed for {gens:?}");
    }
}

fn brute_force_member(gens: &[u64], m: i64) -> bool {
    if m < 0 {
        return false;
    }
    if m == 0 {
        return true;
    }
    gens.iter()
        .any(|&g| m >= g as i64 && brute_force_member(gens, m - g as i64))
}

/// Degree balance agrees with reduction to zero against a Groebner basis
/// of a verified generating set, for every minimal semigroup with
/// generators at most 15 and a mix of balanced and unbalanced binomials.
#[test]
fn toric_membership_agrees_with_normal_forms_up_to_15() {
    let limits = Limits::default();
    for gens in exhaustive_targets(15, (2, 4)) {
        let h = NumericalSemigroup::new(&gens).unwrap();
        let order = MonomialOrder::grevlex(h.generators());
        let report = mu(&h, None, Tiebreak::RevLex, &limits)
            .unwrap_or_else(|e| panic!("mu failed for {gens:?}: {e}"));
        let gb = buchberger(&report.witnesses, &order, limits.pair_budget).unwrap();

        // Balanced binomials from fibers reduce to zero; unbalanced pairs
        // never do.
        for d in 0..=(2 * h.frobenius() as u64 + 10) {
            let f = fiber(&h, d as i64, limits.node_budget).unwrap();
            for pair in f.windows(2) {
                let b =
                    Binomial::from_pair(pair[0].clone(), pair[1].clone(), &order).unwrap();
                assert!(toric_membership(&b));
                assert!(
                    normal_form(&b, &gb, &order).is_none(),
                    "balanced binomial not reduced for {gens:?} degree {d}"
                );
            }
        }
        let n = h.embedding_dimension();
        for i in 0..n {
            for j in i + 1..n {
                let b = Binomial::from_pair(
                    Monomial::variable(i, h.generators()),
                    Monomial::variable(j, h.generators()),
                    &order,
                )
                .unwrap();
                assert!(!toric_membership(&b));
                assert!(
                    normal_form(&b, &gb, &order).is_some(),
                    "unbalanced binomial reduced to zero for {gens:?}"
                );
            }
        }
    }
}
