//! Numerical semigroup arithmetic.
//!
//! A numerical semigroup `H = <a_1, ..., a_n>` is the set of nonnegative
//! integer combinations of coprime positive generators. This module computes
//! membership, gaps, the Frobenius number, Apery sets, pseudo-Frobenius
//! numbers, the type, and the almost-symmetry test.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::config::Limits;
use crate::error::{Error, Result};

/// A numerical semigroup, canonicalized to its unique minimal generating
/// system, with a cached membership table covering `0..=f(H)+a_n`.
///
/// Immutable after construction; safe to share across threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    frobenius: i64,
    membership: Vec<bool>,
    gaps: Vec<u64>,
    pf: Vec<u64>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `raw` with default limits.
    ///
    /// Redundant generators are silently reduced to the minimal system;
    /// whether a reduction happened can be observed by comparing
    /// [`generators`](Self::generators) with the input.
    pub fn new(raw: &[u64]) -> Result<Self> {
        Self::with_limits(raw, &Limits::default())
    }

    pub fn with_limits(raw: &[u64], limits: &Limits) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut gens: Vec<u64> = raw.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if gens[0] == 0 {
            // 0 generates nothing; drop it rather than reject.
            gens.remove(0);
            if gens.is_empty() {
                return Err(Error::EmptyInput);
            }
        }
        for &g in &gens {
            if g > limits.max_generator {
                return Err(Error::GeneratorTooLarge {
                    value: g,
                    max: limits.max_generator,
                });
            }
        }
        let d = gens.iter().copied().fold(0u64, gcd);
        if d != 1 {
            return Err(Error::NotNumerical { gcd: d });
        }
        if gens[0] == 1 {
            return Err(Error::TrivialSemigroup);
        }

        // Least member of H in each residue class mod the smallest generator.
        let apery = apery_by_shortest_path(&gens);
        let frobenius = (*apery.iter().max().unwrap() - gens[0]) as i64;
        debug_assert!(frobenius >= 1);

        // Sieve the membership table far enough to cover every query the
        // pseudo-Frobenius test makes: f(H) + a_n.
        let a_max = *gens.last().unwrap();
        let required = frobenius as u128 + a_max as u128 + 1;
        if required > limits.max_table_len as u128 {
            return Err(Error::TableTooLarge {
                required,
                max: limits.max_table_len,
            });
        }
        let len = required as usize;
        let mut membership = vec![false; len];
        membership[0] = true;
        for m in 1..len {
            membership[m] = gens
                .iter()
                .take_while(|&&g| g as usize <= m)
                .any(|&g| membership[m - g as usize]);
        }

        // Reduce to the minimal generating system: a generator is redundant
        // exactly when it is a sum of two nonzero members.
        let minimal: Vec<u64> = gens
            .iter()
            .copied()
            .filter(|&g| {
                !(1..g as usize).any(|m| membership[m] && membership[g as usize - m])
            })
            .collect();
        debug_assert!(minimal.len() >= 2);
        let a_n = *minimal.last().unwrap();
        membership.truncate((frobenius as u64 + a_n + 1) as usize);

        let gaps: Vec<u64> = (1..=frobenius as u64)
            .filter(|&m| !membership[m as usize])
            .collect();
        let pf: Vec<u64> = gaps
            .iter()
            .copied()
            .filter(|&g| minimal.iter().all(|&a| membership[(g + a) as usize]))
            .collect();
        debug_assert_eq!(pf.last().copied(), Some(frobenius as u64));

        Ok(NumericalSemigroup {
            generators: minimal,
            frobenius,
            membership,
            gaps,
            pf,
        })
    }

    /// Minimal generators, strictly increasing.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Embedding dimension `n` (number of minimal generators).
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Frobenius number `f(H)`, the largest gap. Also the a-invariant of the
    /// semigroup ring.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Gaps of `H` in increasing order.
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Number of gaps (the genus).
    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Pseudo-Frobenius numbers in increasing order: the integers `x` outside
    /// `H` with `x + a_i` in `H` for every generator.
    pub fn pseudo_frobenius(&self) -> &[u64] {
        &self.pf
    }

    /// The type `r(H) = #PF(H)`, which equals the Cohen-Macaulay type of the
    /// semigroup ring.
    pub fn semigroup_type(&self) -> usize {
        self.pf.len()
    }

    /// Membership test; negative integers are never members and everything
    /// past the Frobenius number always is.
    pub fn contains(&self, m: i64) -> bool {
        if m < 0 {
            return false;
        }
        if m > self.frobenius {
            return true;
        }
        self.membership[m as usize]
    }

    /// Apery set of `H` relative to a positive member `m`: for each residue
    /// class mod `m`, the least member of `H` in that class, indexed by
    /// residue. Exactly `m` values, starting with 0.
    pub fn apery_set(&self, m: u64) -> Result<Vec<u64>> {
        if m == 0 || !self.contains(m as i64) {
            return Err(Error::InvalidAperyBase { value: m as i64 });
        }
        let mut set = Vec::with_capacity(m as usize);
        for r in 0..m {
            let mut w = r;
            while !self.contains(w as i64) {
                w += m;
            }
            set.push(w);
        }
        Ok(set)
    }

    /// Almost-symmetry test: writing `PF(H) = {α_1 < ... < α_r}`, checks
    /// `α_i + α_{r-i} = f(H)` for `1 <= i <= r-1`. Vacuously true for r = 1
    /// (the symmetric case). Equivalent to the semigroup ring being almost
    /// Gorenstein.
    pub fn is_almost_symmetric(&self) -> bool {
        let r = self.pf.len();
        let f = self.frobenius as u64;
        (1..r).all(|i| self.pf[i - 1] + self.pf[r - i - 1] == f)
    }

    /// Least `l > 0` such that `l * a_i` lies in the submonoid generated by
    /// the other minimal generators (`i` is a zero-based generator index).
    ///
    /// The submonoid need not be a numerical semigroup (its gcd can exceed
    /// one); membership is tested there directly. Always finite, and at
    /// least 2 because the generating system is minimal.
    pub fn min_multiple_in_complement(&self, i: usize) -> u64 {
        assert!(self.generators.len() >= 2, "need at least two generators");
        let rest: Vec<u64> = self
            .generators
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &g)| g)
            .collect();
        let sub = SubMonoid::new(&rest);
        let a = self.generators[i];
        let mut l = 1u64;
        loop {
            if sub.contains(l * a) {
                return l;
            }
            l += 1;
        }
    }

    /// Generator weights for the ambient graded polynomial ring.
    pub(crate) fn weights(&self) -> &[u64] {
        &self.generators
    }
}

/// Submonoid of the naturals generated by an arbitrary nonempty list of
/// positive integers, with no coprimality requirement.
pub(crate) struct SubMonoid {
    scale: u64,
    base: u64,
    // Least member of the scaled-down monoid per residue class mod `base`;
    // empty when the scaled-down monoid is all of N.
    apery: Vec<u64>,
}

impl SubMonoid {
    pub(crate) fn new(gens: &[u64]) -> Self {
        assert!(!gens.is_empty());
        let scale = gens.iter().copied().fold(0u64, gcd);
        let reduced: Vec<u64> = {
            let mut v: Vec<u64> = gens.iter().map(|&g| g / scale).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        if reduced[0] == 1 {
            return SubMonoid {
                scale,
                base: 1,
                apery: Vec::new(),
            };
        }
        let apery = apery_by_shortest_path(&reduced);
        SubMonoid {
            scale,
            base: reduced[0],
            apery,
        }
    }

    pub(crate) fn contains(&self, m: u64) -> bool {
        if !m.is_multiple_of(self.scale) {
            return false;
        }
        let v = m / self.scale;
        if self.apery.is_empty() {
            return true;
        }
        v >= self.apery[(v % self.base) as usize]
    }
}

/// Least member of `<gens>` in each residue class mod `gens[0]`, computed by
/// Dijkstra over the residue graph. Requires sorted coprime-free input with
/// `gens[0] >= 2`; panics otherwise only through debug assertions.
fn apery_by_shortest_path(gens: &[u64]) -> Vec<u64> {
    let base = gens[0] as usize;
    debug_assert!(base >= 2);
    let mut dist = vec![u64::MAX; base];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((v, r))) = heap.pop() {
        if v > dist[r] {
            continue;
        }
        for &g in &gens[1..] {
            let nv = v + g;
            let nr = (r + g as usize) % base;
            if nv < dist[nr] {
                dist[nr] = nv;
                heap.push(Reverse((nv, nr)));
            }
        }
    }
    debug_assert!(dist.iter().all(|&v| v != u64::MAX));
    dist
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent membership oracle: depth-first search over coefficient
    /// tuples, no table involved.
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

    /// Independent gap scan for pseudo-Frobenius numbers. The scan window
    /// `a_1 * a_2` dominates the Frobenius number of any supersemigroup of
    /// `<a_1, a_2>`.
    fn brute_force_pf(gens: &[u64]) -> Vec<u64> {
        let bound = gens[0] * gens[1];
        let mut pf = Vec::new();
        for x in 1..bound as i64 {
            if !brute_force_member(gens, x)
                && gens.iter().all(|&g| brute_force_member(gens, x + g as i64))
            {
                pf.push(x as u64);
            }
        }
        pf
    }

    #[test]
    fn construction_examples() {
        let h = NumericalSemigroup::new(&[4, 6, 7, 9]).unwrap();
        assert_eq!(h.generators(), &[4, 6, 7, 9]);
        assert_eq!(h.frobenius(), 5);

        let h = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(h.frobenius(), 1);
        assert_eq!(h.gaps(), &[1]);

        let h = NumericalSemigroup::new(&[2, 3, 4]).unwrap();
        assert_eq!(h.generators(), &[2, 3]);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            NumericalSemigroup::new(&[]),
            Err(Error::EmptyInput)
        ));
        assert!(matches!(
            NumericalSemigroup::new(&[4, 6]),
            Err(Error::NotNumerical { gcd: 2 })
        ));
        assert!(matches!(
            NumericalSemigroup::new(&[1, 5]),
            Err(Error::TrivialSemigroup)
        ));
        let limits = Limits {
            max_generator: 10,
            ..Limits::default()
        };
        assert!(matches!(
            NumericalSemigroup::with_limits(&[3, 11], &limits),
            Err(Error::GeneratorTooLarge { value: 11, .. })
        ));
    }

    #[test]
    fn construction_is_idempotent_on_minimal_generators() {
        for gens in [&[4, 6, 7, 9][..], &[3, 4, 5], &[10, 11, 13, 14]] {
            let h = NumericalSemigroup::new(gens).unwrap();
            let h2 = NumericalSemigroup::new(h.generators()).unwrap();
            assert_eq!(h, h2);
        }
    }

    #[test]
    fn membership_examples() {
        let h = NumericalSemigroup::new(&[4, 6, 7, 9]).unwrap();
        assert!(!h.contains(5));
        assert!(h.contains(13));
        assert!(h.contains(0));
        assert!(!h.contains(-1));
        // Agreement with the coefficient-tuple oracle on a window.
        for m in -3..40 {
            assert_eq!(h.contains(m), brute_force_member(h.generators(), m));
        }
    }

    #[test]
    fn membership_past_frobenius_and_on_gaps() {
        let h = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        for m in h.frobenius() + 1..h.frobenius() + 50 {
            assert!(h.contains(m));
        }
        for &g in h.gaps() {
            assert!(!h.contains(g as i64));
        }
    }

    #[test]
    fn pseudo_frobenius_examples() {
        assert_eq!(
            NumericalSemigroup::new(&[4, 6, 7, 9])
                .unwrap()
                .pseudo_frobenius(),
            &[2, 3, 5]
        );
        assert_eq!(
            NumericalSemigroup::new(&[10, 11, 13, 14])
                .unwrap()
                .pseudo_frobenius(),
            &[12, 17, 29]
        );
        assert_eq!(
            NumericalSemigroup::new(&[2, 3]).unwrap().pseudo_frobenius(),
            &[1]
        );
        assert_eq!(
            NumericalSemigroup::new(&[3, 4, 5])
                .unwrap()
                .pseudo_frobenius(),
            &[1, 2]
        );
    }

    #[test]
    fn pseudo_frobenius_matches_brute_force() {
        for gens in [&[4, 6, 7, 9][..], &[3, 4, 5], &[5, 7, 9, 11, 13], &[3, 7, 8]] {
            let h = NumericalSemigroup::new(gens).unwrap();
            assert_eq!(h.pseudo_frobenius(), brute_force_pf(gens));
        }
    }

    #[test]
    fn apery_examples() {
        let h = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(h.apery_set(2).unwrap(), vec![0, 3]);
        let h = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        assert_eq!(h.apery_set(3).unwrap(), vec![0, 4, 5]);
        let h = NumericalSemigroup::new(&[4, 6, 7, 9]).unwrap();
        assert_eq!(h.apery_set(4).unwrap(), vec![0, 9, 6, 7]);
        assert!(matches!(
            h.apery_set(5),
            Err(Error::InvalidAperyBase { value: 5 })
        ));
        assert!(matches!(
            h.apery_set(0),
            Err(Error::InvalidAperyBase { value: 0 })
        ));
    }

    /// Dual route to PF(H): maximal elements of an Apery set under the
    /// partial order `w <=_H w'` iff `w' - w` lies in `H`, shifted by the
    /// Apery base.
    pub(crate) fn pf_via_apery_duality(h: &NumericalSemigroup, m: u64) -> Vec<u64> {
        let ap = h.apery_set(m).unwrap();
        let mut out: Vec<u64> = ap
            .iter()
            .filter(|&&w| {
                ap.iter()
                    .all(|&w2| w2 == w || !h.contains(w2 as i64 - w as i64))
            })
            .map(|&w| w - m)
            .collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn apery_duality_cross_check() {
        for gens in [&[4, 6, 7, 9][..], &[3, 4, 5], &[10, 11, 13, 14], &[2, 3]] {
            let h = NumericalSemigroup::new(gens).unwrap();
            for &m in h.generators() {
                assert_eq!(
                    pf_via_apery_duality(&h, m),
                    h.pseudo_frobenius(),
                    "apery duality failed for {gens:?} at base {m}"
                );
            }
        }
    }

    #[test]
    fn almost_symmetric_examples() {
        assert!(NumericalSemigroup::new(&[4, 6, 7, 9])
            .unwrap()
            .is_almost_symmetric());
        assert!(NumericalSemigroup::new(&[10, 11, 13, 14])
            .unwrap()
            .is_almost_symmetric());
        assert!(NumericalSemigroup::new(&[2, 3]).unwrap().is_almost_symmetric());
        // <5,6,8> has PF = {7,9} and 7+7 != 9.
        let h = NumericalSemigroup::new(&[5, 6, 8]).unwrap();
        assert_eq!(h.pseudo_frobenius(), &[7, 9]);
        assert!(!h.is_almost_symmetric());
    }

    #[test]
    fn min_multiple_examples() {
        let h = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        assert_eq!(h.min_multiple_in_complement(0), 3);
        assert_eq!(h.min_multiple_in_complement(1), 2);
        assert_eq!(h.min_multiple_in_complement(2), 2);
    }

    #[test]
    fn min_multiple_exceeds_one_by_minimality() {
        for gens in [&[4, 6, 7, 9][..], &[3, 4, 5], &[10, 11, 13, 14]] {
            let h = NumericalSemigroup::new(gens).unwrap();
            for i in 0..h.embedding_dimension() {
                assert!(h.min_multiple_in_complement(i) >= 2);
            }
        }
    }

    #[test]
    fn min_multiple_with_two_generators() {
        // Complement monoid is generated by a single element.
        let h = NumericalSemigroup::new(&[4, 7]).unwrap();
        assert_eq!(h.min_multiple_in_complement(0), 7);
        assert_eq!(h.min_multiple_in_complement(1), 4);
    }

    #[test]
    fn type_and_genus() {
        let h = NumericalSemigroup::new(&[4, 6, 7, 9]).unwrap();
        assert_eq!(h.semigroup_type(), 3);
        assert_eq!(h.genus(), 4);
        assert_eq!(h.gaps(), &[1, 2, 3, 5]);
    }
}
