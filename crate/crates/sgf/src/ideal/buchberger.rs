//! Buchberger completion specialized to binomials.
//!
//! S-polynomials of binomials are binomials or zero, and reduction replaces
//! one monomial at a time, so the whole computation stays inside binomials
//! with coefficients 1 and -1. In particular nothing here depends on the
//! coefficient field.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

use super::binomial::Binomial;
use super::monomial::Monomial;
use super::order::MonomialOrder;

/// Fully reduces a monomial modulo the binomial set: while some lead
/// divides, replace that factor by the corresponding tail. Terminates
/// because every step strictly decreases the monomial in the order the
/// set is oriented by.
pub fn reduce_monomial(m: &Monomial, basis: &[Binomial]) -> Monomial {
    let mut current = m.clone();
    'outer: loop {
        for g in basis {
            if let Some(quot) = g.lead().divide_into(&current) {
                current = quot.mul(g.tail());
                continue 'outer;
            }
        }
        return current;
    }
}

/// Normal form of a binomial: reduce both monomials; `None` when they meet
/// (the binomial reduces to zero).
pub fn normal_form(b: &Binomial, basis: &[Binomial], order: &MonomialOrder) -> Option<Binomial> {
    let lead = reduce_monomial(b.lead(), basis);
    let tail = reduce_monomial(b.tail(), basis);
    Binomial::from_pair(lead, tail, order)
}

fn s_pair(f: &Binomial, g: &Binomial, order: &MonomialOrder) -> Option<Binomial> {
    let lcm = f.lead().lcm(g.lead(), order.weights());
    let a = f.lead().divide_into(&lcm).unwrap().mul(f.tail());
    let b = g.lead().divide_into(&lcm).unwrap().mul(g.tail());
    Binomial::from_pair(a, b, order)
}

/// Reduced Groebner basis of the binomial ideal generated by `gens`.
///
/// The result is canonical for the order: sorted by lead, pairwise
/// lead-irreducible, tails fully reduced. An `Err` is returned when more
/// than `pair_budget` S-pairs get processed.
pub fn buchberger(
    gens: &[Binomial],
    order: &MonomialOrder,
    pair_budget: usize,
) -> Result<Vec<Binomial>> {
    let mut basis: Vec<Binomial> = Vec::new();
    for g in gens {
        // Re-orient under this order and drop duplicates.
        let b = Binomial::from_pair(g.lead().clone(), g.tail().clone(), order);
        if let Some(b) = b {
            if !basis.contains(&b) {
                basis.push(b);
            }
        }
    }

    // Pair queue ordered by lcm degree, then by index, for determinism.
    let mut queue: BinaryHeap<Reverse<(u64, usize, usize)>> = BinaryHeap::new();
    let push_pairs = |queue: &mut BinaryHeap<_>, basis: &[Binomial], j: usize| {
        for i in 0..j {
            let lcm = basis[i].lead().lcm(basis[j].lead(), order.weights());
            queue.push(Reverse((lcm.degree(), i, j)));
        }
    };
    for j in 0..basis.len() {
        push_pairs(&mut queue, &basis, j);
    }

    let mut processed = 0usize;
    while let Some(Reverse((_, i, j))) = queue.pop() {
        processed += 1;
        if processed > pair_budget {
            return Err(Error::CompletionBudgetExceeded {
                budget: pair_budget,
            });
        }
        if basis[i].lead().coprime(basis[j].lead()) {
            // Buchberger's product criterion.
            continue;
        }
        let Some(s) = s_pair(&basis[i], &basis[j], order) else {
            continue;
        };
        if let Some(h) = normal_form(&s, &basis, order) {
            basis.push(h);
            push_pairs(&mut queue, &basis, basis.len() - 1);
        }
    }

    Ok(inter_reduce(basis, order))
}

/// Minimalizes and tail-reduces a Groebner basis into the reduced one.
fn inter_reduce(mut basis: Vec<Binomial>, order: &MonomialOrder) -> Vec<Binomial> {
    // Keep only elements whose lead no other (kept) lead divides strictly;
    // among equal leads keep the smaller tail.
    basis.sort_by(|a, b| {
        order
            .cmp(a.lead(), b.lead())
            .then_with(|| order.cmp(a.tail(), b.tail()))
    });
    basis.dedup();
    let mut minimal: Vec<Binomial> = Vec::new();
    for b in &basis {
        if !minimal.iter().any(|m| m.lead().divides(b.lead())) {
            minimal.push(b.clone());
        }
    }
    // Tail reduction. A lead is never divisible by its own lead strictly
    // and never divides its own tail, so reducing against the full set is
    // safe.
    let snapshot = minimal.clone();
    let mut reduced: Vec<Binomial> = minimal
        .into_iter()
        .map(|b| {
            let tail = reduce_monomial(b.tail(), &snapshot);
            Binomial::from_pair(b.lead().clone(), tail, order)
                .expect("lead strictly exceeds its reduced tail")
        })
        .collect();
    reduced.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
    reduced
}

/// Ideal membership through normal forms: computes a Groebner basis of
/// `gens` and reduces `b`.
pub fn ideal_contains(
    gens: &[Binomial],
    b: &Binomial,
    order: &MonomialOrder,
    pair_budget: usize,
) -> Result<bool> {
    let gb = buchberger(gens, order, pair_budget)?;
    Ok(normal_form(b, &gb, order).is_none())
}
