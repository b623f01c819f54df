//! The toric ideal machine room: fibers, the fiber graph, minimal
//! generator counts by two independent routes, witnesses, Groebner bases,
//! and the Hilbert function.
//!
//! ```bash
//! cargo run --example ideal_generators
//! ```

use sgf::config::Limits;
use sgf::ideal::{
    buchberger, fiber, generator_count_by_linear_algebra, generator_count_in_degree,
    hilbert_coefficients, ideal_contains, mu, Binomial, Monomial, MonomialOrder, Tiebreak,
};
use sgf::NumericalSemigroup;

fn main() -> sgf::Result<()> {
    let limits = Limits::default();
    let h = NumericalSemigroup::new(&[10, 11, 13, 14])?;
    let order = MonomialOrder::grevlex(h.generators());

    // The fiber of a degree collects every monomial mapping to t^d.
    let f24 = fiber(&h, 24, limits.node_budget)?;
    let rendered: Vec<String> = f24.iter().map(|m| m.to_string()).collect();
    println!("fiber of degree 24: {rendered:?}");
    println!(
        "generators in degree 24: fiber graph {}, linear algebra {}",
        generator_count_in_degree(&h, 24, limits.node_budget)?,
        generator_count_by_linear_algebra(&h, 24, limits.node_budget)?
    );

    // Full sweep with verified witnesses.
    let report = mu(&h, None, Tiebreak::RevLex, &limits)?;
    println!("\nmu = {} within degree bound {}", report.total, report.degree_bound);
    for (d, count) in &report.per_degree {
        println!("  degree {d}: {count}");
    }
    println!("witnesses:");
    for w in &report.witnesses {
        println!("  {w}");
    }

    // The witnesses generate the ideal, so their reduced Groebner basis is
    // a Groebner basis of the toric ideal itself.
    let gb = buchberger(&report.witnesses, &order, limits.pair_budget)?;
    println!("\nreduced Groebner basis has {} elements", gb.len());

    // Membership of x1*x4 - x2*x3 two ways: degree balance and reduction.
    let b = Binomial::from_pair(
        Monomial::new(vec![1, 0, 0, 1], h.generators()),
        Monomial::new(vec![0, 1, 1, 0], h.generators()),
        &order,
    )
    .unwrap();
    println!("\n{b}:");
    println!("  degree balanced : {}", b.is_balanced());
    println!(
        "  reduces to zero : {}",
        ideal_contains(&report.witnesses, &b, &order, limits.pair_budget)?
    );

    // Hilbert function of the semigroup ring: 1 exactly on members.
    println!(
        "\nhilbert coefficients up to 16: {:?}",
        hilbert_coefficients(&h, 16)
    );
    Ok(())
}
