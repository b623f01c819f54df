//! The structure decision end to end: find pseudo-Frobenius witnesses,
//! build the cyclic 2 x n presentation, check every consequence, and
//! confirm the minor ideal equals the toric ideal. Also the refutation
//! direction on a semigroup without a witness.
//!
//! ```bash
//! cargo run --example theorem_pipeline
//! ```

use sgf::config::Limits;
use sgf::ideal::Tiebreak;
use sgf::theorem::{
    build_cyclic_presentation, presentation_witnesses, refute_cyclic_presentations,
    verify_theorem,
};
use sgf::NumericalSemigroup;

fn main() -> sgf::Result<()> {
    let limits = Limits::default();

    // <5,7,9,11,13>: every pseudo-Frobenius number is a multiple of 2 and
    // the ideal is cyclic determinantal.
    let h = NumericalSemigroup::new(&[5, 7, 9, 11, 13])?;
    println!("H = <5,7,9,11,13>");
    println!("witnesses: {:?}", presentation_witnesses(&h)?);
    let (matrix, cert, presentation) =
        build_cyclic_presentation(&h, 2, Tiebreak::RevLex, &limits)?;
    println!("cyclic RF-matrix:");
    for row in matrix.entries() {
        println!("  {row:?}");
    }
    println!(
        "permutation {:?}, ells {:?}",
        cert.permutation.iter().map(|&i| i + 1).collect::<Vec<_>>(),
        cert.ells
    );
    let top: Vec<String> = presentation.top().iter().map(|f| f.to_string()).collect();
    println!("presentation top row: {top:?}");
    println!("minors: {}", presentation.minors().len());

    let report = verify_theorem(&h, Tiebreak::RevLex, &limits)?;
    println!("PF = {:?} (= alpha, 2 alpha, ..., (n-1) alpha)", report.pf);
    println!("assertion checks: {:?}", report.assertion_checks.unwrap());
    println!("ideal equality:   {:?}", report.ideal_equal.unwrap());
    println!("mu:               {}", report.mu);

    // <4,6,7,9> is almost Gorenstein yet has no witness; the refutation
    // confirms no cyclic candidate generates the whole ideal.
    let h = NumericalSemigroup::new(&[4, 6, 7, 9])?;
    println!("\nH = <4,6,7,9>");
    println!("witnesses: {:?}", presentation_witnesses(&h)?);
    let refutation = refute_cyclic_presentations(&h, Tiebreak::RevLex, &limits)?;
    println!(
        "cyclic candidates found: {} (all fail ideal equality: {})",
        refutation.certificates.len(),
        refutation.consistent
    );
    let report = verify_theorem(&h, Tiebreak::RevLex, &limits)?;
    println!(
        "almost symmetric = {}, mu = {}",
        report.almost_symmetric, report.mu
    );
    Ok(())
}
