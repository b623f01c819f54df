//! The graded Eagon-Northcott complex of a cyclic presentation: term
//! ranks and twists, exact verification that consecutive differentials
//! compose to zero, the Hilbert-series acyclicity certificate, and the
//! canonical-module degrees read from the last term.
//!
//! ```bash
//! cargo run --example en_complex
//! ```

use sgf::config::Limits;
use sgf::en_complex::{
    build_en_complex, canonical_presentation_degrees, default_hilbert_window, verify_complex,
    verify_exactness_by_hilbert,
};
use sgf::ideal::Tiebreak;
use sgf::theorem::build_cyclic_presentation;
use sgf::NumericalSemigroup;

fn main() -> sgf::Result<()> {
    let limits = Limits::default();
    let h = NumericalSemigroup::new(&[3, 4, 5])?;
    let (_, _, presentation) = build_cyclic_presentation(&h, 1, Tiebreak::RevLex, &limits)?;
    let complex = build_en_complex(&presentation, &h)?;

    println!("complex for the <3,4,5> presentation:");
    for (q, term) in complex.terms.iter().enumerate() {
        println!("  C_{q}: rank {}, twists {:?}", term.rank, term.twists());
    }

    // d_1 entries are the three minors; higher entries are single signed
    // monomials from the two Koszul differentials.
    let d1 = &complex.diffs[0];
    println!("\nd_1 columns:");
    for col in 0..d1.cols {
        let terms: Vec<String> = d1.entries[0][col]
            .iter()
            .map(|t| format!("{}{}", if t.sign > 0 { "+" } else { "-" }, t.monomial))
            .collect();
        println!("  {}", terms.join(" "));
    }

    println!("\nd.d = 0 and homogeneous : {}", verify_complex(&complex));
    let window = default_hilbert_window(&complex);
    println!(
        "hilbert certificate up to {window} : {}",
        verify_exactness_by_hilbert(&complex, &h, window)
    );
    println!(
        "canonical degrees {:?} = PF {:?}",
        canonical_presentation_degrees(&complex),
        h.pseudo_frobenius()
    );

    // A bigger instance: the progression <5,7,9,11,13>.
    let h = NumericalSemigroup::new(&[5, 7, 9, 11, 13])?;
    let (_, _, presentation) = build_cyclic_presentation(&h, 2, Tiebreak::RevLex, &limits)?;
    let complex = build_en_complex(&presentation, &h)?;
    let ranks: Vec<usize> = complex.terms.iter().map(|t| t.rank).collect();
    println!("\n<5,7,9,11,13>: ranks {ranks:?}");
    println!("last term twists: {:?}", complex.terms.last().unwrap().twists());
    println!("verify_complex  : {}", verify_complex(&complex));
    println!(
        "canonical degrees {:?}",
        canonical_presentation_degrees(&complex)
    );
    Ok(())
}
