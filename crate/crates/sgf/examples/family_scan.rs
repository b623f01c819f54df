//! Sweep of the arithmetic-progression family
//! `<n, n+alpha, ..., n+(n-1)alpha>` over coprime pairs: every member has
//! pseudo-Frobenius numbers `alpha, 2 alpha, ..., (n-1) alpha` and passes
//! the full pipeline.
//!
//! ```bash
//! cargo run --example family_scan
//! ```

use sgf::config::Limits;
use sgf::ideal::Tiebreak;
use sgf::scan::{run_scan, ScanInput, CSV_HEADER, CSV_SCHEMA};

fn main() {
    let input = ScanInput::Family {
        n: (3, 6),
        alpha: (1, 5),
    };
    println!("#schema {CSV_SCHEMA}");
    println!("{CSV_HEADER}");
    for (gens, result) in run_scan(&input, Tiebreak::RevLex, &Limits::default()) {
        match result {
            Ok(record) => {
                assert!(record.determinantal && record.theorem_verified);
                println!("{}", record.csv_line());
            }
            Err(e) => eprintln!("reject: generators={gens:?} error={e}"),
        }
    }
}
