//! Row-factorization matrices attached to pseudo-Frobenius numbers:
//! enumeration, the defining checks, column positivity, and detection of
//! the cyclic normal form.
//!
//! ```bash
//! cargo run --example rf_matrices
//! ```

use sgf::config::Limits;
use sgf::rfmatrix::{
    check_column_positivity, check_minors_in_kernel, factorizations, find_cyclic_form,
    rf_matrices, top_row_monomials,
};
use sgf::NumericalSemigroup;

fn main() -> sgf::Result<()> {
    let limits = Limits::default();

    // Factorizations are the rows an RF-matrix is assembled from.
    let h = NumericalSemigroup::new(&[3, 4, 5])?;
    println!("factorizations of 9 over <3,4,5>: {:?}", factorizations(&h, 9, &limits)?);

    println!("\nRF-matrices of <3,4,5> for alpha = 1:");
    for m in rf_matrices(&h, 1, &limits)? {
        for row in m.entries() {
            println!("  {row:?}");
        }
        println!("  every column positive : {}", check_column_positivity(&m, &h)?);
        match find_cyclic_form(&m) {
            Some(cert) => println!(
                "  cyclic with permutation {:?} and ells {:?}",
                cert.permutation.iter().map(|&i| i + 1).collect::<Vec<_>>(),
                cert.ells
            ),
            None => println!("  no cyclic form"),
        }
        let top = top_row_monomials(&m, &h);
        let rendered: Vec<String> = top.iter().map(|f| f.to_string()).collect();
        println!("  top row {rendered:?}");
        println!("  all 2x2 minors degree-balanced : {}", check_minors_in_kernel(&top, &h));
    }

    // RF-matrices are not unique in general; <4,6,7,9> has four for
    // alpha = 5 and none of them is cyclic.
    let h = NumericalSemigroup::new(&[4, 6, 7, 9])?;
    let matrices = rf_matrices(&h, 5, &limits)?;
    println!("\n<4,6,7,9>, alpha = 5: {} RF-matrices", matrices.len());
    for (k, m) in matrices.iter().enumerate() {
        println!(
            "  matrix {}: cyclic = {}",
            k + 1,
            find_cyclic_form(m).is_some()
        );
    }
    Ok(())
}
