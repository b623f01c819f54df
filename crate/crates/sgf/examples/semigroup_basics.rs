//! Core invariants of a numerical semigroup: membership, gaps, Frobenius
//! number, Apery sets, pseudo-Frobenius numbers, type, almost symmetry.
//!
//! ```bash
//! cargo run --example semigroup_basics
//! ```

use sgf::NumericalSemigroup;

fn main() -> sgf::Result<()> {
    let h = NumericalSemigroup::new(&[4, 6, 7, 9])?;

    println!("H = <4, 6, 7, 9>");
    println!("minimal generators : {:?}", h.generators());
    println!("frobenius number   : {}", h.frobenius());
    println!("gaps               : {:?}", h.gaps());
    println!("genus              : {}", h.genus());
    println!("PF(H)              : {:?}", h.pseudo_frobenius());
    println!("type r(H)          : {}", h.semigroup_type());
    println!("almost symmetric   : {}", h.is_almost_symmetric());

    println!("\nmembership around the Frobenius number:");
    for m in 0..=10 {
        println!("  {m:>2} in H : {}", h.contains(m));
    }

    // The Apery set relative to the multiplicity lists, per residue class,
    // the least member of H in that class. Its maximal elements under the
    // divisibility order recover PF(H).
    let m = h.generators()[0];
    println!("\nApery set relative to {m}: {:?}", h.apery_set(m)?);

    // Redundant generators are reduced away.
    let reduced = NumericalSemigroup::new(&[2, 3, 4])?;
    println!("\n<2, 3, 4> reduces to {:?}", reduced.generators());

    // Minimal multiples in the complement submonoids: the least l > 0 with
    // l * a_i representable without a_i. These exponents drive the cyclic
    // presentation.
    let h = NumericalSemigroup::new(&[3, 4, 5])?;
    println!("\nH = <3, 4, 5>:");
    for i in 0..h.embedding_dimension() {
        println!(
            "  min {{ l > 0 : l * {} in H_{} }} = {}",
            h.generators()[i],
            i + 1,
            h.min_multiple_in_complement(i)
        );
    }
    Ok(())
}
