//! Pauli strings as (x, z) bit masks: products, phases, commutation.

use num_complex::Complex64;
use numproj::{PauliString, PauliSum};

fn main() -> numproj::Result<()> {
    let x: PauliString = "XI".parse()?;
    let y: PauliString = "YI".parse()?;
    let xy = x.multiply(&y)?;
    println!("XI * YI = i^{} {}", xy.phase_exp(), xy);

    for (a, b) in [("XX", "ZZ"), ("XI", "ZI"), ("XZ", "ZX"), ("XX", "YY")] {
        let a: PauliString = a.parse()?;
        let b: PauliString = b.parse()?;
        println!(
            "{a} vs {b}: commute = {:5}, qubit-wise = {}",
            a.commutes(&b)?,
            a.qubitwise_commutes(&b)?
        );
    }

    // (XX + YY)^2 = 2 II - 2 ZZ
    let hop = PauliSum::from_labels(&[(1.0, "XX"), (1.0, "YY")])?;
    let sq = hop.multiply(&hop)?.simplify(1e-15);
    for (key, c) in sq.sorted_terms() {
        println!("{:>6} {}", c.re, key.to_string(2));
    }
    assert_eq!(sq.coefficient_of("ZZ")?, Complex64::new(-2.0, 0.0));

    match "XQY".parse::<PauliString>() {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
