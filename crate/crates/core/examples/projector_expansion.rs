//! Expansion of the fixed-weight projector in Z strings, with exact coefficients.

use numproj::projector::{build_number_operator, projector_term_count, projector_terms, ProjectorSpec};
use numproj::{hamio, PauliKey};

fn main() -> numproj::Result<()> {
    let spec = ProjectorSpec::new(3, 1)?;
    for (mask, d) in projector_terms(spec)? {
        let r = d.reduced();
        println!("{:>3}/2^{} {}", r.numerator, r.exponent, PauliKey::new(0, mask).to_string(3));
    }

    let dense = numproj::projector::build_projector(spec)?.to_dense()?;
    let diag: Vec<f64> = dense.diagonal().iter().map(|c| c.re).collect();
    println!("diagonal: {diag:?}");

    print!("{}", hamio::emit_text(&build_number_operator(4)?));

    // half filling loses terms where the coefficient vanishes
    for n in [10, 20, 40] {
        let count = projector_term_count(ProjectorSpec::new(n, n / 2)?)?;
        println!("P({n},{}) has {count} of 2^{n} Z strings", n / 2);
    }
    Ok(())
}
