//! Cross-check the sparse projection against explicit matrices.

use num_complex::Complex64;
use numproj::dense::DenseOperator;
use numproj::projector::{project_string, ProjectorSpec};
use numproj::verify;
use numproj::PauliString;

fn main() -> numproj::Result<()> {
    let s: PauliString = "XX".parse()?;
    let p = verify::dense_projector(2, 1)?;
    let m = s.to_dense()?.conjugate_by(&p)?;
    println!("P XX P decomposes as:");
    for (key, c) in m.pauli_decompose(1e-15)?.sorted_terms() {
        println!("  {:>4} {}", c.re, key.to_string(2));
    }

    let s: PauliString = "ZXYI".parse()?;
    let spec = ProjectorSpec::new(4, 2)?;
    let sparse = project_string(spec, &s, Complex64::new(1.0, 0.0))?;
    let dense = DenseOperator::kron_of_letters("ZXYI")?.conjugate_by(&verify::dense_projector(4, 2)?)?;
    println!("{s}: {} terms, max deviation {:e}", sparse.len(), sparse.to_dense()?.max_abs_diff(&dense)?);

    for r in verify::run_suites(4, 7)? {
        println!("{r}");
    }
    Ok(())
}
