//! Restrict a qubit Hamiltonian to a fixed particle number.
//!
//! ```text
//! cargo run --example project_hamiltonian [file] [particles]
//! ```

use numproj::cliques::{partition, Ordering, Relation};
use numproj::hamio;
use numproj::projector::{project_operator, ProjectorSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/h2_sto3g_jw.txt").into());
    let k: usize = args.next().map(|a| a.parse()).transpose()?.unwrap_or(2);

    let input = hamio::read_operator(&std::fs::read_to_string(&path)?)?;
    for w in &input.warnings {
        eprintln!("warning: {w}");
    }
    let h = input.sum;
    let ph = project_operator(ProjectorSpec::new(h.n(), k)?, &h)?;

    print!("{}", hamio::emit_text(&ph));
    println!("# {} terms -> {} terms at {k} particles", h.len(), ph.len());
    for (label, m) in [("original", &h), ("projected", &ph)] {
        let p = partition(m, Relation::General, Ordering::Magnitude)?;
        println!("# {label}: {} commuting cliques", p.len());
    }
    Ok(())
}
