//! The three operator formats: text, JSON, CSV.

use numproj::hamio::{self, Format};

fn main() -> numproj::Result<()> {
    let doc = hamio::parse(
        "# qubits: 3\n\
         # a comment\n\
         0.5 ZZ\n\
         -0.25 XY\n\
         1e-6 IZ\n\
         0.5 ZZ\n",
    )?;
    for w in &doc.warnings {
        println!("warning: {w}");
    }
    let sum = doc.to_sum();
    for format in [Format::Text, Format::Json, Format::Csv] {
        let text = hamio::emit(&sum, format);
        println!("--- {format}\n{text}");
        assert!(hamio::read_operator(&text)?.sum.approx_eq(&sum, 0.0));
    }

    if let Err(e) = hamio::parse("0.5 XZ\n0.5 XZZ\n") {
        println!("error: {e}");
    }
    Ok(())
}
