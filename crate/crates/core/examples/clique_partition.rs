//! Greedy grouping of Pauli terms into mutually commuting cliques.

use numproj::cliques::{partition, validate, Ordering, Relation};
use numproj::hamio;

const H: &str = "\
-0.8105 IIII
 0.1721 IIIZ
-0.2228 IIZI
 0.1721 IZII
-0.2228 ZIII
 0.1209 IIZZ
 0.1686 IZIZ
 0.0453 XXYY
-0.0453 XYYX
 0.0453 YXXY
-0.0453 YYXX
";

fn main() -> numproj::Result<()> {
    let h = hamio::parse(H)?.to_sum();
    for relation in Relation::ALL {
        for ordering in Ordering::ALL {
            let p = partition(&h, relation, ordering)?;
            assert!(validate(&p, &h).is_valid());
            println!("{relation:<10} {ordering:<10} {} cliques", p.len());
        }
    }

    let p = partition(&h, Relation::General, Ordering::Magnitude)?;
    for (i, clique) in p.cliques.iter().enumerate() {
        let labels: Vec<String> = clique.iter().map(|k| k.to_string(h.n())).collect();
        println!("clique {i}: {}", labels.join(" "));
    }
    println!("{}", serde_json::to_string_pretty(&p.to_json_value(&h)).unwrap());
    Ok(())
}
