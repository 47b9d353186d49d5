use num_complex::Complex64;
use numproj::hamio::{self, Format};
use numproj::pauli::{PauliKey, PauliSum};
use numproj::projector::{build_projector, ProjectorSpec};
use proptest::prelude::*;

fn term() -> impl Strategy<Value = (String, f64, f64)> {
    (
        prop::collection::vec(prop::sample::select(vec!['I', 'X', 'Y', 'Z']), 5),
        -1e6f64..1e6,
        prop_oneof![Just(0.0), -1.0f64..1.0],
    )
        .prop_map(|(chars, re, im)| (chars.into_iter().collect(), re, im))
}

fn sum_of(terms: &[(String, f64, f64)]) -> PauliSum {
    let mut s = PauliSum::new(5).unwrap();
    for (label, re, im) in terms {
        let p = label.parse().unwrap();
        s.add_string(&p, Complex64::new(*re, *im));
    }
    s
}

proptest! {
    #[test]
    fn emit_then_parse_is_identity(terms in prop::collection::vec(term(), 1..30)) {
        let s = sum_of(&terms).simplify(0.0);
        prop_assume!(!s.is_empty());
        for f in [Format::Text, Format::Json, Format::Csv] {
            let back = hamio::read_operator(&hamio::emit(&s, f)).unwrap().sum;
            prop_assert!(back.approx_eq(&s, 1e-15), "{}", f);
            // emission is deterministic
            prop_assert_eq!(hamio::emit(&back, f), hamio::emit(&s, f));
        }
    }

    #[test]
    fn line_order_does_not_matter(terms in prop::collection::vec(term(), 1..20)) {
        let lines: Vec<String> = terms
            .iter()
            .map(|(l, re, im)| format!("{re} {im} {l}"))
            .collect();
        let forward = hamio::parse(&lines.join("\n")).unwrap().to_sum();
        let mut rev = lines.clone();
        rev.reverse();
        let backward = hamio::parse(&rev.join("\n")).unwrap().to_sum();
        prop_assert!(forward.approx_eq(&backward, 1e-9 * (1.0 + terms.len() as f64)));
        let keys_a: std::collections::BTreeSet<PauliKey> = forward.keys().copied().collect();
        let keys_b: std::collections::BTreeSet<PauliKey> = backward.keys().copied().collect();
        prop_assert_eq!(keys_a, keys_b);
    }
}

#[test]
fn projector_text_is_exact() {
    let p = build_projector(ProjectorSpec::new(6, 3).unwrap()).unwrap();
    let back = hamio::parse(&hamio::emit_text(&p)).unwrap().to_sum();
    assert!(back.approx_eq(&p, 0.0));
}

#[test]
fn empty_sum_json_round_trips() {
    let empty = PauliSum::new(4).unwrap();
    let back = hamio::read_operator(&hamio::emit_json(&empty)).unwrap().sum;
    assert_eq!(back.n(), 4);
    assert!(back.is_empty());
}
