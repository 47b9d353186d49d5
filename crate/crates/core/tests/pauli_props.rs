use num_complex::Complex64;
use numproj::dense::DenseOperator;
use numproj::pauli::{i_pow, PauliKey, PauliString, PauliSum};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Explicit Kronecker product of the printed letters times the phase.
fn kron_dense(s: &PauliString) -> DenseOperator {
    DenseOperator::kron_of_letters(&s.to_string())
        .unwrap()
        .scale(i_pow(s.phase_exp()))
}

fn random_string(rng: &mut StdRng, n: usize) -> PauliString {
    let mask = (1u64 << n) - 1;
    PauliString::with_phase(n, rng.gen::<u64>() & mask, rng.gen::<u64>() & mask, rng.gen_range(0..4)).unwrap()
}

fn all_strings(n: usize) -> Vec<PauliString> {
    let d = 1u64 << n;
    (0..d)
        .flat_map(|x| (0..d).map(move |z| PauliString::new(n, x, z).unwrap()))
        .collect()
}

#[test]
fn x_times_z_matches_matrix_product() {
    let x: PauliString = "X".parse().unwrap();
    let z: PauliString = "Z".parse().unwrap();
    let prod = kron_dense(&x).matmul(&kron_dense(&z)).unwrap();
    assert_eq!(kron_dense(&x.multiply(&z).unwrap()), prod);
}

#[test]
fn multiply_is_dense_faithful() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..500 {
        let a = random_string(&mut rng, 4);
        let b = random_string(&mut rng, 4);
        let want = kron_dense(&a).matmul(&kron_dense(&b)).unwrap();
        assert_eq!(kron_dense(&a.multiply(&b).unwrap()), want, "{a} * {b}");
    }
}

#[test]
fn multiply_is_associative() {
    let mut rng = StdRng::seed_from_u64(12);
    for n in 1..=4 {
        for _ in 0..200 {
            let (a, b, c) = (random_string(&mut rng, n), random_string(&mut rng, n), random_string(&mut rng, n));
            let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
            let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }
}

#[test]
fn commutation_exhaustive_two_qubits() {
    let all = all_strings(2);
    let mut pairs = 0;
    for a in &all {
        for b in &all {
            let (da, db) = (kron_dense(a), kron_dense(b));
            let dense = da.matmul(&db).unwrap() == db.matmul(&da).unwrap();
            assert_eq!(a.commutes(b).unwrap(), dense, "{a} {b}");
            if a.qubitwise_commutes(b).unwrap() {
                assert!(a.commutes(b).unwrap(), "{a} {b}");
            }
            pairs += 1;
        }
    }
    assert_eq!(pairs, 256);
}

#[test]
fn commutation_random_five_qubits() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..1000 {
        let a = random_string(&mut rng, 5);
        let b = random_string(&mut rng, 5);
        let (da, db) = (a.to_dense().unwrap(), b.to_dense().unwrap());
        let dense = da.commutator(&db).unwrap().max_abs() == 0.0;
        assert_eq!(a.commutes(&b).unwrap(), dense, "{a} {b}");
    }
}

#[test]
fn to_dense_matches_kron_for_every_three_qubit_string() {
    for s in all_strings(3) {
        assert_eq!(s.to_dense().unwrap(), kron_dense(&s), "{s}");
    }
}

#[test]
fn to_dense_is_linear() {
    let mut rng = StdRng::seed_from_u64(14);
    for _ in 0..20 {
        let mut a = PauliSum::new(4).unwrap();
        let mut b = PauliSum::new(4).unwrap();
        for _ in 0..8 {
            let c = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            a.add_string(&random_string(&mut rng, 4), c);
            b.add_string(&random_string(&mut rng, 4), c.conj());
        }
        let sum = a.add(&b).unwrap().to_dense().unwrap();
        let parts = a.to_dense().unwrap().add(&b.to_dense().unwrap()).unwrap();
        assert!(sum.max_abs_diff(&parts).unwrap() <= 1e-14);
    }
}

#[test]
fn dense_guard() {
    let big = PauliSum::identity(13).unwrap();
    assert!(big.to_dense().unwrap_err().is_resource());
}

#[test]
fn identity_and_z_dense() {
    let i = PauliSum::identity(1).unwrap().to_dense().unwrap();
    assert_eq!(i, DenseOperator::identity(1).unwrap());
    let z = PauliSum::from_labels(&[(1.0, "Z")]).unwrap().to_dense().unwrap();
    assert_eq!(z.diagonal(), vec![Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)]);
}

fn pauli_label(max: usize) -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(vec!['I', 'X', 'Y', 'Z']), 1..=max)
        .prop_map(|v| v.into_iter().collect())
}

proptest! {
    #[test]
    fn format_parse_round_trip(label in pauli_label(64)) {
        let s: PauliString = label.parse().unwrap();
        prop_assert_eq!(s.to_string(), label.clone());
        prop_assert_eq!(label.parse::<PauliString>().unwrap(), s);
    }

    #[test]
    fn self_inverse_up_to_phase(x in any::<u64>(), z in any::<u64>(), p in 0u8..4) {
        let s = PauliString::with_phase(64, x, z, p).unwrap();
        let sq = s.multiply(&s).unwrap();
        prop_assert_eq!(sq.key(), PauliKey::IDENTITY);
    }

    #[test]
    fn commutation_is_symmetric(xa in any::<u64>(), za in any::<u64>(), xb in any::<u64>(), zb in any::<u64>()) {
        let a = PauliString::new(64, xa, za).unwrap();
        let b = PauliString::new(64, xb, zb).unwrap();
        prop_assert_eq!(a.commutes(&b).unwrap(), b.commutes(&a).unwrap());
        // a b = (-1)^{[a, b] != 0} b a, phases differ by exactly 0 or 2.
        let ab = a.multiply(&b).unwrap();
        let ba = b.multiply(&a).unwrap();
        prop_assert_eq!(ab.key(), ba.key());
        let diff = (ab.phase_exp() + 4 - ba.phase_exp()) % 4;
        prop_assert_eq!(diff == 0, a.commutes(&b).unwrap());
    }
}
