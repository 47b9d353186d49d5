use numproj::kravchuk::{self, binomial, coefficient, generating_row, verify_identities, KravchukTable};
use proptest::prelude::*;

/// Brute-force C(n, k, m): the identity coefficient of sigma * P(n, k), i.e.
/// `sum_b [popcount(b) = k] (-1)^{popcount(b & S)}` for any `S` of size `m`.
fn character_sum(n: usize, k: usize, m: usize) -> i128 {
    let support = (1u64 << m) - 1;
    (0..1u64 << n)
        .filter(|b| b.count_ones() as usize == k)
        .map(|b| if (b & support).count_ones().is_multiple_of(2) { 1 } else { -1 })
        .sum()
}

#[test]
fn closed_form_matches_basis_enumeration() {
    for n in 1..=12 {
        for k in 0..=n {
            for m in 0..=n {
                assert_eq!(coefficient(n, k, m).unwrap(), character_sum(n, k, m), "({n},{k},{m})");
            }
        }
    }
}

#[test]
fn three_routes_agree_up_to_sixteen() {
    for n in 1..=16 {
        let closed = KravchukTable::from_closed_form(n).unwrap();
        assert_eq!(kravchuk::table(n).unwrap(), closed);
        for m in 0..=n {
            assert_eq!(generating_row(n, m).unwrap(), closed.column(m));
        }
    }
}

#[test]
fn recursions_hold_entrywise() {
    let c = |n: usize, k: i64, m: usize| -> i128 {
        if k < 0 || k as usize > n {
            0
        } else {
            coefficient(n, k as usize, m).unwrap()
        }
    };
    for n in 2..=16 {
        for k in 0..=n as i64 {
            for m in 0..=n {
                let here = c(n, k, m);
                if m < n {
                    assert_eq!(here, c(n - 1, k, m) + c(n - 1, k - 1, m), "add ({n},{k},{m})");
                }
                if m > 0 {
                    assert_eq!(here, c(n - 1, k, m - 1) - c(n - 1, k - 1, m - 1), "sub ({n},{k},{m})");
                }
            }
        }
    }
}

#[test]
fn identities_up_to_sixteen() {
    for n in 1..=16 {
        let r = verify_identities(n).unwrap();
        assert!(r.all_passed(), "{r}");
    }
}

proptest! {
    #[test]
    fn sign_flip_symmetry(n in 1usize..=16, k in 0usize..=16, m in 0usize..=16) {
        prop_assume!(k <= n && m <= n);
        let sign = if m % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(coefficient(n, n - k, m).unwrap(), sign * coefficient(n, k, m).unwrap());
    }

    #[test]
    fn bounded_by_central_binomial(n in 1usize..=64, k in 0usize..=64, m in 0usize..=64) {
        prop_assume!(k <= n && m <= n);
        let c = coefficient(n, k, m).unwrap();
        prop_assert!(c.abs() <= binomial(n as i64, (n / 2) as i64).unwrap());
    }

    #[test]
    fn edges_of_the_table(n in 1usize..=64, j in 0usize..=64) {
        prop_assume!(j <= n);
        prop_assert_eq!(coefficient(n, 0, j).unwrap(), 1);
        prop_assert_eq!(coefficient(n, n, j).unwrap(), if j % 2 == 0 { 1 } else { -1 });
        prop_assert_eq!(coefficient(n, j, 0).unwrap(), binomial(n as i64, j as i64).unwrap());
    }
}
