//! Generalised binomial (Kravchuk) coefficients `C(n, k, m)`.
//!
//! `C(n, k, m)` is the coefficient that every `m`-fold product of Pauli `Z`
//! operators receives (up to the factor `1 / 2^n`) in the Pauli expansion of
//! the projector onto `n`-qubit basis states of Hamming weight `k`. For fixed
//! `n` the coefficients form a square table with rows `k` and columns `m`;
//! stacking the tables for increasing `n` gives Pascal's pyramid, whose
//! `m = 0` face is Pascal's triangle.
//!
//! Three independent routes are provided and must agree entrywise:
//!
//! * [`coefficient`]: the alternating closed-form sum
//!   `sum_l (-1)^l binom(n - m, k - l) binom(m, l)`;
//! * [`table`]: the addition / subtraction recursions seeded by the
//!   one-qubit table `[[1, 1], [1, -1]]`;
//! * [`generating_row`]: the coefficients of `(1 - x)^m (1 + x)^(n - m)`.
//!
//! All arithmetic is exact in `i128` with checked operations.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest qubit count for which coefficients are computed.
pub const MAX_QUBITS: usize = 64;

/// Binomial coefficient with `binom(a, b) = 0` whenever `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> Result<i128> {
    if a < 0 || b < 0 || b > a {
        return Ok(0);
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for i in 0..b {
        // acc * (a - i) / (i + 1) stays integral at every step.
        acc = acc
            .checked_mul((a - i) as i128)
            .ok_or_else(|| Error::Overflow(format!("binom({a}, {b})")))?
            / (i as i128 + 1);
    }
    Ok(acc)
}

fn check_args(n: usize, k: usize, m: usize) -> Result<()> {
    check_n(n)?;
    if k > n {
        return Err(Error::domain("k", k as i128, format!("0 <= k <= n = {n}")));
    }
    if m > n {
        return Err(Error::domain("m", m as i128, format!("0 <= m <= n = {n}")));
    }
    Ok(())
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::domain(
            "n",
            n as i128,
            format!("1 <= n <= {MAX_QUBITS}"),
        ));
    }
    Ok(())
}

/// Closed-form sum without the `n >= 1` restriction; `C(0, 0, 0) = 1`.
///
/// The projector code needs the degenerate zero-qubit factor when a Pauli
/// string's X-support is empty or covers every qubit.
pub(crate) fn closed_form(n: usize, k: usize, m: usize) -> Result<i128> {
    debug_assert!(k <= n && m <= n && n <= MAX_QUBITS);
    let (n, k, m) = (n as i64, k as i64, m as i64);
    let mut total: i128 = 0;
    for l in 0..=m {
        let term = binomial(n - m, k - l)?
            .checked_mul(binomial(m, l)?)
            .ok_or_else(|| Error::Overflow(format!("C({n}, {k}, {m})")))?;
        total = if l % 2 == 0 {
            total.checked_add(term)
        } else {
            total.checked_sub(term)
        }
        .ok_or_else(|| Error::Overflow(format!("C({n}, {k}, {m})")))?;
    }
    Ok(total)
}

/// `C(n, k, m)` by the closed-form alternating sum.
pub fn coefficient(n: usize, k: usize, m: usize) -> Result<i128> {
    check_args(n, k, m)?;
    closed_form(n, k, m)
}

/// Column `m` of the table, i.e. `C(n, k, m)` for `k = 0..=n`, from the
/// generating polynomial `(1 - x)^m (1 + x)^(n - m)`.
pub fn generating_row(n: usize, m: usize) -> Result<Vec<i128>> {
    check_args(n, 0, m)?;
    let mut poly: Vec<i128> = vec![1];
    let factors = std::iter::repeat_n(-1i128, m)
        .chain(std::iter::repeat_n(1i128, n - m));
    for sign in factors {
        // multiply by (1 + sign * x)
        let mut next = vec![0i128; poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            next[i] = next[i]
                .checked_add(c)
                .ok_or_else(|| Error::Overflow("generating polynomial".into()))?;
            next[i + 1] = next[i + 1]
                .checked_add(sign * c)
                .ok_or_else(|| Error::Overflow("generating polynomial".into()))?;
        }
        poly = next;
    }
    Ok(poly)
}

/// Exact table of `C(n, k, m)` for one `n`, indexed `(k, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KravchukTable {
    n: usize,
    entries: Vec<Vec<i128>>,
}

impl KravchukTable {
    /// Builds the table entry by entry from the closed form.
    pub fn from_closed_form(n: usize) -> Result<Self> {
        check_n(n)?;
        let entries = (0..=n)
            .map(|k| (0..=n).map(|m| closed_form(n, k, m)).collect())
            .collect::<Result<Vec<Vec<i128>>>>()?;
        Ok(Self { n, entries })
    }

    /// Builds the table column by column from the generating polynomials.
    pub fn from_generating_function(n: usize) -> Result<Self> {
        check_n(n)?;
        let columns = (0..=n)
            .map(|m| generating_row(n, m))
            .collect::<Result<Vec<_>>>()?;
        let entries = (0..=n)
            .map(|k| columns.iter().map(|col| col[k]).collect())
            .collect();
        Ok(Self { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize, m: usize) -> i128 {
        self.entries[k][m]
    }

    pub fn row(&self, k: usize) -> &[i128] {
        &self.entries[k]
    }

    pub fn column(&self, m: usize) -> Vec<i128> {
        self.entries.iter().map(|row| row[m]).collect()
    }

    pub fn rows(&self) -> &[Vec<i128>] {
        &self.entries
    }

    /// Comma-separated rows, one per `k`, preceded by a header of `m` values.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k");
        for m in 0..=self.n {
            out.push_str(&format!(",m={m}"));
        }
        out.push('\n');
        for (k, row) in self.entries.iter().enumerate() {
            out.push_str(&k.to_string());
            for v in row {
                out.push(',');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        // i128 is not a JSON-native type; entries are bounded by binom(64, 32)
        // and therefore fit in i64.
        let entries: Vec<Vec<i64>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&v| v as i64).collect())
            .collect();
        serde_json::json!({ "n": self.n, "entries": entries }).to_string()
    }
}

/// Rows `k` top to bottom, columns `m` left to right, right-aligned.
impl fmt::Display for KravchukTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for row in &self.entries {
            let line = row
                .iter()
                .map(|v| format!("{v:>width$}"))
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// `C(n, k, m)` table built by the addition and subtraction recursions.
///
/// Starting from `n = 1`, each level uses
/// `C(n, k, m) = C(n-1, k, m) + C(n-1, k-1, m)` for `m < n` and
/// `C(n, k, n) = C(n-1, k, n-1) - C(n-1, k-1, n-1)` for the last column,
/// treating out-of-range entries of the smaller table as zero.
pub fn table(n: usize) -> Result<KravchukTable> {
    check_n(n)?;
    let mut entries: Vec<Vec<i128>> = vec![vec![1, 1], vec![1, -1]];
    for level in 2..=n {
        let prev = |k: usize, m: usize| -> i128 {
            entries
                .get(k)
                .and_then(|row| row.get(m))
                .copied()
                .unwrap_or(0)
        };
        let overflow = || Error::Overflow(format!("recursion at n = {level}"));
        let mut next = vec![vec![0i128; level + 1]; level + 1];
        for (k, row) in next.iter_mut().enumerate() {
            let below = |m: usize| if k == 0 { 0 } else { prev(k - 1, m) };
            for (m, slot) in row.iter_mut().enumerate() {
                *slot = if m < level {
                    prev(k, m).checked_add(below(m)).ok_or_else(overflow)?
                } else {
                    prev(k, m - 1)
                        .checked_sub(below(m - 1))
                        .ok_or_else(overflow)?
                };
            }
        }
        entries = next;
    }
    Ok(KravchukTable { n, entries })
}

/// Tables for `n = 1..=max_n`, the layers of Pascal's pyramid.
pub fn pyramid(max_n: usize) -> Result<Vec<KravchukTable>> {
    check_n(max_n)?;
    (1..=max_n).map(table).collect()
}

/// The four identity families checked by [`verify_identities`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Identity {
    /// `sum_k C(n,k,m) = 2^n [m = 0]`
    ColumnSum,
    /// `sum_m binom(n,m) C(n,k,m) C(n,k',m) = 2^n binom(n,k) [k = k']`
    RowOrthogonality,
    /// `sum_m binom(n,m) C(n,k,m) = 2^n [k = 0]`
    RowSum,
    /// `sum_k k C(n,k,m)` equals `n 2^(n-1)`, `-2^(n-1)` or `0` for `m = 0`, `1`, `> 1`.
    NumberOperatorSum,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Identity::ColumnSum => "column sum",
            Identity::RowOrthogonality => "row orthogonality",
            Identity::RowSum => "row sum",
            Identity::NumberOperatorSum => "number-operator column sum",
        };
        f.write_str(name)
    }
}

/// Coordinates and values of the first failing instance of an identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub k: Option<usize>,
    pub k_prime: Option<usize>,
    pub m: Option<usize>,
    pub expected: i128,
    pub actual: i128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: Identity,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub n: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, identity: Identity) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.identity == identity)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            let status = if check.passed { "PASS" } else { "FAIL" };
            write!(f, "n={} {:<28} {}", self.n, check.identity.to_string(), status)?;
            if let Some(cx) = &check.counterexample {
                write!(f, " (k={:?}, k'={:?}, m={:?}: expected {}, got {})",
                    cx.k, cx.k_prime, cx.m, cx.expected, cx.actual)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn checked_sum<I: IntoIterator<Item = Result<i128>>>(terms: I, what: &str) -> Result<i128> {
    terms.into_iter().try_fold(0i128, |acc, t| {
        acc.checked_add(t?)
            .ok_or_else(|| Error::Overflow(what.to_string()))
    })
}

fn mul(a: i128, b: i128, what: &str) -> Result<i128> {
    a.checked_mul(b).ok_or_else(|| Error::Overflow(what.to_string()))
}

fn first_failure(
    identity: Identity,
    cases: impl Iterator<Item = Result<Option<Counterexample>>>,
) -> Result<IdentityCheck> {
    for case in cases {
        if let Some(cx) = case? {
            return Ok(IdentityCheck {
                identity,
                passed: false,
                counterexample: Some(cx),
            });
        }
    }
    Ok(IdentityCheck {
        identity,
        passed: true,
        counterexample: None,
    })
}

/// Checks the column-sum, row-orthogonality, row-sum and number-operator
/// identities for one `n` in exact arithmetic.
pub fn verify_identities(n: usize) -> Result<IdentityReport> {
    let t = KravchukTable::from_closed_form(n)?;
    verify_table_identities(&t)
}

/// Same checks as [`verify_identities`], against an already built table.
pub fn verify_table_identities(t: &KravchukTable) -> Result<IdentityReport> {
    let n = t.n();
    let pow2 = 1i128 << n;
    let half = 1i128 << (n - 1);
    let binoms: Vec<i128> = (0..=n)
        .map(|m| binomial(n as i64, m as i64))
        .collect::<Result<_>>()?;

    let column_sum = first_failure(
        Identity::ColumnSum,
        (0..=n).map(|m| {
            let actual = checked_sum((0..=n).map(|k| Ok(t.get(k, m))), "column sum")?;
            let expected = if m == 0 { pow2 } else { 0 };
            Ok((actual != expected).then_some(Counterexample {
                k: None,
                k_prime: None,
                m: Some(m),
                expected,
                actual,
            }))
        }),
    )?;

    let pairs = (0..=n).flat_map(|k| (0..=n).map(move |kp| (k, kp)));
    let orthogonality = first_failure(
        Identity::RowOrthogonality,
        pairs.map(|(k, kp)| {
            let actual = checked_sum(
                (0..=n).map(|m| {
                    let w = mul(binoms[m], t.get(k, m), "row orthogonality")?;
                    mul(w, t.get(kp, m), "row orthogonality")
                }),
                "row orthogonality",
            )?;
            let expected = if k == kp {
                mul(pow2, binoms[k], "row orthogonality")?
            } else {
                0
            };
            Ok((actual != expected).then_some(Counterexample {
                k: Some(k),
                k_prime: Some(kp),
                m: None,
                expected,
                actual,
            }))
        }),
    )?;

    let row_sum = first_failure(
        Identity::RowSum,
        (0..=n).map(|k| {
            let actual = checked_sum(
                (0..=n).map(|m| mul(binoms[m], t.get(k, m), "row sum")),
                "row sum",
            )?;
            let expected = if k == 0 { pow2 } else { 0 };
            Ok((actual != expected).then_some(Counterexample {
                k: Some(k),
                k_prime: None,
                m: None,
                expected,
                actual,
            }))
        }),
    )?;

    let number_sum = first_failure(
        Identity::NumberOperatorSum,
        (0..=n).map(|m| {
            let actual = checked_sum(
                (0..=n).map(|k| mul(k as i128, t.get(k, m), "number-operator sum")),
                "number-operator sum",
            )?;
            let expected = match m {
                0 => n as i128 * half,
                1 => -half,
                _ => 0,
            };
            Ok((actual != expected).then_some(Counterexample {
                k: None,
                k_prime: None,
                m: Some(m),
                expected,
                actual,
            }))
        }),
    )?;

    Ok(IdentityReport {
        n,
        checks: vec![column_sum, orthogonality, row_sum, number_sum],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_row_for_three_qubits() {
        let got: Vec<i128> = (0..=3).map(|m| coefficient(3, 1, m).unwrap()).collect();
        assert_eq!(got, vec![3, 1, -1, -3]);
    }

    #[test]
    fn caption_recursion_example() {
        // rows are k, columns are m
        assert_eq!(coefficient(6, 2, 1).unwrap(), 5);
        assert_eq!(coefficient(5, 2, 1).unwrap(), 2);
        assert_eq!(coefficient(5, 1, 1).unwrap(), 3);
        assert_eq!(coefficient(5, 2, 0).unwrap() - coefficient(5, 1, 0).unwrap(), 5);
        // The closed form itself at (6, 1, 2).
        assert_eq!(coefficient(6, 1, 2).unwrap(), 2);
    }

    #[test]
    fn one_qubit_table() {
        assert_eq!(table(1).unwrap().rows(), &[vec![1, 1], vec![1, -1]]);
        assert_eq!(coefficient(1, 1, 1).unwrap(), -1);
        assert_eq!(coefficient(4, 0, 3).unwrap(), 1);
    }

    #[test]
    fn identity_column_is_binomial() {
        for n in 1..=12 {
            for k in 0..=n {
                assert_eq!(
                    coefficient(n, k, 0).unwrap(),
                    binomial(n as i64, k as i64).unwrap()
                );
            }
        }
    }

    #[test]
    fn generating_rows() {
        assert_eq!(generating_row(3, 0).unwrap(), vec![1, 3, 3, 1]);
        assert_eq!(generating_row(3, 3).unwrap(), vec![1, -3, 3, -1]);
        assert_eq!(generating_row(6, 2).unwrap(), vec![1, 2, -1, -4, -1, 2, 1]);
        assert_eq!(table(6).unwrap().row(2), &[15, 5, -1, -3, -1, 5, 15]);
    }

    #[test]
    fn domain_errors_name_the_argument() {
        assert!(matches!(coefficient(0, 0, 0), Err(Error::Domain { name: "n", .. })));
        assert!(matches!(coefficient(65, 0, 0), Err(Error::Domain { name: "n", .. })));
        assert!(matches!(coefficient(3, 4, 0), Err(Error::Domain { name: "k", .. })));
        assert!(matches!(coefficient(3, 0, 4), Err(Error::Domain { name: "m", .. })));
        assert!(table(0).is_err());
    }

    #[test]
    fn binomial_out_of_range_is_zero() {
        assert_eq!(binomial(3, -1).unwrap(), 0);
        assert_eq!(binomial(3, 4).unwrap(), 0);
        assert_eq!(binomial(64, 32).unwrap(), 1_832_624_140_942_590_534);
    }

    #[test]
    fn largest_tables_fit() {
        let t = table(64).unwrap();
        assert_eq!(t, KravchukTable::from_closed_form(64).unwrap());
        assert!(verify_identities(64).unwrap().all_passed());
    }

    #[test]
    fn number_operator_example() {
        let col: i128 = (0..=3).map(|k| k as i128 * coefficient(3, k, 1).unwrap()).sum();
        assert_eq!(col, -4);
        let r = verify_identities(3).unwrap();
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn orthogonality_needs_binomial_weight() {
        // Without the binom(n, k) factor the diagonal sum disagrees with 2^n.
        let n = 2;
        let s: i128 = (0..=n)
            .map(|m| binomial(n as i64, m as i64).unwrap() * coefficient(n, 1, m).unwrap().pow(2))
            .sum();
        assert_eq!(s, 8);
        assert_ne!(s, 1 << n);
    }

    #[test]
    fn corrupted_table_reports_counterexample() {
        let mut t = table(4).unwrap();
        t.entries[2][3] += 1;
        let r = verify_table_identities(&t).unwrap();
        let col = r.check(Identity::ColumnSum).unwrap();
        assert!(!col.passed);
        assert_eq!(col.counterexample.as_ref().unwrap().m, Some(3));
    }

    #[test]
    fn text_layout_is_right_aligned() {
        assert_eq!(table(2).unwrap().to_string(), " 1  1  1\n 2  0 -2\n 1 -1  1\n");
    }
}
