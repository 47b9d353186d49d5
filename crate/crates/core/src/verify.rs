//! Brute-force cross-checks of the symbolic results against dense matrices.
//!
//! Every suite compares a symbolic route with an independent one: exact
//! tables built three ways, projectors against the basis-state diagonal,
//! projected strings against `P M P` formed entrywise, and symplectic
//! commutation against matrix commutators.

use std::fmt;

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::dense::{DenseOperator, MAX_DENSE_QUBITS};
use crate::error::{Error, Result};
use crate::kravchuk::{self, KravchukTable};
use crate::pauli::PauliString;
use crate::projector::{build_number_operator, build_projector, project_string, ProjectorSpec};

/// Largest `n` accepted by [`run_suites`].
pub const MAX_VERIFY_QUBITS: usize = 10;

/// Exhaustive string enumeration is used up to this many qubits.
const EXHAUSTIVE_UP_TO: usize = 4;
const RANDOM_STRINGS: usize = 200;
const TOL: f64 = 1e-13;
const TOL_RANDOM: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub suite: &'static str,
    pub n: usize,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} n={:<2} {:<22} {}", self.n, self.suite, self.detail)
    }
}

/// Dense `P(n, k)` from basis-state Hamming weights.
pub fn dense_projector(n: usize, k: usize) -> Result<DenseOperator> {
    DenseOperator::diagonal_from(n, |b| {
        Complex64::new(if b.count_ones() as usize == k { 1.0 } else { 0.0 }, 0.0)
    })
}

/// `P M P` for diagonal `P`, formed entrywise.
pub fn conjugate_by_diagonal(m: &DenseOperator, p: &DenseOperator) -> Result<DenseOperator> {
    let mut out = DenseOperator::zeros(m.n())?;
    let d = p.diagonal();
    for r in 0..m.dim() {
        for c in 0..m.dim() {
            out.set(r, c, d[r] * m.get(r, c) * d[c]);
        }
    }
    Ok(out)
}

fn result(suite: &'static str, n: usize, failure: Option<String>, ok: String) -> SuiteResult {
    SuiteResult {
        suite,
        n,
        passed: failure.is_none(),
        detail: failure.unwrap_or(ok),
    }
}

fn kravchuk_agreement(n: usize) -> Result<SuiteResult> {
    let closed = KravchukTable::from_closed_form(n)?;
    let rec = kravchuk::table(n)?;
    let gen = KravchukTable::from_generating_function(n)?;
    let failure = (closed != rec || closed != gen)
        .then(|| "closed form, recursion and generating function disagree".to_string());
    Ok(result("coefficient-routes", n, failure, "3 routes agree".into()))
}

fn identities(n: usize) -> Result<SuiteResult> {
    let report = kravchuk::verify_identities(n)?;
    let failure = report
        .checks
        .iter()
        .find(|c| !c.passed)
        .map(|c| format!("{} fails: {:?}", c.identity, c.counterexample));
    Ok(result("identities", n, failure, "4 families hold".into()))
}

fn projector_laws(n: usize) -> Result<SuiteResult> {
    let dense: Vec<DenseOperator> = (0..=n)
        .map(|k| build_projector(ProjectorSpec::new(n, k)?)?.to_dense())
        .collect::<Result<_>>()?;
    let mut total = DenseOperator::zeros(n)?;
    for (k, p) in dense.iter().enumerate() {
        if !p.approx_eq(&dense_projector(n, k)?, TOL) {
            return Ok(result("projector-laws", n, Some(format!("P({n},{k}) is not the weight-{k} diagonal")), String::new()));
        }
        if !p.matmul(p)?.approx_eq(p, TOL) {
            return Ok(result("projector-laws", n, Some(format!("P({n},{k}) is not idempotent")), String::new()));
        }
        for (kp, q) in dense.iter().enumerate().skip(k + 1) {
            if p.matmul(q)?.max_abs() > TOL {
                return Ok(result("projector-laws", n, Some(format!("P({n},{k}) P({n},{kp}) != 0")), String::new()));
            }
        }
        total = total.add(p)?;
    }
    let failure = (!total.approx_eq(&DenseOperator::identity(n)?, TOL))
        .then(|| "projectors do not sum to the identity".to_string());
    Ok(result("projector-laws", n, failure, "diagonal, idempotent, orthogonal, complete".into()))
}

fn number_operator(n: usize) -> Result<SuiteResult> {
    let got = build_number_operator(n)?.to_dense()?;
    let want = DenseOperator::diagonal_from(n, |b| Complex64::new(b.count_ones() as f64, 0.0))?;
    let failure = (!got.approx_eq(&want, TOL)).then(|| "N is not diag(popcount)".to_string());
    Ok(result("number-operator", n, failure, "N = sum_k k P(n,k)".into()))
}

fn projection(n: usize, rng: &mut StdRng) -> Result<SuiteResult> {
    let strings: Vec<PauliString> = if n <= EXHAUSTIVE_UP_TO {
        let d = 1u64 << n;
        (0..d)
            .flat_map(|x| (0..d).map(move |z| (x, z)))
            .map(|(x, z)| PauliString::new(n, x, z))
            .collect::<Result<_>>()?
    } else {
        (0..RANDOM_STRINGS)
            .map(|_| {
                let mask = (1u64 << n) - 1;
                PauliString::new(n, rng.gen::<u64>() & mask, rng.gen::<u64>() & mask)
            })
            .collect::<Result<_>>()?
    };
    let tol = if n <= EXHAUSTIVE_UP_TO { TOL } else { TOL_RANDOM };
    let one = Complex64::new(1.0, 0.0);
    let mut checked = 0usize;
    for k in 0..=n {
        let p = dense_projector(n, k)?;
        let spec = ProjectorSpec::new(n, k)?;
        for s in &strings {
            let sym = project_string(spec, s, one)?;
            if sym.keys().any(|key| key.x != s.x_mask()) {
                return Ok(result("projection", n, Some(format!("{s} at k={k}: X-mask changed")), String::new()));
            }
            if s.x_weight() % 2 == 1 && !sym.is_empty() {
                return Ok(result("projection", n, Some(format!("{s} at k={k}: odd X-support not annihilated")), String::new()));
            }
            let want = conjugate_by_diagonal(&s.to_dense()?, &p)?;
            let diff = sym.to_dense()?.max_abs_diff(&want)?;
            if diff > tol {
                return Ok(result("projection", n, Some(format!("{s} at k={k}: deviation {diff:e}")), String::new()));
            }
            checked += 1;
        }
    }
    let scope = if n <= EXHAUSTIVE_UP_TO { "all" } else { "random" };
    Ok(result("projection", n, None, format!("{checked} ({scope}) string/k pairs match P s P")))
}

fn commutation(n: usize, rng: &mut StdRng) -> Result<SuiteResult> {
    let d = 1u64 << n;
    let pairs: Vec<(PauliString, PauliString)> = if n <= 2 {
        let all: Vec<PauliString> = (0..d)
            .flat_map(|x| (0..d).map(move |z| (x, z)))
            .map(|(x, z)| PauliString::new(n, x, z))
            .collect::<Result<_>>()?;
        all.iter().flat_map(|a| all.iter().map(move |b| (*a, *b))).collect()
    } else {
        (0..RANDOM_STRINGS)
            .map(|_| {
                let a = PauliString::new(n, rng.gen::<u64>() % d, rng.gen::<u64>() % d)?;
                let b = PauliString::new(n, rng.gen::<u64>() % d, rng.gen::<u64>() % d)?;
                Ok((a, b))
            })
            .collect::<Result<_>>()?
    };
    for (a, b) in &pairs {
        let (da, db) = (a.to_dense()?, b.to_dense()?);
        let dense_commute = da.commutator(&db)?.max_abs() == 0.0;
        if a.commutes(b)? != dense_commute {
            return Ok(result("commutation", n, Some(format!("{a} vs {b}")), String::new()));
        }
        if !da.matmul(&db)?.approx_eq(&a.multiply(b)?.to_dense()?, 0.0) {
            return Ok(result("commutation", n, Some(format!("product {a} * {b}")), String::new()));
        }
    }
    Ok(result("commutation", n, None, format!("{} pairs match the dense commutator", pairs.len())))
}

/// Runs every suite for `n = 1..=max_n`.
pub fn run_suites(max_n: usize, seed: u64) -> Result<Vec<SuiteResult>> {
    if max_n == 0 {
        return Err(Error::domain("max-n", 0, "at least 1"));
    }
    if max_n > MAX_VERIFY_QUBITS.min(MAX_DENSE_QUBITS) {
        return Err(Error::Resource(format!(
            "dense verification is limited to {MAX_VERIFY_QUBITS} qubits, got {max_n}"
        )));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(kravchuk_agreement(n)?);
        out.push(identities(n)?);
        out.push(projector_laws(n)?);
        out.push(number_operator(n)?);
        out.push(projection(n, &mut rng)?);
        out.push(commutation(n, &mut rng)?);
    }
    Ok(out)
}
