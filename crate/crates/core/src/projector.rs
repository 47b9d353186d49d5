//! Particle-number projectors `P(n, k)` and projection of Pauli operators.
//!
//! `P(n, k)` fixes the computational basis states of Hamming weight `k` and
//! annihilates the rest. In the Pauli basis it is a sum over all `Z` strings,
//! each weighted by `C(n, k, m) / 2^n` with `m` the number of `Z` factors.
//!
//! Conjugating a Pauli string `s` by the projector never needs the full
//! expansion of `P(n, k)`: `s` flips exactly the qubits in its X-support `S`,
//! so `P s P` is nonzero only when `|S|` is even and then equals `s * D`,
//! where `D` projects onto basis states with `|S| / 2` ones inside `S` and
//! `k - |S| / 2` ones outside. `D` factorises into two smaller projectors on
//! `S` and its complement.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kravchuk::{self, binomial};
use crate::pauli::{full_mask, PauliKey, PauliString, PauliSum, DEFAULT_TOLERANCE, MAX_QUBITS};

/// Largest `n` for which [`build_projector`] expands all `2^n` terms.
pub const MAX_EXPANDED_QUBITS: usize = 24;

/// Largest number of terms a single [`project_string`] call may generate.
pub const MAX_GENERATED_TERMS: u128 = 1 << 26;

/// Exact dyadic rational `numerator / 2^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dyadic {
    pub numerator: i128,
    pub exponent: u32,
}

impl Dyadic {
    pub fn new(numerator: i128, exponent: u32) -> Self {
        Self { numerator, exponent }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator == 0
    }

    /// Exact for `|numerator| < 2^53`.
    pub fn to_f64(&self) -> f64 {
        self.numerator as f64 * (-(self.exponent as f64)).exp2()
    }

    /// Lowest terms: odd numerator or zero exponent.
    pub fn reduced(&self) -> Self {
        if self.numerator == 0 {
            return Self::new(0, 0);
        }
        let shift = self.numerator.trailing_zeros().min(self.exponent);
        Self::new(self.numerator >> shift, self.exponent - shift)
    }
}

/// Number of qubits `n` and target Hamming weight `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectorSpec {
    n: usize,
    k: usize,
}

impl ProjectorSpec {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::domain("n", n as i128, format!("1 <= n <= {MAX_QUBITS}")));
        }
        if k > n {
            return Err(Error::domain("k", k as i128, format!("0 <= k <= n = {n}")));
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// Exact Pauli expansion of `P(n, k)` as `(z_mask, coefficient)` pairs in
/// ascending mask order, zero coefficients omitted.
pub fn projector_terms(spec: ProjectorSpec) -> Result<Vec<(u64, Dyadic)>> {
    let n = spec.n;
    if n > MAX_EXPANDED_QUBITS {
        return Err(Error::Resource(format!(
            "P({n}, {}) has 2^{n} terms; the limit is {MAX_EXPANDED_QUBITS} qubits. \
             Use project_string / project_operator, which never expand the projector",
            spec.k
        )));
    }
    let column: Vec<i128> = (0..=n)
        .map(|m| kravchuk::coefficient(n, spec.k, m))
        .collect::<Result<_>>()?;
    Ok((0..1u64 << n)
        .filter_map(|mask| {
            let c = column[mask.count_ones() as usize];
            (c != 0).then(|| (mask, Dyadic::new(c, n as u32)))
        })
        .collect())
}

/// `P(n, k)` as a sum of `Z` strings.
pub fn build_projector(spec: ProjectorSpec) -> Result<PauliSum> {
    let mut sum = PauliSum::new(spec.n)?;
    for (mask, c) in projector_terms(spec)? {
        sum.add_key(PauliKey::new(0, mask), Complex64::new(c.to_f64(), 0.0));
    }
    Ok(sum)
}

/// Number of nonzero terms of `P(n, k)` without building it:
/// `sum_m [C(n,k,m) != 0] binom(n, m)`.
pub fn projector_term_count(spec: ProjectorSpec) -> Result<u128> {
    nonzero_subset_count(spec.n, spec.k)
}

fn nonzero_subset_count(n: usize, k: usize) -> Result<u128> {
    let mut total: u128 = 0;
    for m in 0..=n {
        if kravchuk::closed_form(n, k, m)? != 0 {
            total += binomial(n as i64, m as i64)? as u128;
        }
    }
    Ok(total)
}

/// Number operator `(n - sum_q Z_q) / 2`.
pub fn build_number_operator(n: usize) -> Result<PauliSum> {
    if n == 0 || n > MAX_EXPANDED_QUBITS {
        return Err(Error::domain(
            "n",
            n as i128,
            format!("1 <= n <= {MAX_EXPANDED_QUBITS}"),
        ));
    }
    let mut sum = PauliSum::new(n)?;
    sum.add_key(PauliKey::IDENTITY, Complex64::new(n as f64 / 2.0, 0.0));
    for q in 0..n {
        sum.add_key(PauliKey::new(0, 1 << q), Complex64::new(-0.5, 0.0));
    }
    Ok(sum)
}

/// Visits each subset of `mask` (including the empty set) with its size.
fn for_each_subset(mask: u64, mut f: impl FnMut(u64)) {
    let mut sub = mask;
    loop {
        f(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
}

/// `coeff * P s P` without expanding `P`.
pub fn project_string(spec: ProjectorSpec, s: &PauliString, coeff: Complex64) -> Result<PauliSum> {
    let n = spec.n;
    if s.n() != n {
        return Err(Error::Dimension {
            left: n,
            right: s.n(),
        });
    }
    let mut out = PauliSum::new(n)?;
    let support = s.x_mask();
    let flips = support.count_ones() as usize;
    if flips % 2 == 1 {
        return Ok(out);
    }
    let inside = flips / 2;
    let rest = n - flips;
    if spec.k < inside || spec.k - inside > rest {
        return Ok(out);
    }
    let outside = spec.k - inside;

    let generated = nonzero_subset_count(flips, inside)? * nonzero_subset_count(rest, outside)?;
    if generated > MAX_GENERATED_TERMS {
        return Err(Error::Resource(format!(
            "projecting {s} onto k = {} generates {generated} terms (limit {MAX_GENERATED_TERMS}); \
             use the dense route for small n",
            spec.k
        )));
    }

    let in_coeffs: Vec<i128> = (0..=flips)
        .map(|a| kravchuk::closed_form(flips, inside, a))
        .collect::<Result<_>>()?;
    let out_coeffs: Vec<i128> = (0..=rest)
        .map(|b| kravchuk::closed_form(rest, outside, b))
        .collect::<Result<_>>()?;
    let complement = full_mask(n) & !support;
    let scale = (-(n as f64)).exp2();

    // Collect the nonzero outer subsets once; they are reused for every inner one.
    let mut outer: Vec<(u64, i128)> = Vec::new();
    for_each_subset(complement, |b| {
        let c = out_coeffs[b.count_ones() as usize];
        if c != 0 {
            outer.push((b, c));
        }
    });
    outer.reverse();

    let mut inner: Vec<(u64, i128)> = Vec::new();
    for_each_subset(support, |a| {
        let c = in_coeffs[a.count_ones() as usize];
        if c != 0 {
            inner.push((a, c));
        }
    });
    inner.reverse();

    for &(a, ca) in &inner {
        for &(b, cb) in &outer {
            let z = PauliString::new(n, 0, a | b)?;
            let term = s.multiply(&z)?;
            let weight = (ca * cb) as f64 * scale;
            out.add_string(&term, coeff * weight);
        }
    }
    Ok(out)
}

/// `P M P` with terms below [`DEFAULT_TOLERANCE`] pruned.
pub fn project_operator(spec: ProjectorSpec, m: &PauliSum) -> Result<PauliSum> {
    project_operator_with_tolerance(spec, m, DEFAULT_TOLERANCE)
}

/// `P M P`, projecting terms independently (in parallel) and merging them in
/// the input's term order, then dropping coefficients with magnitude `<= tol`.
pub fn project_operator_with_tolerance(spec: ProjectorSpec, m: &PauliSum, tol: f64) -> Result<PauliSum> {
    if m.n() != spec.n {
        return Err(Error::Dimension {
            left: spec.n,
            right: m.n(),
        });
    }
    let terms: Vec<(PauliKey, Complex64)> = m.iter().map(|(k, c)| (*k, *c)).collect();
    let parts = terms
        .par_iter()
        .map(|(key, c)| project_string(spec, &PauliString::from_key(spec.n, *key)?, *c))
        .collect::<Result<Vec<PauliSum>>>()?;
    let mut merged = PauliSum::new(spec.n)?;
    for part in &parts {
        for (k, c) in part.iter() {
            merged.add_key(*k, *c);
        }
    }
    Ok(merged.simplify(tol))
}
