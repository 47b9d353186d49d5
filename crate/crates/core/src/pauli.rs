//! Pauli strings in symplectic form and weighted sums of them.
//!
//! A [`PauliString`] on `n <= 64` qubits is a pair of bitmasks plus a power of
//! `i`: qubit `q` carries `X` when only bit `q` of `x_mask` is set, `Z` when
//! only bit `q` of `z_mask` is set and `Y` when both are. The phase is
//! relative to the named letters, so `(x, z, p)` denotes `i^p * sigma(x, z)`.
//!
//! Printed strings put qubit `n - 1` first and qubit 0 last; qubit 0 is also
//! the least-significant bit of a computational basis index.

use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dense::DenseOperator;
use crate::error::{Error, Result};

/// Maximum qubit count representable by the `u64` masks.
pub const MAX_QUBITS: usize = 64;

/// Default threshold below which [`PauliSum::simplify`] drops coefficients.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// `i^p` for `p` taken mod 4.
pub fn i_pow(p: u8) -> Complex64 {
    match p % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Phase-free identity of a Pauli string: its two masks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PauliKey {
    pub x: u64,
    pub z: u64,
}

impl PauliKey {
    pub const IDENTITY: PauliKey = PauliKey { x: 0, z: 0 };

    pub fn new(x: u64, z: u64) -> Self {
        Self { x, z }
    }

    /// Ordering used to break ties between equal magnitudes: `(z_mask, x_mask)`.
    pub fn tie_break(&self) -> (u64, u64) {
        (self.z, self.x)
    }

    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    /// True when every factor is `I` or `Z`.
    pub fn is_diagonal(&self) -> bool {
        self.x == 0
    }

    /// Number of non-identity factors.
    pub fn weight(&self) -> u32 {
        (self.x | self.z).count_ones()
    }

    pub fn commutes(&self, other: &PauliKey) -> bool {
        ((self.x & other.z) ^ (self.z & other.x)).count_ones().is_multiple_of(2)
    }

    pub fn qubitwise_commutes(&self, other: &PauliKey) -> bool {
        let shared = (self.x | self.z) & (other.x | other.z);
        (self.x ^ other.x) & shared == 0 && (self.z ^ other.z) & shared == 0
    }

    pub fn to_string(&self, n: usize) -> String {
        (0..n)
            .rev()
            .map(|q| letter(self.x >> q & 1 == 1, self.z >> q & 1 == 1))
            .collect()
    }
}

fn letter(x: bool, z: bool) -> char {
    match (x, z) {
        (false, false) => 'I',
        (true, false) => 'X',
        (true, true) => 'Y',
        (false, true) => 'Z',
    }
}

/// Tensor product of single-qubit Paulis with a global phase `i^phase_exp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    x: u64,
    z: u64,
    phase: u8,
}

impl PauliString {
    pub fn new(n: usize, x_mask: u64, z_mask: u64) -> Result<Self> {
        Self::with_phase(n, x_mask, z_mask, 0)
    }

    pub fn with_phase(n: usize, x_mask: u64, z_mask: u64, phase_exp: u8) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::domain("n", n as i128, format!("1 <= n <= {MAX_QUBITS}")));
        }
        let outside = !full_mask(n);
        if (x_mask | z_mask) & outside != 0 {
            return Err(Error::domain(
                "mask",
                ((x_mask | z_mask) & outside) as i128,
                format!("bits below {n}"),
            ));
        }
        Ok(Self {
            n,
            x: x_mask,
            z: z_mask,
            phase: phase_exp % 4,
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, 0, 0)
    }

    pub fn from_key(n: usize, key: PauliKey) -> Result<Self> {
        Self::new(n, key.x, key.z)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_mask(&self) -> u64 {
        self.x
    }

    pub fn z_mask(&self) -> u64 {
        self.z
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase
    }

    pub fn key(&self) -> PauliKey {
        PauliKey::new(self.x, self.z)
    }

    /// The scalar `i^phase_exp`.
    pub fn phase(&self) -> Complex64 {
        i_pow(self.phase)
    }

    /// Number of qubits carrying `X` or `Y`.
    pub fn x_weight(&self) -> u32 {
        self.x.count_ones()
    }

    pub fn weight(&self) -> u32 {
        self.key().weight()
    }

    /// Single-qubit factor on qubit `q`.
    pub fn letter(&self, q: usize) -> char {
        letter(self.x >> q & 1 == 1, self.z >> q & 1 == 1)
    }

    fn check_same_n(&self, other: &PauliString) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Operator product `self * other`, phase included.
    pub fn multiply(&self, other: &PauliString) -> Result<PauliString> {
        self.check_same_n(other)?;
        let x = self.x ^ other.x;
        let z = self.z ^ other.z;
        // Write sigma(x, z) = i^{|x & z|} X^x Z^z, move Z^{z1} past X^{x2}
        // (a sign per overlap), then re-express X^x Z^z in letters.
        let exp = self.phase as u32
            + other.phase as u32
            + (self.x & self.z).count_ones()
            + (other.x & other.z).count_ones()
            + 2 * (self.z & other.x).count_ones()
            + 3 * (x & z).count_ones();
        Ok(PauliString {
            n: self.n,
            x,
            z,
            phase: (exp % 4) as u8,
        })
    }

    pub fn commutes(&self, other: &PauliString) -> Result<bool> {
        self.check_same_n(other)?;
        Ok(self.key().commutes(&other.key()))
    }

    pub fn qubitwise_commutes(&self, other: &PauliString) -> Result<bool> {
        self.check_same_n(other)?;
        Ok(self.key().qubitwise_commutes(&other.key()))
    }

    /// Moves the factor on qubit `q` to qubit `perm[q]`.
    pub fn permute(&self, perm: &[usize]) -> Result<PauliString> {
        let mut x = 0;
        let mut z = 0;
        for (q, &target) in perm.iter().enumerate().take(self.n) {
            if target >= self.n {
                return Err(Error::domain("permutation target", target as i128, format!("< {}", self.n)));
            }
            x |= (self.x >> q & 1) << target;
            z |= (self.z >> q & 1) << target;
        }
        PauliString::with_phase(self.n, x, z, self.phase)
    }

    pub fn to_dense(&self) -> Result<DenseOperator> {
        let mut sum = PauliSum::new(self.n)?;
        sum.add_string(self, Complex64::new(1.0, 0.0));
        sum.to_dense()
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::PauliSyntax("empty string".into()));
        }
        let chars: Vec<char> = text.chars().collect();
        let n = chars.len();
        if n > MAX_QUBITS {
            return Err(Error::PauliSyntax(format!(
                "{n} characters exceeds the {MAX_QUBITS}-qubit limit"
            )));
        }
        let mut bad = Vec::new();
        let (mut x, mut z) = (0u64, 0u64);
        for (pos, c) in chars.iter().enumerate() {
            let q = n - 1 - pos;
            match c {
                'I' => {}
                'X' => x |= 1 << q,
                'Y' => {
                    x |= 1 << q;
                    z |= 1 << q;
                }
                'Z' => z |= 1 << q,
                other => bad.push(format!("'{other}' at position {pos}")),
            }
        }
        if !bad.is_empty() {
            return Err(Error::PauliSyntax(format!(
                "invalid character {}",
                bad.join(", ")
            )));
        }
        PauliString::new(n, x, z)
    }
}

/// Prints the letters only; the phase is not part of the text form.
impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key().to_string(self.n))
    }
}

pub fn parse_string(text: &str) -> Result<PauliString> {
    text.parse()
}

pub fn format_string(s: &PauliString) -> String {
    s.to_string()
}

/// Finite linear combination of Pauli strings with complex coefficients.
///
/// Terms keep their insertion order; equality of two sums should be tested
/// with [`PauliSum::approx_eq`], which ignores order.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliSum {
    n: usize,
    terms: IndexMap<PauliKey, Complex64>,
}

impl PauliSum {
    /// The zero operator on `n` qubits.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::domain("n", n as i128, format!("1 <= n <= {MAX_QUBITS}")));
        }
        Ok(Self {
            n,
            terms: IndexMap::new(),
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut s = Self::new(n)?;
        s.add_key(PauliKey::IDENTITY, Complex64::new(1.0, 0.0));
        Ok(s)
    }

    /// Builds a sum from `(coefficient, string)` pairs, merging repeats.
    pub fn from_terms<'a>(
        n: usize,
        terms: impl IntoIterator<Item = (Complex64, &'a PauliString)>,
    ) -> Result<Self> {
        let mut s = Self::new(n)?;
        for (c, p) in terms {
            if p.n() != n {
                return Err(Error::Dimension {
                    left: n,
                    right: p.n(),
                });
            }
            s.add_string(p, c);
        }
        Ok(s)
    }

    /// Parses `(coefficient, "XYZ..")` pairs.
    pub fn from_labels<S: AsRef<str>>(terms: &[(f64, S)]) -> Result<Self> {
        let first = terms
            .first()
            .ok_or_else(|| Error::Empty("no terms given".into()))?;
        let n = first.1.as_ref().len();
        let mut s = Self::new(n)?;
        for (c, label) in terms {
            let p: PauliString = label.as_ref().parse()?;
            if p.n() != n {
                return Err(Error::Dimension {
                    left: n,
                    right: p.n(),
                });
            }
            s.add_string(&p, Complex64::new(*c, 0.0));
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in insertion order.
    pub fn iter(&self) -> impl Iterator<Item = (&PauliKey, &Complex64)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &PauliKey> {
        self.terms.keys()
    }

    pub fn contains(&self, key: &PauliKey) -> bool {
        self.terms.contains_key(key)
    }

    pub fn coefficient(&self, key: &PauliKey) -> Complex64 {
        self.terms.get(key).copied().unwrap_or_default()
    }

    pub fn coefficient_of(&self, label: &str) -> Result<Complex64> {
        let p: PauliString = label.parse()?;
        Ok(self.coefficient(&p.key()))
    }

    /// Adds `c * i^phase * sigma` into the sum.
    pub fn add_string(&mut self, p: &PauliString, c: Complex64) {
        debug_assert_eq!(p.n(), self.n);
        self.add_key(p.key(), c * p.phase());
    }

    pub fn add_key(&mut self, key: PauliKey, c: Complex64) {
        *self.terms.entry(key).or_default() += c;
    }

    fn check_same_n(&self, other: &PauliSum) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &PauliSum) -> Result<PauliSum> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_key(*k, *c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: Complex64) -> PauliSum {
        PauliSum {
            n: self.n,
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Drops every term whose coefficient magnitude is at most `tol`.
    pub fn simplify(&self, tol: f64) -> PauliSum {
        PauliSum {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| c.norm() > tol)
                .map(|(k, c)| (*k, *c))
                .collect(),
        }
    }

    /// Operator product, expanded term by term.
    pub fn multiply(&self, other: &PauliSum) -> Result<PauliSum> {
        self.check_same_n(other)?;
        let mut out = PauliSum::new(self.n)?;
        for (ka, ca) in self.iter() {
            let a = PauliString::from_key(self.n, *ka)?;
            for (kb, cb) in other.iter() {
                let b = PauliString::from_key(self.n, *kb)?;
                out.add_string(&a.multiply(&b)?, ca * cb);
            }
        }
        Ok(out)
    }

    /// Order-insensitive comparison; missing terms count as zero.
    pub fn approx_eq(&self, other: &PauliSum, tol: f64) -> bool {
        self.n == other.n
            && self
                .iter()
                .all(|(k, c)| (c - other.coefficient(k)).norm() <= tol)
            && other
                .iter()
                .all(|(k, c)| (c - self.coefficient(k)).norm() <= tol)
    }

    /// Hermitian in the Pauli basis means every coefficient is real.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.terms.values().all(|c| c.im.abs() <= tol)
    }

    /// Terms sorted by descending magnitude, ties by `(z_mask, x_mask)`.
    pub fn sorted_terms(&self) -> Vec<(PauliKey, Complex64)> {
        let mut v: Vec<(PauliKey, Complex64)> =
            self.terms.iter().map(|(k, c)| (*k, *c)).collect();
        v.sort_by(|a, b| {
            b.1.norm()
                .total_cmp(&a.1.norm())
                .then_with(|| a.0.tie_break().cmp(&b.0.tie_break()))
        });
        v
    }

    pub fn label(&self, key: &PauliKey) -> String {
        key.to_string(self.n)
    }

    /// Relabels qubit `q` as `perm[q]` in every term.
    pub fn permute(&self, perm: &[usize]) -> Result<PauliSum> {
        let mut out = PauliSum::new(self.n)?;
        for (k, c) in self.iter() {
            let p = PauliString::from_key(self.n, *k)?.permute(perm)?;
            out.add_string(&p, *c);
        }
        Ok(out)
    }

    pub fn to_dense(&self) -> Result<DenseOperator> {
        DenseOperator::from_pauli_sum(self)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let doc = JsonSum {
            qubits: self.n,
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(k, c)| JsonTerm {
                    string: k.to_string(self.n),
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("plain data serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<PauliSum> {
        let doc: JsonSum = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        let mut sum = PauliSum::new(doc.qubits)?;
        for (i, t) in doc.terms.iter().enumerate() {
            let p: PauliString = t.string.parse()?;
            if p.n() != doc.qubits {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!(
                        "term {} has {} qubits, expected {}",
                        t.string,
                        p.n(),
                        doc.qubits
                    ),
                });
            }
            sum.add_string(&p, Complex64::new(t.re, t.im));
        }
        Ok(sum)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonSum {
    qubits: usize,
    terms: Vec<JsonTerm>,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    string: String,
    re: f64,
    #[serde(default)]
    im: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn parse_encodes_rightmost_as_qubit_zero() {
        let s = p("IZZ");
        assert_eq!((s.z_mask(), s.x_mask()), (0b011, 0));
        assert_eq!(p("ZIZ").z_mask(), 0b101);
        let y = p("YX");
        assert_eq!((y.x_mask(), y.z_mask()), (0b11, 0b10));
        assert_eq!(y.to_string(), "YX");
    }

    #[test]
    fn parse_reports_every_bad_position() {
        let err = "AXB".parse::<PauliString>().unwrap_err().to_string();
        assert!(err.contains("position 0") && err.contains("position 2"), "{err}");
        assert!("".parse::<PauliString>().is_err());
    }

    #[test]
    fn x_times_z_is_minus_i_y() {
        let r = p("X").multiply(&p("Z")).unwrap();
        assert_eq!((r.x_mask(), r.z_mask(), r.phase_exp()), (1, 1, 3));
        let zz = p("Z").multiply(&p("Z")).unwrap();
        assert_eq!((zz.x_mask(), zz.z_mask(), zz.phase_exp()), (0, 0, 0));
        let yy = p("Y").multiply(&p("Y")).unwrap();
        assert_eq!(yy.phase_exp(), 0);
        // XY = iZ
        let xy = p("X").multiply(&p("Y")).unwrap();
        assert_eq!((xy.key(), xy.phase_exp()), (p("Z").key(), 1));
    }

    #[test]
    fn commutation_examples() {
        assert!(!p("X").commutes(&p("Z")).unwrap());
        assert!(p("XX").commutes(&p("ZZ")).unwrap());
        assert!(p("XI").qubitwise_commutes(&p("IX")).unwrap());
        assert!(!p("XX").qubitwise_commutes(&p("YY")).unwrap());
        assert!(p("XX").commutes(&p("YY")).unwrap());
        assert!(matches!(p("X").commutes(&p("XX")), Err(Error::Dimension { .. })));
    }

    #[test]
    fn additive_inverse_simplifies_to_zero() {
        let a = PauliSum::from_labels(&[(0.5, "XZ"), (-1.25, "YY")]).unwrap();
        let z = a.add(&a.scale(Complex64::new(-1.0, 0.0))).unwrap().simplify(0.0);
        assert!(z.is_empty());
        let two = PauliSum::identity(2).unwrap().scale(Complex64::new(2.5, 0.0));
        assert_eq!(two.len(), 1);
        assert_eq!(two.coefficient(&PauliKey::IDENTITY), Complex64::new(2.5, 0.0));
    }

    #[test]
    fn eight_terms_merge_into_projector() {
        let terms = [
            (0.375, "III"),
            (0.125, "IIZ"),
            (0.125, "IZI"),
            (0.125, "ZII"),
            (-0.125, "IZZ"),
            (-0.125, "ZIZ"),
            (-0.125, "ZZI"),
            (-0.375, "ZZZ"),
        ];
        let mut acc = PauliSum::new(3).unwrap();
        for t in terms {
            acc = acc.add(&PauliSum::from_labels(&[t]).unwrap()).unwrap();
        }
        let stored = crate::projector::build_projector(crate::projector::ProjectorSpec::new(3, 1).unwrap()).unwrap();
        assert!(acc.approx_eq(&stored, 0.0));
    }

    #[test]
    fn json_round_trip() {
        let mut a = PauliSum::from_labels(&[(0.5, "XZ"), (-1.25, "YY")]).unwrap();
        a.add_key(PauliKey::new(0, 1), Complex64::new(0.1, -0.3));
        let back = PauliSum::from_json(&a.to_json()).unwrap();
        assert!(back.approx_eq(&a, 0.0));
    }

    #[test]
    fn masks_must_fit() {
        assert!(PauliString::new(2, 0b100, 0).is_err());
        assert!(PauliString::new(64, u64::MAX, u64::MAX).is_ok());
        assert!(PauliSum::new(0).is_err());
    }
}
