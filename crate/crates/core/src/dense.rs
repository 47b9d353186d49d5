//! Dense `2^n x 2^n` complex matrices for brute-force verification.
//!
//! Row and column indices are computational basis bitstrings read as
//! integers, qubit 0 being the least-significant bit. Nothing in the main
//! construction paths depends on this module; it exists so that the
//! symbolic results can be checked against plain linear algebra.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::{PauliKey, PauliSum};

/// Largest qubit count for which a dense matrix may be allocated.
pub const MAX_DENSE_QUBITS: usize = 12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// The 2x2 matrix of a single-qubit Pauli letter, row-major.
pub fn single_qubit_matrix(letter: char) -> [[Complex64; 2]; 2] {
    match letter {
        'I' => [[ONE, ZERO], [ZERO, ONE]],
        'X' => [[ZERO, ONE], [ONE, ZERO]],
        'Y' => [[ZERO, -I], [I, ZERO]],
        'Z' => [[ONE, ZERO], [ZERO, -ONE]],
        _ => panic!("not a Pauli letter: {letter}"),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator {
    n: usize,
    dim: usize,
    data: Vec<Complex64>,
}

impl DenseOperator {
    pub fn zeros(n: usize) -> Result<Self> {
        if n > MAX_DENSE_QUBITS {
            return Err(Error::Resource(format!(
                "dense matrices are limited to {MAX_DENSE_QUBITS} qubits, got {n}"
            )));
        }
        let dim = 1usize << n;
        Ok(Self {
            n,
            dim,
            data: vec![ZERO; dim * dim],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n)?;
        for i in 0..m.dim {
            m.set(i, i, ONE);
        }
        Ok(m)
    }

    /// Diagonal matrix with entries `f(basis_index)`.
    pub fn diagonal_from(n: usize, f: impl Fn(usize) -> Complex64) -> Result<Self> {
        let mut m = Self::zeros(n)?;
        for i in 0..m.dim {
            m.set(i, i, f(i));
        }
        Ok(m)
    }

    /// A 2x2 matrix viewed as a one-qubit operator.
    pub fn from_2x2(m: [[Complex64; 2]; 2]) -> Self {
        Self {
            n: 1,
            dim: 2,
            data: vec![m[0][0], m[0][1], m[1][0], m[1][1]],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Complex64) {
        self.data[row * self.dim + col] = v;
    }

    /// Kronecker product `self (x) other`; `self` acts on the high qubits.
    pub fn kron(&self, other: &DenseOperator) -> Result<DenseOperator> {
        let mut out = Self::zeros(self.n + other.n)?;
        for r1 in 0..self.dim {
            for c1 in 0..self.dim {
                let a = self.get(r1, c1);
                if a == ZERO {
                    continue;
                }
                for r2 in 0..other.dim {
                    for c2 in 0..other.dim {
                        out.set(r1 * other.dim + r2, c1 * other.dim + c2, a * other.get(r2, c2));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Full Kronecker product of the letters of `label`, leftmost letter first.
    pub fn kron_of_letters(label: &str) -> Result<DenseOperator> {
        let mut letters = label.chars();
        let first = letters
            .next()
            .ok_or_else(|| Error::PauliSyntax("empty string".into()))?;
        let mut acc = Self::from_2x2(single_qubit_matrix(first));
        for c in letters {
            acc = acc.kron(&Self::from_2x2(single_qubit_matrix(c)))?;
        }
        Ok(acc)
    }

    /// Sum of `c_t * (sigma_{n-1} (x) ... (x) sigma_0)` over the terms.
    ///
    /// Each Kronecker product has one nonzero per column, at row
    /// `col ^ x_mask`; its value is the product of the per-qubit matrix
    /// entries, so the product is evaluated entrywise instead of being
    /// materialised.
    pub fn from_pauli_sum(sum: &PauliSum) -> Result<DenseOperator> {
        let n = sum.n();
        let mut out = Self::zeros(n)?;
        let letters: Vec<(PauliKey, Complex64, Vec<[[Complex64; 2]; 2]>)> = sum
            .iter()
            .map(|(k, c)| {
                let mats = (0..n)
                    .map(|q| {
                        let ch = match (k.x >> q & 1, k.z >> q & 1) {
                            (0, 0) => 'I',
                            (1, 0) => 'X',
                            (1, 1) => 'Y',
                            _ => 'Z',
                        };
                        single_qubit_matrix(ch)
                    })
                    .collect();
                (*k, *c, mats)
            })
            .collect();
        for (key, c, mats) in &letters {
            for col in 0..out.dim {
                let row = col ^ key.x as usize;
                let mut v = *c;
                for (q, m) in mats.iter().enumerate() {
                    v *= m[row >> q & 1][col >> q & 1];
                }
                let idx = row * out.dim + col;
                out.data[idx] += v;
            }
        }
        Ok(out)
    }

    fn check_same(&self, other: &DenseOperator) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn matmul(&self, other: &DenseOperator) -> Result<DenseOperator> {
        self.check_same(other)?;
        let d = self.dim;
        let mut out = Self::zeros(self.n)?;
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == ZERO {
                    continue;
                }
                let row = &other.data[k * d..(k + 1) * d];
                let dst = &mut out.data[i * d..(i + 1) * d];
                for (o, b) in dst.iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &DenseOperator) -> Result<DenseOperator> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (o, b) in out.data.iter_mut().zip(&other.data) {
            *o += b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &DenseOperator) -> Result<DenseOperator> {
        self.add(&other.scale(-ONE))
    }

    pub fn scale(&self, c: Complex64) -> DenseOperator {
        DenseOperator {
            n: self.n,
            dim: self.dim,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &DenseOperator) -> Result<DenseOperator> {
        self.matmul(other)?.sub(&other.matmul(self)?)
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &DenseOperator) -> Result<f64> {
        self.check_same(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &DenseOperator, tol: f64) -> bool {
        self.max_abs_diff(other).map(|d| d <= tol).unwrap_or(false)
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        (0..self.dim).all(|r| (0..self.dim).all(|c| r == c || self.get(r, c).norm() <= tol))
    }

    /// `P * self * P`
    pub fn conjugate_by(&self, p: &DenseOperator) -> Result<DenseOperator> {
        p.matmul(self)?.matmul(p)
    }

    /// Pauli coefficients `Tr(sigma * self) / 2^n` of every string, dropping
    /// those with magnitude at most `tol`.
    pub fn pauli_decompose(&self, tol: f64) -> Result<PauliSum> {
        let n = self.n;
        let mut out = PauliSum::new(n)?;
        let d = self.dim;
        for x in 0..d as u64 {
            for z in 0..d as u64 {
                // Tr(sigma M) = sum_col sigma[col][col ^ x] * M[col ^ x][col]
                let mut tr = ZERO;
                for col in 0..d {
                    let row = col ^ x as usize;
                    let m = self.get(row, col);
                    if m == ZERO {
                        continue;
                    }
                    let mut s = ONE;
                    for q in 0..n {
                        let ch = match (x >> q & 1, z >> q & 1) {
                            (0, 0) => 'I',
                            (1, 0) => 'X',
                            (1, 1) => 'Y',
                            _ => 'Z',
                        };
                        s *= single_qubit_matrix(ch)[col >> q & 1][row >> q & 1];
                    }
                    tr += s * m;
                }
                let c = tr / d as f64;
                if c.norm() > tol {
                    out.add_key(PauliKey::new(x, z), c);
                }
            }
        }
        Ok(out)
    }
}
