//! Brute-force reference: dense `2^n × 2^n` unitaries.
//!
//! Nothing here shares code with the tableau engine. Gates (including the
//! composite kinds, which are *not* lowered) are applied to the rows of the
//! matrix directly. Qubit 0 is the most significant bit of a basis-state
//! index, so `|q_0 q_1 … q_{n-1}⟩` reads left to right like the tensor
//! product.

use num_complex::Complex64 as C64;

use crate::circuit::{Circuit, Gate, GateKind};
use crate::pauli::{Pauli, PauliString, Phase, PhasedPauli};

/// Widest circuit the oracle accepts (a 256 × 256 matrix).
pub const MAX_ORACLE_QUBITS: usize = 8;

/// Absolute max-norm tolerance for matrix comparisons.
pub const ORACLE_TOLERANCE: f64 = 1e-9;

/// Minimum modulus of the entry used to fix the global phase.
const PIVOT_THRESHOLD: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("{n} qubits exceeds the oracle limit of {MAX_ORACLE_QUBITS}")]
    TooWide { n: usize },
    #[error("width mismatch: {left} vs {right} qubits")]
    WidthMismatch { left: usize, right: usize },
    #[error("oracle needs at least one qubit")]
    ZeroWidth,
    #[error("conjugated operator is not a phased Pauli string")]
    NotPauli,
}

fn check_width(n: usize) -> Result<(), OracleError> {
    match n {
        0 => Err(OracleError::ZeroWidth),
        n if n > MAX_ORACLE_QUBITS => Err(OracleError::TooWide { n }),
        _ => Ok(()),
    }
}

/// A dense square matrix on `n` qubits, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseUnitary {
    n: usize,
    dim: usize,
    entries: Vec<C64>,
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn single_qubit_matrix(kind: GateKind) -> [[C64; 2]; 2] {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    match kind {
        GateKind::H => [[c(r, 0.0), c(r, 0.0)], [c(r, 0.0), c(-r, 0.0)]],
        GateKind::S => [[l, o], [o, i]],
        GateKind::Sdg => [[l, o], [o, -i]],
        GateKind::X => [[o, l], [l, o]],
        GateKind::Y => [[o, -i], [i, o]],
        GateKind::Z => [[l, o], [o, -l]],
        _ => unreachable!("{kind:?} is not a single-qubit gate"),
    }
}

impl DenseUnitary {
    pub fn identity(n: usize) -> Result<Self, OracleError> {
        check_width(n)?;
        let dim = 1usize << n;
        let mut entries = vec![C64::default(); dim * dim];
        for k in 0..dim {
            entries[k * dim + k] = c(1.0, 0.0);
        }
        Ok(DenseUnitary { n, dim, entries })
    }

    /// Matrix of a Pauli string, sign included.
    pub fn pauli(p: &PauliString) -> Result<Self, OracleError> {
        let n = p.num_qubits();
        check_width(n)?;
        let dim = 1usize << n;
        let mut entries = vec![C64::default(); dim * dim];
        let sign = if p.is_negative() { -1.0 } else { 1.0 };
        for col in 0..dim {
            let mut row = col;
            let mut coeff = c(sign, 0.0);
            for q in 0..n {
                let bit = 1usize << (n - 1 - q);
                let one = col & bit != 0;
                match p.get(q) {
                    Pauli::I => {}
                    Pauli::X => row ^= bit,
                    Pauli::Z => {
                        if one {
                            coeff = -coeff;
                        }
                    }
                    Pauli::Y => {
                        row ^= bit;
                        // Y|0⟩ = i|1⟩, Y|1⟩ = -i|0⟩
                        coeff *= if one { c(0.0, -1.0) } else { c(0.0, 1.0) };
                    }
                }
            }
            entries[row * dim + col] = coeff;
        }
        Ok(DenseUnitary { n, dim, entries })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.entries[row * self.dim + col]
    }

    fn bit(&self, q: usize) -> usize {
        1usize << (self.n - 1 - q)
    }

    /// Left-multiplies by `gate` embedded on its qubits.
    pub fn apply_gate(&mut self, gate: &Gate) {
        let q = gate.qubits();
        let dim = self.dim;
        match gate.kind() {
            GateKind::Cnot => {
                let (cb, tb) = (self.bit(q[0] as usize), self.bit(q[1] as usize));
                for r in (0..dim).filter(|r| r & cb != 0 && r & tb == 0) {
                    self.swap_rows(r, r | tb);
                }
            }
            GateKind::Cz => {
                let (ab, bb) = (self.bit(q[0] as usize), self.bit(q[1] as usize));
                for r in (0..dim).filter(|r| r & ab != 0 && r & bb != 0) {
                    for v in &mut self.entries[r * dim..(r + 1) * dim] {
                        *v = -*v;
                    }
                }
            }
            GateKind::Swap => {
                let (ab, bb) = (self.bit(q[0] as usize), self.bit(q[1] as usize));
                for r in (0..dim).filter(|r| r & ab != 0 && r & bb == 0) {
                    self.swap_rows(r, (r ^ ab) | bb);
                }
            }
            kind => {
                let m = single_qubit_matrix(kind);
                let b = self.bit(q[0] as usize);
                for r0 in (0..dim).filter(|r| r & b == 0) {
                    let r1 = r0 | b;
                    for k in 0..dim {
                        let a0 = self.entries[r0 * dim + k];
                        let a1 = self.entries[r1 * dim + k];
                        self.entries[r0 * dim + k] = m[0][0] * a0 + m[0][1] * a1;
                        self.entries[r1 * dim + k] = m[1][0] * a0 + m[1][1] * a1;
                    }
                }
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        let dim = self.dim;
        for k in 0..dim {
            self.entries.swap(a * dim + k, b * dim + k);
        }
    }

    /// `self · rhs`.
    pub fn matmul(&self, rhs: &DenseUnitary) -> DenseUnitary {
        assert_eq!(self.n, rhs.n, "width mismatch");
        let dim = self.dim;
        let mut entries = vec![C64::default(); dim * dim];
        for r in 0..dim {
            for k in 0..dim {
                let a = self.entries[r * dim + k];
                if a == C64::default() {
                    continue;
                }
                for col in 0..dim {
                    entries[r * dim + col] += a * rhs.entries[k * dim + col];
                }
            }
        }
        DenseUnitary { n: self.n, dim, entries }
    }

    pub fn adjoint(&self) -> DenseUnitary {
        let dim = self.dim;
        let mut entries = vec![C64::default(); dim * dim];
        for r in 0..dim {
            for col in 0..dim {
                entries[col * dim + r] = self.entries[r * dim + col].conj();
            }
        }
        DenseUnitary { n: self.n, dim, entries }
    }

    pub fn scaled(&self, factor: C64) -> DenseUnitary {
        DenseUnitary {
            n: self.n,
            dim: self.dim,
            entries: self.entries.iter().map(|v| v * factor).collect(),
        }
    }

    /// `max |self_rc - other_rc|`.
    pub fn max_abs_diff(&self, other: &DenseUnitary) -> f64 {
        assert_eq!(self.n, other.n, "width mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `‖U†U − 1‖_max`.
    pub fn unitarity_error(&self) -> f64 {
        let id = DenseUnitary::identity(self.n).expect("width already checked");
        self.adjoint().matmul(self).max_abs_diff(&id)
    }

    pub fn apply_to_state(&self, state: &[C64]) -> Vec<C64> {
        assert_eq!(state.len(), self.dim, "state dimension mismatch");
        (0..self.dim)
            .map(|r| {
                self.entries[r * self.dim..(r + 1) * self.dim]
                    .iter()
                    .zip(state)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }
}

/// The unitary `g_m ··· g_1` of a circuit.
pub fn dense_unitary(circuit: &Circuit) -> Result<DenseUnitary, OracleError> {
    let mut u = DenseUnitary::identity(circuit.num_qubits())?;
    for g in circuit.gates() {
        u.apply_gate(g);
    }
    debug_assert!(u.unitarity_error() <= ORACLE_TOLERANCE);
    Ok(u)
}

/// The `c` with `U = c·V` if one exists.
///
/// `c` is fixed at the first entry of `V` (row-major) with modulus above
/// `1e-6`, and accepted iff `‖U − cV‖_max ≤ 1e-9`.
pub fn global_phase(u: &DenseUnitary, v: &DenseUnitary) -> Result<Option<C64>, OracleError> {
    if u.n != v.n {
        return Err(OracleError::WidthMismatch {
            left: u.n,
            right: v.n,
        });
    }
    let pivot = v
        .entries
        .iter()
        .position(|e| e.norm() > PIVOT_THRESHOLD)
        .expect("a unitary has a nonzero entry");
    let factor = u.entries[pivot] / v.entries[pivot];
    if u.max_abs_diff(&v.scaled(factor)) > ORACLE_TOLERANCE {
        return Ok(None);
    }
    assert!(
        (factor.norm() - 1.0).abs() <= ORACLE_TOLERANCE,
        "global phase {factor} is not unimodular"
    );
    Ok(Some(factor))
}

/// Whether `u = c·v` for some complex `c`, by dense matrices.
pub fn oracle_equivalent(u: &Circuit, v: &Circuit) -> Result<bool, OracleError> {
    Ok(oracle_phase(u, v)?.is_some())
}

/// The global phase relating two circuits, if they are equivalent.
pub fn oracle_phase(u: &Circuit, v: &Circuit) -> Result<Option<C64>, OracleError> {
    if u.num_qubits() != v.num_qubits() {
        return Err(OracleError::WidthMismatch {
            left: u.num_qubits(),
            right: v.num_qubits(),
        });
    }
    global_phase(&dense_unitary(u)?, &dense_unitary(v)?)
}

/// Decodes a dense matrix of the form `α·P` into a phased Pauli string.
pub fn decode_pauli(m: &DenseUnitary) -> Result<PhasedPauli, OracleError> {
    let n = m.n;
    // P|0…0⟩ ∝ |x⟩ fixes the x-bits.
    let row0 = (0..m.dim)
        .find(|&r| m.get(r, 0).norm() > 0.5)
        .ok_or(OracleError::NotPauli)?;
    let reference = m.get(row0, 0);
    let mut paulis = Vec::with_capacity(n);
    for q in 0..n {
        let b = m.bit(q);
        let x = row0 & b != 0;
        // Relative phase of column e_q against column 0 is (-1)^z_q.
        let ratio = m.get(row0 ^ b, b) / reference;
        let z = if (ratio - c(1.0, 0.0)).norm() < 1e-6 {
            false
        } else if (ratio + c(1.0, 0.0)).norm() < 1e-6 {
            true
        } else {
            return Err(OracleError::NotPauli);
        };
        paulis.push(Pauli::from_bits(x, z));
    }
    let positive = PauliString::from_paulis(&paulis, false).expect("n >= 1");
    let y_count = paulis.iter().filter(|&&p| p == Pauli::Y).count() as u8;
    // ⟨x|P|0⟩ = i^(#Y) for the positive string, so α = reference / i^(#Y).
    let alpha = reference / Phase::from_exponent(y_count).to_complex();
    let phase = [Phase::PlusOne, Phase::PlusI, Phase::MinusOne, Phase::MinusI]
        .into_iter()
        .find(|p| (p.to_complex() - alpha).norm() < 1e-6)
        .ok_or(OracleError::NotPauli)?;
    let candidate = DenseUnitary::pauli(&positive)?.scaled(phase.to_complex());
    if candidate.max_abs_diff(m) > ORACLE_TOLERANCE {
        return Err(OracleError::NotPauli);
    }
    Ok(PhasedPauli::new(positive, phase))
}

/// `U·P·U†` for the circuit's unitary `U`, decoded back to a phased Pauli.
pub fn oracle_conjugate(circuit: &Circuit, p: &PauliString) -> Result<PhasedPauli, OracleError> {
    if circuit.num_qubits() != p.num_qubits() {
        return Err(OracleError::WidthMismatch {
            left: circuit.num_qubits(),
            right: p.num_qubits(),
        });
    }
    let u = dense_unitary(circuit)?;
    let conj = u.matmul(&DenseUnitary::pauli(p)?).matmul(&u.adjoint());
    decode_pauli(&conj)
}

/// The computational basis state `|bits⟩`, `bits[0]` being qubit 0.
pub fn basis_state(bits: &[bool]) -> Vec<C64> {
    let n = bits.len();
    let index = bits
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(q, _)| 1usize << (n - 1 - q))
        .sum::<usize>();
    let mut v = vec![C64::default(); 1 << n];
    v[index] = c(1.0, 0.0);
    v
}

/// `|+⟩^{⊗n}`.
pub fn plus_state(n: usize) -> Vec<C64> {
    let amp = (1.0 / (1u64 << n) as f64).sqrt();
    vec![c(amp, 0.0); 1 << n]
}

/// `max_k |a_k − b_k|`.
pub fn state_distance(a: &[C64], b: &[C64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

impl Phase {
    pub fn to_complex(self) -> C64 {
        match self {
            Phase::PlusOne => c(1.0, 0.0),
            Phase::PlusI => c(0.0, 1.0),
            Phase::MinusOne => c(-1.0, 0.0),
            Phase::MinusI => c(0.0, -1.0),
        }
    }
}
