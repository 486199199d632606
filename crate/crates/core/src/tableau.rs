//! Bit-packed stabilizer tableau.
//!
//! The tableau holds `n` generator rows. Storage is column-major: for every
//! qubit `j` there is an x-column and a z-column, each a packed bitvector over
//! the generators, plus one packed sign column. A gate on qubit `j` therefore
//! rewrites whole words of two (or four) columns and the sign column, `n / 64`
//! word operations per column.
//!
//! Columns start out unmaterialized. An unmaterialized column reads as the
//! basis default (`x = 0, z = e_j` for the Z basis, `x = e_j, z = 0` for the X
//! basis) and is allocated the first time a gate touches it, so a fresh
//! tableau costs `O(n)` rather than `O(n²)`.

use std::fmt;

use crate::circuit::{Circuit, Gate, GateKind};
use crate::pauli::PauliString;

const WORD_BITS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableauError {
    #[error("tableau must have at least one qubit")]
    ZeroWidth,
    #[error("qubit {qubit} out of range for {n}-qubit tableau")]
    QubitOutOfRange { qubit: usize, n: usize },
    #[error("generator {index} out of range for {n}-qubit tableau")]
    GeneratorOutOfRange { index: usize, n: usize },
    #[error("CNOT control and target are both qubit {0}")]
    SameQubit(usize),
    #[error("width mismatch: tableau has {tableau} qubits, operand has {operand}")]
    WidthMismatch { tableau: usize, operand: usize },
}

/// Which single-qubit Pauli the fresh generators carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Basis {
    /// Generators `Z_0, …, Z_{n-1}` (the state `|0…0⟩`).
    Z,
    /// Generators `X_0, …, X_{n-1}` (the state `|+…+⟩`).
    X,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Z => "Z",
            Basis::X => "X",
        })
    }
}

/// First generator at which two tableaux differ, with both rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub generator: usize,
    pub left: PauliString,
    pub right: PauliString,
}

#[derive(Clone)]
pub struct StabilizerTableau {
    n: usize,
    words: usize,
    basis: Basis,
    /// Empty until `col_init[j]` is set.
    x_cols: Vec<Vec<u64>>,
    z_cols: Vec<Vec<u64>>,
    /// Bit `i` set means generator `i` carries sign `-1`.
    signs: Vec<u64>,
    col_init: Vec<bool>,
    /// Per-qubit count of gate-driven column writes.
    column_writes: Vec<u64>,
}

#[inline]
fn word_bit(i: usize) -> (usize, u64) {
    (i / WORD_BITS, 1u64 << (i % WORD_BITS))
}

fn two_mut<T>(v: &mut [T], a: usize, b: usize) -> (&mut T, &mut T) {
    debug_assert_ne!(a, b);
    if a < b {
        let (lo, hi) = v.split_at_mut(b);
        (&mut lo[a], &mut hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(a);
        (&mut hi[0], &mut lo[b])
    }
}

impl StabilizerTableau {
    /// Fresh tableau `{P_0, …, P_{n-1}}` for `P` the basis Pauli. No column
    /// is materialized.
    pub fn new_basis(n: usize, basis: Basis) -> Result<Self, TableauError> {
        if n == 0 {
            return Err(TableauError::ZeroWidth);
        }
        let words = n.div_ceil(WORD_BITS);
        Ok(StabilizerTableau {
            n,
            words,
            basis,
            x_cols: vec![Vec::new(); n],
            z_cols: vec![Vec::new(); n],
            signs: vec![0; words],
            col_init: vec![false; n],
            column_writes: vec![0; n],
        })
    }

    /// Like [`new_basis`](Self::new_basis) but with every column materialized.
    pub fn new_basis_eager(n: usize, basis: Basis) -> Result<Self, TableauError> {
        let mut t = Self::new_basis(n, basis)?;
        t.materialize_all();
        Ok(t)
    }

    /// Tableau whose generator `i` is `rows[i]`.
    pub fn from_rows(rows: &[PauliString]) -> Result<Self, TableauError> {
        let n = rows.len();
        let mut t = Self::new_basis(n, Basis::Z)?;
        t.materialize_all();
        for (i, row) in rows.iter().enumerate() {
            if row.num_qubits() != n {
                return Err(TableauError::WidthMismatch {
                    tableau: n,
                    operand: row.num_qubits(),
                });
            }
            let (w, bit) = word_bit(i);
            for j in 0..n {
                let (x, z) = row.get(j).bits();
                set_bit(&mut t.x_cols[j][w], bit, x);
                set_bit(&mut t.z_cols[j][w], bit, z);
            }
            set_bit(&mut t.signs[w], bit, row.is_negative());
        }
        Ok(t)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_materialized(&self, j: usize) -> bool {
        self.col_init[j]
    }

    pub fn materialized_columns(&self) -> usize {
        self.col_init.iter().filter(|&&b| b).count()
    }

    /// Gate-driven writes to qubit `j`'s columns so far.
    pub fn column_writes(&self) -> &[u64] {
        &self.column_writes
    }

    pub fn materialize_all(&mut self) {
        for j in 0..self.n {
            self.materialize(j);
        }
    }

    #[inline]
    fn materialize(&mut self, j: usize) {
        if self.col_init[j] {
            return;
        }
        let mut x = vec![0u64; self.words];
        let mut z = vec![0u64; self.words];
        let (w, bit) = word_bit(j);
        match self.basis {
            Basis::Z => z[w] = bit,
            Basis::X => x[w] = bit,
        }
        self.x_cols[j] = x;
        self.z_cols[j] = z;
        self.col_init[j] = true;
    }

    /// Word `w` of column `j` without materializing it.
    #[inline]
    fn col_words(&self, j: usize, w: usize) -> (u64, u64) {
        if self.col_init[j] {
            return (self.x_cols[j][w], self.z_cols[j][w]);
        }
        let (dw, bit) = word_bit(j);
        let e = if w == dw { bit } else { 0 };
        match self.basis {
            Basis::Z => (0, e),
            Basis::X => (e, 0),
        }
    }

    fn check_qubit(&self, j: usize) -> Result<(), TableauError> {
        if j >= self.n {
            return Err(TableauError::QubitOutOfRange { qubit: j, n: self.n });
        }
        Ok(())
    }

    pub fn apply_h(&mut self, j: usize) -> Result<(), TableauError> {
        self.check_qubit(j)?;
        self.h_unchecked(j);
        Ok(())
    }

    pub fn apply_s(&mut self, j: usize) -> Result<(), TableauError> {
        self.check_qubit(j)?;
        self.s_unchecked(j);
        Ok(())
    }

    pub fn apply_cnot(&mut self, control: usize, target: usize) -> Result<(), TableauError> {
        self.check_qubit(control)?;
        self.check_qubit(target)?;
        if control == target {
            return Err(TableauError::SameQubit(control));
        }
        self.cnot_unchecked(control, target);
        Ok(())
    }

    #[inline]
    fn h_unchecked(&mut self, j: usize) {
        self.materialize(j);
        self.column_writes[j] += 1;
        let x = &mut self.x_cols[j];
        let z = &mut self.z_cols[j];
        for ((s, x), z) in self.signs.iter_mut().zip(x.iter_mut()).zip(z.iter_mut()) {
            *s ^= *x & *z;
            std::mem::swap(x, z);
        }
    }

    #[inline]
    fn s_unchecked(&mut self, j: usize) {
        self.materialize(j);
        self.column_writes[j] += 1;
        let x = &self.x_cols[j];
        let z = &mut self.z_cols[j];
        for ((s, x), z) in self.signs.iter_mut().zip(x.iter()).zip(z.iter_mut()) {
            *s ^= *x & *z;
            *z ^= *x;
        }
    }

    #[inline]
    fn cnot_unchecked(&mut self, c: usize, t: usize) {
        self.materialize(c);
        self.materialize(t);
        self.column_writes[c] += 1;
        self.column_writes[t] += 1;
        let (xc, xt) = two_mut(&mut self.x_cols, c, t);
        let (zc, zt) = two_mut(&mut self.z_cols, c, t);
        let cols = xc.iter().zip(xt.iter_mut()).zip(zc.iter_mut()).zip(zt.iter());
        for (s, (((xc, xt), zc), zt)) in self.signs.iter_mut().zip(cols) {
            *s ^= *xc & *zt & !(*xt ^ *zc);
            *xt ^= *xc;
            *zc ^= *zt;
        }
    }

    /// Conjugates every generator by `gate` (lowered on the fly).
    pub fn apply_gate(&mut self, gate: &Gate) -> Result<(), TableauError> {
        if let Some(&q) = gate.qubits().iter().find(|&&q| q as usize >= self.n) {
            return Err(TableauError::QubitOutOfRange {
                qubit: q as usize,
                n: self.n,
            });
        }
        self.apply_gate_unchecked(gate);
        Ok(())
    }

    #[inline]
    fn apply_gate_unchecked(&mut self, gate: &Gate) {
        gate.for_each_elementary(|g| {
            let q = g.qubits();
            match g.kind() {
                GateKind::H => self.h_unchecked(q[0] as usize),
                GateKind::S => self.s_unchecked(q[0] as usize),
                GateKind::Cnot => self.cnot_unchecked(q[0] as usize, q[1] as usize),
                _ => unreachable!(),
            }
        });
    }

    /// Applies the circuit's gates in order.
    pub fn apply_circuit(&mut self, circuit: &Circuit) -> Result<(), TableauError> {
        if circuit.num_qubits() != self.n {
            return Err(TableauError::WidthMismatch {
                tableau: self.n,
                operand: circuit.num_qubits(),
            });
        }
        // Circuit construction already bounds-checked every operand.
        for g in circuit.gates() {
            self.apply_gate_unchecked(g);
        }
        Ok(())
    }

    /// Generator `i` as a Pauli string. Does not materialize anything.
    pub fn row(&self, i: usize) -> Result<PauliString, TableauError> {
        if i >= self.n {
            return Err(TableauError::GeneratorOutOfRange { index: i, n: self.n });
        }
        Ok(self.row_unchecked(i))
    }

    fn row_unchecked(&self, i: usize) -> PauliString {
        let (w, bit) = word_bit(i);
        let (x, z) = (0..self.n)
            .map(|j| {
                let (xw, zw) = self.col_words(j, w);
                (xw & bit != 0, zw & bit != 0)
            })
            .unzip();
        PauliString::from_bits(x, z, self.signs[w] & bit != 0).expect("n >= 1")
    }

    pub fn rows(&self) -> impl Iterator<Item = PauliString> + '_ {
        (0..self.n).map(|i| self.row_unchecked(i))
    }

    pub fn sign(&self, i: usize) -> bool {
        let (w, bit) = word_bit(i);
        self.signs[w] & bit != 0
    }

    /// Flips the sign of generator `i`. Fault injection for tests.
    pub fn flip_sign(&mut self, i: usize) {
        let (w, bit) = word_bit(i);
        self.signs[w] ^= bit;
    }

    /// Flips `x_ij` (materializing column `j`). Fault injection for tests.
    pub fn flip_x(&mut self, i: usize, j: usize) {
        self.materialize(j);
        let (w, bit) = word_bit(i);
        self.x_cols[j][w] ^= bit;
    }

    /// Flips `z_ij` (materializing column `j`). Fault injection for tests.
    pub fn flip_z(&mut self, i: usize, j: usize) {
        self.materialize(j);
        let (w, bit) = word_bit(i);
        self.z_cols[j][w] ^= bit;
    }

    /// `None` iff every generator of `self` equals the same-index generator
    /// of `other`, signs included. Otherwise the smallest differing index.
    pub fn first_mismatch(&self, other: &StabilizerTableau) -> Result<Option<Mismatch>, TableauError> {
        if self.n != other.n {
            return Err(TableauError::WidthMismatch {
                tableau: self.n,
                operand: other.n,
            });
        }
        let mut diff: Vec<u64> = self
            .signs
            .iter()
            .zip(&other.signs)
            .map(|(a, b)| a ^ b)
            .collect();
        for j in 0..self.n {
            if !self.col_init[j] && !other.col_init[j] && self.basis == other.basis {
                continue;
            }
            for (w, d) in diff.iter_mut().enumerate() {
                let (xa, za) = self.col_words(j, w);
                let (xb, zb) = other.col_words(j, w);
                *d |= (xa ^ xb) | (za ^ zb);
            }
        }
        let first = diff
            .iter()
            .enumerate()
            .find(|(_, &d)| d != 0)
            .map(|(w, d)| w * WORD_BITS + d.trailing_zeros() as usize);
        Ok(first.map(|i| Mismatch {
            generator: i,
            left: self.row_unchecked(i),
            right: other.row_unchecked(i),
        }))
    }
}

/// Free-function form of [`StabilizerTableau::first_mismatch`].
pub fn tableau_equal(
    a: &StabilizerTableau,
    b: &StabilizerTableau,
) -> Result<Option<Mismatch>, TableauError> {
    a.first_mismatch(b)
}

#[inline]
fn set_bit(word: &mut u64, bit: u64, value: bool) {
    if value {
        *word |= bit;
    } else {
        *word &= !bit;
    }
}

impl PartialEq for StabilizerTableau {
    fn eq(&self, other: &Self) -> bool {
        matches!(self.first_mismatch(other), Ok(None))
    }
}

impl Eq for StabilizerTableau {}

impl fmt::Display for StabilizerTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for StabilizerTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StabilizerTableau")
            .field("n", &self.n)
            .field("basis", &self.basis)
            .field("materialized", &self.materialized_columns())
            .field("rows", &self.rows().map(|r| r.to_string()).collect::<Vec<_>>())
            .finish()
    }
}
