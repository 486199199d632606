//! Equivalence of Clifford circuits up to global phase.
//!
//! Two unitaries `U`, `V` on `n` qubits satisfy `U = c·V` for some `c` iff
//! `U Z_j U† = V Z_j V†` and `U X_j U† = V X_j V†` for every qubit `j`. The
//! checker obtains all four families of conjugated generators by simulating
//! each circuit on the fresh tableaux `{Z_j}` and `{X_j}` and compares them
//! row by row, signs included. Equal stabilizer *groups* are not enough: the
//! rows must match exactly, generator for generator.
//!
//! All four simulations always run to completion, so the cost does not
//! depend on whether or where the circuits differ. The reported witness is
//! the smallest mismatching generator, Z basis before X basis.

use std::fmt;
use std::time::{Duration, Instant};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::circuit::Circuit;
use crate::pauli::PauliString;
use crate::tableau::{Basis, Mismatch, StabilizerTableau, TableauError};

/// Above this many word operations the four simulations run on separate
/// threads (in auto mode).
const PARALLEL_WORK_THRESHOLD: usize = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    #[error("circuit widths differ: {u} vs {v} qubits")]
    WidthMismatch { u: usize, v: usize },
    #[error("circuits must act on at least one qubit")]
    ZeroWidth,
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Equivalent,
    NotEquivalent,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Equivalent => "Equivalent",
            Verdict::NotEquivalent => "NotEquivalent",
        })
    }
}

/// A basis generator whose images under the two circuits differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub basis: Basis,
    pub generator: usize,
    /// `U P_j U†`.
    pub u_pauli: PauliString,
    /// `V P_j V†`.
    pub v_pauli: PauliString,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}_{}: {} vs {}",
            self.basis, self.generator, self.u_pauli, self.v_pauli
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceResult {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub n: usize,
    pub m_u: usize,
    pub m_v: usize,
    pub elapsed: Duration,
}

impl EquivalenceResult {
    pub fn is_equivalent(&self) -> bool {
        self.verdict == Verdict::Equivalent
    }

    /// Same verdict and witness, ignoring timing.
    pub fn same_outcome(&self, other: &EquivalenceResult) -> bool {
        self.verdict == other.verdict && self.witness == other.witness
    }
}

impl Serialize for EquivalenceResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("EquivalenceResult", 6)?;
        s.serialize_field("verdict", &self.verdict)?;
        s.serialize_field("witness", &self.witness)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("m_u", &self.m_u)?;
        s.serialize_field("m_v", &self.m_v)?;
        s.serialize_field("time_ms", &(self.elapsed.as_secs_f64() * 1e3))?;
        s.end()
    }
}

impl fmt::Display for EquivalenceResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.verdict)?;
        if let Some(w) = &self.witness {
            write!(f, " (witness {w})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    /// Threads only when the circuits are large.
    #[default]
    Auto,
    Sequential,
    Parallel,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckOptions {
    pub parallelism: Parallelism,
}

fn simulate(circuit: &Circuit, basis: Basis) -> Result<StabilizerTableau, TableauError> {
    let mut t = StabilizerTableau::new_basis(circuit.num_qubits(), basis)?;
    t.apply_circuit(circuit)?;
    Ok(t)
}

fn to_witness(basis: Basis, m: Mismatch) -> Witness {
    Witness {
        basis,
        generator: m.generator,
        u_pauli: m.left,
        v_pauli: m.right,
    }
}

fn use_threads(options: CheckOptions, n: usize, m: usize) -> bool {
    match options.parallelism {
        Parallelism::Sequential => false,
        Parallelism::Parallel => true,
        Parallelism::Auto => m.saturating_mul(n.div_ceil(64)) >= PARALLEL_WORK_THRESHOLD,
    }
}

/// Decides whether `u` and `v` are equal up to global phase.
pub fn check_equivalence(u: &Circuit, v: &Circuit) -> Result<EquivalenceResult, CheckError> {
    check_equivalence_with(u, v, CheckOptions::default())
}

pub fn check_equivalence_with(
    u: &Circuit,
    v: &Circuit,
    options: CheckOptions,
) -> Result<EquivalenceResult, CheckError> {
    let n = u.num_qubits();
    if n != v.num_qubits() {
        return Err(CheckError::WidthMismatch {
            u: n,
            v: v.num_qubits(),
        });
    }
    if n == 0 {
        return Err(CheckError::ZeroWidth);
    }
    let start = Instant::now();
    let (z_mismatch, x_mismatch) = if use_threads(options, n, u.len() + v.len()) {
        let (uz, vz, ux, vx) = std::thread::scope(|s| {
            let uz = s.spawn(|| simulate(u, Basis::Z));
            let vz = s.spawn(|| simulate(v, Basis::Z));
            let ux = s.spawn(|| simulate(u, Basis::X));
            let vx = simulate(v, Basis::X);
            let join = |h: std::thread::ScopedJoinHandle<'_, _>| h.join().expect("simulation panicked");
            (join(uz), join(vz), join(ux), vx)
        });
        (uz?.first_mismatch(&vz?)?, ux?.first_mismatch(&vx?)?)
    } else {
        // One basis at a time keeps at most two tableaux alive.
        let z = simulate(u, Basis::Z)?.first_mismatch(&simulate(v, Basis::Z)?)?;
        let x = simulate(u, Basis::X)?.first_mismatch(&simulate(v, Basis::X)?)?;
        (z, x)
    };
    let witness = z_mismatch
        .map(|m| to_witness(Basis::Z, m))
        .or_else(|| x_mismatch.map(|m| to_witness(Basis::X, m)));
    Ok(EquivalenceResult {
        verdict: if witness.is_none() {
            Verdict::Equivalent
        } else {
            Verdict::NotEquivalent
        },
        witness,
        n,
        m_u: u.gate_count(),
        m_v: v.gate_count(),
        elapsed: start.elapsed(),
    })
}

/// Decides whether `u` equals the identity up to global phase.
///
/// Same answer as comparing against the empty circuit, but the identity side
/// is the untouched basis tableau and is never simulated.
pub fn check_identity(u: &Circuit) -> Result<EquivalenceResult, CheckError> {
    let n = u.num_qubits();
    if n == 0 {
        return Err(CheckError::ZeroWidth);
    }
    let start = Instant::now();
    let mut mismatch = None;
    for basis in [Basis::Z, Basis::X] {
        let found = simulate(u, basis)?.first_mismatch(&StabilizerTableau::new_basis(n, basis)?)?;
        mismatch = mismatch.or(found.map(|m| to_witness(basis, m)));
    }
    Ok(EquivalenceResult {
        verdict: if mismatch.is_none() {
            Verdict::Equivalent
        } else {
            Verdict::NotEquivalent
        },
        witness: mismatch,
        n,
        m_u: u.gate_count(),
        m_v: 0,
        elapsed: start.elapsed(),
    })
}
