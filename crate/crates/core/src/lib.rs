//! Exact equivalence checking of Clifford circuits.
//!
//! Two circuits over `H`, `S` and `CNOT` (plus composite gates that lower to
//! them) are equivalent when their unitaries agree up to a global phase. The
//! check conjugates the `2n` basis generators `Z_j` and `X_j` through both
//! circuits with a bit-packed stabilizer tableau and compares the images
//! exactly, in `O(m·n)` time for `m` gates on `n` qubits.
//!
//! ```
//! use cliffeq_core::{check_equivalence, Circuit};
//!
//! let a: Circuit = "qubits 2\nH 0\nH 1\nCNOT 0 1\nH 0\nH 1".parse().unwrap();
//! let b: Circuit = "qubits 2\nCNOT 1 0".parse().unwrap();
//! assert!(check_equivalence(&a, &b).unwrap().is_equivalent());
//! ```
//!
//! Pauli strings print with qubit 0 leftmost; the dense [`oracle`] likewise
//! treats qubit 0 as the most significant bit of a basis-state index.

pub mod circuit;
pub mod equivalence;
pub mod oracle;
pub mod pauli;
pub mod randgen;
pub mod tableau;

pub use circuit::{Circuit, CircuitError, Gate, GateKind, ParseError, ParseErrorKind};
pub use equivalence::{
    check_equivalence, check_equivalence_with, check_identity, CheckError, CheckOptions,
    EquivalenceResult, Parallelism, Verdict, Witness,
};
pub use oracle::{
    dense_unitary, oracle_conjugate, oracle_equivalent, oracle_phase, DenseUnitary, OracleError,
    MAX_ORACLE_QUBITS,
};
pub use pauli::{pauli_mul, Pauli, PauliError, PauliString, Phase, PhasedPauli};
pub use randgen::{
    gen_equivalent_pair, gen_filled, gen_nonequivalent_pair, gen_pair, GenConfig, GenError,
    PairKind,
};
pub use tableau::{tableau_equal, Basis, Mismatch, StabilizerTableau, TableauError};
