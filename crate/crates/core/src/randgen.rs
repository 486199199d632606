//! Seeded benchmark circuits and labeled circuit pairs.
//!
//! Randomness comes from ChaCha8 (`rand_chacha`) seeded with
//! `seed_from_u64(seed)`. One generator stream is used per configuration:
//! the filled circuit consumes it first, then the pair edits. Identical
//! configurations give identical circuits on every platform.
//!
//! A *filled* circuit of depth `d` gives every qubit exactly `d` gates. Each
//! layer shuffles the qubits and walks the shuffled order; every unconsumed
//! qubit gets `H`, `S`, or a `CNOT` onto the next qubit in the order (when
//! one is left), chosen uniformly.

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::{Circuit, Gate, GateKind};
use crate::equivalence::{check_equivalence, CheckError};

/// Attempts at finding a non-equivalent mutation before giving up.
pub const MAX_MUTATION_RETRIES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("invalid generator config: {0}")]
    InvalidConfig(&'static str),
    #[error("no non-equivalent mutation found after {0} attempts")]
    RetriesExhausted(usize),
    #[error(transparent)]
    Check(#[from] CheckError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairKind {
    #[serde(rename = "equiv")]
    Equivalent,
    #[serde(rename = "nonequiv")]
    NonEquivalent,
    Single,
}

impl PairKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PairKind::Equivalent => "equiv",
            PairKind::NonEquivalent => "nonequiv",
            PairKind::Single => "single",
        }
    }

    /// Label file contents for a pair of this kind.
    pub fn label(self) -> Option<&'static str> {
        match self {
            PairKind::Equivalent => Some("equivalent"),
            PairKind::NonEquivalent => Some("nonequivalent"),
            PairKind::Single => None,
        }
    }
}

impl std::fmt::Display for PairKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for PairKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "equiv" | "equivalent" => Ok(PairKind::Equivalent),
            "nonequiv" | "nonequivalent" => Ok(PairKind::NonEquivalent),
            "single" => Ok(PairKind::Single),
            other => Err(format!("unknown pair kind {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenConfig {
    pub n: usize,
    pub depth: usize,
    pub seed: u64,
    pub pair_kind: PairKind,
    /// Gates replaced in a non-equivalent pair.
    pub mutation_count: usize,
    /// Equivalence-preserving edits in an equivalent pair.
    pub insertion_count: usize,
}

impl GenConfig {
    pub fn new(n: usize, depth: usize, seed: u64) -> Self {
        GenConfig {
            n,
            depth,
            seed,
            pair_kind: PairKind::Equivalent,
            mutation_count: 1,
            insertion_count: 4,
        }
    }

    pub fn with_kind(mut self, pair_kind: PairKind) -> Self {
        self.pair_kind = pair_kind;
        self
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.n == 0 {
            return Err(GenError::InvalidConfig("qubit count must be at least 1"));
        }
        if self.depth == 0 {
            return Err(GenError::InvalidConfig("depth must be at least 1"));
        }
        if self.pair_kind == PairKind::NonEquivalent && self.mutation_count == 0 {
            return Err(GenError::InvalidConfig(
                "a non-equivalent pair needs at least one mutation",
            ));
        }
        Ok(())
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

fn filled_with(rng: &mut ChaCha8Rng, n: usize, depth: usize) -> Circuit {
    let mut circuit = Circuit::with_capacity(n, depth * n);
    let mut order: Vec<usize> = (0..n).collect();
    for _ in 0..depth {
        order.shuffle(rng);
        let mut i = 0;
        while i < n {
            let q = order[i];
            // Consumption is always a prefix of `order`, so the next
            // unconsumed qubit is `order[i + 1]`.
            let partner = order.get(i + 1).copied();
            let choices = if partner.is_some() { 3 } else { 2 };
            let gate = match rng.gen_range(0..choices) {
                0 => Gate::h(q),
                1 => Gate::s(q),
                _ => Gate::cnot(q, partner.expect("partner exists")),
            };
            i += gate.qubits().len();
            circuit.push(gate).expect("indices below n");
        }
    }
    circuit
}

/// A filled circuit of `cfg.depth` layers on `cfg.n` qubits.
pub fn gen_filled(cfg: &GenConfig) -> Result<Circuit, GenError> {
    cfg.validate()?;
    Ok(filled_with(&mut cfg.rng(), cfg.n, cfg.depth))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Edit {
    HH,
    S4,
    CnotCnot,
    PhaseBlock,
    SwapAdjacent,
}

const EDITS: [Edit; 5] = [
    Edit::HH,
    Edit::S4,
    Edit::CnotCnot,
    Edit::PhaseBlock,
    Edit::SwapAdjacent,
];

/// Applies one random equivalence-preserving edit to `gates`.
fn apply_edit(rng: &mut ChaCha8Rng, n: usize, gates: &mut Vec<Gate>) {
    let mut edit = EDITS[rng.gen_range(0..EDITS.len())];
    if edit == Edit::CnotCnot && n < 2 {
        edit = Edit::HH;
    }
    if edit == Edit::SwapAdjacent {
        let len = gates.len();
        if len >= 2 {
            let start = rng.gen_range(0..len - 1);
            let found = (0..len - 1)
                .map(|k| (start + k) % (len - 1))
                .find(|&p| gates[p].is_disjoint(&gates[p + 1]));
            if let Some(p) = found {
                gates.swap(p, p + 1);
                return;
            }
        }
        edit = Edit::HH;
    }
    let at = rng.gen_range(0..=gates.len());
    let q = rng.gen_range(0..n);
    let block: Vec<Gate> = match edit {
        Edit::HH => vec![Gate::h(q); 2],
        Edit::S4 => vec![Gate::s(q); 4],
        Edit::CnotCnot => {
            let mut t = rng.gen_range(0..n - 1);
            if t >= q {
                t += 1;
            }
            vec![Gate::cnot(q, t); 2]
        }
        // (S·H)^3 = e^{iπ/4}·1
        Edit::PhaseBlock => [Gate::h(q), Gate::s(q)].repeat(3),
        Edit::SwapAdjacent => unreachable!(),
    };
    gates.splice(at..at, block);
}

/// A different gate on the same qubits.
fn mutate(gate: Gate) -> Gate {
    let q = gate.qubits();
    match gate.kind() {
        GateKind::H => Gate::s(q[0] as usize),
        GateKind::S => Gate::h(q[0] as usize),
        GateKind::Cnot => Gate::cnot(q[1] as usize, q[0] as usize),
        _ => Gate::h(q[0] as usize),
    }
}

/// `(C, C')` with `C'` obtained from the filled circuit `C` by
/// `cfg.insertion_count` equivalence-preserving edits.
pub fn gen_equivalent_pair(cfg: &GenConfig) -> Result<(Circuit, Circuit), GenError> {
    cfg.validate()?;
    let mut rng = cfg.rng();
    let c = filled_with(&mut rng, cfg.n, cfg.depth);
    let mut gates = c.gates().to_vec();
    for _ in 0..cfg.insertion_count {
        apply_edit(&mut rng, cfg.n, &mut gates);
    }
    let edited = Circuit::from_gates(cfg.n, gates).expect("edits stay in range");
    Ok((c, edited))
}

/// `(C, C')` with `cfg.mutation_count` gates of `C` replaced, certified
/// non-equivalent by the checker.
pub fn gen_nonequivalent_pair(cfg: &GenConfig) -> Result<(Circuit, Circuit), GenError> {
    cfg.validate()?;
    let mut rng = cfg.rng();
    let c = filled_with(&mut rng, cfg.n, cfg.depth);
    let count = cfg.mutation_count.min(c.len());
    for _ in 0..MAX_MUTATION_RETRIES {
        let mut gates = c.gates().to_vec();
        for pos in sample(&mut rng, c.len(), count).into_iter() {
            gates[pos] = mutate(gates[pos]);
        }
        let mutated = Circuit::from_gates(cfg.n, gates).expect("mutations stay in range");
        if !check_equivalence(&c, &mutated)?.is_equivalent() {
            return Ok((c, mutated));
        }
    }
    Err(GenError::RetriesExhausted(MAX_MUTATION_RETRIES))
}

/// The pair for `cfg.pair_kind`; for [`PairKind::Single`] both sides are the
/// same filled circuit.
pub fn gen_pair(cfg: &GenConfig) -> Result<(Circuit, Circuit), GenError> {
    match cfg.pair_kind {
        PairKind::Equivalent => gen_equivalent_pair(cfg),
        PairKind::NonEquivalent => gen_nonequivalent_pair(cfg),
        PairKind::Single => {
            let c = gen_filled(cfg)?;
            Ok((c.clone(), c))
        }
    }
}
