//! Circuit data model and the `.cqc` text format.
//!
//! A `.cqc` file is UTF-8 text. Blank lines and `#` comments may appear
//! anywhere. The first significant line is `qubits <N>` with `N ≥ 1`; each
//! following line is `<NAME> <q>` or `<NAME> <q1> <q2>` with
//! `NAME ∈ {H, S, SDG, X, Y, Z, CNOT, CZ, SWAP}` and 0-based indices. For
//! `CNOT` the first index is the control.
//!
//! Gates are listed in application order: the first gate acts first, so the
//! circuit's unitary is `g_m ··· g_1`. The parser lowers every gate to the
//! elementary set `{H, S, CNOT}` on the spot; the lowerings of `X`, `Y`, `Z`
//! and `SDG` agree with the named gate only up to a global phase.

use std::fmt::{self, Write as _};
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CircuitError {
    #[error("qubit {qubit} out of range for {n}-qubit circuit")]
    QubitOutOfRange { qubit: usize, n: usize },
    #[error("{kind} expects {expected} qubit(s), got {got}")]
    Arity {
        kind: GateKind,
        expected: usize,
        got: usize,
    },
    #[error("{kind} acts on qubit {qubit} twice")]
    DuplicateQubit { kind: GateKind, qubit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("missing `qubits <N>` header")]
    MissingHeader,
    #[error("invalid header {0:?}, expected `qubits <N>` with N >= 1")]
    InvalidHeader(String),
    #[error("unknown gate {0:?}")]
    UnknownGate(String),
    #[error("invalid qubit index {0:?}")]
    InvalidIndex(String),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    H,
    S,
    Sdg,
    X,
    Y,
    Z,
    Cnot,
    Cz,
    Swap,
}

impl GateKind {
    pub const ALL: [GateKind; 9] = [
        GateKind::H,
        GateKind::S,
        GateKind::Sdg,
        GateKind::X,
        GateKind::Y,
        GateKind::Z,
        GateKind::Cnot,
        GateKind::Cz,
        GateKind::Swap,
    ];

    pub fn arity(self) -> usize {
        match self {
            GateKind::Cnot | GateKind::Cz | GateKind::Swap => 2,
            _ => 1,
        }
    }

    /// Whether the kind is one of `H`, `S`, `CNOT`.
    pub fn is_elementary(self) -> bool {
        matches!(self, GateKind::H | GateKind::S | GateKind::Cnot)
    }

    pub fn name(self) -> &'static str {
        match self {
            GateKind::H => "H",
            GateKind::S => "S",
            GateKind::Sdg => "SDG",
            GateKind::X => "X",
            GateKind::Y => "Y",
            GateKind::Z => "Z",
            GateKind::Cnot => "CNOT",
            GateKind::Cz => "CZ",
            GateKind::Swap => "SWAP",
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GateKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GateKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| s.to_string())
    }
}

/// One gate with its qubit operands. Two-qubit operands are distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gate {
    kind: GateKind,
    qubits: [u32; 2],
}

impl Gate {
    pub fn new(kind: GateKind, qubits: &[usize]) -> Result<Self, CircuitError> {
        if qubits.len() != kind.arity() {
            return Err(CircuitError::Arity {
                kind,
                expected: kind.arity(),
                got: qubits.len(),
            });
        }
        if qubits.len() == 2 && qubits[0] == qubits[1] {
            return Err(CircuitError::DuplicateQubit {
                kind,
                qubit: qubits[0],
            });
        }
        let index = |q: usize| {
            u32::try_from(q).map_err(|_| CircuitError::QubitOutOfRange {
                qubit: q,
                n: u32::MAX as usize,
            })
        };
        let q0 = index(qubits[0])?;
        let q1 = if qubits.len() == 2 { index(qubits[1])? } else { 0 };
        Ok(Gate {
            kind,
            qubits: [q0, q1],
        })
    }

    fn one(kind: GateKind, q: usize) -> Self {
        Gate::new(kind, &[q]).expect("invalid single-qubit gate")
    }

    fn two(kind: GateKind, a: usize, b: usize) -> Self {
        Gate::new(kind, &[a, b]).expect("invalid two-qubit gate")
    }

    pub fn h(q: usize) -> Self {
        Self::one(GateKind::H, q)
    }

    pub fn s(q: usize) -> Self {
        Self::one(GateKind::S, q)
    }

    pub fn sdg(q: usize) -> Self {
        Self::one(GateKind::Sdg, q)
    }

    pub fn x(q: usize) -> Self {
        Self::one(GateKind::X, q)
    }

    pub fn y(q: usize) -> Self {
        Self::one(GateKind::Y, q)
    }

    pub fn z(q: usize) -> Self {
        Self::one(GateKind::Z, q)
    }

    /// Panics if `control == target`.
    pub fn cnot(control: usize, target: usize) -> Self {
        Self::two(GateKind::Cnot, control, target)
    }

    pub fn cz(a: usize, b: usize) -> Self {
        Self::two(GateKind::Cz, a, b)
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Self::two(GateKind::Swap, a, b)
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    /// Operands; for `CNOT` the control comes first.
    pub fn qubits(&self) -> &[u32] {
        &self.qubits[..self.kind.arity()]
    }

    /// Whether this gate and `other` act on disjoint qubits.
    pub fn is_disjoint(&self, other: &Gate) -> bool {
        self.qubits().iter().all(|q| !other.qubits().contains(q))
    }

    /// Calls `f` with each gate of the `{H, S, CNOT}` lowering, in order.
    pub fn for_each_elementary(&self, mut f: impl FnMut(Gate)) {
        let q = self.qubits[0] as usize;
        let r = self.qubits[1] as usize;
        let elem = |kind, qubits: [u32; 2]| Gate { kind, qubits };
        let h = |q: usize| elem(GateKind::H, [q as u32, 0]);
        let s = |q: usize| elem(GateKind::S, [q as u32, 0]);
        let cx = |c: usize, t: usize| elem(GateKind::Cnot, [c as u32, t as u32]);
        match self.kind {
            GateKind::H | GateKind::S | GateKind::Cnot => f(*self),
            GateKind::Sdg => (0..3).for_each(|_| f(s(q))),
            GateKind::X => [h(q), s(q), s(q), h(q)].into_iter().for_each(f),
            GateKind::Z => [s(q), s(q)].into_iter().for_each(f),
            // Z first, then X: the product is X·Z = -i·Y.
            GateKind::Y => [s(q), s(q), h(q), s(q), s(q), h(q)].into_iter().for_each(f),
            GateKind::Cz => [h(r), cx(q, r), h(r)].into_iter().for_each(f),
            GateKind::Swap => [cx(q, r), cx(r, q), cx(q, r)].into_iter().for_each(f),
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.name())?;
        for q in self.qubits() {
            write!(f, " {q}")?;
        }
        Ok(())
    }
}

/// An ordered gate list over `num_qubits` wires.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    num_qubits: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    /// The empty circuit on `num_qubits` wires.
    pub fn new(num_qubits: usize) -> Self {
        Circuit {
            num_qubits,
            gates: Vec::new(),
        }
    }

    pub fn with_capacity(num_qubits: usize, capacity: usize) -> Self {
        Circuit {
            num_qubits,
            gates: Vec::with_capacity(capacity),
        }
    }

    pub fn from_gates(
        num_qubits: usize,
        gates: impl IntoIterator<Item = Gate>,
    ) -> Result<Self, CircuitError> {
        let mut c = Circuit::new(num_qubits);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<(), CircuitError> {
        if let Some(&q) = gate.qubits().iter().find(|&&q| q as usize >= self.num_qubits) {
            return Err(CircuitError::QubitOutOfRange {
                qubit: q as usize,
                n: self.num_qubits,
            });
        }
        self.gates.push(gate);
        Ok(())
    }

    /// Appends `other`'s gates. Panics if `other` is wider than `self`.
    pub fn extend_from(&mut self, other: &Circuit) {
        assert!(
            other.num_qubits <= self.num_qubits,
            "cannot append a {}-qubit circuit to a {}-qubit circuit",
            other.num_qubits,
            self.num_qubits
        );
        self.gates.extend_from_slice(&other.gates);
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Circuit) -> Circuit {
        let mut out = Circuit::with_capacity(
            self.num_qubits.max(other.num_qubits),
            self.len() + other.len(),
        );
        out.gates.extend_from_slice(&self.gates);
        out.gates.extend_from_slice(&other.gates);
        out
    }

    pub fn is_lowered(&self) -> bool {
        self.gates.iter().all(|g| g.kind.is_elementary())
    }

    /// The same circuit over `{H, S, CNOT}` only.
    pub fn lowered(&self) -> Circuit {
        let mut out = Circuit::with_capacity(self.num_qubits, self.gates.len());
        for g in &self.gates {
            g.for_each_elementary(|e| out.gates.push(e));
        }
        out
    }

    /// Number of elementary gates after lowering.
    pub fn gate_count(&self) -> usize {
        self.gates
            .iter()
            .map(|g| {
                let mut k = 0;
                g.for_each_elementary(|_| k += 1);
                k
            })
            .sum()
    }

    /// The inverse circuit, lowered: gates reversed, `S` replaced by `S S S`.
    pub fn inverse(&self) -> Circuit {
        let lowered = self.lowered();
        let mut out = Circuit::with_capacity(self.num_qubits, lowered.len());
        for g in lowered.gates.iter().rev() {
            match g.kind {
                GateKind::S => out.gates.extend([*g; 3]),
                _ => out.gates.push(*g),
            }
        }
        out
    }

    /// Parses `.cqc` text and lowers it.
    pub fn parse(text: &str) -> Result<Circuit, ParseError> {
        Ok(Self::parse_unlowered(text)?.lowered())
    }

    /// Parses `.cqc` text keeping composite gate kinds as written.
    pub fn parse_unlowered(text: &str) -> Result<Circuit, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (header_line, header) = lines.next().ok_or(ParseError {
            line: text.lines().count().max(1),
            kind: ParseErrorKind::MissingHeader,
        })?;
        let num_qubits = parse_header(header).ok_or_else(|| ParseError {
            line: header_line,
            kind: ParseErrorKind::InvalidHeader(header.to_string()),
        })?;

        let mut circuit = Circuit::new(num_qubits);
        for (line, content) in lines {
            let err = |kind| ParseError { line, kind };
            let mut tokens = content.split_whitespace();
            let name = tokens.next().expect("non-empty line");
            let kind: GateKind = name.parse().map_err(|s| err(ParseErrorKind::UnknownGate(s)))?;
            let qubits = tokens
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| err(ParseErrorKind::InvalidIndex(t.to_string())))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let gate = Gate::new(kind, &qubits).map_err(|e| err(e.into()))?;
            circuit.push(gate).map_err(|e| err(e.into()))?;
        }
        Ok(circuit)
    }

    /// Canonical `.cqc` text.
    pub fn serialize(&self) -> String {
        let mut out = String::with_capacity(16 + 8 * self.gates.len());
        writeln!(out, "qubits {}", self.num_qubits).unwrap();
        for g in &self.gates {
            writeln!(out, "{g}").unwrap();
        }
        out
    }
}

fn parse_header(line: &str) -> Option<usize> {
    let mut tokens = line.split_whitespace();
    if tokens.next()? != "qubits" {
        return None;
    }
    let n: usize = tokens.next()?.parse().ok()?;
    (tokens.next().is_none() && n >= 1).then_some(n)
}

impl FromStr for Circuit {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Circuit::parse(s)
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}
