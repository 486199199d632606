#![allow(dead_code)]

use cliffeq_core::{Circuit, Gate, GateKind, Pauli, PauliString};
use proptest::prelude::*;

/// A gate of any kind on `n` qubits (two-qubit kinds only when `n >= 2`).
pub fn gate(n: usize, elementary_only: bool) -> impl Strategy<Value = Gate> {
    let kinds: Vec<GateKind> = GateKind::ALL
        .into_iter()
        .filter(|k| !elementary_only || k.is_elementary())
        .filter(|k| n >= 2 || k.arity() == 1)
        .collect();
    (prop::sample::select(kinds), 0..n, 0..n.max(2) - 1).prop_map(move |(kind, a, b)| {
        if kind.arity() == 1 {
            Gate::new(kind, &[a]).unwrap()
        } else {
            let b = if b >= a { b + 1 } else { b };
            Gate::new(kind, &[a, b]).unwrap()
        }
    })
}

pub fn circuit_on(n: usize, max_len: usize, elementary_only: bool) -> impl Strategy<Value = Circuit> {
    prop::collection::vec(gate(n, elementary_only), 0..=max_len)
        .prop_map(move |gates| Circuit::from_gates(n, gates).unwrap())
}

pub fn circuit(max_n: usize, max_len: usize) -> impl Strategy<Value = Circuit> {
    (1..=max_n).prop_flat_map(move |n| circuit_on(n, max_len, true))
}

pub fn pauli_string(n: usize) -> impl Strategy<Value = PauliString> {
    (prop::collection::vec(prop::sample::select(Pauli::ALL.to_vec()), n), any::<bool>())
        .prop_map(|(ps, neg)| PauliString::from_paulis(&ps, neg).unwrap())
}

pub fn ps(s: &str) -> PauliString {
    s.parse().unwrap()
}

pub fn circuit_a() -> Circuit {
    Circuit::parse("qubits 2\nH 0\nH 1\nCNOT 0 1\nH 0\nH 1").unwrap()
}

pub fn circuit_b() -> Circuit {
    Circuit::parse("qubits 2\nCNOT 1 0").unwrap()
}

/// Conjugates `p` through every gate of `c` with the value-level Pauli rules.
pub fn conjugate_through(c: &Circuit, p: &PauliString) -> PauliString {
    c.gates()
        .iter()
        .fold(p.clone(), |acc, g| acc.conjugate_by_gate(g).unwrap())
}
