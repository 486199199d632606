//! Conjugation lookup table for H, S and CNOT, checked three ways: the
//! value-level Pauli rules, the bitwise tableau kernel, and dense matrices.

mod common;

use cliffeq_core::{oracle_conjugate, Circuit, Gate, Pauli, PauliString, StabilizerTableau};
use common::ps;

const SINGLE_QUBIT_ROWS: [(&str, &str, &str); 6] = [
    ("H", "+X", "+Z"),
    ("H", "+Y", "-Y"),
    ("H", "+Z", "+X"),
    ("S", "+X", "+Y"),
    ("S", "+Y", "-X"),
    ("S", "+Z", "+Z"),
];

// Control is qubit 0, target qubit 1.
const CNOT_ROWS: [(&str, &str); 6] = [
    ("+IX", "+IX"),
    ("+XI", "+XX"),
    ("+IY", "+ZY"),
    ("+YI", "+YX"),
    ("+IZ", "+ZZ"),
    ("+ZI", "+ZI"),
];

fn via_tableau(input: &PauliString, gate: &Gate) -> PauliString {
    // Row 0 carries the input; the remaining rows are +I padding.
    let n = input.num_qubits();
    let mut rows = vec![input.clone()];
    rows.extend((1..n).map(|_| PauliString::identity(n)));
    let mut t = StabilizerTableau::from_rows(&rows).unwrap();
    t.apply_gate(gate).unwrap();
    t.row(0).unwrap()
}

fn via_oracle(input: &PauliString, gate: &Gate) -> PauliString {
    let c = Circuit::from_gates(input.num_qubits(), [*gate]).unwrap();
    oracle_conjugate(&c, input).unwrap().to_signed().unwrap()
}

#[test]
fn single_qubit_rows() {
    for (name, input, output) in SINGLE_QUBIT_ROWS {
        let gate = if name == "H" { Gate::h(0) } else { Gate::s(0) };
        let (input, output) = (ps(input), ps(output));
        assert_eq!(input.conjugate_by_gate(&gate).unwrap(), output, "{name} {input}");
        assert_eq!(via_tableau(&input, &gate), output, "{name} {input} (tableau)");
        assert_eq!(via_oracle(&input, &gate), output, "{name} {input} (dense)");
    }
}

#[test]
fn cnot_rows() {
    let cnot = Gate::cnot(0, 1);
    for (input, output) in CNOT_ROWS {
        let (input, output) = (ps(input), ps(output));
        assert_eq!(input.conjugate_by_gate(&cnot).unwrap(), output, "{input}");
        assert_eq!(via_tableau(&input, &cnot), output, "{input} (tableau)");
        assert_eq!(via_oracle(&input, &cnot), output, "{input} (dense)");
    }
}

#[test]
fn all_two_qubit_paulis_under_cnot() {
    for cnot in [Gate::cnot(0, 1), Gate::cnot(1, 0)] {
        for a in Pauli::ALL {
            for b in Pauli::ALL {
                for negative in [false, true] {
                    let p = PauliString::from_paulis(&[a, b], negative).unwrap();
                    let expected = via_oracle(&p, &cnot);
                    assert_eq!(p.conjugate_by_gate(&cnot).unwrap(), expected, "{cnot} on {p}");
                    assert_eq!(via_tableau(&p, &cnot), expected, "{cnot} on {p} (tableau)");
                }
            }
        }
    }
}

#[test]
fn yy_under_cnot() {
    assert_eq!(ps("+YY").conjugate_by_gate(&Gate::cnot(0, 1)).unwrap(), ps("-XZ"));
}

#[test]
fn composite_gates_match_dense_conjugation() {
    let gates = [
        Gate::sdg(0),
        Gate::x(1),
        Gate::y(0),
        Gate::z(1),
        Gate::cz(0, 1),
        Gate::swap(1, 0),
    ];
    for g in gates {
        for a in Pauli::ALL {
            for b in Pauli::ALL {
                let p = PauliString::from_paulis(&[a, b], false).unwrap();
                assert_eq!(p.conjugate_by_gate(&g).unwrap(), via_oracle(&p, &g), "{g} on {p}");
            }
        }
    }
}
