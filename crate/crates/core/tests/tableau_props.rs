mod common;

use cliffeq_core::{
    oracle_conjugate, tableau_equal, Basis, Circuit, Gate, Pauli, PauliString, StabilizerTableau,
};
use common::{circuit, circuit_on, conjugate_through};
use proptest::prelude::*;

fn basis_generator(n: usize, j: usize, basis: Basis) -> PauliString {
    let p = match basis {
        Basis::Z => Pauli::Z,
        Basis::X => Pauli::X,
    };
    PauliString::single(n, j, p)
}

fn simulated(c: &Circuit, basis: Basis) -> StabilizerTableau {
    let mut t = StabilizerTableau::new_basis(c.num_qubits(), basis).unwrap();
    t.apply_circuit(c).unwrap();
    t
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rows_match_gate_by_gate_conjugation(c in circuit(6, 30)) {
        let n = c.num_qubits();
        for basis in [Basis::Z, Basis::X] {
            let t = simulated(&c, basis);
            for j in 0..n {
                let expected = conjugate_through(&c, &basis_generator(n, j, basis));
                prop_assert_eq!(t.row(j).unwrap(), expected);
            }
        }
    }

    #[test]
    fn rows_match_dense_conjugation(c in circuit(4, 20)) {
        let n = c.num_qubits();
        for basis in [Basis::Z, Basis::X] {
            let t = simulated(&c, basis);
            for j in 0..n {
                let dense = oracle_conjugate(&c, &basis_generator(n, j, basis)).unwrap();
                prop_assert_eq!(t.row(j).unwrap(), dense.to_signed().unwrap());
            }
        }
    }

    #[test]
    fn lazy_and_eager_agree(c in (1usize..=130).prop_flat_map(|n| circuit_on(n, 60, false))) {
        for basis in [Basis::Z, Basis::X] {
            let lazy = simulated(&c, basis);
            let mut eager = StabilizerTableau::new_basis_eager(c.num_qubits(), basis).unwrap();
            eager.apply_circuit(&c).unwrap();
            prop_assert_eq!(tableau_equal(&lazy, &eager).unwrap(), None);
            prop_assert_eq!(lazy.rows().collect::<Vec<_>>(), eager.rows().collect::<Vec<_>>());
        }
    }

    #[test]
    fn self_inverse_sequences_restore(
        (c, q, r) in (2usize..=70).prop_flat_map(|n| (circuit_on(n, 40, true), 0..n, 0..n - 1))
    ) {
        let r = if r >= q { r + 1 } else { r };
        let base = simulated(&c, Basis::Z);
        let sequences: [Vec<Gate>; 3] = [
            vec![Gate::h(q); 2],
            vec![Gate::s(q); 4],
            vec![Gate::cnot(q, r); 2],
        ];
        for seq in sequences {
            let mut t = base.clone();
            for g in &seq {
                t.apply_gate(g).unwrap();
            }
            prop_assert_eq!(tableau_equal(&t, &base).unwrap(), None);
        }
    }

    #[test]
    fn gates_write_only_their_columns(c in (1usize..=20).prop_flat_map(|n| circuit_on(n, 40, true))) {
        let mut t = StabilizerTableau::new_basis(c.num_qubits(), Basis::Z).unwrap();
        for g in c.gates() {
            let before = t.column_writes().to_vec();
            t.apply_gate(g).unwrap();
            for (j, (a, b)) in before.iter().zip(t.column_writes()).enumerate() {
                let touched = g.qubits().contains(&(j as u32));
                prop_assert_eq!(b - a, u64::from(touched));
            }
        }
    }

    #[test]
    fn equality_detects_any_bit_flip(
        (c, i, j, which) in (1usize..=70).prop_flat_map(|n| (circuit_on(n, 30, true), 0..n, 0..n, 0..3u8))
    ) {
        let t = simulated(&c, Basis::X);
        prop_assert_eq!(tableau_equal(&t, &t.clone()).unwrap(), None);
        let mut flipped = t.clone();
        match which {
            0 => flipped.flip_sign(i),
            1 => flipped.flip_x(i, j),
            _ => flipped.flip_z(i, j),
        }
        let m = tableau_equal(&t, &flipped).unwrap().expect("flip must be detected");
        prop_assert_eq!(m.generator, i);
        let back = tableau_equal(&flipped, &t).unwrap().unwrap();
        prop_assert_eq!((back.left, back.right), (m.right, m.left));
    }
}

#[test]
fn x_basis_equals_hadamard_layer() {
    for n in [1, 2, 5, 64, 65, 200] {
        let direct = StabilizerTableau::new_basis(n, Basis::X).unwrap();
        let mut layered = StabilizerTableau::new_basis(n, Basis::Z).unwrap();
        for j in 0..n {
            layered.apply_h(j).unwrap();
        }
        assert_eq!(tableau_equal(&direct, &layered).unwrap(), None, "n = {n}");
    }
}

#[test]
fn worked_example_tableaux() {
    let a = common::circuit_a();
    let b = common::circuit_b();
    let rows = |t: &StabilizerTableau| t.rows().map(|r| r.to_string()).collect::<Vec<_>>();

    // Circuit A on {Z_1, Z_2}, layer by layer.
    let mut t = StabilizerTableau::new_basis(2, Basis::Z).unwrap();
    assert_eq!(rows(&t), ["+ZI", "+IZ"]);
    t.apply_h(0).unwrap();
    t.apply_h(1).unwrap();
    assert_eq!(rows(&t), ["+XI", "+IX"]);
    t.apply_cnot(0, 1).unwrap();
    assert_eq!(rows(&t), ["+XX", "+IX"]);
    t.apply_h(0).unwrap();
    t.apply_h(1).unwrap();
    assert_eq!(rows(&t), ["+ZZ", "+IZ"]);

    assert_eq!(rows(&simulated(&b, Basis::Z)), ["+ZZ", "+IZ"]);

    // Circuit A on {X_1, X_2}, layer by layer.
    let mut t = StabilizerTableau::new_basis(2, Basis::X).unwrap();
    assert_eq!(rows(&t), ["+XI", "+IX"]);
    t.apply_h(0).unwrap();
    t.apply_h(1).unwrap();
    assert_eq!(rows(&t), ["+ZI", "+IZ"]);
    t.apply_cnot(0, 1).unwrap();
    assert_eq!(rows(&t), ["+ZI", "+ZZ"]);
    t.apply_h(0).unwrap();
    t.apply_h(1).unwrap();
    assert_eq!(rows(&t), ["+XI", "+XX"]);
    assert_eq!(rows(&simulated(&a, Basis::X)), ["+XI", "+XX"]);

    assert_eq!(rows(&simulated(&b, Basis::X)), ["+XI", "+XX"]);
}
