//! Signed Pauli strings and the Pauli group.
//!
//! A Pauli string is stored in the symplectic convention: qubit `j` carries
//! the bit pair `(x_j, z_j)` with `I = (0,0)`, `X = (1,0)`, `Y = (1,1)` and
//! `Z = (0,1)`, plus one sign bit. This is the value-level reference
//! representation; the packed [`StabilizerTableau`](crate::StabilizerTableau)
//! is tested against it.
//!
//! Text form is a sign character followed by one letter per qubit, with
//! qubit 0 leftmost, e.g. `+XZIY` or `-IZ`.

use std::fmt;
use std::str::FromStr;

use crate::circuit::{Gate, GateKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PauliError {
    #[error("dimension mismatch: {left} vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },
    #[error("qubit {qubit} out of range for {n}-qubit Pauli string")]
    QubitOutOfRange { qubit: usize, n: usize },
    #[error("Pauli string must act on at least one qubit")]
    Empty,
    #[error("invalid Pauli string {0:?}")]
    Parse(String),
    #[error("phase {0} is not a sign")]
    ImaginaryPhase(Phase),
}

/// Single-qubit Pauli operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    /// The `(x, z)` bit pair.
    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }

    /// Product `self · rhs` as `(phase, pauli)`.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, rhs: Pauli) -> (Phase, Pauli) {
        use Pauli::*;
        match (self, rhs) {
            (I, p) | (p, I) => (Phase::PlusOne, p),
            (a, b) if a == b => (Phase::PlusOne, I),
            (X, Y) => (Phase::PlusI, Z),
            (Y, Z) => (Phase::PlusI, X),
            (Z, X) => (Phase::PlusI, Y),
            (Y, X) => (Phase::MinusI, Z),
            (Z, Y) => (Phase::MinusI, X),
            (X, Z) => (Phase::MinusI, Y),
            _ => unreachable!(),
        }
    }
}

/// A phase `i^k`, `k ∈ {0, 1, 2, 3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phase {
    PlusOne,
    PlusI,
    MinusOne,
    MinusI,
}

impl Phase {
    pub fn exponent(self) -> u8 {
        match self {
            Phase::PlusOne => 0,
            Phase::PlusI => 1,
            Phase::MinusOne => 2,
            Phase::MinusI => 3,
        }
    }

    pub fn from_exponent(k: u8) -> Self {
        match k % 4 {
            0 => Phase::PlusOne,
            1 => Phase::PlusI,
            2 => Phase::MinusOne,
            _ => Phase::MinusI,
        }
    }

    pub fn from_sign(negative: bool) -> Self {
        if negative {
            Phase::MinusOne
        } else {
            Phase::PlusOne
        }
    }

    pub fn is_real(self) -> bool {
        matches!(self, Phase::PlusOne | Phase::MinusOne)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl std::ops::Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        Phase::from_exponent(self.exponent() + rhs.exponent())
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Phase::PlusOne => "+1",
            Phase::PlusI => "+i",
            Phase::MinusOne => "-1",
            Phase::MinusI => "-i",
        })
    }
}

/// A Pauli string `±P_0 ⊗ … ⊗ P_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    x: Vec<bool>,
    z: Vec<bool>,
    negative: bool,
}

impl PauliString {
    /// `+I⊗…⊗I` on `n` qubits.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "Pauli string must act on at least one qubit");
        PauliString {
            x: vec![false; n],
            z: vec![false; n],
            negative: false,
        }
    }

    /// `+P` at qubit `j`, identity elsewhere.
    pub fn single(n: usize, j: usize, p: Pauli) -> Self {
        let mut s = Self::identity(n);
        s.set(j, p);
        s
    }

    pub fn from_paulis(paulis: &[Pauli], negative: bool) -> Result<Self, PauliError> {
        if paulis.is_empty() {
            return Err(PauliError::Empty);
        }
        let (x, z) = paulis.iter().map(|p| p.bits()).unzip();
        Ok(PauliString { x, z, negative })
    }

    pub fn from_bits(x: Vec<bool>, z: Vec<bool>, negative: bool) -> Result<Self, PauliError> {
        if x.len() != z.len() {
            return Err(PauliError::DimensionMismatch {
                left: x.len(),
                right: z.len(),
            });
        }
        if x.is_empty() {
            return Err(PauliError::Empty);
        }
        Ok(PauliString { x, z, negative })
    }

    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    pub fn get(&self, j: usize) -> Pauli {
        Pauli::from_bits(self.x[j], self.z[j])
    }

    pub fn set(&mut self, j: usize, p: Pauli) {
        let (x, z) = p.bits();
        self.x[j] = x;
        self.z[j] = z;
    }

    pub fn x_bits(&self) -> &[bool] {
        &self.x
    }

    pub fn z_bits(&self) -> &[bool] {
        &self.z
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn set_negative(&mut self, negative: bool) {
        self.negative = negative;
    }

    pub fn negated(mut self) -> Self {
        self.negative = !self.negative;
        self
    }

    pub fn paulis(&self) -> impl Iterator<Item = Pauli> + '_ {
        (0..self.num_qubits()).map(|j| self.get(j))
    }

    /// Whether all positions are `I` (the sign is ignored).
    pub fn is_identity_up_to_sign(&self) -> bool {
        !self.x.iter().chain(&self.z).any(|&b| b)
    }

    fn check_same_width(&self, other: &PauliString) -> Result<(), PauliError> {
        if self.num_qubits() != other.num_qubits() {
            return Err(PauliError::DimensionMismatch {
                left: self.num_qubits(),
                right: other.num_qubits(),
            });
        }
        Ok(())
    }

    /// True iff the symplectic inner product with `other` is even.
    pub fn commutes(&self, other: &PauliString) -> Result<bool, PauliError> {
        self.check_same_width(other)?;
        let odd = (0..self.num_qubits()).fold(false, |acc, j| {
            acc ^ ((self.x[j] & other.z[j]) ^ (self.z[j] & other.x[j]))
        });
        Ok(!odd)
    }

    /// Conjugation `g · self · g†` by one gate.
    ///
    /// `H` and `S` are single-qubit table lookups. `CNOT` is evaluated by
    /// writing the two affected positions as a product of `X_c, Z_c, X_t, Z_t`
    /// and multiplying their images. Composite gate kinds are conjugated
    /// through their elementary lowering.
    pub fn conjugate_by_gate(&self, gate: &Gate) -> Result<PauliString, PauliError> {
        let n = self.num_qubits();
        if let Some(&q) = gate.qubits().iter().find(|&&q| q as usize >= n) {
            return Err(PauliError::QubitOutOfRange {
                qubit: q as usize,
                n,
            });
        }
        let mut out = self.clone();
        gate.for_each_elementary(|g| out.conjugate_elementary(&g));
        Ok(out)
    }

    fn conjugate_elementary(&mut self, gate: &Gate) {
        let q = gate.qubits();
        match gate.kind() {
            GateKind::H => {
                let j = q[0] as usize;
                let (flip, image) = match self.get(j) {
                    Pauli::I => (false, Pauli::I),
                    Pauli::X => (false, Pauli::Z),
                    Pauli::Y => (true, Pauli::Y),
                    Pauli::Z => (false, Pauli::X),
                };
                self.set(j, image);
                self.negative ^= flip;
            }
            GateKind::S => {
                let j = q[0] as usize;
                let (flip, image) = match self.get(j) {
                    Pauli::I => (false, Pauli::I),
                    Pauli::X => (false, Pauli::Y),
                    Pauli::Y => (true, Pauli::X),
                    Pauli::Z => (false, Pauli::Z),
                };
                self.set(j, image);
                self.negative ^= flip;
            }
            GateKind::Cnot => {
                let (c, t) = (q[0] as usize, q[1] as usize);
                let (pc, pt) = (self.get(c), self.get(t));
                let (negative, ic, it) = cnot_image(pc, pt);
                self.set(c, ic);
                self.set(t, it);
                self.negative ^= negative;
            }
            other => unreachable!("{other:?} is not elementary"),
        }
    }

    fn parse_text(s: &str) -> Result<Self, PauliError> {
        let err = || PauliError::Parse(s.to_string());
        let mut chars = s.chars();
        let negative = match chars.next() {
            Some('+') => false,
            Some('-') => true,
            _ => return Err(err()),
        };
        let paulis = chars
            .map(Pauli::from_letter)
            .collect::<Option<Vec<_>>>()
            .ok_or_else(err)?;
        Self::from_paulis(&paulis, negative).map_err(|_| err())
    }
}

/// Image of `P_c ⊗ P_t` under CNOT conjugation, as `(negative, P_c', P_t')`.
fn cnot_image(pc: Pauli, pt: Pauli) -> (bool, Pauli, Pauli) {
    // Generator images: X_c -> X_c X_t, Z_c -> Z_c, X_t -> X_t, Z_t -> Z_c Z_t.
    let images = [
        [Pauli::X, Pauli::X],
        [Pauli::Z, Pauli::I],
        [Pauli::I, Pauli::X],
        [Pauli::Z, Pauli::Z],
    ];
    let (xc, zc) = pc.bits();
    let (xt, zt) = pt.bits();
    // Y = i·X·Z, so P_c ⊗ P_t = i^(xc·zc + xt·zt) · X_c^xc Z_c^zc X_t^xt Z_t^zt.
    let mut phase = Phase::from_exponent(u8::from(xc && zc) + u8::from(xt && zt));
    let mut acc = [Pauli::I, Pauli::I];
    for (present, image) in [xc, zc, xt, zt].into_iter().zip(images) {
        if present {
            for (slot, factor) in acc.iter_mut().zip(image) {
                let (ph, p) = slot.mul(factor);
                phase = phase * ph;
                *slot = p;
            }
        }
    }
    assert!(phase.is_real(), "CNOT conjugation produced phase {phase}");
    (phase == Phase::MinusOne, acc[0], acc[1])
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.negative { "-" } else { "+" })?;
        for p in self.paulis() {
            write!(f, "{}", p.letter())?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = PauliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_text(s)
    }
}

impl serde::Serialize for PauliString {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A Pauli-group element `α·P` with `α ∈ {±1, ±i}`.
///
/// The sign of the inner [`PauliString`] is always folded into `phase`, so
/// `pauli()` is always positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhasedPauli {
    pauli: PauliString,
    phase: Phase,
}

impl PhasedPauli {
    pub fn new(mut pauli: PauliString, phase: Phase) -> Self {
        let phase = phase * Phase::from_sign(pauli.negative);
        pauli.negative = false;
        PhasedPauli { pauli, phase }
    }

    pub fn pauli(&self) -> &PauliString {
        &self.pauli
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    /// Back to a signed string; fails for `±i` phases.
    pub fn to_signed(&self) -> Result<PauliString, PauliError> {
        match self.phase {
            Phase::PlusOne => Ok(self.pauli.clone()),
            Phase::MinusOne => Ok(self.pauli.clone().negated()),
            other => Err(PauliError::ImaginaryPhase(other)),
        }
    }

    /// Matrix product `self · rhs` with exact phase.
    pub fn mul(&self, rhs: &PhasedPauli) -> Result<PhasedPauli, PauliError> {
        self.pauli.check_same_width(&rhs.pauli)?;
        let mut phase = self.phase * rhs.phase;
        let paulis: Vec<Pauli> = self
            .pauli
            .paulis()
            .zip(rhs.pauli.paulis())
            .map(|(a, b)| {
                let (ph, p) = a.mul(b);
                phase = phase * ph;
                p
            })
            .collect();
        Ok(PhasedPauli {
            pauli: PauliString::from_paulis(&paulis, false)?,
            phase,
        })
    }
}

impl From<PauliString> for PhasedPauli {
    fn from(p: PauliString) -> Self {
        PhasedPauli::new(p, Phase::PlusOne)
    }
}

impl fmt::Display for PhasedPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.phase {
            Phase::PlusOne => "+",
            Phase::PlusI => "+i",
            Phase::MinusOne => "-",
            Phase::MinusI => "-i",
        };
        f.write_str(prefix)?;
        for p in self.pauli.paulis() {
            write!(f, "{}", p.letter())?;
        }
        Ok(())
    }
}

/// `a · b` for two phased Paulis.
pub fn pauli_mul(a: &PhasedPauli, b: &PhasedPauli) -> Result<PhasedPauli, PauliError> {
    a.mul(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    fn phased(s: &str) -> PhasedPauli {
        ps(s).into()
    }

    #[test]
    fn identity_strings() {
        assert_eq!(PauliString::identity(2).to_string(), "+II");
        assert_eq!(PauliString::identity(1).to_string(), "+I");
        assert!(!PauliString::identity(4).is_negative());
    }

    #[test]
    fn single_qubit_products() {
        let xz = pauli_mul(&phased("+X"), &phased("+Z")).unwrap();
        assert_eq!(xz.to_string(), "-iY");
        let zx = pauli_mul(&phased("+Z"), &phased("+X")).unwrap();
        assert_eq!(zx.to_string(), "+iY");
        for p in Pauli::ALL {
            let s = PhasedPauli::from(PauliString::from_paulis(&[p], false).unwrap());
            assert_eq!(pauli_mul(&s, &s).unwrap().to_string(), "+I");
        }
    }

    #[test]
    fn mul_dimension_mismatch() {
        assert_eq!(
            pauli_mul(&phased("+X"), &phased("+XX")),
            Err(PauliError::DimensionMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn commutation() {
        assert!(!ps("+X").commutes(&ps("+Z")).unwrap());
        assert!(ps("+XX").commutes(&ps("+ZZ")).unwrap());
        assert!(ps("+III").commutes(&ps("-XYZ")).unwrap());
        assert!(ps("+X").commutes(&ps("+XX")).is_err());
    }

    #[test]
    fn conjugation_examples() {
        let h0 = Gate::h(0);
        let s0 = Gate::s(0);
        let cnot = Gate::cnot(0, 1);
        assert_eq!(ps("+X").conjugate_by_gate(&h0).unwrap(), ps("+Z"));
        assert_eq!(ps("+Y").conjugate_by_gate(&s0).unwrap(), ps("-X"));
        assert_eq!(ps("+YY").conjugate_by_gate(&cnot).unwrap(), ps("-XZ"));
        assert_eq!(ps("+ZI").conjugate_by_gate(&cnot).unwrap(), ps("+ZI"));
        assert_eq!(
            ps("+X").conjugate_by_gate(&Gate::h(1)),
            Err(PauliError::QubitOutOfRange { qubit: 1, n: 1 })
        );
    }

    #[test]
    fn conjugation_leaves_other_qubits_alone() {
        let p = ps("-YXZ");
        assert_eq!(p.conjugate_by_gate(&Gate::h(1)).unwrap(), ps("-YZZ"));
        assert_eq!(p.conjugate_by_gate(&Gate::cnot(2, 0)).unwrap(), ps("-YXI"));
    }

    #[test]
    fn text_round_trip_and_errors() {
        for s in ["+XZIY", "-IZ", "+I"] {
            assert_eq!(ps(s).to_string(), s);
        }
        for bad in ["", "+", "XZ", "+XQ", "*X"] {
            assert!(bad.parse::<PauliString>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn phased_to_signed() {
        let p = pauli_mul(&phased("+X"), &phased("+Z")).unwrap();
        assert_eq!(p.to_signed(), Err(PauliError::ImaginaryPhase(Phase::MinusI)));
        let q = PhasedPauli::from(ps("-XY"));
        assert_eq!(q.phase(), Phase::MinusOne);
        assert_eq!(q.to_signed().unwrap(), ps("-XY"));
    }
}
