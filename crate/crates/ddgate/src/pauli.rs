//! Signed multi-qubit Pauli strings with exact fourth-root-of-unity phase
//! tracking, plus dense matrix realization for one and two qubits.
//!
//! The symbolic layer (multiplication, conjugation) works for any qubit
//! count and never touches floating point, so it can serve as the oracle
//! for sequence verification. Matrices are only produced for n ∈ {1, 2}.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{DdError, Result};
use crate::operator::CMatrix;

/// One of the four single-qubit Pauli letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::I, Letter::X, Letter::Y, Letter::Z];

    pub fn as_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }

    fn from_char(c: char) -> Option<Letter> {
        match c {
            'I' => Some(Letter::I),
            'X' => Some(Letter::X),
            'Y' => Some(Letter::Y),
            'Z' => Some(Letter::Z),
            _ => None,
        }
    }

    /// Single-qubit product a·b as (phase, letter).
    fn mul(a: Letter, b: Letter) -> (Phase, Letter) {
        use Letter::*;
        match (a, b) {
            (I, l) | (l, I) => (Phase::PlusOne, l),
            (X, X) | (Y, Y) | (Z, Z) => (Phase::PlusOne, I),
            (X, Y) => (Phase::PlusI, Z),
            (Y, X) => (Phase::MinusI, Z),
            (Y, Z) => (Phase::PlusI, X),
            (Z, Y) => (Phase::MinusI, X),
            (Z, X) => (Phase::PlusI, Y),
            (X, Z) => (Phase::MinusI, Y),
        }
    }

    pub fn matrix(self) -> CMatrix {
        let z = Complex64::new(0.0, 0.0);
        let o = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        match self {
            Letter::I => CMatrix::from_row_slice(2, 2, &[o, z, z, o]),
            Letter::X => CMatrix::from_row_slice(2, 2, &[z, o, o, z]),
            Letter::Y => CMatrix::from_row_slice(2, 2, &[z, -i, i, z]),
            Letter::Z => CMatrix::from_row_slice(2, 2, &[o, z, z, -o]),
        }
    }
}

/// Element of {+1, −1, +i, −i}, stored as the exponent of i modulo 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phase {
    PlusOne,
    PlusI,
    MinusOne,
    MinusI,
}

impl Phase {
    fn i_power(self) -> u8 {
        match self {
            Phase::PlusOne => 0,
            Phase::PlusI => 1,
            Phase::MinusOne => 2,
            Phase::MinusI => 3,
        }
    }

    fn from_i_power(k: u8) -> Phase {
        match k % 4 {
            0 => Phase::PlusOne,
            1 => Phase::PlusI,
            2 => Phase::MinusOne,
            _ => Phase::MinusI,
        }
    }

    pub fn mul(self, other: Phase) -> Phase {
        Phase::from_i_power(self.i_power() + other.i_power())
    }

    pub fn conj(self) -> Phase {
        Phase::from_i_power((4 - self.i_power()) % 4)
    }

    pub fn is_real(self) -> bool {
        matches!(self, Phase::PlusOne | Phase::MinusOne)
    }

    /// The sign for a real phase; panics on ±i.
    pub fn sign(self) -> i32 {
        match self {
            Phase::PlusOne => 1,
            Phase::MinusOne => -1,
            _ => panic!("phase {self:?} has no real sign"),
        }
    }

    pub fn value(self) -> Complex64 {
        match self {
            Phase::PlusOne => Complex64::new(1.0, 0.0),
            Phase::PlusI => Complex64::new(0.0, 1.0),
            Phase::MinusOne => Complex64::new(-1.0, 0.0),
            Phase::MinusI => Complex64::new(0.0, -1.0),
        }
    }

    fn prefix(self) -> &'static str {
        match self {
            Phase::PlusOne => "+",
            Phase::MinusOne => "-",
            Phase::PlusI => "+i",
            Phase::MinusI => "-i",
        }
    }
}

/// A signed multi-qubit Pauli operator: phase × letter⊗letter⊗…
///
/// Immutable after construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    letters: Vec<Letter>,
    phase: Phase,
}

impl PauliString {
    pub fn new(letters: Vec<Letter>, phase: Phase) -> PauliString {
        assert!(!letters.is_empty(), "Pauli string needs at least one qubit");
        PauliString { letters, phase }
    }

    pub fn identity(n_qubits: usize) -> PauliString {
        PauliString::new(vec![Letter::I; n_qubits], Phase::PlusOne)
    }

    /// A single non-trivial letter on `qubit` (0-based), identity elsewhere.
    pub fn single(n_qubits: usize, qubit: usize, letter: Letter) -> PauliString {
        assert!(qubit < n_qubits);
        let mut letters = vec![Letter::I; n_qubits];
        letters[qubit] = letter;
        PauliString::new(letters, Phase::PlusOne)
    }

    /// Two letters on two distinct qubits (0-based), identity elsewhere.
    pub fn pair(n_qubits: usize, a: (usize, Letter), b: (usize, Letter)) -> PauliString {
        assert!(a.0 < n_qubits && b.0 < n_qubits && a.0 != b.0);
        let mut letters = vec![Letter::I; n_qubits];
        letters[a.0] = a.1;
        letters[b.0] = b.1;
        PauliString::new(letters, Phase::PlusOne)
    }

    pub fn n_qubits(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn with_phase(&self, phase: Phase) -> PauliString {
        PauliString::new(self.letters.clone(), phase)
    }

    /// The same string with phase reset to +1.
    pub fn unsigned(&self) -> PauliString {
        self.with_phase(Phase::PlusOne)
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.letters.iter().all(|&l| l == Letter::I)
    }

    /// Group product a·b with exact phase tracking.
    pub fn multiply(a: &PauliString, b: &PauliString) -> Result<PauliString> {
        if a.n_qubits() != b.n_qubits() {
            return Err(DdError::QubitCountMismatch(a.n_qubits(), b.n_qubits()));
        }
        let mut phase = a.phase.mul(b.phase);
        let mut letters = Vec::with_capacity(a.n_qubits());
        for (&la, &lb) in a.letters.iter().zip(&b.letters) {
            let (p, l) = Letter::mul(la, lb);
            phase = phase.mul(p);
            letters.push(l);
        }
        Ok(PauliString::new(letters, phase))
    }

    /// Conjugation P·E·P by a phase-+1 pulse P. Since such a P squares to
    /// the identity, this equals P·E·P⁻¹ and the result is ±E.
    pub fn conjugate(pulse: &PauliString, error: &PauliString) -> Result<PauliString> {
        if pulse.phase != Phase::PlusOne {
            return Err(DdError::PulsePhase(pulse.phase.prefix().to_string()));
        }
        let pe = PauliString::multiply(pulse, error)?;
        let result = PauliString::multiply(&pe, pulse)?;
        debug_assert!(result.phase.mul(error.phase.conj()).is_real());
        debug_assert_eq!(result.letters, error.letters);
        Ok(result)
    }

    /// The sign s with conjugate(pulse, error) = s·error, for phase-+1 inputs.
    pub fn conjugation_sign(pulse: &PauliString, error: &PauliString) -> Result<i32> {
        let conj = PauliString::conjugate(pulse, error)?;
        Ok(conj.phase.mul(error.phase.conj()).sign())
    }

    /// Dense matrix realization, phase included. Only n ∈ {1, 2}.
    pub fn to_matrix(&self) -> Result<CMatrix> {
        let mut m = match self.n_qubits() {
            1 => self.letters[0].matrix(),
            2 => self.letters[0].matrix().kronecker(&self.letters[1].matrix()),
            n => return Err(DdError::UnsupportedQubitCount(n)),
        };
        m *= self.phase.value();
        Ok(m)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.phase.prefix())?;
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = DdError;

    /// Parses the text form "±[IXYZ]{n}", with "+i"/"-i" for imaginary
    /// phases and the "+" optional.
    fn from_str(s: &str) -> Result<PauliString> {
        let bad = || DdError::ParsePauli(s.to_string());
        let (phase, rest) = if let Some(r) = s.strip_prefix("+i") {
            (Phase::PlusI, r)
        } else if let Some(r) = s.strip_prefix("-i") {
            (Phase::MinusI, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (Phase::PlusOne, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (Phase::MinusOne, r)
        } else {
            (Phase::PlusOne, s)
        };
        if rest.is_empty() {
            return Err(bad());
        }
        let letters = rest
            .chars()
            .map(Letter::from_char)
            .collect::<Option<Vec<_>>>()
            .ok_or_else(bad)?;
        Ok(PauliString::new(letters, phase))
    }
}
