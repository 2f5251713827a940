//! Gate and error Hamiltonians as dense two-qubit operators: the
//! drive/flip-flop Hamiltonian, the transmon effective coupling, the
//! plain ZZ/XX/ZX couplings, and the 15-channel stochastic error term.

use num_complex::Complex64;

use crate::operator::{c, CMatrix};
use crate::pauli::{Letter, PauliString};
use crate::sequence::{CouplingForm, GateKind};

fn sigma_plus() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(0., 0.), c(0., 0.)])
}

fn sigma_minus() -> CMatrix {
    sigma_plus().transpose()
}

fn embed_single(op: &CMatrix, qubit: usize) -> CMatrix {
    let id = CMatrix::identity(2, 2);
    match qubit {
        0 => op.kronecker(&id),
        1 => id.kronecker(op),
        _ => panic!("two-qubit register"),
    }
}

/// J(σ₊¹σ₋² + σ₋¹σ₊²): excitation exchange between the qubits.
pub fn build_flip_flop(coupling: f64) -> CMatrix {
    let sp = sigma_plus();
    let sm = sigma_minus();
    (sp.kronecker(&sm) + sm.kronecker(&sp)) * c(coupling, 0.0)
}

/// J(σ₊¹σ₊² + σ₋¹σ₋²): the "*" form, mapped back onto flip-flop by the
/// X-type frames.
pub fn build_double_excitation(coupling: f64) -> CMatrix {
    let sp = sigma_plus();
    let sm = sigma_minus();
    (sp.kronecker(&sp) + sm.kronecker(&sm)) * c(coupling, 0.0)
}

/// Drive-plus-coupling Hamiltonian δσ_z + Ω(e^{−iφ}σ₊ + e^{iφ}σ₋) on the
/// driven qubit, plus the flip-flop coupling.
#[derive(Debug, Clone, Copy)]
pub struct H1Params {
    pub detuning: f64,
    pub rabi: f64,
    pub drive_phase: f64,
    pub coupling: f64,
    /// Which qubit carries the single-qubit drive terms (0-based).
    pub drive_qubit: usize,
}

pub fn build_h1(p: &H1Params) -> CMatrix {
    let sz = Letter::Z.matrix();
    let drive = sz * c(p.detuning, 0.0)
        + sigma_plus() * Complex64::from_polar(p.rabi, -p.drive_phase)
        + sigma_minus() * Complex64::from_polar(p.rabi, p.drive_phase);
    embed_single(&drive, p.drive_qubit) + build_flip_flop(p.coupling)
}

/// Bessel function of the first kind J₁, by power series. Accurate to
/// better than 1e−10 on [0, 10].
pub fn bessel_j1(x: f64) -> f64 {
    let half = x / 2.0;
    let mut term = half;
    let mut sum = term;
    for m in 1..60 {
        term *= -(half * half) / (m as f64 * (m as f64 + 1.0));
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1e-30) {
            break;
        }
    }
    sum
}

/// Effective coupling g·J₁(β) of the frequency-modulated transmon pair.
pub fn effective_j(g: f64, beta: f64) -> f64 {
    g * bessel_j1(beta)
}

/// Frequency-modulated transmon coupling parameters. The modulation phase
/// varphi sets the sign of the effective coupling: varphi = π realizes −J.
#[derive(Debug, Clone, Copy)]
pub struct TransmonParams {
    pub g: f64,
    pub beta: f64,
    pub varphi: f64,
}

/// g·J₁(β)(σ₊¹σ₋²e^{−iφ} + σ₋¹σ₊²e^{iφ}).
pub fn build_transmon_coupling(p: &TransmonParams) -> CMatrix {
    let j = effective_j(p.g, p.beta);
    let sp = sigma_plus();
    let sm = sigma_minus();
    sp.kronecker(&sm) * Complex64::from_polar(j, -p.varphi)
        + sm.kronecker(&sp) * Complex64::from_polar(j, p.varphi)
}

/// Qubit-qubit coupling J′·σσ for the ZZ / XX / ZX gate Hamiltonians.
#[derive(Debug, Clone, Copy)]
pub struct H2Params {
    pub kind: GateKind,
    pub coupling: f64,
}

pub fn build_h2(p: &H2Params) -> CMatrix {
    let pair = match p.kind {
        GateKind::Zz => (Letter::Z, Letter::Z),
        GateKind::Xx => (Letter::X, Letter::X),
        GateKind::Zx => (Letter::Z, Letter::X),
        GateKind::FlipFlop => return build_flip_flop(p.coupling),
    };
    PauliString::pair(2, (0, pair.0), (1, pair.1))
        .to_matrix()
        .expect("two qubits")
        * c(p.coupling, 0.0)
}

/// The coupling operator a schedule entry asks for: sign folded into
/// `coupling`, form selecting flip-flop, double-excitation, or the gate's
/// own plain Pauli product.
pub fn coupling_operator(gate_kind: GateKind, form: CouplingForm, coupling: f64) -> CMatrix {
    match form {
        CouplingForm::FlipFlop => build_flip_flop(coupling),
        CouplingForm::DoubleExcitation => build_double_excitation(coupling),
        CouplingForm::Plain => build_h2(&H2Params {
            kind: gate_kind,
            coupling,
        }),
    }
}

/// The 15 stochastic error channels: six single-qubit strengths followed
/// by the nine two-qubit coupling strengths, all in rad/s.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ErrorCoefficients {
    pub d1x: f64,
    pub d1y: f64,
    pub d1z: f64,
    pub d2x: f64,
    pub d2y: f64,
    pub d2z: f64,
    pub dxx: f64,
    pub dyy: f64,
    pub dzz: f64,
    pub dxy: f64,
    pub dyx: f64,
    pub dxz: f64,
    pub dzx: f64,
    pub dyz: f64,
    pub dzy: f64,
}

pub const N_ERROR_CHANNELS: usize = 15;

pub const ERROR_CHANNEL_NAMES: [&str; N_ERROR_CHANNELS] = [
    "d1x", "d1y", "d1z", "d2x", "d2y", "d2z", "dxx", "dyy", "dzz", "dxy", "dyx", "dxz", "dzx",
    "dyz", "dzy",
];

impl ErrorCoefficients {
    pub fn from_array(a: [f64; N_ERROR_CHANNELS]) -> ErrorCoefficients {
        ErrorCoefficients {
            d1x: a[0],
            d1y: a[1],
            d1z: a[2],
            d2x: a[3],
            d2y: a[4],
            d2z: a[5],
            dxx: a[6],
            dyy: a[7],
            dzz: a[8],
            dxy: a[9],
            dyx: a[10],
            dxz: a[11],
            dzx: a[12],
            dyz: a[13],
            dzy: a[14],
        }
    }

    pub fn as_array(&self) -> [f64; N_ERROR_CHANNELS] {
        [
            self.d1x, self.d1y, self.d1z, self.d2x, self.d2y, self.d2z, self.dxx, self.dyy,
            self.dzz, self.dxy, self.dyx, self.dxz, self.dzx, self.dyz, self.dzy,
        ]
    }

    /// The Pauli operator of each channel, in `as_array` order.
    pub fn operators() -> Vec<PauliString> {
        use Letter::{X, Y, Z};
        vec![
            PauliString::single(2, 0, X),
            PauliString::single(2, 0, Y),
            PauliString::single(2, 0, Z),
            PauliString::single(2, 1, X),
            PauliString::single(2, 1, Y),
            PauliString::single(2, 1, Z),
            PauliString::pair(2, (0, X), (1, X)),
            PauliString::pair(2, (0, Y), (1, Y)),
            PauliString::pair(2, (0, Z), (1, Z)),
            PauliString::pair(2, (0, X), (1, Y)),
            PauliString::pair(2, (0, Y), (1, X)),
            PauliString::pair(2, (0, X), (1, Z)),
            PauliString::pair(2, (0, Z), (1, X)),
            PauliString::pair(2, (0, Y), (1, Z)),
            PauliString::pair(2, (0, Z), (1, Y)),
        ]
    }
}

/// Σ over all 15 channels of coefficient × Pauli operator.
pub fn build_error_hamiltonian(coeffs: &ErrorCoefficients) -> CMatrix {
    let mut h = CMatrix::zeros(4, 4);
    for (&k, op) in coeffs
        .as_array()
        .iter()
        .zip(ErrorCoefficients::operators())
    {
        h += op.to_matrix().expect("two qubits") * c(k, 0.0);
    }
    h
}
