//! Dense complex matrices on the 2ⁿ-dimensional state space and the small
//! linear-algebra helpers shared by the Hamiltonian and propagation layers.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{DdError, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Largest entrywise |a − b|.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// max |H − H†| over entries.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    max_abs_diff(m, &m.adjoint())
}

/// max |U†U − I| over entries.
pub fn unitarity_defect(u: &CMatrix) -> f64 {
    let n = u.nrows();
    max_abs_diff(&(u.adjoint() * u), &CMatrix::identity(n, n))
}

/// exp(−i·H·dt) for Hermitian H, via eigendecomposition. The result is
/// unitary to machine precision for any dt.
pub fn expm_hermitian(h: &CMatrix, dt: f64) -> Result<CMatrix> {
    let defect = hermiticity_defect(h);
    if defect > 1e-9 {
        return Err(DdError::NotHermitian(defect));
    }
    let eig = nalgebra::SymmetricEigen::new(h.clone());
    let phases: Vec<Complex64> = eig
        .eigenvalues
        .iter()
        .map(|&l| Complex64::from_polar(1.0, -l * dt))
        .collect();
    let d = CMatrix::from_diagonal(&CVector::from_vec(phases));
    Ok(&eig.eigenvectors * d * eig.eigenvectors.adjoint())
}
