//! Random-state average gate fidelity estimation.
//!
//! The dynamics is unitary (coherent noise only), so fidelity is the
//! pure-state overlap |⟨ψ_ideal|ψ_actual⟩|². Trials run in parallel but
//! reduce in trial order, so reports are seed-stable regardless of the
//! thread count.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::noise::{RngStream, StreamPurpose};
use crate::operator::{CMatrix, CVector};

/// Haar-uniform pure state: four independent standard complex Gaussians,
/// normalized.
pub fn random_state(rng: &mut impl Rng) -> CVector {
    let mut v = CVector::from_fn(4, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let norm = v.norm();
    v /= Complex64::new(norm, 0.0);
    v
}

/// |⟨ideal|actual⟩|² for unit-norm states.
pub fn state_fidelity(ideal: &CVector, actual: &CVector) -> f64 {
    ideal.dotc(actual).norm_sqr()
}

#[derive(Debug, Clone)]
pub struct FidelityReport {
    pub mean: f64,
    /// Unbiased sample standard deviation (0 for a single state).
    pub std: f64,
    pub n_states: usize,
    pub per_state: Vec<f64>,
}

impl FidelityReport {
    fn from_values(per_state: Vec<f64>) -> FidelityReport {
        let n = per_state.len();
        let mean = per_state.iter().sum::<f64>() / n as f64;
        let std = if n > 1 {
            (per_state.iter().map(|f| (f - mean).powi(2)).sum::<f64>() / (n - 1) as f64).sqrt()
        } else {
            0.0
        };
        FidelityReport {
            mean,
            std,
            n_states: n,
            per_state,
        }
    }
}

/// Mean over `n_states` Haar draws of |⟨U_ideal ψ | U_actual(trial) ψ⟩|².
/// `u_actual` receives the trial index so each state can pair with its
/// own noise realization.
pub fn average_gate_fidelity<F>(
    u_ideal: &CMatrix,
    n_states: usize,
    master_seed: u64,
    u_actual: F,
) -> FidelityReport
where
    F: Fn(u64) -> CMatrix + Sync,
{
    assert!(n_states >= 1, "need at least one state");
    let per_state: Vec<f64> = (0..n_states as u64)
        .into_par_iter()
        .map(|trial| {
            let mut rng = RngStream::new(master_seed, trial, StreamPurpose::State).rng();
            let psi = random_state(&mut rng);
            let ideal = u_ideal * &psi;
            let actual = u_actual(trial) * &psi;
            state_fidelity(&ideal, &actual)
        })
        .collect();
    FidelityReport::from_values(per_state)
}
