//! How faulty pulses erode the protection.
//!
//! Sweeps the systematic rotation-angle error zeta (mean = std, as in
//! the two Gaussian models) and reports the protected flip-flop gate
//! fidelity with no other noise present. The pi/500 and pi/200 models
//! bracket the first two rows of the sweep.

use std::f64::consts::PI;

use ddgate::cli::{run_fidelity, ExperimentConfig};

fn main() {
    let mut cfg = ExperimentConfig::default();
    cfg.set("gate", "u3").unwrap();
    cfg.set("scheme", "dd").unwrap();
    // pulse errors only: pin the stochastic channels to zero
    cfg.noise_lo = 0.0;
    cfg.noise_hi = 0.0;
    cfg.segments_per_cycle = 16;
    cfg.n_states = 30;

    println!("zeta_scale,mean_fidelity,std");
    for denom in [500.0, 200.0, 100.0, 50.0] {
        let z = PI / denom;
        cfg.set("pulse_model", &format!("custom({z},{z})")).unwrap();
        let report = run_fidelity(&cfg).unwrap();
        println!("pi/{denom:.0},{:.6},{:.6}", report.mean, report.std);
    }
}
