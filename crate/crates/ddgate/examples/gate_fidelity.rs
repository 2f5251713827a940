//! Average gate fidelity of one protected gate under stochastic noise.
//!
//! Defaults mirror the headline setting: flip-flop gate, uniform error
//! amplitudes in [2pi*1, 2pi*10] MHz redrawn in 800 segments per cycle,
//! faulty pi/2 pulses with zeta ~ N(pi/500, pi/500), 50 Haar states.

use ddgate::cli::{run_fidelity, ExperimentConfig};

fn main() {
    let mut cfg = ExperimentConfig::default();
    cfg.set("gate", "u3").unwrap();
    cfg.set("pulse_model", "gauss1").unwrap();

    for (label, scheme) in [("unprotected", "none"), ("protected", "dd")] {
        cfg.set("scheme", scheme).unwrap();
        let report = run_fidelity(&cfg).unwrap();
        println!(
            "{label:>12}: F = {:.4} +/- {:.4}  ({} states)",
            report.mean, report.std, report.n_states
        );
    }
}
