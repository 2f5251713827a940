//! Removing an always-on sigma_z sigma_z crosstalk term.
//!
//! A static 2pi*2 MHz zz coupling rides along with the flip-flop gate.
//! It commutes with nothing useful in the drive, so the bare gate picks
//! up a large coherent error; the cycle averages it away.

use ddgate::engine::{
    crosstalk_scenario, ideal_gate, process_fidelity, silent_trajectory, Scheme, SimulationPlan,
    DEFAULT_ANGLE, TWO_PI,
};
use ddgate::noise::{PulseErrorModel, RngStream, StreamPurpose};
use ddgate::sequence::GateKind;

fn main() {
    let strength = TWO_PI * 2.0e6;
    let target = ideal_gate(GateKind::FlipFlop, DEFAULT_ANGLE);
    for (label, scheme) in [("unprotected", Scheme::NoDd), ("protected", Scheme::Dd)] {
        let plan = SimulationPlan::standard(GateKind::FlipFlop, scheme, PulseErrorModel::Ideal);
        let trajectory = silent_trajectory(&plan, 50);
        let mut zeta = RngStream::new(0, 0, StreamPurpose::Zeta).rng();
        let result = crosstalk_scenario(&plan, strength, &trajectory, &mut zeta).unwrap();
        let f = process_fidelity(&target, &result.propagator);
        println!("{label:>12}: process fidelity {f:.6}");
    }
}
