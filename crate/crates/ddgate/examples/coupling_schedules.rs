//! The per-step coupling schedules that keep each gate Hamiltonian fixed
//! in the toggling frame, and what happens when one is wrong.

use ddgate::engine::DEFAULT_COUPLING;
use ddgate::model::coupling_operator;
use ddgate::sequence::{
    build_full_cycle, coupling_schedule, first_schedule_mismatch, CouplingForm, GateKind,
};

fn main() {
    let seq = build_full_cycle(0, 1).unwrap();
    for kind in GateKind::ALL {
        let sched = coupling_schedule(kind);
        let row: Vec<String> = sched
            .entries
            .iter()
            .map(|e| {
                let sign = if e.sign > 0 { '+' } else { '-' };
                match e.form {
                    CouplingForm::DoubleExcitation => format!("{sign}*"),
                    _ => sign.to_string(),
                }
            })
            .collect();
        println!("{kind:>8}: {}", row.join(" "));

        let target = coupling_operator(kind, sched.entries[0].form, DEFAULT_COUPLING);
        match first_schedule_mismatch(&seq, &sched, &target, DEFAULT_COUPLING).unwrap() {
            None => println!("          all 16 steps toggle back to the target"),
            Some(step) => println!("          MISMATCH at step {step}"),
        }
    }

    // corrupting one sign is caught, with the offending step named
    let mut broken = coupling_schedule(GateKind::Zz);
    broken.entries[8].sign = -broken.entries[8].sign;
    let target = coupling_operator(GateKind::Zz, CouplingForm::Plain, DEFAULT_COUPLING);
    let step = first_schedule_mismatch(&seq, &broken, &target, DEFAULT_COUPLING)
        .unwrap()
        .expect("corruption must be detected");
    println!("\nflipping one zz sign is detected at step {step}");
}
