//! End-to-end acceptance suite. Each test prints one PASS line with the
//! measured numbers; run with `cargo test --test acceptance -- --nocapture`
//! to see them.

use ddgate::cli::{cmd_run, cmd_table2, ExperimentConfig};
use ddgate::engine::{
    crosstalk_scenario, ideal_gate, process_fidelity, silent_trajectory, simulate, Integrator,
    Scheme, SimulationPlan, DEFAULT_ANGLE, DEFAULT_COUPLING, TWO_PI,
};
use ddgate::noise::{NoiseTrajectory, PulseErrorModel, RngStream, StreamPurpose};
use ddgate::pauli::{Letter, PauliString};
use ddgate::sequence::{
    build_full_cycle, build_nested_cycle, build_x_sequence, build_z_sequence, coupling_schedule,
    error_set, first_schedule_mismatch, verify_schedule, GateKind,
};

fn zeta_rng(seed: u64) -> impl rand::Rng {
    RngStream::new(seed, 0, StreamPurpose::Zeta).rng()
}

#[test]
fn c1_first_order_cancellation() {
    let x_survivors = ["+XI", "+IX", "+XX"];
    let z_survivors = ["+ZI", "+IZ", "+ZZ"];
    let x_seq = build_x_sequence(0, 1).unwrap();
    let z_seq = build_z_sequence(0, 1).unwrap();
    let full = build_full_cycle(0, 1).unwrap();
    for error in error_set(0, 1) {
        let name = error.to_string();
        let expect_x = if x_survivors.contains(&name.as_str()) { 4 } else { 0 };
        let expect_z = if z_survivors.contains(&name.as_str()) { 4 } else { 0 };
        assert_eq!(x_seq.first_order_sum(&error).unwrap(), expect_x, "X-type on {name}");
        assert_eq!(z_seq.first_order_sum(&error).unwrap(), expect_z, "Z-type on {name}");
        assert_eq!(full.first_order_sum(&error).unwrap(), 0, "full cycle on {name}");
    }
    assert_eq!(
        build_nested_cycle(0, 1).unwrap().toggling_frames(),
        full.toggling_frames()
    );
    println!("PASS c1: X/Z sequences each leave exactly their 3 commuting operators; full 16-step cycle cancels all 15");
}

#[test]
fn c2_coupling_schedules_verify() {
    let seq = build_full_cycle(0, 1).unwrap();
    for kind in GateKind::ALL {
        let sched = coupling_schedule(kind);
        let target = ddgate::model::coupling_operator(kind, sched.entries[0].form, DEFAULT_COUPLING);
        assert!(
            verify_schedule(&seq, &sched, &target, DEFAULT_COUPLING).unwrap(),
            "schedule {kind} failed"
        );
        // one flipped sign must be caught at that exact step
        let mut broken = sched.clone();
        broken.entries[10].sign = -broken.entries[10].sign;
        assert_eq!(
            first_schedule_mismatch(&seq, &broken, &target, DEFAULT_COUPLING).unwrap(),
            Some(11),
            "corruption in {kind} not localized"
        );
    }
    println!("PASS c2: 4/4 coupling schedules verified to 1e-12; single-sign corruption localized");
}

#[test]
fn c3_fidelity_table_bands() {
    let mut worst_no_dd = (1.0f64, 0.0f64);
    let mut worst = Vec::new();
    for seed in 1..=5u64 {
        let mut cfg = ExperimentConfig::default();
        cfg.seed = seed;
        let csv = cmd_table2(&cfg).unwrap();
        for line in csv.lines().skip(1) {
            let f: Vec<&str> = line.split(',').collect();
            let (gate, column) = (f[0], f[1]);
            let no_dd: f64 = f[2].parse().unwrap();
            let dd: f64 = f[3].parse().unwrap();
            worst_no_dd = (worst_no_dd.0.min(no_dd), worst_no_dd.1.max(no_dd));
            assert!(
                (0.10..=0.45).contains(&no_dd),
                "seed {seed} {gate} {column}: unprotected {no_dd} outside [0.10, 0.45]"
            );
            let floor = match (gate, column) {
                (_, "iDD") => 0.985,
                ("u3", "DD1") => 0.980,
                ("ue1", "DD1") => 0.975,
                (_, "DD2") => 0.965,
                other => panic!("unexpected table cell {other:?}"),
            };
            assert!(
                dd >= floor,
                "seed {seed} {gate} {column}: protected {dd} below {floor}"
            );
            worst.push(dd);
        }
    }
    let min_dd = worst.iter().cloned().fold(1.0, f64::min);
    println!(
        "PASS c3: 5 seeds x 6 cells in band; unprotected in [{:.3}, {:.3}], worst protected {:.4}",
        worst_no_dd.0, worst_no_dd.1, min_dd
    );
}

#[test]
fn c4_zero_noise_exactness() {
    let mut worst = 0.0f64;
    for kind in GateKind::ALL {
        for scheme in [Scheme::NoDd, Scheme::Dd] {
            let plan = SimulationPlan::standard(kind, scheme, PulseErrorModel::Ideal);
            let trajectory = silent_trajectory(&plan, 1);
            let result = simulate(&plan, &trajectory, &mut zeta_rng(0)).unwrap();
            let target = ideal_gate(kind, DEFAULT_ANGLE);
            let infidelity = 1.0 - process_fidelity(&target, &result.propagator);
            assert!(
                infidelity < 1e-9,
                "{kind} / {scheme:?}: zero-noise infidelity {infidelity:.3e}"
            );
            worst = worst.max(infidelity);
        }
    }
    println!("PASS c4: 4 gates x 2 schemes recover the ideal gate; worst zero-noise infidelity {worst:.2e}");
}

#[test]
fn c5_suppression_scaling() {
    let base = TWO_PI * 20.0e6;
    let infidelity = |scale: f64| {
        let plan = SimulationPlan::new(
            GateKind::FlipFlop,
            DEFAULT_ANGLE,
            DEFAULT_COUPLING,
            1,
            PulseErrorModel::Ideal,
            Integrator::SegmentExponential,
            Scheme::Dd,
        )
        .unwrap();
        let trajectory =
            NoiseTrajectory::constant(plan.total_intervals() * 50, plan.tau / 50.0, base * scale);
        let result = simulate(&plan, &trajectory, &mut zeta_rng(0)).unwrap();
        let target = ideal_gate(GateKind::FlipFlop, DEFAULT_ANGLE);
        1.0 - process_fidelity(&target, &result.propagator)
    };
    let f1 = infidelity(1.0);
    let f2 = infidelity(0.5);
    let f4 = infidelity(0.25);
    assert!(f1 > f2 && f2 > f4, "infidelity not monotone: {f1} {f2} {f4}");
    let slope = (f1 / f4).ln() / 4.0f64.ln();
    assert!(
        slope >= 3.0,
        "log-log suppression slope {slope:.3} below 3.0 (infidelities {f1:.3e}, {f2:.3e}, {f4:.3e})"
    );
    println!("PASS c5: constant-noise infidelity slope {slope:.3} >= 3.0 over a 4x strength range");
}

#[test]
fn c6_static_crosstalk_removed() {
    let strength = TWO_PI * 2.0e6;
    let target = ideal_gate(GateKind::FlipFlop, DEFAULT_ANGLE);
    let run = |scheme| {
        let plan = SimulationPlan::standard(GateKind::FlipFlop, scheme, PulseErrorModel::Ideal);
        let trajectory = silent_trajectory(&plan, 50);
        let result = crosstalk_scenario(&plan, strength, &trajectory, &mut zeta_rng(0)).unwrap();
        process_fidelity(&target, &result.propagator)
    };
    let bare = run(Scheme::NoDd);
    let protected = run(Scheme::Dd);
    assert!(protected > bare, "protection did not help: {protected} vs {bare}");
    assert!(protected >= 0.99, "protected fidelity {protected} below 0.99");
    println!("PASS c6: static zz crosstalk fidelity {bare:.4} -> {protected:.6} under the cycle");
}

#[test]
fn c7_symbolic_matches_matrix_conjugation() {
    let axes = [Letter::I, Letter::X, Letter::Y, Letter::Z];
    let mut pairs = Vec::new();
    for &a in &axes {
        for &b in &axes {
            pairs.push(PauliString::pair(2, (0, a), (1, b)));
        }
    }
    let mut checked = 0;
    for pulse in &pairs {
        let pm = pulse.to_matrix().unwrap();
        for error in &pairs {
            let symbolic = PauliString::conjugate(pulse, error)
                .unwrap()
                .to_matrix()
                .unwrap();
            let numeric = &pm * error.to_matrix().unwrap() * pm.adjoint();
            assert!(
                ddgate::operator::max_abs_diff(&symbolic, &numeric) < 1e-12,
                "mismatch conjugating {error} by {pulse}"
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 256);
    println!("PASS c7: symbolic conjugation matches matrix conjugation on all 256 operator pairs");
}

#[test]
fn c8_deterministic_output() {
    let mut cfg = ExperimentConfig::default();
    cfg.set("gate", "ue1").unwrap();
    cfg.set("scheme", "dd").unwrap();
    cfg.set("pulse_model", "gauss1").unwrap();
    cfg.n_states = 12;
    cfg.seed = 9;
    let a = cmd_run(&cfg).unwrap();
    let b = cmd_run(&cfg).unwrap();
    assert_eq!(a, b, "repeated runs differ");
    let single_threaded = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| cmd_run(&cfg).unwrap());
    assert_eq!(a, single_threaded, "output depends on thread count");
    println!("PASS c8: byte-identical CSV across repeated runs and thread counts");
}
