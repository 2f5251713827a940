//! Time-ordered propagation of H_T = H_S + H_e through DD cycles:
//! scheduled couplings, instantaneous (possibly over-rotated) pulses, and
//! multi-cycle repetition.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{DdError, Result};
use crate::model::{build_error_hamiltonian, coupling_operator, ErrorCoefficients};
use crate::noise::{sample_zeta, NoiseTrajectory, PulseErrorModel};
use crate::operator::{c, expm_hermitian, unitarity_defect, CMatrix};
use crate::pauli::{Letter, PauliString};
use crate::sequence::{
    build_full_cycle, coupling_schedule, CouplingForm, CouplingSchedule, DDSequence, GateKind,
    Step,
};

pub const TWO_PI: f64 = std::f64::consts::TAU;

/// Default coupling strength J = 2π × 10 MHz.
pub const DEFAULT_COUPLING: f64 = TWO_PI * 10.0e6;

/// Default gate angle γ = ξ = π/4.
pub const DEFAULT_ANGLE: f64 = std::f64::consts::FRAC_PI_4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Integrator {
    /// Exact exp(−iHΔt) per constant-H segment.
    SegmentExponential,
    /// Fixed-substep 4th-order Runge–Kutta on dU/dt = −iHU, kept as an
    /// independent cross-check of the exponential path.
    RungeKutta4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// No pulses; the unscheduled +J target Hamiltonian throughout.
    NoDd,
    /// Sequence pulses plus the per-step coupling schedule.
    Dd,
}

/// Everything one propagation needs except the stochastic inputs.
#[derive(Debug, Clone)]
pub struct SimulationPlan {
    pub gate_kind: GateKind,
    pub sequence: DDSequence,
    pub schedule: CouplingSchedule,
    /// Seconds per evolution interval.
    pub tau: f64,
    pub n_cycles: usize,
    /// J (or J′) in rad/s; the schedule signs act on this.
    pub coupling: f64,
    pub pulse_error: PulseErrorModel,
    pub integrator: Integrator,
    pub scheme: Scheme,
    /// Static σ_z¹σ_z² crosstalk strength in rad/s, fixed sign, never
    /// scheduled.
    pub crosstalk_zz: f64,
}

impl SimulationPlan {
    /// Plan reaching total gate angle `angle` = |J|·16τ·n_cycles at the
    /// given coupling, with the 16-step cycle on qubits (0, 1).
    pub fn new(
        gate_kind: GateKind,
        angle: f64,
        coupling: f64,
        n_cycles: usize,
        pulse_error: PulseErrorModel,
        integrator: Integrator,
        scheme: Scheme,
    ) -> Result<SimulationPlan> {
        if n_cycles == 0 || coupling <= 0.0 {
            return Err(DdError::Config(
                "need n_cycles >= 1 and a positive coupling".into(),
            ));
        }
        let sequence = build_full_cycle(0, 1)?;
        let tau = angle / (coupling * sequence.cycle_intervals() as f64 * n_cycles as f64);
        Ok(SimulationPlan {
            gate_kind,
            schedule: coupling_schedule(gate_kind),
            sequence,
            tau,
            n_cycles,
            coupling,
            pulse_error,
            integrator,
            scheme,
            crosstalk_zz: 0.0,
        })
    }

    /// Reference defaults: J = 2π×10 MHz, γ = ξ = π/4.
    pub fn standard(gate_kind: GateKind, scheme: Scheme, pulse_error: PulseErrorModel) -> SimulationPlan {
        SimulationPlan::new(
            gate_kind,
            DEFAULT_ANGLE,
            DEFAULT_COUPLING,
            1,
            pulse_error,
            Integrator::SegmentExponential,
            scheme,
        )
        .expect("valid defaults")
    }

    pub fn total_time(&self) -> f64 {
        self.tau * self.sequence.cycle_intervals() as f64 * self.n_cycles as f64
    }

    pub fn total_intervals(&self) -> usize {
        self.sequence.cycle_intervals() * self.n_cycles
    }
}

#[derive(Debug, Clone)]
pub struct PropagationResult {
    pub propagator: CMatrix,
    /// Toggling frames of one cycle, for diagnostics.
    pub frames: Vec<PauliString>,
    pub unitarity_defect: f64,
}

/// One row of the optional per-run trace, sampled at interval boundaries.
#[derive(Debug, Clone)]
pub struct TraceRow {
    pub time: f64,
    pub interval: usize,
    pub frame: String,
    /// Haar-average fidelity of the accumulated propagator to the target.
    pub fidelity_to_target: f64,
}

pub fn trace_to_csv(rows: &[TraceRow]) -> String {
    let mut out = String::from("time,interval,frame,fidelity_to_target\n");
    for r in rows {
        out.push_str(&format!(
            "{:.6e},{},{},{:.9}\n",
            r.time, r.interval, r.frame, r.fidelity_to_target
        ));
    }
    out
}

/// exp(−iHΔt) for a Hermitian segment Hamiltonian.
pub fn segment_propagator(h: &CMatrix, dt: f64) -> Result<CMatrix> {
    expm_hermitian(h, dt)
}

/// RK4 propagation of dU/dt = −iHU over dt with H constant, substepped so
/// the truncation error stays below the unitarity budget.
pub fn segment_propagator_rk4(h: &CMatrix, dt: f64, u: &CMatrix) -> CMatrix {
    let norm = h.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let n_sub = ((norm * dt / 0.005).ceil() as usize).max(1);
    let hstep = dt / n_sub as f64;
    let minus_i = c(0.0, -1.0);
    let mut u = u.clone();
    for _ in 0..n_sub {
        let k1 = h * &u * minus_i;
        let k2 = h * (&u + &k1 * c(hstep / 2.0, 0.0)) * minus_i;
        let k3 = h * (&u + &k2 * c(hstep / 2.0, 0.0)) * minus_i;
        let k4 = h * (&u + &k3 * c(hstep, 0.0)) * minus_i;
        u += (k1 + k2 * c(2.0, 0.0) + k3 * c(2.0, 0.0) + k4) * c(hstep / 6.0, 0.0);
    }
    u
}

/// Unitary of one applied pulse: the product over each non-identity
/// single-qubit factor of exp(−i(π/2 + ζ)σ), with an independent ζ per
/// factor. Only X and Z factors are realizable.
pub fn apply_pulse(
    pulse: &PauliString,
    model: &PulseErrorModel,
    rng: &mut impl Rng,
) -> Result<CMatrix> {
    if pulse.phase() != crate::pauli::Phase::PlusOne {
        return Err(DdError::PulsePhase(pulse.to_string()));
    }
    let mut factors = Vec::with_capacity(pulse.n_qubits());
    for &letter in pulse.letters() {
        let f = match letter {
            Letter::I => CMatrix::identity(2, 2),
            Letter::X | Letter::Z => {
                let angle = std::f64::consts::FRAC_PI_2 + sample_zeta(rng, model);
                CMatrix::identity(2, 2) * c(angle.cos(), 0.0)
                    + letter.matrix() * c(0.0, -angle.sin())
            }
            Letter::Y => return Err(DdError::UnsupportedPulseLetter('Y')),
        };
        factors.push(f);
    }
    let mut u = factors[0].clone();
    for f in &factors[1..] {
        u = u.kronecker(f);
    }
    Ok(u)
}

/// The target gate in closed form.
pub fn ideal_gate(gate_kind: GateKind, angle: f64) -> CMatrix {
    match gate_kind {
        GateKind::FlipFlop => {
            // identity on {|00>,|11>}, a cos/sin block on {|01>,|10>}
            let mut u = CMatrix::identity(4, 4);
            u[(1, 1)] = c(angle.cos(), 0.0);
            u[(2, 2)] = c(angle.cos(), 0.0);
            u[(1, 2)] = c(0.0, -angle.sin());
            u[(2, 1)] = c(0.0, -angle.sin());
            u
        }
        kind => {
            // P² = I, so exp(−iθP) = cos θ·I − i sin θ·P
            let p = coupling_operator(kind, CouplingForm::Plain, 1.0);
            CMatrix::identity(4, 4) * c(angle.cos(), 0.0) + p * c(0.0, -angle.sin())
        }
    }
}

fn system_hamiltonian(plan: &SimulationPlan, interval: usize) -> CMatrix {
    let target_form = match plan.gate_kind {
        GateKind::FlipFlop => CouplingForm::FlipFlop,
        _ => CouplingForm::Plain,
    };
    match plan.scheme {
        Scheme::NoDd => coupling_operator(plan.gate_kind, target_form, plan.coupling),
        Scheme::Dd => {
            let entry = plan.schedule.entries[interval];
            coupling_operator(
                plan.gate_kind,
                entry.form,
                entry.sign as f64 * plan.coupling,
            )
        }
    }
}

fn crosstalk_term(plan: &SimulationPlan) -> CMatrix {
    let mut coeffs = ErrorCoefficients::default();
    coeffs.dzz = plan.crosstalk_zz;
    build_error_hamiltonian(&coeffs)
}

/// Time-ordered product over all segments and pulses.
pub fn simulate(
    plan: &SimulationPlan,
    trajectory: &NoiseTrajectory,
    zeta_rng: &mut impl Rng,
) -> Result<PropagationResult> {
    let (result, _) = propagate(plan, trajectory, zeta_rng, None)?;
    Ok(result)
}

/// As [`simulate`], also recording one trace row per interval with the
/// Haar-average fidelity of the partial propagator to `target`.
pub fn simulate_traced(
    plan: &SimulationPlan,
    trajectory: &NoiseTrajectory,
    zeta_rng: &mut impl Rng,
    target: &CMatrix,
) -> Result<(PropagationResult, Vec<TraceRow>)> {
    propagate(plan, trajectory, zeta_rng, Some(target))
}

fn propagate(
    plan: &SimulationPlan,
    trajectory: &NoiseTrajectory,
    zeta_rng: &mut impl Rng,
    trace_target: Option<&CMatrix>,
) -> Result<(PropagationResult, Vec<TraceRow>)> {
    let intervals = plan.total_intervals();
    let segments = trajectory.n_segments();
    if segments == 0 || segments % intervals != 0 {
        return Err(DdError::MisalignedTrajectory {
            segments,
            required: intervals,
        });
    }
    let per_interval = segments / intervals;
    let dt = plan.tau / per_interval as f64;
    let crosstalk = crosstalk_term(plan);
    let has_crosstalk = plan.crosstalk_zz != 0.0;

    let mut u = CMatrix::identity(4, 4);
    let mut segment_index = 0;
    let mut trace = Vec::new();
    let frames = plan.sequence.toggling_frames();

    for cycle in 0..plan.n_cycles {
        for step in plan.sequence.steps() {
            match step {
                Step::Pulse(p) => {
                    if plan.scheme == Scheme::Dd {
                        u = apply_pulse(p, &plan.pulse_error, zeta_rng)? * u;
                    } else if plan.pulse_error != PulseErrorModel::Ideal {
                        // keep zeta streams aligned between schemes
                        for &l in p.letters() {
                            if l != Letter::I {
                                sample_zeta(zeta_rng, &plan.pulse_error);
                            }
                        }
                    }
                }
                Step::Evolve(k) => {
                    let mut h_sys = system_hamiltonian(plan, *k);
                    if has_crosstalk {
                        h_sys += &crosstalk;
                    }
                    for _ in 0..per_interval {
                        let h = &h_sys + build_error_hamiltonian(&trajectory.segment(segment_index));
                        segment_index += 1;
                        match plan.integrator {
                            Integrator::SegmentExponential => {
                                u = segment_propagator(&h, dt)? * u;
                            }
                            Integrator::RungeKutta4 => {
                                u = segment_propagator_rk4(&h, dt, &u);
                            }
                        }
                    }
                    if let Some(target) = trace_target {
                        let interval = cycle * plan.sequence.cycle_intervals() + k;
                        trace.push(TraceRow {
                            time: (interval + 1) as f64 * plan.tau,
                            interval,
                            frame: frames[*k].to_string(),
                            fidelity_to_target: process_fidelity(target, &u),
                        });
                    }
                }
            }
        }
    }

    let defect = unitarity_defect(&u);
    Ok((
        PropagationResult {
            propagator: u,
            frames,
            unitarity_defect: defect,
        },
        trace,
    ))
}

/// Haar-average gate fidelity of unitary `actual` against unitary
/// `ideal`: (|tr(V†U)|² + d) / (d² + d). Phase-insensitive and
/// deterministic; used for traces and scaling studies.
pub fn process_fidelity(ideal: &CMatrix, actual: &CMatrix) -> f64 {
    let d = ideal.nrows() as f64;
    let tr: Complex64 = (ideal.adjoint() * actual).trace();
    (tr.norm_sqr() + d) / (d * d + d)
}

/// Same plan with a static σ_zσ_z crosstalk of the given strength added
/// to H_S in every segment, sign fixed across all steps.
pub fn crosstalk_scenario(
    plan: &SimulationPlan,
    crosstalk_strength: f64,
    trajectory: &NoiseTrajectory,
    zeta_rng: &mut impl Rng,
) -> Result<PropagationResult> {
    let mut plan = plan.clone();
    plan.crosstalk_zz = crosstalk_strength;
    simulate(&plan, trajectory, zeta_rng)
}

/// Noise-free trajectory matched to a plan, `per_interval` segments per
/// interval.
pub fn silent_trajectory(plan: &SimulationPlan, per_interval: usize) -> NoiseTrajectory {
    NoiseTrajectory::constant(
        plan.total_intervals() * per_interval,
        plan.tau / per_interval as f64,
        0.0,
    )
}
