//! Dynamical-decoupling protection of two-qubit quantum gates against
//! stochastic single- and two-qubit errors.
//!
//! The crate has two layers:
//!
//! - a **symbolic layer** ([`pauli`], [`sequence`]) that builds the
//!   concatenated X/Z pulse cycles, tracks toggling frames with exact
//!   phase arithmetic, and proves first-order cancellation of the full
//!   15-operator error set;
//! - a **numerical layer** ([`model`], [`noise`], [`engine`],
//!   [`fidelity`]) that propagates the total Hamiltonian H_T = H_S + H_e
//!   through the 16-step cycle with piecewise-constant stochastic error
//!   channels and imperfect pulses, and estimates average gate fidelity
//!   over Haar-random initial states.
//!
//! See the crate examples for one runnable program per capability, or
//! the `ddgate` binary (`verify`, `run`, `table2` subcommands) for the
//! command-line front end.

pub mod cli;
pub mod engine;
pub mod error;
pub mod fidelity;
pub mod model;
pub mod noise;
pub mod operator;
pub mod pauli;
pub mod sequence;

pub use engine::{ideal_gate, simulate, PropagationResult, Scheme, SimulationPlan};
pub use error::{DdError, Result};
pub use fidelity::{average_gate_fidelity, FidelityReport};
pub use noise::{NoiseTrajectory, PulseErrorModel, RngStream};
pub use pauli::{Letter, PauliString, Phase};
pub use sequence::{build_full_cycle, coupling_schedule, DDSequence, GateKind};
