use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ddgate::cli::{
    cmd_run, cmd_table2, cmd_verify, ExperimentConfig, VerifyOptions, EXIT_CONFIG_ERROR,
    EXIT_VERIFY_FAILED,
};

#[derive(Parser)]
#[command(name = "ddgate", about = "DD-protected two-qubit gate simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the symbolic verification suite (cancellation, frames, schedules, XY4)
    Verify {
        /// Flip the scheduled sign at this step (1-16) to demonstrate failure detection
        #[arg(long)]
        corrupt_step: Option<usize>,
        /// Restrict to a named sequence check ("xy4")
        #[arg(long)]
        sequence: Option<String>,
    },
    /// Single fidelity estimate for one (gate, scheme, pulse model)
    Run(ConfigArgs),
    /// Six-cell gate-fidelity table: u3 and ue1 against ideal/gauss1/gauss2 pulses
    Table2(ConfigArgs),
}

#[derive(Args)]
struct ConfigArgs {
    /// Config file in flat key=value form; flags override file values
    #[arg(long)]
    config: Option<String>,
    /// Gate: u3, ue1, ue2, ue3
    #[arg(long)]
    gate: Option<String>,
    /// Scheme: none or dd
    #[arg(long)]
    scheme: Option<String>,
    /// Pulse model: ideal, gauss1, gauss2, custom(mean,std)
    #[arg(long)]
    pulse_model: Option<String>,
    /// Number of Haar-random initial states
    #[arg(long)]
    states: Option<usize>,
    /// Number of DD cycles (the gate angle stays fixed)
    #[arg(long)]
    cycles: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Lower noise bound in MHz
    #[arg(long)]
    noise_lo: Option<f64>,
    /// Upper noise bound in MHz
    #[arg(long)]
    noise_hi: Option<f64>,
    /// Noise segments per DD cycle (multiple of 16)
    #[arg(long)]
    segments: Option<usize>,
    /// Integrator: segment_exponential or runge_kutta_4
    #[arg(long)]
    integrator: Option<String>,
    /// Flip each noise coefficient's sign with probability 1/2
    #[arg(long)]
    random_sign: bool,
    /// Run all states through one shared noise realization
    #[arg(long)]
    shared_noise: bool,
    /// Write CSV here instead of standard output
    #[arg(long)]
    output: Option<String>,
}

impl ConfigArgs {
    fn build(&self) -> ddgate::Result<ExperimentConfig> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| ddgate::DdError::Config(format!("cannot read {path}: {e}")))?;
                ExperimentConfig::from_text(&text)?
            }
            None => ExperimentConfig::default(),
        };
        if let Some(v) = &self.gate {
            cfg.set("gate", v)?;
        }
        if let Some(v) = &self.scheme {
            cfg.set("scheme", v)?;
        }
        if let Some(v) = &self.pulse_model {
            cfg.set("pulse_model", v)?;
        }
        if let Some(v) = self.states {
            cfg.n_states = v;
        }
        if let Some(v) = self.cycles {
            cfg.n_cycles = v;
        }
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        if let Some(v) = self.noise_lo {
            cfg.noise_lo = v;
        }
        if let Some(v) = self.noise_hi {
            cfg.noise_hi = v;
        }
        if let Some(v) = self.segments {
            cfg.segments_per_cycle = v;
        }
        if let Some(v) = &self.integrator {
            cfg.set("integrator", v)?;
        }
        if self.random_sign {
            cfg.random_sign = true;
        }
        if self.shared_noise {
            cfg.shared_noise = true;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn emit(&self, csv: &str) -> ddgate::Result<()> {
        match &self.output {
            Some(path) => fs::write(path, csv)
                .map_err(|e| ddgate::DdError::Config(format!("cannot write {path}: {e}"))),
            None => {
                print!("{csv}");
                Ok(())
            }
        }
    }
}

fn config_failure(err: ddgate::DdError) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(EXIT_CONFIG_ERROR as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            corrupt_step,
            sequence,
        } => {
            let xy4_only = match sequence.as_deref() {
                None => false,
                Some("xy4") => true,
                Some(other) => {
                    return config_failure(ddgate::DdError::Config(format!(
                        "unknown sequence '{other}'"
                    )))
                }
            };
            let opts = VerifyOptions {
                corrupt_step,
                xy4_only,
            };
            match cmd_verify(&opts) {
                Ok((report, code)) => {
                    print!("{report}");
                    if code == 0 {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(EXIT_VERIFY_FAILED as u8)
                    }
                }
                Err(e) => config_failure(e),
            }
        }
        Command::Run(args) => match args.build().and_then(|cfg| cmd_run(&cfg)) {
            Ok(csv) => match args.emit(&csv) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => config_failure(e),
            },
            Err(e) => config_failure(e),
        },
        Command::Table2(args) => match args.build().and_then(|cfg| cmd_table2(&cfg)) {
            Ok(csv) => match args.emit(&csv) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => config_failure(e),
            },
            Err(e) => config_failure(e),
        },
    }
}
