//! The six-cell fidelity table: u3 (flip-flop) and ue1 (zz) gates,
//! without protection and with the full cycle, under ideal pulses (iDD)
//! and the two Gaussian pulse-error models (DD1, DD2).

use ddgate::cli::{cmd_table2, ExperimentConfig};

fn main() {
    let cfg = ExperimentConfig::default();
    print!("{}", cmd_table2(&cfg).unwrap());
}
