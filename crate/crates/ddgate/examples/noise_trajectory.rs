//! Sample one stochastic error trajectory and export it as CSV.
//!
//! Each of the 15 error channels is redrawn uniformly from
//! [2pi*1, 2pi*10] MHz at every segment boundary. Pass a path to write
//! the full table; without one the first few segments go to stdout.

use std::env;
use std::fs;

use ddgate::engine::TWO_PI;
use ddgate::noise::{sample_trajectory, RngStream, StreamPurpose};

fn main() {
    let stream = RngStream::new(42, 0, StreamPurpose::Trajectory);
    let tau = 12.5e-9 / 800.0;
    let traj = sample_trajectory(&stream, 800, tau, TWO_PI * 1.0e6, TWO_PI * 10.0e6, false)
        .unwrap();
    let csv = traj.to_csv();
    match env::args().nth(1) {
        Some(path) => {
            fs::write(&path, &csv).unwrap();
            println!("wrote {} segments to {path}", traj.n_segments());
        }
        None => {
            for line in csv.lines().take(6) {
                println!("{line}");
            }
            println!("... ({} segments total; pass a path to save all)", traj.n_segments());
        }
    }
}
