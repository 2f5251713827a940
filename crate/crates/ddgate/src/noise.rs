//! Seeded stochastic inputs: piecewise-constant error-coefficient
//! trajectories and pulse over-rotation angles.
//!
//! Every random draw flows from a [`RngStream`], which maps
//! (master seed, trial, purpose) onto an independent ChaCha stream.
//! Identical stream coordinates reproduce identical draws on any
//! platform, and separating purposes means toggling pulse errors never
//! perturbs the noise trajectory of a given trial.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{DdError, Result};
use crate::model::{ErrorCoefficients, N_ERROR_CHANNELS};

/// What a stream's draws are consumed for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamPurpose {
    Trajectory,
    Zeta,
    State,
}

/// Coordinates of one independent random stream.
#[derive(Debug, Clone, Copy)]
pub struct RngStream {
    pub master_seed: u64,
    pub trial: u64,
    pub purpose: StreamPurpose,
}

impl RngStream {
    pub fn new(master_seed: u64, trial: u64, purpose: StreamPurpose) -> RngStream {
        RngStream {
            master_seed,
            trial,
            purpose,
        }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master_seed);
        let purpose = match self.purpose {
            StreamPurpose::Trajectory => 0,
            StreamPurpose::Zeta => 1,
            StreamPurpose::State => 2,
        };
        rng.set_stream(self.trial.wrapping_mul(3).wrapping_add(purpose));
        rng
    }
}

/// Piecewise-constant coefficients for the 15 error channels, one value
/// per channel per time segment.
#[derive(Debug, Clone, PartialEq)]
pub struct NoiseTrajectory {
    pub segment_duration: f64,
    coefficients: Vec<[f64; N_ERROR_CHANNELS]>,
}

impl NoiseTrajectory {
    pub fn n_segments(&self) -> usize {
        self.coefficients.len()
    }

    pub fn segment(&self, k: usize) -> ErrorCoefficients {
        ErrorCoefficients::from_array(self.coefficients[k])
    }

    /// A trajectory with every coefficient fixed to `value`; the
    /// degenerate case used in suppression-scaling studies.
    pub fn constant(n_segments: usize, segment_duration: f64, value: f64) -> NoiseTrajectory {
        NoiseTrajectory {
            segment_duration,
            coefficients: vec![[value; N_ERROR_CHANNELS]; n_segments],
        }
    }

    /// CSV audit export: segment index plus the 15 coefficient columns in
    /// rad/s.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("segment");
        for name in crate::model::ERROR_CHANNEL_NAMES {
            out.push(',');
            out.push_str(name);
        }
        out.push('\n');
        for (k, row) in self.coefficients.iter().enumerate() {
            out.push_str(&k.to_string());
            for v in row {
                out.push_str(&format!(",{v:.6e}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Samples each of the 15 channels independently and uniformly on
/// [lo, hi] for every segment. With `random_sign`, each coefficient's
/// sign additionally flips with probability ½.
pub fn sample_trajectory(
    stream: &RngStream,
    n_segments: usize,
    segment_duration: f64,
    lo: f64,
    hi: f64,
    random_sign: bool,
) -> Result<NoiseTrajectory> {
    if lo > hi {
        return Err(DdError::NoiseBounds { lo, hi });
    }
    let mut rng = stream.rng();
    let coefficients = (0..n_segments)
        .map(|_| {
            std::array::from_fn(|_| {
                // gen_range panics on an empty range; lo == hi is the
                // constant-noise degenerate case
                let v = if lo == hi { lo } else { rng.gen_range(lo..hi) };
                if random_sign && rng.gen::<bool>() {
                    -v
                } else {
                    v
                }
            })
        })
        .collect();
    Ok(NoiseTrajectory {
        segment_duration,
        coefficients,
    })
}

/// Pulse over-rotation model: each applied pulse factor is
/// e^{−i(π/2 + ζ)σ} with ζ drawn from here.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PulseErrorModel {
    Ideal,
    Gaussian { mean: f64, std: f64 },
}

impl PulseErrorModel {
    /// Distribution (1): mean π/500, std π/500.
    pub fn gauss1() -> PulseErrorModel {
        let p = std::f64::consts::PI / 500.0;
        PulseErrorModel::Gaussian { mean: p, std: p }
    }

    /// Distribution (2): mean π/200, std π/200.
    pub fn gauss2() -> PulseErrorModel {
        let p = std::f64::consts::PI / 200.0;
        PulseErrorModel::Gaussian { mean: p, std: p }
    }
}

pub fn sample_zeta(rng: &mut impl Rng, model: &PulseErrorModel) -> f64 {
    match model {
        PulseErrorModel::Ideal => 0.0,
        PulseErrorModel::Gaussian { mean, std } => {
            Normal::new(*mean, *std).expect("std >= 0").sample(rng)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_PI: f64 = std::f64::consts::TAU;

    #[test]
    fn constant_degenerate_case() {
        let s = RngStream::new(7, 0, StreamPurpose::Trajectory);
        let c = TWO_PI * 5e6;
        let t = sample_trajectory(&s, 32, 1e-9, c, c, false).unwrap();
        for k in 0..32 {
            assert!(t.segment(k).as_array().iter().all(|&v| v == c));
        }
    }

    #[test]
    fn rejects_inverted_bounds() {
        let s = RngStream::new(7, 0, StreamPurpose::Trajectory);
        assert!(sample_trajectory(&s, 8, 1e-9, 2.0, 1.0, false).is_err());
    }

    #[test]
    fn default_range_mean_within_three_standard_errors() {
        let s = RngStream::new(11, 3, StreamPurpose::Trajectory);
        let (lo, hi) = (TWO_PI * 1e6, TWO_PI * 1e7);
        let t = sample_trajectory(&s, 800, 1e-9, lo, hi, false).unwrap();
        for ch in 0..N_ERROR_CHANNELS {
            let vals: Vec<f64> = (0..800).map(|k| t.segment(k).as_array()[ch]).collect();
            let mean = vals.iter().sum::<f64>() / 800.0;
            assert!(vals.iter().all(|&v| (lo..hi).contains(&v)));
            // uniform std = (hi-lo)/sqrt(12)
            let se = (hi - lo) / 12f64.sqrt() / (800f64).sqrt();
            assert!(
                (mean - TWO_PI * 5.5e6).abs() < 3.0 * se,
                "channel {ch}: mean {mean}"
            );
        }
    }

    #[test]
    fn same_stream_reproduces_bitwise() {
        let s = RngStream::new(42, 9, StreamPurpose::Trajectory);
        let a = sample_trajectory(&s, 800, 1e-9, 1.0, 2.0, true).unwrap();
        let b = sample_trajectory(&s, 800, 1e-9, 1.0, 2.0, true).unwrap();
        assert_eq!(a, b);
        // different purpose gives different draws
        let s2 = RngStream::new(42, 9, StreamPurpose::Zeta);
        let c = sample_trajectory(&s2, 800, 1e-9, 1.0, 2.0, true).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn zeta_moments() {
        let mut rng = RngStream::new(5, 0, StreamPurpose::Zeta).rng();
        assert_eq!(sample_zeta(&mut rng, &PulseErrorModel::Ideal), 0.0);

        let n = 100_000;
        let m1 = PulseErrorModel::gauss1();
        let draws: Vec<f64> = (0..n).map(|_| sample_zeta(&mut rng, &m1)).collect();
        let mean = draws.iter().sum::<f64>() / n as f64;
        let target = std::f64::consts::PI / 500.0;
        assert!((mean - target).abs() < 3.0 * target / (n as f64).sqrt());

        let m2 = PulseErrorModel::gauss2();
        let draws: Vec<f64> = (0..n).map(|_| sample_zeta(&mut rng, &m2)).collect();
        let mean = draws.iter().sum::<f64>() / n as f64;
        let var = draws.iter().map(|d| (d - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
        let target = std::f64::consts::PI / 200.0;
        assert!((var.sqrt() - target).abs() < 0.05 * target);
    }

    #[test]
    fn csv_export_shape() {
        let s = RngStream::new(1, 0, StreamPurpose::Trajectory);
        let t = sample_trajectory(&s, 4, 1e-9, 1.0, 2.0, false).unwrap();
        let csv = t.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0].split(',').count(), 16);
        assert!(lines[0].starts_with("segment,d1x,"));
    }
}
