use thiserror::Error;

#[derive(Debug, Error)]
pub enum DdError {
    #[error("qubit count mismatch: {0} vs {1}")]
    QubitCountMismatch(usize, usize),

    #[error("matrix realization supports 1 or 2 qubits, got {0}")]
    UnsupportedQubitCount(usize),

    #[error("pulse must have phase +1, got {0}")]
    PulsePhase(String),

    #[error("pulse letter {0} is not realizable (only X and Z pulses are applied)")]
    UnsupportedPulseLetter(char),

    #[error("invalid Pauli string '{0}'")]
    ParsePauli(String),

    #[error("sequence requires distinct qubits, got i == j == {0}")]
    DegenerateQubitPair(usize),

    #[error("invalid sequence record '{0}'")]
    ParseSequence(String),

    #[error("Hamiltonian is not Hermitian (max deviation {0:.3e})")]
    NotHermitian(f64),

    #[error("noise bounds inverted: lo {lo} > hi {hi}")]
    NoiseBounds { lo: f64, hi: f64 },

    #[error("trajectory has {segments} segments, not divisible by {required} evolution intervals")]
    MisalignedTrajectory { segments: usize, required: usize },

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, DdError>;
