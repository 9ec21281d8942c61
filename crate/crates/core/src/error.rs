use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("negative weight in {0}")]
    NegativeWeight(String),
    #[error("not a half-integer label: {0}")]
    NotHalfInteger(String),
    #[error("odd dimension n = {0}; a spinor basis needs even n")]
    OddDimension(u32),
    #[error("signature dimension {n} exceeds the matrix cap {cap}")]
    CapExceeded { n: u64, cap: u64 },
    #[error("parity square unassigned for p - q = {d_mod8} (mod 8)")]
    UnassignedParity { d_mod8: u8 },
    #[error("pseudoautomorphism rule does not apply: {0}")]
    PiRule(String),
    #[error("non-finite input: {0}")]
    NonFinite(String),
    #[error("negative squared mass {0} in quadratic mode")]
    NegativeMassSquared(f64),
    #[error("empty input: {0}")]
    Empty(String),
    #[error("unsupported dimension {0}")]
    Dimension(usize),
    #[error("rank deficient design: rank {rank} of {cols} columns")]
    RankDeficient { rank: usize, cols: usize, null_space: Vec<Vec<f64>> },
    #[error("too few observations: {obs} for {params} parameters")]
    Underdetermined { obs: usize, params: usize },
    #[error("orbit classification mismatch: {0}")]
    OrbitMismatch(String),
    #[error("csv: {0}")]
    Csv(String),
    #[error("unknown name: {0}")]
    Unknown(String),
}

pub type Result<T> = std::result::Result<T, Error>;
