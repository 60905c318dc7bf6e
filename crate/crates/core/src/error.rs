use thiserror::Error;

use crate::raster::PixelKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("beta_r must lie strictly between 0.5 and 1, got {0}")]
    InvalidBetaR(f64),
    #[error("beta_k must lie strictly between 0.5 and 1, got {0}")]
    InvalidBetaK(f64),
    #[error("expected a {expected} image, got {actual}")]
    WrongKind {
        expected: PixelKind,
        actual: PixelKind,
    },
    #[error("image dimensions differ: {left_width}x{left_height} vs {right_width}x{right_height}")]
    DimensionMismatch {
        left_width: usize,
        left_height: usize,
        right_width: usize,
        right_height: usize,
    },
    #[error("sample buffer holds {actual} values, expected {expected}")]
    DataLength { expected: usize, actual: usize },
    #[error("sample {value} at index {index} is outside [0, 1]")]
    SampleOutOfRange { index: usize, value: f64 },
    #[error("tau must be positive and finite, got {0}")]
    InvalidTau(f64),
    #[error("pair_count must be at least 1 when sampling")]
    InvalidPairCount,
    #[error("sigmoid slope must be positive and finite, got {0}")]
    InvalidSlope(f64),
    #[error("sigmoid midpoint must lie strictly between 0 and 1, got {0}")]
    InvalidMidpoint(f64),
    #[error("histogram needs at least 2 bins, got {0}")]
    InvalidBins(usize),
    #[error("blend strength must lie in [0, 1], got {0}")]
    InvalidStrength(f64),
    #[error("tile dimensions must be nonzero, got {0}x{1}")]
    InvalidTile(usize, usize),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}
