use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("expected {expected} edge colours for n={n}, got {got}")]
    EdgeCountMismatch { n: usize, expected: usize, got: usize },

    #[error("colour {colour} out of range 1..={s}")]
    ColourOutOfRange { colour: u32, s: usize },

    #[error("vertex pair ({u}, {v}) invalid for n={n}")]
    BadVertexPair { u: usize, v: usize, n: usize },

    #[error("invalid colouring parameters: {0}")]
    BadParameters(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("canonical form supports n <= {cap}, got n={n}")]
    CanonicalCapExceeded { n: usize, cap: usize },

    #[error("pattern on {k} vertices larger than host on {n} vertices")]
    PatternTooLarge { k: usize, n: usize },

    #[error("pattern uses colour {colour}, host palette is 1..={s}")]
    PatternColourOutOfRange { colour: u32, s: usize },

    #[error("malformed palette: {0}")]
    BadPalette(String),

    #[error("colour set must be a nonempty subset of 1..={s}")]
    BadColourSet { s: usize },

    #[error("graph is not a cograph (contains an induced P4)")]
    NotACograph,

    #[error("palette size mismatch: {left} vs {right}")]
    PaletteMismatch { left: usize, right: usize },

    #[error("probability {0} outside [0, 1]")]
    BadProbability(f64),

    #[error("enumeration cap exceeded ({cap} candidate colourings)")]
    CapExceeded { cap: u64 },

    #[error("no pattern-free colouring exists for these parameters")]
    NoFreeColouring,

    #[error("domain error: {0}")]
    Domain(String),
}
