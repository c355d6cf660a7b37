//! Error type shared by all modules.

use thiserror::Error;

/// Everything that can go wrong while assembling, solving, or optimizing.
#[derive(Debug, Error)]
pub enum VismError {
    #[error("precision must be at least 16 decimal digits, got {0}")]
    PrecisionTooLow(u32),

    #[error("cannot parse '{text}' as a real number")]
    NumberParse { text: String },

    #[error("basis index {flat} out of range for basis of size {size}")]
    IndexOutOfRange { flat: usize, size: usize },

    #[error("quadrature did not converge after {refinements} refinements (last change {last_change})")]
    NonConvergence { refinements: u32, last_change: String },

    #[error("no closed form for exponent {0}; use the quadrature route")]
    UnsupportedExponent(u32),

    #[error("coupling quadrature failed at entry ({row},{col}): {source}")]
    CouplingQuadrature {
        row: usize,
        col: usize,
        #[source]
        source: Box<VismError>,
    },

    #[error("matrix not symmetric: entry ({row},{col}) deviates by {deviation}")]
    NotSymmetric {
        row: usize,
        col: usize,
        deviation: String,
    },

    #[error("cross-parity entry ({row},{col}) = {value} is not negligible")]
    NotBlockDiagonal {
        row: usize,
        col: usize,
        value: String,
    },

    #[error("parity blocks unavailable: {0}")]
    BlocksUnavailable(&'static str),

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(u32),

    #[error("bracket [{lo}, {hi}] does not contain the sought feature: {reason}")]
    BracketInvalid {
        lo: String,
        hi: String,
        reason: String,
    },

    #[error("method {0} requires a reference solution")]
    ReferenceRequired(&'static str),

    #[error("interpolation needs at least 3 anchors, got {0}")]
    InsufficientAnchors(usize),

    #[error("anchor table not monotone near N={0}")]
    NonMonotoneAnchors(u32),

    #[error("N={n} below the interpolant range starting at N={first}")]
    InterpolantRange { n: u32, first: u32 },

    #[error("x = {0} outside the basis domain")]
    OutOfDomain(String),

    #[error("reference energy is zero; relative error undefined")]
    DivisionByZero,

    #[error("reference wavefunction vanishes on the comparison grid")]
    ZeroReference,

    #[error("unsupported perturbation order {0}")]
    UnsupportedOrder(u32),

    #[error("cannot parse potential: {0}")]
    PotentialParse(String),

    #[error("reference unavailable: {0}")]
    ReferenceUnavailable(String),

    #[error("calibration failed for {failed} of {total} truncations; partial anchors preserved")]
    CalibrationIncomplete { failed: usize, total: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, VismError>;

impl VismError {
    /// Process exit code class: 2 for configuration problems, 3 for numerical ones.
    pub fn exit_code(&self) -> i32 {
        match self {
            VismError::PrecisionTooLow(_)
            | VismError::NumberParse { .. }
            | VismError::PotentialParse(_)
            | VismError::ReferenceUnavailable(_)
            | VismError::Config(_)
            | VismError::Io(_) => 2,
            _ => 3,
        }
    }
}
