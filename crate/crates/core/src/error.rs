use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: {what} (got {value})")]
    Domain { what: &'static str, value: f64 },

    #[error("endpoints do not bracket a root: f({lo}) = {f_lo}, f({hi}) = {f_hi}")]
    Bracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("no convergence after {iterations} iterations (best point {best:?})")]
    Convergence { iterations: usize, best: Vec<f64> },

    #[error("non-finite evaluation at {at:?}")]
    Evaluation { at: Vec<f64> },

    #[error("degenerate sample: {0}")]
    DegenerateSample(&'static str),

    #[error("boundary estimate: {0}")]
    Boundary(&'static str),

    #[error("adjustment undefined at {at}: {term} = {value}")]
    AdjustmentUndefined {
        at: f64,
        term: &'static str,
        value: f64,
    },

    #[error("no Bartlett correction tabulated for alpha0 = {0}")]
    UnsupportedNull(f64),

    #[error("estimation failed: {0}")]
    Estimation(String),

    #[error("leave-one-out fit failed at index {index}: {source}")]
    LeaveOneOut {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("internal consistency: {0}")]
    Internal(String),
}

impl Error {
    /// Short machine-readable code, stable across releases.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain { .. } => "E_DOMAIN",
            Error::Bracket { .. } => "E_BRACKET",
            Error::Convergence { .. } => "E_CONVERGENCE",
            Error::Evaluation { .. } => "E_EVALUATION",
            Error::DegenerateSample(_) => "E_DEGENERATE",
            Error::Boundary(_) => "E_BOUNDARY",
            Error::AdjustmentUndefined { .. } => "E_ADJUSTMENT",
            Error::UnsupportedNull(_) => "E_UNSUPPORTED_NULL",
            Error::Estimation(_) => "E_ESTIMATION",
            Error::LeaveOneOut { .. } => "E_LEAVE_ONE_OUT",
            Error::Config(_) => "E_CONFIG",
            Error::Internal(_) => "E_INTERNAL",
        }
    }
}

pub(crate) fn domain(what: &'static str, value: f64) -> Error {
    Error::Domain { what, value }
}
