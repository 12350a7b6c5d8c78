use std::path::PathBuf;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("field has a pole at the corner vertex (r = 0)")]
    PoleAtVertex,

    #[error("exponent index k = {k} is not admissible for {bc} boundary conditions")]
    InvalidExponentIndex { k: u32, bc: &'static str },

    #[error("search region boundary passes too close to a root (min |det| = {min_abs:e})")]
    RegionBoundaryHitsRoot { min_abs: f64 },

    #[error("Newton iteration did not converge: {0}")]
    NonConvergence(String),

    #[error("no root with positive real part")]
    NoPositiveRoot,

    #[error("lambda = {lambda} is not a root of the Dirichlet determinant (sigma_min = {sigma_min:e})")]
    NotARoot { lambda: String, sigma_min: f64 },

    #[error("finite-difference step too large: 4h = {four_h} >= r = {r}")]
    StepTooLarge { four_h: f64, r: f64 },

    #[error("lambda = {lambda} <= -1: field is not square integrable near the corner")]
    NotInL2 { lambda: f64 },

    #[error("arc radius {eps} lies outside the cut-off plateau r < {r0}")]
    EpsOutsidePlateau { eps: f64, r0: f64 },

    #[error("quadrature did not converge: {0}")]
    NonConvergent(String),

    #[error("test-pair support disc is not strictly inside the sector")]
    SupportTouchesBoundary,

    #[error("conjugate gradients stalled after {iterations} iterations (relative residual {residual:e})")]
    SolverStall { iterations: usize, residual: f64 },

    #[error("no mesh node within radius {radius} of the corner")]
    EmptyBall { radius: f64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid value for `{field}`: {message}")]
    Validation { field: String, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

impl Error {
    pub(crate) fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            message: message.into(),
        }
    }

    /// True for failures of an iterative or adaptive numerical method, as
    /// opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence(_)
                | Error::NonConvergent(_)
                | Error::SolverStall { .. }
                | Error::RegionBoundaryHitsRoot { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
