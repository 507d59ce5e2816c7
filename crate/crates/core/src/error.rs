use chrono::NaiveDate;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("series is empty")]
    EmptySeries,
    #[error("need at least {needed} samples, got {got}")]
    TooShort { needed: usize, got: usize },
    #[error("{remainder} trailing days do not fill a whole week")]
    NotWholeWeeks { remainder: usize },
    #[error("date gap: {0} is missing")]
    DateGap(NaiveDate),
    #[error("negative count on data row {0}")]
    NegativeCount(usize),
    #[error("design matrix is rank deficient")]
    SingularDesign,
    #[error("series has zero variance")]
    ZeroVariance,
    #[error("optimizer did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("fastICA component {component} did not converge")]
    IcaNoConvergence { component: usize },
    #[error("lag {lag} out of range for series of length {len}")]
    BadLag { lag: usize, len: usize },
    #[error("window {window} out of range for length {len}")]
    BadWindow { window: usize, len: usize },
    #[error("curve never drops below the threshold")]
    NoCrossing,
    #[error("rank {rank} out of range 1..={max}")]
    BadRank { rank: usize, max: usize },
    #[error("data rank {rank} is below the {requested} requested components")]
    RankDeficient { rank: usize, requested: usize },
    #[error("invalid parameter: {0}")]
    BadParam(&'static str),
    #[error("need at least {needed} curve points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("all points coincide")]
    DegenerateData,
    #[error("AR polynomial has roots on or outside the unit circle")]
    UnstablePolynomial,
    #[error("history of {got} samples is shorter than the model order {needed}")]
    InsufficientHistory { needed: usize, got: usize },
    #[error("input lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
}

impl Error {
    /// Whether the error comes from an iterative method failing to settle,
    /// as opposed to invalid input.
    pub fn is_convergence(&self) -> bool {
        matches!(
            self,
            Error::NoConvergence { .. } | Error::IcaNoConvergence { .. }
        )
    }
}
