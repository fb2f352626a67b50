use thiserror::Error;

/// Crate-wide error type. Every fallible operation returns one of these;
/// callers can match on the variant to distinguish usage errors from
/// domain errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("payoff {0} is not finite")]
    NonFiniteOutcome(f64),

    #[error("argument {name} = {value} is not finite")]
    NonFiniteArgument { name: &'static str, value: f64 },

    #[error("argument {name} = {value} must be nonnegative")]
    NegativeArgument { name: &'static str, value: f64 },

    #[error("trial count must be at least 1")]
    ZeroTrials,

    #[error("raw moments must have alpha0 = 1, got {0}")]
    InvalidRawMoments(f64),

    #[error("variance must be positive, got {0}")]
    NonPositiveVariance(f64),

    #[error("Stirling form needs at least 4 trials, got {0}")]
    StirlingTooFewTrials(u64),

    #[error("difference variable has zero variance; deviation bounds are undefined")]
    ZeroVariance,

    #[error("deviation parameter {name} = {value} outside [0, {max}]")]
    DeviationOutOfBounds {
        name: &'static str,
        value: f64,
        max: f64,
    },

    #[error("deviation parameter {name} = {value} must be nonnegative")]
    NegativeDeviation { name: &'static str, value: f64 },

    #[error("target fraction {0} must lie strictly between 0 and 1")]
    DegenerateTargetFraction(f64),

    #[error("{0}")]
    InvalidDesignTarget(String),

    #[error("ladder endpoints must be nonzero, same-sign, with high >= low, got high {high}, low {low}")]
    NonPositiveEndpoint { high: f64, low: f64 },

    #[error("responses are inconsistent: {0}")]
    InconsistentResponses(String),

    #[error("match count {matched} exceeds picks {picked} in field {field}")]
    InvalidMatchVector {
        field: usize,
        matched: u64,
        picked: u64,
    },

    #[error("match vector has {got} entries but the game has {expected} fields")]
    MatchVectorLength { expected: usize, got: usize },

    #[error("lottery config invalid: {0}")]
    InvalidConfig(String),

    #[error("annuity terms invalid: {0}")]
    InvalidAnnuity(String),

    #[error("growth model invalid: {0}")]
    InvalidGrowthModel(String),

    #[error("series unusable for fitting: {0}")]
    DegenerateSeries(String),

    #[error("fit points contain duplicate dispersion {0}")]
    DuplicateSigma(f64),

    #[error("fraction {0} must lie strictly between 0 and 1")]
    InvalidFraction(f64),

    #[error("simulation too large: {draws} total draws exceeds the 1e9 cap")]
    SimulationTooLarge { draws: u128 },

    #[error("replication count must be at least 1")]
    ZeroReplications,

    #[error("invalid epsilon {0}")]
    InvalidEpsilon(f64),

    #[error("eta must lie strictly between 0 and 1, got {0}")]
    InvalidEta(f64),

    #[error("required trial count {bound:.3e} exceeds the supported integer range")]
    TrialBoundOverflow { bound: f64 },

    #[error("comparison threshold undefined: {0}")]
    ThresholdUndefined(String),

    #[error("malformed dataset: {0}")]
    DatasetParse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
