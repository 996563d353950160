use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero function")]
    DivisionByZero,

    #[error("pole at the evaluation point: denominator {denominator} vanishes")]
    Pole { denominator: String },

    #[error("sample point {point} lies on the degeneracy locus m^2 + 1 = 0")]
    DegeneratePoint { point: String },

    #[error("form is not of pure bidegree: {form}")]
    NonHomogeneous { form: String },

    #[error("exterior derivative left stray bidegree components: {stray}")]
    NonIntegrable { stray: String },

    #[error("degenerate coframe: phi1 ^ phi2 ^ phi3 vanishes identically")]
    DegenerateCoframe,

    #[error("invalid metric: {0}")]
    InvalidMetric(String),

    #[error("unknown catalog name `{name}`; registered names: {registered}")]
    UnknownName { name: String, registered: String },

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("missing required number `{0}`")]
    MissingNumber(&'static str),

    #[error("k must lie in 0..=6, got {0}")]
    DegreeOutOfRange(i64),

    #[error("a metric is required to apply `{0}`")]
    MetricRequired(&'static str),
    #[error("{0}")]
    Parse(#[from] crate::parser::ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
