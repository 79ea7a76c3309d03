use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("bracket [{lo}, {hi}] does not straddle a root (f(lo) = {f_lo}, f(hi) = {f_hi})")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("no convergence after {iterations} iterations (last estimate {last})")]
    NonConvergence { iterations: usize, last: f64 },

    #[error("integrand denominator is {value} at interior point {x}; endpoints are not simple roots")]
    DenominatorNonpositive { x: f64, value: f64 },

    #[error("state left the finite range at t = {t}")]
    NonFinite { t: f64 },

    #[error("invalid dimension {0}")]
    InvalidDimension(i64),

    #[error("modulus a = {a} is outside (0, a0) with a0 = {a0}")]
    DegenerateShape { a: f64, a0: f64 },

    #[error("rotation target {target} lies outside (pi, sqrt(2) pi)")]
    TargetOutOfRange { target: f64 },

    #[error("invalid rotation spec (p, s) = ({p}, {s}): {reason}")]
    InvalidRotation { p: i64, s: i64, reason: &'static str },

    #[error("argument {x} outside the domain {domain}")]
    DomainError { x: f64, domain: &'static str },

    #[error("profile radius {r} left the band [{lo}, {hi}] at t = {t}")]
    TurningPointStall { t: f64, r: f64, lo: f64, hi: f64 },

    #[error("operation supports n = 2 only (got n = {0})")]
    DimensionUnsupported(u32),

    #[error("point with u4 = {u4} is too close to the projection pole")]
    PoleCollision { u4: f64 },

    #[error("area must be positive and finite (got {0})")]
    InvalidArea(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for failures of the numerical machinery itself, as opposed to
    /// caller mistakes.
    pub fn is_numerical_failure(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence { .. }
                | Error::NonFinite { .. }
                | Error::DenominatorNonpositive { .. }
                | Error::TurningPointStall { .. }
                | Error::NoSignChange { .. }
        )
    }
}
