use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures reported by the morphism calculus and the verification suites.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument `{name}`: {reason}")]
    InvalidArgument { name: &'static str, reason: String },

    /// A structural invariant of a value was violated. `invariant` is a stable
    /// identifier surfaced by the CLI.
    #[error("invariant `{invariant}` violated: {detail}")]
    Invariant {
        invariant: &'static str,
        detail: String,
    },

    #[error("cannot compose: target period {target} does not match source period {next_source}")]
    PeriodMismatch { target: i64, next_source: i64 },

    #[error("cannot compose morphisms of Arc_{left} and Arc_{right}")]
    EqmodMismatch { left: i64, right: i64 },

    #[error("degree {deg} not supported by {op}: {reason}")]
    UnsupportedDegree {
        op: &'static str,
        deg: i64,
        reason: &'static str,
    },

    #[error("enumeration bound exceeded for {what}: requested {requested}, bound {bound}")]
    BoundExceeded {
        what: &'static str,
        requested: i64,
        bound: i64,
    },
}

impl Error {
    pub(crate) fn arg(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidArgument {
            name,
            reason: reason.into(),
        }
    }

    pub(crate) fn invariant(invariant: &'static str, detail: impl Into<String>) -> Self {
        Error::Invariant {
            invariant,
            detail: detail.into(),
        }
    }

    /// Short machine-readable name of the failure class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidArgument { .. } => "invalid_argument",
            Error::Invariant { .. } => "invariant_violation",
            Error::PeriodMismatch { .. } => "period_mismatch",
            Error::EqmodMismatch { .. } => "eqmod_mismatch",
            Error::UnsupportedDegree { .. } => "unsupported_degree",
            Error::BoundExceeded { .. } => "bound_exceeded",
        }
    }

    /// Name of the violated invariant, when the error is an invariant violation.
    pub fn invariant_name(&self) -> Option<&'static str> {
        match self {
            Error::Invariant { invariant, .. } => Some(invariant),
            _ => None,
        }
    }
}
