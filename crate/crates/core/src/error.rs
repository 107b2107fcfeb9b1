use thiserror::Error;

/// Errors raised by the algebra, the loop machinery and the wire formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("degenerate form")]
    DegenerateForm,
    #[error("matrix is not invertible over the ring")]
    NotAUnit,
    #[error("form error: {0}")]
    Form(String),
    #[error("not a lambda^- unitary: {0}")]
    NotUnitary(String),
    #[error("not a loop: {0}")]
    NotALoop(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("polynomial vanishes at an endpoint of [0, 1]")]
    EndpointRoot,
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code used by the CLI error object.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division_by_zero",
            Error::RingMismatch(_) => "ring_mismatch",
            Error::Domain(_) => "domain_error",
            Error::Shape(_) => "shape_error",
            Error::UnsupportedRing(_) => "unsupported_ring",
            Error::DegenerateForm => "degenerate_form",
            Error::NotAUnit => "not_a_unit",
            Error::Form(_) => "form_error",
            Error::NotUnitary(_) => "not_unitary",
            Error::NotALoop(_) => "not_a_loop",
            Error::DegenerateInput(_) => "degenerate_input",
            Error::EndpointRoot => "endpoint_root",
            Error::InternalInvariantViolation(_) => "internal_invariant_violation",
            Error::Unsupported(_) => "unsupported",
            Error::Parse(_) => "malformed_input",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
