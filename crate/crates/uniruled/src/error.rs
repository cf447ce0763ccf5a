use thiserror::Error;

/// Errors shared by all modules of the crate.
///
/// Every variant corresponds to a named failure of one of the public
/// operations; the CLI maps them onto stable exit codes via
/// [`Error::exit_code`].
#[derive(Debug, Error)]
pub enum Error {
    /// Two values live on different surface models (or have different ranks).
    #[error("model mismatch: {0}")]
    ModelMismatch(String),

    /// A symplectic form vector violates the positivity requirements.
    #[error("invalid symplectic form: {0}")]
    InvalidForm(String),

    /// Enumeration over an infinite set was requested without a bound.
    #[error("unbounded enumeration: {0}")]
    UnboundedEnumeration(String),

    /// An enumeration was asked for an unsupported blow-up number.
    #[error("unsupported k: {0}")]
    UnsupportedK(String),

    /// An operation's stated precondition does not hold.
    #[error("precondition violation: {0}")]
    PreconditionViolation(String),

    /// Cremona reduction reached a <= 0 without producing a reduced class.
    #[error("not reducible: {0}")]
    NotReducible(String),

    /// No two-term (-1)-class decomposition exists where one is guaranteed.
    #[error("no decomposition: {0}")]
    NoDecomposition(String),

    /// Every fiber class has non-positive area under the given form.
    #[error("no fiber class of positive area: {0}")]
    NoPositiveAreaFiberClass(String),

    /// A graph references a class absent from the context table.
    #[error("missing class data: {0}")]
    MissingClassData(String),

    /// Total multiplicity exceeds D.A but the class does not come from the
    /// divisor, so the graph fits no admissibility category.
    #[error("not sup-admissible: {0}")]
    NotSupAdmissible(String),

    /// The context cannot support a finite enumeration.
    #[error("context not finite: {0}")]
    ContextNotFinite(String),

    /// The minimal divisor-uniruled area V is infinite.
    #[error("V is infinite: {0}")]
    VInfinite(String),

    /// Topological sorting found a cycle; the comparator is broken.
    #[error("cycle detected: {0}")]
    CycleDetected(String),

    /// A coefficient was supplied for a pair the partial order forbids.
    #[error("invalid triangular entry: {0}")]
    InvalidEntry(String),

    /// A diagonal coefficient is zero or missing.
    #[error("singular diagonal: {0}")]
    SingularDiagonal(String),

    /// A map and a vector were built over different posets.
    #[error("poset mismatch: {0}")]
    PosetMismatch(String),

    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable process exit code for the CLI:
    /// 2 = precondition, 3 = data error, 4 = internal invariant breach.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ModelMismatch(_)
            | Error::UnboundedEnumeration(_)
            | Error::UnsupportedK(_)
            | Error::PreconditionViolation(_)
            | Error::VInfinite(_) => 2,
            Error::InvalidForm(_)
            | Error::NotReducible(_)
            | Error::NoPositiveAreaFiberClass(_)
            | Error::MissingClassData(_)
            | Error::NotSupAdmissible(_)
            | Error::ContextNotFinite(_)
            | Error::InvalidEntry(_)
            | Error::SingularDiagonal(_)
            | Error::PosetMismatch(_)
            | Error::Parse(_) => 3,
            Error::NoDecomposition(_) | Error::CycleDetected(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
