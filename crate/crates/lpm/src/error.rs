use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the toolkit.
///
/// Every variant carries enough context to name the violated condition; the
/// [`Error::code`] string is stable and machine-parsable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An interval presentation violates one of its defining conditions.
    InvalidPresentation(String),
    /// A bipartite presentation graph violates one of its invariants.
    InvalidGraph(String),
    /// A ground-set partition violates its threshold conditions.
    InvalidPartition(String),
    /// Two columns in the same part have different neighborhoods.
    NotPartConstant { first: usize, second: usize },
    /// A referenced element is outside the ground set or repeated.
    InvalidElement(String),
    /// The element is a loop where a non-loop is required.
    LoopElement(usize),
    /// An exhaustive oracle was asked to run beyond its desk-scale gate.
    ScaleLimit {
        what: &'static str,
        limit: u128,
        actual: u128,
    },
    /// The integer is not prime where a prime is required.
    NotPrime(String),
    /// Primality certification is only deterministic below a fixed bound.
    PrimalityRange { requested: String, bound: String },
    /// A polynomial argument is malformed (non-monic, wrong degree, ...).
    InvalidPolynomial(String),
    /// Attempted inversion of the zero element.
    DivisionByZero,
    /// Matrix or vector dimensions do not line up.
    DimensionMismatch(String),
    /// A field element belongs to a different context than the operation.
    ContextMismatch,
    /// The modulus is too small for the requested construction.
    FieldTooSmall(String),
    /// Secret sharing: the coefficient vector does not encode the secret.
    InconsistentCoefficients,
    /// Secret sharing: reconstruction refused for an unqualified set.
    Unqualified,
    /// Secret sharing: the set handed to the privacy check is qualified.
    QualifiedSet(Vec<usize>),
    /// Malformed serialized input.
    InvalidInput(String),
}

impl Error {
    /// Stable machine-parsable reason code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidPresentation(_) => "invalid-presentation",
            Error::InvalidGraph(_) => "invalid-graph",
            Error::InvalidPartition(_) => "invalid-partition",
            Error::NotPartConstant { .. } => "not-part-constant",
            Error::InvalidElement(_) => "invalid-element",
            Error::LoopElement(_) => "loop-element",
            Error::ScaleLimit { .. } => "scale-limit",
            Error::NotPrime(_) => "not-prime",
            Error::PrimalityRange { .. } => "primality-range",
            Error::InvalidPolynomial(_) => "invalid-polynomial",
            Error::DivisionByZero => "division-by-zero",
            Error::DimensionMismatch(_) => "dimension-mismatch",
            Error::ContextMismatch => "context-mismatch",
            Error::FieldTooSmall(_) => "field-too-small",
            Error::InconsistentCoefficients => "inconsistent-coefficients",
            Error::Unqualified => "unqualified",
            Error::QualifiedSet(_) => "qualified-set",
            Error::InvalidInput(_) => "invalid-input",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPresentation(m) => write!(f, "invalid presentation: {m}"),
            Error::InvalidGraph(m) => write!(f, "invalid presentation graph: {m}"),
            Error::InvalidPartition(m) => write!(f, "invalid partition: {m}"),
            Error::NotPartConstant { first, second } => write!(
                f,
                "columns {first} and {second} share a part but have different neighborhoods"
            ),
            Error::InvalidElement(m) => write!(f, "invalid element: {m}"),
            Error::LoopElement(x) => write!(f, "element {x} is a loop"),
            Error::ScaleLimit {
                what,
                limit,
                actual,
            } => write!(f, "scale limit exceeded for {what}: {actual} > {limit}"),
            Error::NotPrime(m) => write!(f, "not a prime: {m}"),
            Error::PrimalityRange { requested, bound } => write!(
                f,
                "primality certification bound exceeded: {requested} not below {bound}"
            ),
            Error::InvalidPolynomial(m) => write!(f, "invalid polynomial: {m}"),
            Error::DivisionByZero => write!(f, "inversion of zero"),
            Error::DimensionMismatch(m) => write!(f, "dimension mismatch: {m}"),
            Error::ContextMismatch => write!(f, "field element used with a foreign context"),
            Error::FieldTooSmall(m) => write!(f, "field too small: {m}"),
            Error::InconsistentCoefficients => {
                write!(f, "coefficient vector does not encode the stated secret")
            }
            Error::Unqualified => write!(f, "share set is not qualified; reconstruction refused"),
            Error::QualifiedSet(x) => write!(f, "set {x:?} is qualified"),
            Error::InvalidInput(m) => write!(f, "invalid input: {m}"),
        }
    }
}

impl std::error::Error for Error {}
