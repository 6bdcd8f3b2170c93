use thiserror::Error;

/// Every failure the library can report.
///
/// Variants are grouped by the layer that raises them; the CLI maps them to
/// exit codes through [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // fields
    #[error("division by zero")]
    DivisionByZero,
    #[error("no element of order {n} in F_{p} (requires p = 1 mod n)")]
    NoSuchRoot { n: u64, p: u64 },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid field: {0}")]
    InvalidField(String),

    // polynomials
    #[error("polynomials live over different variable lists")]
    VariableMismatch,
    #[error("polynomials live over different coefficient fields")]
    FieldMismatch,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("substitution expression involves the substituted variable")]
    SelfReference,
    #[error("too many variables: at most {max} are supported")]
    TooManyVariables { max: usize },

    // groebner / ideals
    #[error("all generators are zero")]
    EmptyIdeal,
    #[error("pair budget of {0} exceeded")]
    BudgetExceeded(usize),
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("expected a quotient of dimension {expected}, found {found}")]
    WrongDimension { expected: i64, found: i64 },

    // verifier
    #[error("no admissible linear form found after {0} draws")]
    GenericityExhausted(usize),
    #[error("local length did not stabilize below truncation order {0}")]
    CapExceeded(usize),
    #[error("witness {which} is not in the symbolic power of order {r}")]
    MembershipFailed { which: String, r: u32 },
    #[error("length inequality violated: lhs {lhs} < rhs {rhs}")]
    InequalityViolated { lhs: u64, rhs: u64 },
    #[error("length checks for two linear forms disagree")]
    SeedDisagreement,

    // configurations
    #[error("points are collinear")]
    CollinearPoints,
    #[error("points are not pairwise distinct")]
    DuplicatePoints,
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("unsupported parameter n = {0}: only n >= 3 is handled")]
    UnsupportedN(u64),
    #[error("alpha must differ from 0 and 1")]
    BadAlpha,
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("proportional linear factors")]
    ProportionalFactors,
    #[error("linear factor {0} does not pass through the required point or passes through the other one")]
    FactorThroughWrongPoint(String),
    #[error("points coincide")]
    SamePoint,
    #[error("unsupported polynomial form: {0}")]
    UnsupportedForm(String),
    #[error("field lacks the required roots: {0}")]
    MissingRoots(String),

    // parsing and IO
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown symbol '{name}' at offset {pos}")]
    UnknownSymbol { pos: usize, name: String },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded(_) | Error::BudgetExceeded(_) => 3,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Input(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
