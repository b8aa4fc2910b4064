use thiserror::Error;

/// Errors shared across the crate.
///
/// Exact-arithmetic code either succeeds or reports a structural problem;
/// there are no tolerance or convergence failures anywhere.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero in {0}")]
    DivisionByZero(String),
    #[error("invalid scalar literal `{text}`: {reason}")]
    BadLiteral { text: String, reason: String },
    #[error("subspace is not an ideal of `{0}`")]
    NotAnIdeal(String),
    #[error("subspace is not closed under the module action")]
    NotASubmodule,
    #[error("subspace is not closed under the product")]
    NotASubalgebra,
    #[error("algebra `{0}` failed validation: {1}")]
    InvalidAlgebra(String, String),
    #[error("module over `{0}` failed validation: {1}")]
    InvalidModule(String, String),
    #[error("morphism does not preserve products at basis pair ({0}, {1})")]
    NotAMorphism(usize, usize),
    #[error("morphism is not an epimorphism (rank {rank} < target dimension {dim})")]
    NotAnEpimorphism { rank: usize, dim: usize },
    #[error("fiber product requires a common target algebra")]
    TargetMismatch,
    #[error("algebra `{0}` is not soluble")]
    NotSoluble(String),
    #[error("the zero module has no minimal submodule")]
    ZeroModule,
    #[error("module is not irreducible (proper submodule of dimension {0})")]
    NotIrreducible(usize),
    #[error("expected a left-only module (right action already present)")]
    RightActionPresent,
    #[error("chief factor of `{0}` failed the irreducibility check")]
    ReducibleChiefFactor(String),
    #[error("section is not L-invariant: {0}")]
    NotInvariantSection(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("certificate targets verified but L/Leib(L) left the formation; this indicates a bug")]
    CertificateConclusionViolated,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("invalid catalog name: {0}")]
    InvalidName(String),
    #[error("counterexample rejected: {0}")]
    CounterexampleRejected(String),
    #[error("formation spec parse error: {0}")]
    BadFormationSpec(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
