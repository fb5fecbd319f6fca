use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not a Lie algebra: {0}")]
    NotLie(String),
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("bilinear form is not {0}")]
    WrongSymmetry(&'static str),
    #[error("bilinear form required but absent")]
    MissingForm,
    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("not a reductive decomposition: {0}")]
    NotReductive(String),
    #[error("operator {0} does not lie in the algebra")]
    NotInAlgebra(usize),
    #[error("module is reducible: {0}")]
    Reducible(String),
    #[error("neither identity of the dichotomy holds: {0}")]
    NeitherIdentity(String),
    #[error("derivation span is not closed under brackets: {0}")]
    ClosureFailure(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("recovered scalar is zero")]
    ZeroXi,
    #[error("representations act through different algebras")]
    ActingAlgebraMismatch,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cap exceeded: {needed} weights requested, limit {limit}")]
    CapExceeded { limit: usize, needed: usize },
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("invalid root system {0}{1}")]
    InvalidRootSystem(char, usize),
    #[error("weight is not dominant")]
    NonDominant,
    #[error("negative multiplicity while peeling: input is not a character")]
    NegativeMultiplicity,
}
