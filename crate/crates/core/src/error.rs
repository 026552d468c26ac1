use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("not an automorphism: {0} fails")]
    NotAutomorphism(String),

    #[error("dimodules live over different base algebras")]
    MismatchedBase,

    #[error("antipode is not invertible")]
    AntipodeNotInvertible,

    #[error("antipode required but the algebra has none")]
    MissingAntipode,

    #[error("invalid braiding context: {0}")]
    InvalidContext(String),

    #[error("not a morphism of dimodules: {0} fails")]
    NotAMorphism(String),

    #[error("diagonal structure map has a zero entry")]
    ZeroDiagonal,

    #[error("search space too large: {cardinality} candidates (cap {cap})")]
    SearchSpaceTooLarge { cardinality: String, cap: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
