use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CartanError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("diagonal entry ({i},{i}) is {value}, expected 2")]
    DiagonalNotTwo { i: usize, value: i64 },
    #[error("off-diagonal entry ({i},{j}) is {value} > 0")]
    PositiveOffDiagonal { i: usize, j: usize, value: i64 },
    #[error("zero pattern is not symmetric: entry ({i},{j}) is zero but ({j},{i}) is not")]
    AsymmetricZeroPattern { i: usize, j: usize },
    #[error("matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("matrix is not of finite type")]
    NotFiniteType,
    #[error("matrix is not irreducible")]
    NotIrreducible,
    #[error("rank {rank} exceeds the supported maximum {max}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),
    #[error("invalid sub-root datum: {0}")]
    InvalidSubDatum(String),
    #[error("label list has {labels} entries for a {n}x{n} matrix")]
    LabelCount { labels: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown symbol `{name}` at {position}")]
    UnknownSymbol { name: String, position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BialgebraError {
    #[error("no bracket certificate found for `{symbol}`; widen the window")]
    CertificateNotFound { symbol: String },
    #[error("no scaling of the r-matrix reproduces the generator cobracket: {0}")]
    NormalizationFailure(String),
    #[error("symbol `{symbol}` does not belong to this algebra")]
    ForeignSymbol { symbol: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DbosError {
    #[error("result of degree {degree} leaves the window [{lo}, {hi}]")]
    WindowOverflow { degree: i64, lo: i64, hi: i64 },
    #[error("pairing mismatch: {0}")]
    PairingMismatch(String),
    #[error("r^new is only defined for finite-dimensional carriers")]
    InfiniteDimensional,
    #[error(transparent)]
    Bialgebra(#[from] BialgebraError),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Bialgebra(#[from] BialgebraError),
    #[error(transparent)]
    Dbos(#[from] DbosError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
