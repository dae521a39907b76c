use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("{0} is not q-admissible (some k_q vanishes for k <= {0})")]
    NotAdmissible(usize),

    #[error("R-matrix is not of Hecke type: {0}")]
    NotHecke(String),

    #[error("operator is not skew-invertible")]
    NotSkewInvertible,

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("R-matrix is not even of height {0}")]
    NotHeight(usize),

    #[error("degenerate epsilon factorization (zero contraction)")]
    DegenerateFactorization,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
