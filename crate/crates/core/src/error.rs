use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("elements belong to different rings")]
    RingMismatch,
    #[error("element is not Z/2-homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("element is not degree-homogeneous: {0}")]
    NotGraded(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("degree cap exceeded: {0}")]
    DegreeCap(String),
    #[error("malformed json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
