use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DistsetError {
    #[error(transparent)]
    Core(#[from] distset_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}, line {line}: {msg}")]
    Catalog { path: PathBuf, line: usize, msg: String },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("certification failed: {0}")]
    Certification(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl DistsetError {
    pub(crate) fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> Self {
        let path = path.into();
        move |source| DistsetError::Io { path, source }
    }
}
