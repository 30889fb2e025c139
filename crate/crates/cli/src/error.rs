use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{msg} at offset {at} in {src:?}")]
    Parse { src: String, at: usize, msg: String },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Library(#[from] superimmanant::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
}
