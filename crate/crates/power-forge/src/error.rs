use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] power_forge_core::Error),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Input(_) => "input",
            CliError::Core(e) => e.kind(),
            CliError::Io { .. } => "io",
        }
    }

    /// `{"error": {"kind": ..., "message": ...}}`, plus the offending
    /// element for validation failures.
    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::json!({
            "kind": self.kind(),
            "message": self.to_string(),
        });
        if let CliError::Core(power_forge_core::Error::Validation { element, reason }) = self {
            obj["element"] = element.clone().into();
            obj["reason"] = reason.clone().into();
        }
        serde_json::json!({ "error": obj })
    }
}
