use std::fmt;

/// A failure that maps onto exit code 2.
#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            kind: "input",
            message: message.into(),
        }
    }

    pub fn context(mut self, what: &str) -> Self {
        self.message = format!("{what}: {}", self.message);
        self
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} error: {}", self.kind, self.message)
    }
}

impl std::error::Error for CliError {}

impl From<psdsplit::Error> for CliError {
    fn from(e: psdsplit::Error) -> Self {
        use psdsplit::Error::*;
        let kind = match e {
            DimensionMismatch { .. } | NotSquare { .. } | TooLarge { .. } => "dimension",
            NonFinite { .. } | InvalidArgument(_) | Unsorted { .. } => "input",
            NotHermitian { .. } => "not_hermitian",
            NotPsd { .. } => "not_psd",
            BadTrace { .. } => "bad_trace",
            NotCommuting { .. } => "not_commuting",
            NoConvergence { .. } | SimultaneousDiagFailed { .. } => "numerical",
        };
        Self {
            kind,
            message: e.to_string(),
        }
    }
}
