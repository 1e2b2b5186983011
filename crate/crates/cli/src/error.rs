use std::fmt;

/// Errors a command can surface: either a domain error from the engine or a
/// problem with the invocation's inputs or files. Both exit with code 1 and
/// put their name in the envelope; argument parsing failures exit with 2
/// before any of this runs.
#[derive(Debug)]
pub enum CliError {
    Domain(detquartic::Error),
    Input { name: String, message: String },
}

impl CliError {
    pub fn input(name: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Input { name: name.into(), message: message.into() }
    }

    pub fn io(err: std::io::Error) -> Self {
        CliError::Input { name: "io-error".into(), message: err.to_string() }
    }

    pub fn name(&self) -> String {
        match self {
            CliError::Domain(e) => e.name().to_string(),
            CliError::Input { name, .. } => name.clone(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Input { message, .. } => write!(f, "{message}"),
        }
    }
}

impl From<detquartic::Error> for CliError {
    fn from(err: detquartic::Error) -> Self {
        CliError::Domain(err)
    }
}
