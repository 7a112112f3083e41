use std::fmt;

/// Process exit status classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitKind {
    Usage = 1,
    Parse = 2,
    Guard = 3,
    Violation = 4,
}

#[derive(Debug)]
pub struct CliError {
    pub kind: ExitKind,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            kind: ExitKind::Usage,
            message: message.into(),
        }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        CliError {
            kind: ExitKind::Parse,
            message: message.into(),
        }
    }

    /// Wraps a library error raised while processing `instance`.
    pub fn from_core(err: hombound::Error, instance: &str) -> Self {
        use hombound::Error as E;
        let kind = match err {
            E::Parse { .. } | E::UnsupportedSize(_) => ExitKind::Parse,
            E::InstanceTooLarge(_) => ExitKind::Guard,
            _ => ExitKind::Usage,
        };
        CliError {
            kind,
            message: format!("{instance}: {err}"),
        }
    }

    pub fn code(&self) -> u8 {
        self.kind as u8
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}
