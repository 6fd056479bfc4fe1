//! CLI error wrapper mapping every failure to a documented exit code.

use esl_core::Error as CoreError;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Core(CoreError),
    ConditionNotMet { g1: f64 },
    Io(std::io::Error),
}

impl CliError {
    /// Exit codes: 2 config, 3 truncation-overflow, 4 limit-divergence,
    /// 5 necessary-condition-not-met, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Core(CoreError::TruncationOverflow { .. }) => 3,
            CliError::Core(CoreError::LimitDivergence(_)) => 4,
            CliError::ConditionNotMet { .. } => 5,
            CliError::Core(_) => 2,
            CliError::Io(_) => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Config(_) => "config",
            CliError::Core(CoreError::TruncationOverflow { .. }) => "truncation-overflow",
            CliError::Core(CoreError::LimitDivergence(_)) => "limit-divergence",
            CliError::ConditionNotMet { .. } => "necessary-condition-not-met",
            CliError::Core(_) => "config",
            CliError::Io(_) => "io",
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "{msg}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::ConditionNotMet { g1 } => write!(
                f,
                "necessary condition Re(g1) = 0 not met (fitted Re(g1) = {g1:.3e}); \
                 the limit has no nonvanishing empty state"
            ),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}
