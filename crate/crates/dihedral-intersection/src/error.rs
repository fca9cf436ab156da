/// Errors produced by construction, exact search, and enumeration.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter is outside its documented domain (e.g. `n < 3`, a
    /// composite `p`, or an out-of-range vertex).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An argument violates a call contract (e.g. intersecting a subgroup
    /// with itself, or landmarks outside the vertex set).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An exact computation was refused because it exceeds the configured
    /// budget. Never downgraded to an approximation.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// The operation needs a connected graph.
    #[error("graph is disconnected: {0}")]
    Disconnected(String),

    /// A structural self-check failed (e.g. a claimed split partition did
    /// not validate).
    #[error("check failed: {0}")]
    CheckFailed(String),

    /// Output could not be written.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// CLI exit code: 2 for invalid input, 3 for budget refusal, 1 for
    /// failed checks.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameter(_)
            | Error::InvalidArgument(_)
            | Error::Disconnected(_)
            | Error::Io(_) => 2,
            Error::BudgetExceeded(_) => 3,
            Error::CheckFailed(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
