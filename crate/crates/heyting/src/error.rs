use thiserror::Error;

/// Crate-wide error type.
///
/// The CLI maps these onto exit codes: argument/parse/format errors are
/// usage errors (2), size and resource guards are resource errors (3).
#[derive(Debug, Error)]
pub enum Error {
    /// A size or blow-up guard tripped before memory or time was exhausted.
    #[error("size limit exceeded: {what} (limit {limit}, requested {actual})")]
    SizeLimit {
        what: &'static str,
        limit: u64,
        actual: u64,
    },

    /// A structural precondition on a lattice or algebra failed.
    #[error("structure error: {0}")]
    Structure(String),

    /// A caller-supplied argument violated an operation's precondition.
    #[error("argument error: {0}")]
    Argument(String),

    /// A generating set has no finite intersection property: the listed
    /// elements meet to bottom.
    #[error("finite intersection property fails: elements {witness:?} meet to bottom")]
    Fip { witness: Vec<usize> },

    /// Values bound to one algebra were used with a different one.
    #[error("value belongs to a different algebra instance")]
    CrossAlgebra,

    /// Formula text could not be parsed.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// A configured resource bound (search depth, step count) was exceeded.
    #[error("resource bound exceeded: {0}")]
    Resource(String),

    /// An internal consistency check failed; indicates a bug, never expected.
    #[error("internal verification failed: {0}")]
    Verification(String),

    #[error("malformed input file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
