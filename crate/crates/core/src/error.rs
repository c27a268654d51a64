use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid atom name {0:?}")]
    InvalidAtom(String),

    #[error("unknown atom {0}")]
    UnknownAtom(String),

    #[error("atom {0} occurs negated but has no formula of its own")]
    LooseAtom(String),

    #[error("line {line}: atom {atom} is defined twice")]
    DuplicateDefinition { atom: String, line: usize },

    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("universe of {size} atoms exceeds the supported maximum of {max}")]
    UniverseTooLarge { size: usize, max: usize },

    #[error("resource cap exceeded: {what} > {limit}")]
    ResourceCap { what: &'static str, limit: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{0} partition is not a pSK partition")]
    NotPsk(&'static str),

    #[error("second partition adds nothing outside the first one's boolean domain")]
    NoExtension,

    #[error("clause {0} is not derivable")]
    NotDerivable(String),

    #[error("relevance is undefined for the empty clause")]
    EmptyClause,

    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::ResourceCap { .. } | Error::UniverseTooLarge { .. }
        )
    }
}
