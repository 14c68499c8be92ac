use thiserror::Error;

/// Errors raised by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan-Killing type: {0}")]
    InvalidType(String),
    #[error("invalid census query: {0}")]
    InvalidQuery(String),
    #[error("form is not in the census: {0}")]
    UnknownForm(String),
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("unsupported center: {0}")]
    UnsupportedCenter(String),
    #[error("invalid invariant family: {0}")]
    InvalidFamily(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("invalid signatures: {0}")]
    InvalidSignatures(String),
    #[error("missing D4 decomposition data: {0}")]
    MissingD4Data(String),
    #[error("invalid permutation group: {0}")]
    InvalidGroup(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("group is not transitive: {0}")]
    NotTransitive(String),
    #[error("enumeration bound exceeded: {0}")]
    TooLarge(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidType(_) => "InvalidType",
            Error::InvalidQuery(_) => "InvalidQuery",
            Error::UnknownForm(_) => "UnknownForm",
            Error::InvalidDescriptor(_) => "InvalidDescriptor",
            Error::UnsupportedCenter(_) => "UnsupportedCenter",
            Error::InvalidFamily(_) => "InvalidFamily",
            Error::NotApplicable(_) => "NotApplicable",
            Error::InvalidSignatures(_) => "InvalidSignatures",
            Error::MissingD4Data(_) => "MissingD4Data",
            Error::InvalidGroup(_) => "InvalidGroup",
            Error::NotSubgroup(_) => "NotSubgroup",
            Error::NotTransitive(_) => "NotTransitive",
            Error::TooLarge(_) => "TooLarge",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
