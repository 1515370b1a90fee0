use alloc::string::String;

/// Errors raised by code construction, enumeration and the classifiers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(
        "row {row} has shape ({found_alpha},{found_beta}) but the code has shape ({alpha},{beta})"
    )]
    ShapeMismatch {
        row: usize,
        alpha: usize,
        beta: usize,
        found_alpha: usize,
        found_beta: usize,
    },

    #[error("words of shape ({0},{1}) and ({2},{3}) cannot be paired")]
    WordShapeMismatch(usize, usize, usize, usize),

    /// Brute force would visit `required` words, more than the configured cap.
    #[error("enumeration needs {required} words but the cap is {cap}; raise the cap to at least {required}")]
    CapExceeded { required: u128, cap: u64 },

    #[error("operation not applicable: {0}")]
    Inapplicable(&'static str),

    #[error("best-known table line {line}: expected three integers \"n k d\"")]
    TableLine { line: usize },

    #[error("invalid search specification: {0}")]
    InvalidSearch(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
