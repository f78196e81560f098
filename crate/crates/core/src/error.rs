use crate::statistics::StatisticId;

/// Errors shared across the whole library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("duplicate entry {0}")]
    DuplicateEntry(u32),
    #[error("entries must be positive integers")]
    NonPositiveEntry,
    #[error("a cycle must be nonempty")]
    EmptyCycle,
    #[error("empty word not allowed here")]
    EmptyWord,
    #[error("size mismatch: word has {word} entries, target has {target}")]
    SizeMismatch { word: usize, target: usize },
    #[error("element {element} lies outside [{bound}]")]
    OutOfRange { element: u32, bound: u32 },
    #[error("entry {0} is not present")]
    MissingEntry(u32),
    #[error("alphabets overlap at {0}")]
    OverlappingAlphabets(u32),
    #[error("alphabet must be exactly {expected}")]
    BadAlphabet { expected: String },
    #[error("{0} is not a linear statistic")]
    NotLinear(StatisticId),
    #[error("{0} is not a cyclic statistic")]
    NotCyclic(StatisticId),
    #[error("unknown statistic {0:?}")]
    UnknownStatistic(String),
    #[error("distributions differ; no statistic-preserving bijection exists")]
    DistributionMismatch,
    #[error("top entry {top} is not strictly greater than {entry}")]
    TopNotMaximal { top: u32, entry: u32 },
    #[error("q-binomial arguments out of range: ({a}, {b})")]
    QBinomialRange { a: u32, b: u32 },
    #[error("lengths must be positive")]
    NonPositiveLength,
    #[error("bound must be at least {min}, got {got}")]
    BoundTooSmall { min: u32, got: u32 },
    #[error("pattern {given} is not standardized; did you mean {expected}?")]
    NotStandardized { given: String, expected: String },
}
