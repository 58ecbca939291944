use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not weakly decreasing: part {index} ({prev}) < part {next_index} ({next})")]
    NotWeaklyDecreasing {
        index: usize,
        prev: i64,
        next_index: usize,
        next: i64,
    },
    #[error("non-positive part {value} at position {index}")]
    NonPositivePart { index: usize, value: i64 },
    #[error("cannot parse partition {0:?}")]
    ParsePartition(String),
    #[error("t must be positive")]
    ZeroModulus,
    #[error("residue {residue} out of range for modulus {t}")]
    ResidueOutOfRange { residue: usize, t: usize },
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },
    #[error("unbalanced 01-sequence (charge {charge})")]
    Unbalanced { charge: i64 },
    #[error("{partition} is not a {t}-core: hook {hook} at ({row},{col}) is divisible by {t}")]
    NotTCore {
        partition: String,
        t: usize,
        hook: usize,
        row: usize,
        col: usize,
    },
    #[error("expected {expected} quotients, got {got}")]
    QuotientCount { expected: usize, got: usize },
    #[error("content {content} is not an inner corner of {partition}")]
    NotInnerCorner { content: i64, partition: String },
    #[error("{lambda} is not above {mu} in the {t}-hook order")]
    NotAbove {
        lambda: String,
        mu: String,
        t: usize,
    },
    #[error("cannot parse statistic {0:?}")]
    ParseStat(String),
    #[error("q_k with k = {0} has a pole at a zero corner content")]
    ZeroContentPole(i64),
    #[error(
        "difference operator disagreement at r = {r}: recursion {recursive}, transform {transform}"
    )]
    InconsistentOperator {
        r: usize,
        recursive: String,
        transform: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
