use thiserror::Error;

use crate::family::Family;
use crate::decomp::Series;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence is empty")]
    EmptySequence,
    #[error("sequence `{component}` is not nondecreasing at index {index}")]
    NotNondecreasing { component: &'static str, index: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("pair size exceeds {max}")]
    SizeOverflow { max: u64 },
    #[error("leading entries must be zero to drop them")]
    NotStabilizable,
    #[error("pair is not a member of family `{family}`")]
    NotInFamily { family: Family },
    #[error("pair must start with a zero entry in both components (normalize it first)")]
    NotNormalized,
    #[error("size {requested} exceeds the cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("no record for type {group} with p = {p}")]
    UnknownCase { group: String, p: u32 },
    #[error("cannot parse {what} from `{input}`")]
    Parse { what: &'static str, input: String },
    #[error("{series} decomposition reached an inconsistent state: {detail}")]
    Internal { series: Series, detail: String },
}
