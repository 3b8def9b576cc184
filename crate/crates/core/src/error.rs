use thiserror::Error;

use crate::incidence::{LineId, PointId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed incidence document: {0}")]
    MalformedDocument(String),

    #[error("plane is not a verified affine plane: {0}")]
    NotVerified(String),

    #[error("the two points must be distinct")]
    SamePoint,

    #[error("the two lines must be distinct")]
    SameLine,

    #[error("no line joins points {0} and {1}")]
    NoJoin(PointId, PointId),

    #[error("{count} lines join points {p} and {q}")]
    MultipleJoins {
        p: PointId,
        q: PointId,
        count: usize,
    },

    #[error("parallelism is not transitive: {first} and {second} are grouped but meet")]
    NotEquivalence { first: LineId, second: LineId },

    #[error("{0} is not prime; order must be prime")]
    NotPrime(u64),

    #[error("order {order} exceeds the configured bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("image array is not a permutation: {0}")]
    NotPermutation(String),

    #[error("map is not a dilation")]
    NotDilation,

    #[error("map is not a translation")]
    NotTranslation,

    #[error("traces of a translation fall into different parallel classes (at point {0})")]
    TraceClassMismatch(PointId),

    #[error("composite of elements {left} and {right} is not in the set")]
    NotClosed { left: usize, right: usize },

    #[error("identity map is missing from the translation set")]
    MissingIdentity,

    #[error("element {0} has no inverse in the set")]
    MissingInverse(usize),

    #[error("map is not an endomorphism of the translation group")]
    NotEndomorphism,
}
