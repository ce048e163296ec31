use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("letter {letter} is out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },

    #[error("index {index} is out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("braid is not pure")]
    NotPure,

    #[error("invalid address {0:?}: only '0' and '1' are allowed")]
    InvalidAddress(String),

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("tree is not deferred to {0:?}")]
    NotDeferred(String),

    #[error("forest is not elementary")]
    NotElementary,

    #[error("supports overlap at index {0}")]
    SupportOverlap(usize),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("root count mismatch: {left} roots vs {right} roots")]
    RootMismatch { left: usize, right: usize },

    #[error("the zero character has no class on the sphere")]
    ZeroCharacter,

    #[error("not a face of the complex")]
    NotAFace,

    #[error("element does not lie in the subgroup deferred to {0:?}")]
    NotInDeferredSubgroup(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
