use alloc::string::String;

/// Errors raised by the algebraic engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("pole")]
    Pole,
    #[error("unstable specialization")]
    UnstableSpecialization,
    #[error("shape: {0}")]
    Shape(String),
    #[error("not invariant")]
    NotInvariant,
    #[error("composition size: expected {expected}, got {got}")]
    CompositionSize { expected: usize, got: usize },
    #[error("pad range: n = {n} is below |lambda| + lambda_1 = {min}")]
    PadRange { n: usize, min: usize },
    #[error("size bound: {size} exceeds {bound}")]
    SizeBound { size: usize, bound: usize },
    #[error("range: {0}")]
    Range(String),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("invalid permutation")]
    InvalidPermutation,
    #[error("invalid partition")]
    InvalidPartition,
    #[error("relation violated: {0}")]
    Relation(String),
    #[error("degenerate character table")]
    DegenerateCharacterTable,
    #[error("not a module: {0}")]
    NotAModule(String),
    #[error("insufficient degree: not generated in degree <= {0} within truncation")]
    InsufficientDegree(usize),
    #[error("not a morphism: {0}")]
    NotAMorphism(String),
}
