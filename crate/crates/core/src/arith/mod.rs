//! Exact arithmetic over `Q(q)` and the linear algebra built on it.

mod linalg;
mod matrix;
mod poly;
mod scalar;

pub use linalg::{
    kernel_basis, quotient_structure, rank, rank_with, solve, specialized_rank, EchelonBasis, Quotient,
    QuotientStructure, RankMode,
};
pub use matrix::{ExactMatrix, SparseVec};
pub use poly::Poly;
pub use scalar::Scalar;
