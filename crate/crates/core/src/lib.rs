//! Exact computations with Iwahori-Hecke algebras of type A at generic `q`
//! and with consistent sequences (FI_H-modules) of their representations.
//!
//! Everything is exact: scalars live in `Q(q)` with `q` an indeterminate.
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
mod error;
pub mod fi;
pub mod hecke;
pub mod partitions;
pub mod specht;
pub mod symgroup;

pub use arith::{ExactMatrix, Poly, Scalar, SparseVec};
pub use error::Error;
pub use hecke::{HeckeElement, ModulePresentation};
pub use partitions::{Composition, Partition};
pub use symgroup::Permutation;
