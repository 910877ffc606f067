//! Invariant symmetric tensors, Lie algebra cohomology cocycles, their
//! t-tensors and Casimir identities for the classical algebras su(n),
//! so(2l+1), sp(l) and so(2l).
//!
//! Indices are 0-based inside the library. Text export and the CLI use
//! 1-based labels.

pub mod algebra;
pub mod cli;
pub mod cocycles;
pub mod combinat;
pub mod duality;
pub mod error;
pub mod identities;
pub mod invariance;
pub mod invariants;
pub mod io;
pub mod report;
pub mod structure;
pub mod suite;
pub mod ttensor;
pub mod tensor;
pub mod walks;

pub use algebra::{build_algebra, AlgebraSpec, Convention, Family, GeneratorSet};
pub use error::{LieError, Result};
pub use tensor::{AltTensor, SymTensor};
