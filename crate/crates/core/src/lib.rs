//! Exact computation of derivation algebras of evolution algebras over `Q`.
//!
//! The crate covers the structure of an evolution algebra (products, powers,
//! annihilator, associativity, power-associativity, nilness), its Lie algebra
//! of derivations `D(E)` with the derived algebra `D(E)'` and the ideal of
//! inner derivations `In(E)`, the natural-basis direct-sum decomposition with
//! its block description of derivations, and a catalog of the indecomposable
//! power-associative nilalgebras of dimension at most six.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod decomposition;
pub mod derivation;
pub mod error;
pub mod io;
pub mod matrix;
pub mod polynomial;
pub mod scalar;
pub mod subspace;

pub use algebra::{AlgebraElement, EvolutionAlgebra, NilVerdict};
pub use error::{EvoError, Result};
pub use matrix::{DerivationMatrix, Matrix};
pub use scalar::Scalar;
pub use subspace::Subspace;
