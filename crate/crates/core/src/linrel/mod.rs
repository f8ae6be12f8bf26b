//! Exact linear algebra over the rationals: subspaces in canonical form,
//! linear relations, the pair symplectic form, and the generator relations
//! used as bond-graph semantics.

pub mod generators;
pub mod matrix;
pub mod rational;
pub mod relation;
pub mod subspace;
pub mod symplectic;

pub use generators::{pair_sum, PairGenerator, ScalarGenerator};
pub use rational::Rational;
pub use relation::LinearRelation;
pub use subspace::Subspace;
pub use symplectic::SymplecticLayout;
