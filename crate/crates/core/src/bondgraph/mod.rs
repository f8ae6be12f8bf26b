//! Terms of free props over a signature, their evaluation into corelations
//! and linear relations, the black-box functor, and the naturality check
//! relating the effort/flow and potential/current semantics of bond graphs.

pub mod blackbox;
pub mod eval;
pub mod naturality;
pub mod random;
pub mod sexpr;
pub mod signature;
pub mod term;

pub use blackbox::black_box;
pub use eval::{eval_corel, eval_lagrel, eval_potential_current};
pub use naturality::{alpha, check_naturality, sweep, sweep_plan, NaturalityReport};
pub use random::random_term;
pub use signature::{Interpretation, Signature};
pub use term::Term;
