pub mod bondgraph;
pub mod circuit;
pub mod corelation;
pub mod dsl;
pub mod enumerate;
pub mod error;
pub mod laws;
pub mod linrel;
mod union_find;

pub use circuit::{Circuit, ComponentMap};
pub use corelation::{Corelation, PortGenerator, WireGenerator};
pub use error::{Error, Result};
pub use linrel::{LinearRelation, Rational, Subspace, SymplecticLayout};
pub use bondgraph::{Signature, Term};

/// The chapters of the guide in `book/`, compiled so that their listings
/// run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/corelations.md")]
    mod corelations {}
    #[doc = include_str!("../../../book/src/circuits.md")]
    mod circuits {}
    #[doc = include_str!("../../../book/src/linear-relations.md")]
    mod linear_relations {}
    #[doc = include_str!("../../../book/src/black-box.md")]
    mod black_box {}
    #[doc = include_str!("../../../book/src/bond-graphs.md")]
    mod bond_graphs {}
    #[doc = include_str!("../../../book/src/naturality.md")]
    mod naturality {}
    #[doc = include_str!("../../../book/src/laws.md")]
    mod laws {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
