//! Finite order-algebra workbench.
//!
//! Represents finite posets and lattices, computes sectional and relative
//! pseudocomplements, verifies relatively residuated lattice axioms and
//! their consequences, enumerates congruences to check arithmeticity and
//! weak regularity, and builds operator-residuated posets. Every check is an
//! exhaustive scan over the finite carrier; failures come with the least
//! witness tuple in element order.

pub mod binop;
pub mod cli;
pub mod congruence;
pub mod constructions;
pub mod elemset;
pub mod error;
pub mod format;
pub mod lattice;
pub mod operator;
pub mod poset;
pub mod pseudocomplement;
pub mod residuation;
pub mod verdict;

pub use binop::BinOp;
pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use lattice::LatticeOps;
pub use poset::{make_poset, NotALattice, Poset};
pub use verdict::{AxiomReport, Verdict, Witness};
