//! Finite posets and uniform hypergraphs: maximal chains, chain-exchange
//! connectivity, gradings and level sets, antichain cutsets, EL-labelings and
//! shellings, exact transversals and balanced colorings, plus generators for
//! the standard families (Boolean, subspace, partition and divisor lattices,
//! Bruhat orders, grids, chessboard hypergraphs).

pub mod connectivity;
pub mod cutsets;
pub mod error;
mod exact;
pub mod families;
pub mod format;
pub mod grading;
pub mod hypergraph;
pub mod labeling;
pub mod lattice;
pub mod poset;

pub use error::{Error, Result};
pub use hypergraph::Hypergraph;
pub use poset::{Interval, MaximalChain, Poset};

/// A parsed or generated input: either a poset or a uniform hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Poset(Poset),
    Hypergraph(Hypergraph),
}
