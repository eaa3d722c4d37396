use thiserror::Error;

/// Errors raised by construction, parsing and the checked operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {index} out of range for a poset on {n} elements")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("self-loop on element {0}")]
    SelfLoop(usize),

    #[error("relation contains a directed cycle: {}", fmt_seq(.0))]
    Cycle(Vec<usize>),

    #[error("elements {0} and {1} are not comparable as bottom <= top")]
    NotComparable(usize, usize),

    #[error("poset is not bounded")]
    NotBounded,

    #[error("poset is not a lattice: {0}")]
    NotALattice(String),

    #[error("lattice is not semimodular: {x} and {y} cover their meet but their join does not cover both")]
    NotSemimodular { x: usize, y: usize },

    #[error("no join irreducible z with {x} v z = {y}")]
    NoJoinIrreducible { x: usize, y: usize },

    #[error("invalid join-irreducible order: {0}")]
    InvalidOrder(String),

    #[error("labeling is not an EL-labeling: {0}")]
    NotEl(String),

    #[error("labeling domain does not match the cover relation: {0}")]
    LabelDomain(String),

    #[error("not a maximal chain: {}", fmt_seq(.0))]
    NotAMaximalChain(Vec<usize>),

    #[error("order is not a permutation of the maximal chains")]
    NotAPermutation,

    #[error("maximal chains have different sizes {0} and {1}")]
    NotUniform(usize, usize),

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

fn fmt_seq(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" -> ")
}
