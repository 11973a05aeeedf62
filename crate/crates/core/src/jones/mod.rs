//! Jones' subgroup of `T`: Thompson graphs, the two membership tests, and
//! the constructions that go with them.

mod graph;
mod membership;

pub use graph::{Bipartition, ThompsonGraph};
pub use membership::{
    alternating_form, commensurator_witness, factorize, member_vect_bipartite, member_vect_parity,
    Factorization, ParityClass,
};
