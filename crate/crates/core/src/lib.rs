//! Exact computations in Thompson's groups `F`, `T` and `T_a`.
//!
//! Elements are tree-pair diagrams ([`TreePair`]) acting on dyadic points of
//! the circle ([`DyadicRational`]). The [`jones`] module decides membership
//! in Jones' subgroup, [`core2`] builds Stallings 2-cores of subgroups,
//! [`presentation`] checks relations and rewrites words, and [`t3`] searches
//! for torsion.

pub mod core2;
pub mod dyadic;
pub mod error;
pub mod jones;
pub mod presentation;
pub mod t3;
pub mod treepair;

pub use core2::{build_core, CoreGraph};
pub use dyadic::{BinaryWord, Dyadic, DyadicRational};
pub use error::{Error, Result};
pub use jones::{member_vect_bipartite, member_vect_parity, ParityClass, ThompsonGraph};
pub use treepair::{enumerate, Generator, GroupWord, PlMap, Tree, TreePair};
