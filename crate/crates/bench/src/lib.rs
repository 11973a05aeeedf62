//! Inputs shared by the benchmarks.

use thompson_core::{Generator, GroupWord, TreePair};

/// `x0^k x1^-k c^k`, a word whose diagram grows with `k`.
pub fn mixed_word(k: i64) -> GroupWord {
    let mut w = GroupWord::new();
    w.push(Generator::X(0), k);
    w.push(Generator::X(1), -k);
    w.push(Generator::C(1), k);
    w
}

pub fn element(k: i64) -> TreePair {
    TreePair::from_word(&mixed_word(k)).expect("valid word")
}

/// The generators of Jones' subgroup used throughout.
pub fn jones_generators() -> Vec<TreePair> {
    [
        Generator::G(1),
        Generator::G(2),
        Generator::G(3),
        Generator::C(0),
    ]
    .into_iter()
    .map(|g| TreePair::generator(g).expect("valid generator"))
    .collect()
}
