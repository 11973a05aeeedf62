use super::{Address, Generator, GroupWord, Tree, TreePair};
use crate::error::{Error, Result};

/// Leaf exponents of a binary tree, one per leaf in left-to-right order.
///
/// The exponent of a leaf is the number of left edges on the longest path of
/// left edges going up from it that stays off the right side of the tree.
pub fn leaf_exponents(tree: &Tree) -> Vec<u32> {
    tree.leaves().iter().map(leaf_exponent).collect()
}

fn leaf_exponent(leaf: &Address) -> u32 {
    let zeros = leaf.iter().rev().take_while(|&&d| d == 0).count();
    let top = &leaf[..leaf.len() - zeros];
    if zeros > 0 && top.iter().all(|&d| d == 1) {
        zeros as u32 - 1
    } else {
        zeros as u32
    }
}

impl TreePair {
    /// `x_0^a_0 ... x_n^a_n x_n^-b_n ... x_0^-b_0` with `a_i`, `b_i` the leaf
    /// exponents of the reduced domain and range trees.
    pub fn normal_form(&self) -> Result<GroupWord> {
        if self.arity() != 2 {
            return Err(Error::UnsupportedArity {
                operation: "normal_form",
                expected: 2,
                arity: self.arity(),
            });
        }
        let f = self.reduce();
        if f.rotation() != 1 {
            return Err(Error::NotInF(f.rotation()));
        }
        let a = leaf_exponents(f.domain());
        let b = leaf_exponents(f.range());
        let mut word = GroupWord::new();
        for (i, &e) in a.iter().enumerate() {
            word.push(Generator::X(i as u32), e as i64);
        }
        for (i, &e) in b.iter().enumerate().rev() {
            word.push(Generator::X(i as u32), -(e as i64));
        }
        Ok(word)
    }
}
