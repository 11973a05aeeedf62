//! Exhaustive torsion searches in `T_a` and the leaf-count bookkeeping
//! behind the absence of involutions in `T_3`.
//!
//! Negative results only mean "none up to the leaf bound".

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::treepair::{enumerate, TreePair};

/// Elements with at most `max_leaves` leaves whose order is exactly
/// `target_order`.
pub fn search_torsion(arity: u8, target_order: usize, max_leaves: usize) -> Vec<TreePair> {
    enumerate(arity, max_leaves)
        .into_iter()
        .filter(|f| f.order(target_order) == Some(target_order))
        .collect()
}

pub fn torsion_json(hits: &[TreePair]) -> Value {
    Value::Array(hits.iter().map(TreePair::to_json).collect())
}

/// Leaves on either side of the left endpoint `alpha` of a domain leaf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafParityReport {
    /// Domain leaves left of `alpha`.
    pub r_minus: usize,
    pub r_plus: usize,
    /// Range leaves starting left of `alpha`.
    pub s_minus: usize,
    pub s_plus: usize,
    /// Whether `alpha` is also a breakpoint of the range tree.
    pub aligned: bool,
}

impl LeafParityReport {
    /// Parities of `(r_minus, r_plus, s_minus, s_plus)`.
    pub fn parities(&self) -> [usize; 4] {
        [self.r_minus, self.r_plus, self.s_minus, self.s_plus].map(|c| c % 2)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "r_minus": self.r_minus,
            "r_plus": self.r_plus,
            "s_minus": self.s_minus,
            "s_plus": self.s_plus,
            "aligned": self.aligned,
            "parities": self.parities(),
        })
    }
}

// Lexicographic comparison of addresses padded with zeros, i.e. of the left
// endpoints of their intervals.
fn endpoint_cmp(a: &[u8], b: &[u8]) -> std::cmp::Ordering {
    let len = a.len().max(b.len());
    let pad = |w: &[u8]| {
        w.iter()
            .copied()
            .chain(std::iter::repeat(0))
            .take(len)
            .collect::<Vec<_>>()
    };
    pad(a).cmp(&pad(b))
}

/// Splits the leaves of both trees at the left endpoint of domain leaf
/// `split` (1-based).
pub fn leaf_parity_report(f: &TreePair, split: usize) -> Result<LeafParityReport> {
    let l = f.leaf_count();
    if split == 0 || split > l {
        return Err(Error::IndexOutOfRange {
            index: split,
            len: l,
        });
    }
    let dom = f.domain().leaves();
    let alpha = &dom[split - 1];
    let ran = f.range().leaves();
    let s_minus = ran
        .iter()
        .filter(|s| endpoint_cmp(s, alpha).is_lt())
        .count();
    let aligned = ran.iter().any(|s| endpoint_cmp(s, alpha).is_eq());
    Ok(LeafParityReport {
        r_minus: split - 1,
        r_plus: l - split + 1,
        s_minus,
        s_plus: l - s_minus,
        aligned,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treepair::{Generator, Tree};

    #[test]
    fn involutions() {
        assert_eq!(
            search_torsion(2, 2, 2),
            vec![TreePair::generator(Generator::C(0)).unwrap()]
        );
        assert!(search_torsion(3, 2, 5).is_empty());
        let rotation_free: Vec<_> = search_torsion(2, 2, 4)
            .into_iter()
            .filter(|f| f.rotation() == 1)
            .collect();
        assert!(rotation_free.is_empty());
    }

    #[test]
    fn finds_rotations() {
        let c1 = TreePair::generator(Generator::C(1)).unwrap();
        let hits = search_torsion(2, 3, 3);
        assert!(hits.contains(&c1));
        assert!(hits.iter().all(|f| f.order(2).is_none()));
    }

    #[test]
    fn parity_counts() {
        let r = leaf_parity_report(&TreePair::identity(3), 1).unwrap();
        assert_eq!((r.r_minus, r.r_plus, r.s_minus, r.s_plus), (0, 1, 0, 1));
        let caret = Tree::caret(3);
        let f = TreePair::new(caret.clone(), caret, 2).unwrap();
        let r = leaf_parity_report(&f, 2).unwrap();
        assert_eq!((r.r_minus, r.r_plus, r.s_minus, r.s_plus), (1, 2, 1, 2));
        assert!(r.aligned);
        assert_eq!(r.parities(), [1, 0, 1, 0]);
        assert!(leaf_parity_report(&f, 4).is_err());
    }

    #[test]
    fn json_list() {
        let v = torsion_json(&search_torsion(2, 2, 2));
        assert_eq!(v.as_array().unwrap().len(), 1);
        assert_eq!(v[0]["rotation"], 2);
    }
}
