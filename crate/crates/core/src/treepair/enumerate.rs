use std::collections::BTreeSet;

use super::{Tree, TreePair};

/// All full `arity`-ary trees with exactly `leaves` leaves, in a fixed order.
///
/// Empty unless `leaves ≡ 1 (mod arity - 1)`.
pub fn tree_shapes(arity: u8, leaves: usize) -> Vec<Tree> {
    assert!(arity >= 2, "arity must be at least 2");
    let a = arity as usize;
    if leaves == 0 || (leaves - 1) % (a - 1) != 0 {
        return Vec::new();
    }
    // by_size[n] holds the preorder shapes with n leaves.
    let mut by_size: Vec<Vec<Vec<bool>>> = vec![Vec::new(); leaves + 1];
    by_size[1].push(vec![false]);
    for n in 2..=leaves {
        if (n - 1) % (a - 1) != 0 {
            continue;
        }
        let mut out = Vec::new();
        forests(&by_size, a, n, &mut vec![true], &mut out);
        by_size[n] = out;
    }
    by_size[leaves]
        .iter()
        .map(|s| Tree::from_shape(arity, s.clone()).expect("generated shape is valid"))
        .collect()
}

// Appends every way of filling `slots` children with `leaves` leaves in total.
fn forests(
    by_size: &[Vec<Vec<bool>>],
    slots: usize,
    leaves: usize,
    prefix: &mut Vec<bool>,
    out: &mut Vec<Vec<bool>>,
) {
    if slots == 0 {
        if leaves == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    // Every remaining slot needs at least one leaf.
    for first in 1..=leaves.saturating_sub(slots - 1) {
        for shape in &by_size[first] {
            let mark = prefix.len();
            prefix.extend_from_slice(shape);
            forests(by_size, slots - 1, leaves - first, prefix, out);
            prefix.truncate(mark);
        }
    }
}

/// Every element of `T_arity` whose reduced diagram has at most `max_leaves`
/// leaves, sorted and without repeats.
pub fn enumerate(arity: u8, max_leaves: usize) -> Vec<TreePair> {
    let mut seen = BTreeSet::new();
    for l in 1..=max_leaves {
        let shapes = tree_shapes(arity, l);
        for r in &shapes {
            for s in &shapes {
                for n in 1..=l {
                    let pair = TreePair::new(r.clone(), s.clone(), n).expect("same leaf count");
                    seen.insert(pair.reduce());
                }
            }
        }
    }
    seen.into_iter().collect()
}
