//! Full `a`-ary rooted trees.
//!
//! A tree is stored as its preorder shape: one flag per vertex, `true` for an
//! internal vertex and `false` for a leaf. For a fixed arity that sequence
//! determines the tree, so derived equality, ordering and hashing are
//! structural.
//!
//! Vertices are addressed by words over `0..arity`: the root is the empty
//! word and child `d` of `u` is `u·d`. Leaves listed left to right are in
//! lexicographic order of their addresses.

use std::fmt;
use std::str::FromStr;

use serde_json::Value;

use crate::error::{Error, Result};

/// Path from the root, one child index per step.
pub type Address = Vec<u8>;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    arity: u8,
    shape: Vec<bool>,
}

impl Tree {
    /// The one-vertex tree.
    pub fn leaf(arity: u8) -> Self {
        assert!(arity >= 2, "arity must be at least 2");
        Self {
            arity,
            shape: vec![false],
        }
    }

    /// A single caret: a root with `arity` leaf children.
    pub fn caret(arity: u8) -> Self {
        Self::node(arity, vec![Self::leaf(arity); arity as usize])
    }

    /// A root whose children are the given subtrees.
    pub fn node(arity: u8, children: Vec<Tree>) -> Self {
        assert_eq!(children.len(), arity as usize, "wrong number of children");
        let mut shape = vec![true];
        for child in children {
            assert_eq!(child.arity, arity, "mixed arities");
            shape.extend(child.shape);
        }
        Self { arity, shape }
    }

    /// The right comb with `internal` carets hung along the rightmost path.
    ///
    /// For arity 2, `right_comb(2, n + 1)` is the tree `S_n` with `n + 2`
    /// leaves whose leaves are `0, 10, 110, ..., 1^n 0, 1^(n+1)`.
    pub fn right_comb(arity: u8, internal: usize) -> Self {
        let mut shape = Vec::with_capacity(internal * arity as usize + 1);
        for _ in 0..internal {
            shape.push(true);
            shape.extend(std::iter::repeat(false).take(arity as usize - 1));
        }
        shape.push(false);
        Self { arity, shape }
    }

    /// The binary right comb `S_n`, which has `n + 2` leaves.
    pub fn s_tree(n: usize) -> Self {
        Self::right_comb(2, n + 1)
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }

    pub fn is_leaf(&self) -> bool {
        self.shape.len() == 1
    }

    pub fn internal_count(&self) -> usize {
        self.shape.iter().filter(|&&b| b).count()
    }

    pub fn leaf_count(&self) -> usize {
        self.shape.len() - self.internal_count()
    }

    /// Preorder shape flags.
    pub fn shape(&self) -> &[bool] {
        &self.shape
    }

    /// Builds a tree from preorder shape flags.
    pub fn from_shape(arity: u8, shape: Vec<bool>) -> Result<Self> {
        if arity < 2 {
            return Err(Error::InvalidTree(format!("arity {arity}")));
        }
        let mut need = 1usize;
        for (i, &internal) in shape.iter().enumerate() {
            if need == 0 {
                return Err(Error::InvalidTree(format!("trailing vertices after {i}")));
            }
            need = need - 1 + if internal { arity as usize } else { 0 };
        }
        if need != 0 {
            return Err(Error::InvalidTree("truncated shape".into()));
        }
        Ok(Self { arity, shape })
    }

    /// Addresses of the leaves, left to right.
    pub fn leaves(&self) -> Vec<Address> {
        let mut out = Vec::with_capacity(self.leaf_count());
        self.walk(|addr, internal| {
            if !internal {
                out.push(addr.to_vec());
            }
        });
        out
    }

    /// Addresses of the internal vertices in preorder.
    pub fn internal_nodes(&self) -> Vec<Address> {
        let mut out = Vec::with_capacity(self.internal_count());
        self.walk(|addr, internal| {
            if internal {
                out.push(addr.to_vec());
            }
        });
        out
    }

    /// Calls `visit(address, is_internal)` on every vertex in preorder.
    pub fn walk(&self, mut visit: impl FnMut(&[u8], bool)) {
        let mut addr: Vec<u8> = Vec::new();
        // Children still to visit at each open internal vertex.
        let mut pending: Vec<u8> = Vec::new();
        for &internal in &self.shape {
            visit(&addr, internal);
            if internal {
                addr.push(0);
                pending.push(self.arity - 1);
            } else {
                loop {
                    match pending.last_mut() {
                        None => break,
                        Some(0) => {
                            pending.pop();
                            addr.pop();
                        }
                        Some(left) => {
                            *left -= 1;
                            *addr.last_mut().expect("address tracks pending") += 1;
                            break;
                        }
                    }
                }
            }
        }
    }

    /// Rebuilds a tree from its leaves listed left to right.
    pub fn from_leaves(arity: u8, leaves: &[Address]) -> Result<Self> {
        fn build(
            arity: u8,
            leaves: &[Address],
            pos: &mut usize,
            prefix: &mut Vec<u8>,
            shape: &mut Vec<bool>,
        ) -> Result<()> {
            let leaf = leaves
                .get(*pos)
                .ok_or_else(|| Error::InvalidTree("leaves do not cover the tree".into()))?;
            if !leaf.starts_with(prefix) {
                return Err(Error::InvalidTree(format!("missing leaf below {prefix:?}")));
            }
            if leaf.len() == prefix.len() {
                shape.push(false);
                *pos += 1;
                return Ok(());
            }
            shape.push(true);
            for d in 0..arity {
                prefix.push(d);
                build(arity, leaves, pos, prefix, shape)?;
                prefix.pop();
            }
            Ok(())
        }
        if leaves.iter().flatten().any(|&d| d >= arity) {
            return Err(Error::InvalidTree(format!("digit outside 0..{arity}")));
        }
        let mut shape = Vec::with_capacity(leaves.len() * 2);
        let mut pos = 0;
        build(arity, leaves, &mut pos, &mut Vec::new(), &mut shape)?;
        if pos != leaves.len() {
            return Err(Error::InvalidTree("leaves overlap".into()));
        }
        Ok(Self { arity, shape })
    }

    /// Smallest tree containing both trees as rooted subtrees.
    pub fn union(&self, other: &Tree) -> Result<Tree> {
        fn skip(shape: &[bool], i: &mut usize, arity: usize) -> std::ops::Range<usize> {
            let start = *i;
            let mut need = 1;
            while need > 0 {
                need = need - 1 + if shape[*i] { arity } else { 0 };
                *i += 1;
            }
            start..*i
        }
        fn go(
            a: &[bool],
            ia: &mut usize,
            b: &[bool],
            ib: &mut usize,
            arity: usize,
            out: &mut Vec<bool>,
        ) {
            match (a[*ia], b[*ib]) {
                (true, true) => {
                    out.push(true);
                    *ia += 1;
                    *ib += 1;
                    for _ in 0..arity {
                        go(a, ia, b, ib, arity, out);
                    }
                }
                (true, false) => {
                    let r = skip(a, ia, arity);
                    out.extend_from_slice(&a[r]);
                    *ib += 1;
                }
                (false, true) => {
                    let r = skip(b, ib, arity);
                    out.extend_from_slice(&b[r]);
                    *ia += 1;
                }
                (false, false) => {
                    out.push(false);
                    *ia += 1;
                    *ib += 1;
                }
            }
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        let mut out = Vec::with_capacity(self.shape.len().max(other.shape.len()));
        go(
            &self.shape,
            &mut 0,
            &other.shape,
            &mut 0,
            self.arity as usize,
            &mut out,
        );
        Ok(Tree {
            arity: self.arity,
            shape: out,
        })
    }

    /// Subtree hanging at `addr`, if `addr` is a vertex.
    pub fn subtree(&self, addr: &[u8]) -> Option<Tree> {
        let arity = self.arity as usize;
        let mut i = 0usize;
        for &d in addr {
            if !self.shape[i] {
                return None;
            }
            i += 1;
            for _ in 0..d {
                let mut need = 1;
                while need > 0 {
                    need = need - 1 + if self.shape[i] { arity } else { 0 };
                    i += 1;
                }
            }
        }
        let start = i;
        let mut need = 1;
        while need > 0 {
            need = need - 1 + if self.shape[i] { arity } else { 0 };
            i += 1;
        }
        Some(Tree {
            arity: self.arity,
            shape: self.shape[start..i].to_vec(),
        })
    }

    /// The child subtrees of the root, or `None` for a leaf.
    pub fn children(&self) -> Option<Vec<Tree>> {
        if self.is_leaf() {
            return None;
        }
        Some(
            (0..self.arity)
                .map(|d| self.subtree(&[d]).expect("root is internal"))
                .collect(),
        )
    }

    /// Nested-array form: a leaf is `[]`, an internal vertex is the array of
    /// its children.
    pub fn to_json(&self) -> Value {
        match self.children() {
            None => Value::Array(Vec::new()),
            Some(children) => Value::Array(children.iter().map(Tree::to_json).collect()),
        }
    }

    pub fn from_json(value: &Value, arity: u8) -> Result<Tree> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Parse(format!("tree `{value}`")))?;
        if items.is_empty() {
            return Ok(Tree::leaf(arity));
        }
        if items.len() != arity as usize {
            return Err(Error::InvalidTree(format!(
                "vertex with {} children in an arity {arity} tree",
                items.len()
            )));
        }
        let children = items
            .iter()
            .map(|v| Tree::from_json(v, arity))
            .collect::<Result<Vec<_>>>()?;
        Ok(Tree::node(arity, children))
    }

    /// Parses the parenthesis form, inferring the arity from the first
    /// internal vertex (a bare leaf `()` is taken as binary).
    pub fn parse_infer(s: &str) -> Result<Tree> {
        Self::parse_with(s, None)
    }

    pub fn parse_with_arity(s: &str, arity: u8) -> Result<Tree> {
        Self::parse_with(s, Some(arity))
    }

    fn parse_with(s: &str, arity: Option<u8>) -> Result<Tree> {
        // Parse into child counts first, then check them against the arity.
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::Parse(format!("tree `{s}`: {msg}"));
        let mut counts = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        let mut closed = false;
        for &c in &chars {
            if closed {
                return Err(bad("text after the root"));
            }
            match c {
                '(' => {
                    if let Some(&parent) = stack.last() {
                        counts[parent] += 1;
                    }
                    stack.push(counts.len());
                    counts.push(0usize);
                }
                ')' => {
                    stack.pop().ok_or_else(|| bad("unbalanced `)`"))?;
                    closed = stack.is_empty();
                }
                other => return Err(bad(&format!("unexpected `{other}`"))),
            }
        }
        if !closed {
            return Err(bad("unbalanced `(`"));
        }
        let arity = match arity {
            Some(a) => a,
            None => counts.iter().copied().find(|&c| c > 0).unwrap_or(2) as u8,
        };
        if arity < 2 {
            return Err(bad("a vertex has a single child"));
        }
        if let Some(c) = counts.iter().find(|&&c| c != 0 && c != arity as usize) {
            return Err(bad(&format!(
                "vertex with {c} children in an arity {arity} tree"
            )));
        }
        Ok(Tree {
            arity,
            shape: counts.into_iter().map(|c| c > 0).collect(),
        })
    }
}

impl fmt::Display for Tree {
    /// Balanced parentheses: a leaf is `()`, an internal vertex wraps its
    /// children in one more pair, so a caret is `(()())`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arity = self.arity as usize;
        let mut open: Vec<usize> = Vec::new();
        for &internal in &self.shape {
            f.write_str("(")?;
            if internal {
                open.push(arity);
                continue;
            }
            f.write_str(")")?;
            while let Some(left) = open.last_mut() {
                *left -= 1;
                if *left > 0 {
                    break;
                }
                open.pop();
                f.write_str(")")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_infer(s)
    }
}
