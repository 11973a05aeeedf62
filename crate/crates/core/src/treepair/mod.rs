//! Elements of Thompson's groups `F`, `T` and `T_a` as tree-pair diagrams.
//!
//! A [`TreePair`] `(R, S, n)` has a domain tree `R`, a range tree `S` with the
//! same number `L` of leaves, and a rotation `1 <= n <= L`: leaf `i` of `R` is
//! matched with leaf `((i - 1 + n - 1) mod L) + 1` of `S`. Products are
//! composed left to right, so `a.multiply(b)` applies `a` first.

mod enumerate;
mod generators;
mod normal;
mod plmap;
mod tree;
mod word;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::dyadic::{BinaryWord, DyadicRational};
use crate::error::{Error, Result};

pub use enumerate::{enumerate, tree_shapes};
pub use generators::Generator;
pub use normal::leaf_exponents;
pub use plmap::{Piece, PlMap};
pub use tree::{Address, Tree};
pub use word::GroupWord;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreePair {
    domain: Tree,
    range: Tree,
    rotation: usize,
}

impl TreePair {
    pub fn new(domain: Tree, range: Tree, rotation: usize) -> Result<Self> {
        if domain.arity() != range.arity() {
            return Err(Error::ArityMismatch {
                left: domain.arity(),
                right: range.arity(),
            });
        }
        let (dl, rl) = (domain.leaf_count(), range.leaf_count());
        if dl != rl {
            return Err(Error::LeafCountMismatch {
                domain: dl,
                range: rl,
            });
        }
        if rotation == 0 || rotation > dl {
            return Err(Error::InvalidRotation {
                rotation,
                leaves: dl,
            });
        }
        Ok(Self {
            domain,
            range,
            rotation,
        })
    }

    pub fn identity(arity: u8) -> Self {
        Self {
            domain: Tree::leaf(arity),
            range: Tree::leaf(arity),
            rotation: 1,
        }
    }

    pub fn domain(&self) -> &Tree {
        &self.domain
    }

    pub fn range(&self) -> &Tree {
        &self.range
    }

    /// Which range leaf (1-based) the first domain leaf is matched with.
    pub fn rotation(&self) -> usize {
        self.rotation
    }

    pub fn arity(&self) -> u8 {
        self.domain.arity()
    }

    pub fn leaf_count(&self) -> usize {
        self.domain.leaf_count()
    }

    /// Whether the diagram is literally the one-leaf identity diagram.
    pub fn is_identity(&self) -> bool {
        self.domain.is_leaf()
    }

    /// 0-based range position matched with 0-based domain position `i`.
    pub fn image_index(&self, i: usize) -> usize {
        (i + self.rotation - 1) % self.leaf_count()
    }

    /// 0-based domain position matched with 0-based range position `j`.
    pub fn preimage_index(&self, j: usize) -> usize {
        let l = self.leaf_count();
        (j + l - (self.rotation - 1)) % l
    }

    /// Matched leaf addresses `(domain leaf, range leaf)` in domain order.
    pub fn leaf_map(&self) -> Vec<(Address, Address)> {
        let dom = self.domain.leaves();
        let ran = self.range.leaves();
        dom.into_iter()
            .enumerate()
            .map(|(i, d)| (d, ran[self.image_index(i)].clone()))
            .collect()
    }

    /// Rebuilds a diagram from matched leaves listed in domain order.
    ///
    /// Fails unless the matching is a cyclic shift of the range leaves.
    pub fn from_leaf_map(arity: u8, pairs: &[(Address, Address)]) -> Result<Self> {
        let dom: Vec<Address> = pairs.iter().map(|(d, _)| d.clone()).collect();
        let mut ran: Vec<Address> = pairs.iter().map(|(_, r)| r.clone()).collect();
        ran.sort();
        let domain = Tree::from_leaves(arity, &dom)?;
        let range = Tree::from_leaves(arity, &ran)?;
        let l = pairs.len();
        let first = ran
            .binary_search(&pairs[0].1)
            .expect("image of the first leaf is a range leaf");
        for (i, (_, r)) in pairs.iter().enumerate() {
            if ran[(first + i) % l] != *r {
                return Err(Error::InvalidTree(
                    "leaf matching does not preserve cyclic order".into(),
                ));
            }
        }
        Self::new(domain, range, first + 1)
    }

    /// Adds a dipole: hangs a caret under domain leaf `i` (0-based) and under
    /// the range leaf matched with it. The element is unchanged.
    pub fn expand(&self, i: usize) -> Result<Self> {
        let l = self.leaf_count();
        if i >= l {
            return Err(Error::IndexOutOfRange {
                index: i + 1,
                len: l,
            });
        }
        let arity = self.arity();
        let mut pairs = self.leaf_map();
        let (d, r) = pairs.remove(i);
        for (k, digit) in (0..arity).enumerate() {
            let mut dd = d.clone();
            dd.push(digit);
            let mut rr = r.clone();
            rr.push(digit);
            pairs.insert(i + k, (dd, rr));
        }
        Self::from_leaf_map(arity, &pairs)
    }

    /// Replaces domain leaf `i` and its matched range leaf by copies of
    /// `subtree`.
    pub fn expand_with(&self, i: usize, subtree: &Tree) -> Result<Self> {
        let l = self.leaf_count();
        if i >= l {
            return Err(Error::IndexOutOfRange {
                index: i + 1,
                len: l,
            });
        }
        let mut pairs = self.leaf_map();
        let (d, r) = pairs.remove(i);
        for (k, w) in subtree.leaves().into_iter().enumerate() {
            pairs.insert(
                i + k,
                ([d.as_slice(), &w].concat(), [r.as_slice(), &w].concat()),
            );
        }
        Self::from_leaf_map(self.arity(), &pairs)
    }

    /// Domain positions (0-based) of the first leaf of every dipole.
    ///
    /// A dipole is a domain caret whose leaves are matched, in order, with
    /// the leaves of one range caret.
    pub fn dipoles(&self) -> Vec<usize> {
        let a = self.arity() as usize;
        let l = self.leaf_count();
        if l < a {
            return Vec::new();
        }
        let dom = self.domain.leaves();
        let ran = self.range.leaves();
        let is_caret_at = |leaves: &[Address], start: usize| {
            if start + a > leaves.len() {
                return false;
            }
            let first = &leaves[start];
            if first.last() != Some(&0) {
                return false;
            }
            let parent = &first[..first.len() - 1];
            (0..a).all(|k| {
                let leaf = &leaves[start + k];
                leaf.len() == first.len()
                    && leaf.starts_with(parent)
                    && leaf[parent.len()] as usize == k
            })
        };
        (0..=l - a)
            .filter(|&i| {
                let j = self.image_index(i);
                is_caret_at(&dom, i) && j + a <= l && is_caret_at(&ran, j)
            })
            .collect()
    }

    /// Removes the dipole whose first domain leaf is at position `i`.
    pub fn remove_dipole(&self, i: usize) -> Result<Self> {
        if !self.dipoles().contains(&i) {
            return Err(Error::InvalidTree(format!("no dipole at leaf {}", i + 1)));
        }
        let a = self.arity() as usize;
        let mut pairs = self.leaf_map();
        let removed: Vec<_> = pairs.drain(i..i + a).collect();
        let (mut d, mut r) = removed.into_iter().next().expect("caret has leaves");
        d.pop();
        r.pop();
        pairs.insert(i, (d, r));
        Self::from_leaf_map(self.arity(), &pairs)
    }

    pub fn is_reduced(&self) -> bool {
        self.dipoles().is_empty()
    }

    /// The unique dipole-free diagram of the same element.
    pub fn reduce(&self) -> Self {
        let mut current = self.clone();
        while let Some(&i) = current.dipoles().first() {
            current = current
                .remove_dipole(i)
                .expect("listed dipole can be removed");
        }
        current
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        Ok(())
    }

    /// Product diagram before reduction: both factors are expanded until the
    /// range of `self` equals the domain of `other`.
    pub fn multiply_unreduced(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let arity = self.arity();
        let common = self.range.union(&other.domain)?;
        let other_map: HashMap<Address, Address> = other.leaf_map().into_iter().collect();
        let mut pairs = Vec::with_capacity(common.leaf_count());
        for (d, s) in self.leaf_map() {
            let below = common
                .subtree(&s)
                .expect("range leaf is a vertex of the union");
            for w in below.leaves() {
                let mid: Address = [s.as_slice(), &w].concat();
                let cut = (0..=mid.len())
                    .find(|&k| other_map.contains_key(&mid[..k]))
                    .expect("union refines the domain of the second factor");
                let image = &other_map[&mid[..cut]];
                pairs.push((
                    [d.as_slice(), &w].concat(),
                    [image.as_slice(), &mid[cut..]].concat(),
                ));
            }
        }
        Self::from_leaf_map(arity, &pairs)
    }

    /// Reduced product; `self` acts first.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        Ok(self.multiply_unreduced(other)?.reduce())
    }

    pub fn inverse(&self) -> Self {
        let l = self.leaf_count();
        let shift = (l - (self.rotation - 1)) % l;
        Self {
            domain: self.range.clone(),
            range: self.domain.clone(),
            rotation: shift + 1,
        }
    }

    pub fn pow(&self, exponent: i64) -> Self {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = Self::identity(self.arity());
        for _ in 0..exponent.unsigned_abs() {
            acc = acc.multiply(&base).expect("same arity");
        }
        acc
    }

    /// Group equality: the reduced diagrams coincide.
    pub fn same_element(&self, other: &Self) -> Result<bool> {
        self.check_arity(other)?;
        Ok(self.reduce() == other.reduce())
    }

    /// Least `k <= cap` with `self^k = 1`.
    pub fn order(&self, cap: usize) -> Option<usize> {
        let base = self.reduce();
        let mut power = base.clone();
        for k in 1..=cap {
            if power.is_identity() {
                return Some(k);
            }
            power = power.multiply(&base).expect("same arity");
        }
        None
    }

    /// Image of a point given by its base-`arity` digits.
    ///
    /// The word is padded with zeros until a domain leaf is a prefix of it;
    /// that prefix is replaced by the matched range leaf.
    pub fn apply_address(&self, point: &[u8]) -> Address {
        let dom = self.domain.leaves();
        let ran = self.range.leaves();
        let mut padded = point.to_vec();
        loop {
            if let Some(i) = dom.iter().position(|d| padded.starts_with(d)) {
                let j = self.image_index(i);
                return [ran[j].as_slice(), &padded[dom[i].len()..]].concat();
            }
            padded.push(0);
        }
    }

    /// Image of a dyadic point of the circle. Only binary diagrams act on
    /// dyadic points.
    pub fn evaluate(&self, t: &DyadicRational) -> Result<DyadicRational> {
        if self.arity() != 2 {
            return Err(Error::UnsupportedArity {
                operation: "evaluate",
                expected: 2,
                arity: self.arity(),
            });
        }
        let bits = t.to_word(None).expect("canonical length").into_bits();
        let image = self.apply_address(&bits);
        Ok(DyadicRational::from_word(
            &BinaryWord::from_bits(&image).expect("binary digits"),
        ))
    }

    /// `f ⊕ g`: `f` rescaled into `[0, 1/2]` and `g` into `[1/2, 1]`.
    pub fn oplus(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        if self.arity() != 2 {
            return Err(Error::UnsupportedArity {
                operation: "oplus",
                expected: 2,
                arity: self.arity(),
            });
        }
        for f in [self, other] {
            if f.rotation != 1 {
                return Err(Error::NotInF(f.rotation));
            }
        }
        Ok(Self {
            domain: Tree::node(2, vec![self.domain.clone(), other.domain.clone()]),
            range: Tree::node(2, vec![self.range.clone(), other.range.clone()]),
            rotation: 1,
        }
        .reduce())
    }

    /// Product of the generators of `word`, read left to right, reduced.
    pub fn from_word(word: &GroupWord) -> Result<Self> {
        let mut acc = Self::identity(2);
        for &(g, e) in word.letters() {
            acc = acc.multiply(&Self::generator(g)?.pow(e))?;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "arity": self.arity(),
            "domain": self.domain.to_json(),
            "range": self.range.to_json(),
            "rotation": self.rotation,
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("tree pair `{value}`"));
        let arity = value.get("arity").and_then(Value::as_u64).unwrap_or(2);
        let arity = u8::try_from(arity).map_err(|_| bad())?;
        let domain = Tree::from_json(value.get("domain").ok_or_else(bad)?, arity)?;
        let range = Tree::from_json(value.get("range").ok_or_else(bad)?, arity)?;
        let rotation = value
            .get("rotation")
            .and_then(Value::as_u64)
            .ok_or_else(bad)?;
        Self::new(domain, range, rotation as usize)
    }

    /// Parses `R ; S ; n`; the arity is read off the trees.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(';').map(str::trim).collect();
        let [r, s_tree, n] = parts.as_slice() else {
            return Err(Error::Parse(format!(
                "tree pair `{s}` (expected `R ; S ; n`)"
            )));
        };
        let domain = Tree::parse_infer(r)?;
        let arity = if domain.is_leaf() {
            Tree::parse_infer(s_tree)?.arity()
        } else {
            domain.arity()
        };
        let domain = Tree::parse_with_arity(r, arity)?;
        let range = Tree::parse_with_arity(s_tree, arity)?;
        let rotation = n
            .parse()
            .map_err(|_| Error::Parse(format!("rotation `{n}`")))?;
        Self::new(domain, range, rotation)
    }
}

impl fmt::Display for TreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ; {} ; {}", self.domain, self.range, self.rotation)
    }
}

impl FromStr for TreePair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}
