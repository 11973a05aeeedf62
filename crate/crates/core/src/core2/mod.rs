//! Stallings 2-cores of finitely generated subgroups of `T`.
//!
//! The core is built from the reduced diagrams of the generators, glued at
//! their roots and along matched leaves, by repeatedly
//!
//! 1. identifying the left children (and the right children) of identified
//!    vertices, and
//! 2. identifying vertices with the same left child and the same right child,
//!
//! until nothing changes.

mod presentation;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::dyadic::DyadicRational;
use crate::error::{Error, Result};
use crate::treepair::{Address, TreePair};

pub use presentation::{core_presentation, Rule, SemigroupPresentation};

/// Order in which pending identifications are applied.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FoldOrder {
    #[default]
    Fifo,
    /// Generators and each round of pending merges shuffled with this seed.
    Shuffled(u64),
}

/// A folded rooted graph with left and right edges. Vertex 0 is the root
/// and vertices are numbered in breadth-first order, left edge first, so
/// equal cores are equal values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreGraph {
    children: Vec<Option<(usize, usize)>>,
    provenance: Vec<BTreeSet<usize>>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

/// Unfolded glued diagrams: raw vertices with their tree children.
struct Raw {
    children: Vec<Option<(usize, usize)>>,
    source: Vec<usize>,
    merges: Vec<(usize, usize)>,
}

impl Raw {
    fn add_vertex(&mut self, generator: usize) -> usize {
        self.children.push(None);
        self.source.push(generator);
        self.children.len() - 1
    }

    // Adds a fresh copy of the tree with its root glued to the base vertex.
    fn add_tree(&mut self, leaves: &[Address], generator: usize) -> Vec<usize> {
        let root = self.add_vertex(generator);
        self.merges.push((0, root));
        let mut ids: HashMap<Address, usize> = HashMap::from([(Vec::new(), root)]);
        let mut leaf_ids = Vec::with_capacity(leaves.len());
        for leaf in leaves {
            for k in 1..=leaf.len() {
                let prefix = &leaf[..k];
                if !ids.contains_key(prefix) {
                    let id = self.add_vertex(generator);
                    ids.insert(prefix.to_vec(), id);
                }
            }
            leaf_ids.push(ids[leaf]);
        }
        for (addr, &id) in &ids {
            let mut left = addr.clone();
            left.push(0);
            if let Some(&l) = ids.get(&left) {
                let mut right = addr.clone();
                right.push(1);
                self.children[id] = Some((l, ids[&right]));
            }
        }
        leaf_ids
    }
}

/// Core of the subgroup generated by `generators`, folding in FIFO order.
pub fn build_core(generators: &[TreePair]) -> Result<CoreGraph> {
    build_core_with(generators, FoldOrder::Fifo)
}

pub fn build_core_with(generators: &[TreePair], order: FoldOrder) -> Result<CoreGraph> {
    if generators.is_empty() {
        return Err(Error::EmptyGeneratorList);
    }
    let mut indexed: Vec<(usize, TreePair)> = generators
        .iter()
        .enumerate()
        .map(|(i, g)| {
            if g.arity() != 2 {
                return Err(Error::UnsupportedArity {
                    operation: "build_core",
                    expected: 2,
                    arity: g.arity(),
                });
            }
            Ok((i, g.reduce()))
        })
        .collect::<Result<_>>()?;
    let mut rng = match order {
        FoldOrder::Fifo => None,
        FoldOrder::Shuffled(seed) => Some(StdRng::seed_from_u64(seed)),
    };
    if let Some(rng) = rng.as_mut() {
        indexed.shuffle(rng);
    }

    let mut raw = Raw {
        children: vec![None],
        source: vec![usize::MAX],
        merges: Vec::new(),
    };
    for (gi, g) in &indexed {
        let dom = raw.add_tree(&g.domain().leaves(), *gi);
        let ran = raw.add_tree(&g.range().leaves(), *gi);
        for (i, &d) in dom.iter().enumerate() {
            raw.merges.push((d, ran[g.image_index(i)]));
        }
    }

    let n = raw.children.len();
    let mut uf = UnionFind::new(n);
    let mut pending = std::mem::take(&mut raw.merges);
    loop {
        if let Some(rng) = rng.as_mut() {
            pending.shuffle(rng);
        }
        let mut changed = false;
        for (a, b) in pending.drain(..) {
            changed |= uf.union(a, b);
        }
        // Rule 1: one left child and one right child per class.
        let mut kids: HashMap<usize, (usize, usize)> = HashMap::new();
        for v in 0..n {
            if let Some((l, r)) = raw.children[v] {
                let c = uf.find(v);
                match kids.get(&c) {
                    Some(&(l0, r0)) => {
                        pending.push((l0, l));
                        pending.push((r0, r));
                    }
                    None => {
                        kids.insert(c, (l, r));
                    }
                }
            }
        }
        // Rule 2: one parent per (left, right) pair of classes.
        let mut parents: HashMap<(usize, usize), usize> = HashMap::new();
        for (&c, &(l, r)) in &kids {
            let key = (uf.find(l), uf.find(r));
            match parents.get(&key) {
                Some(&p) => pending.push((p, c)),
                None => {
                    parents.insert(key, c);
                }
            }
        }
        pending.retain(|&(a, b)| uf.find(a) != uf.find(b));
        if pending.is_empty() && !changed {
            break;
        }
    }

    // Renumber classes breadth-first from the root.
    let mut kids: HashMap<usize, (usize, usize)> = HashMap::new();
    let mut sources: HashMap<usize, BTreeSet<usize>> = HashMap::new();
    for v in 0..n {
        let c = uf.find(v);
        if let Some((l, r)) = raw.children[v] {
            kids.insert(c, (uf.find(l), uf.find(r)));
        }
        if raw.source[v] != usize::MAX {
            sources.entry(c).or_default().insert(raw.source[v]);
        }
    }
    let root = uf.find(0);
    let mut number: HashMap<usize, usize> = HashMap::from([(root, 0)]);
    let mut queue = VecDeque::from([root]);
    let mut order_seen = vec![root];
    while let Some(c) = queue.pop_front() {
        if let Some(&(l, r)) = kids.get(&c) {
            for child in [l, r] {
                if let std::collections::hash_map::Entry::Vacant(e) = number.entry(child) {
                    e.insert(order_seen.len());
                    order_seen.push(child);
                    queue.push_back(child);
                }
            }
        }
    }
    let children = order_seen
        .iter()
        .map(|c| kids.get(c).map(|&(l, r)| (number[&l], number[&r])))
        .collect();
    let provenance = order_seen
        .iter()
        .map(|c| sources.remove(c).unwrap_or_default())
        .collect();
    Ok(CoreGraph {
        children,
        provenance,
    })
}

impl CoreGraph {
    pub fn vertex_count(&self) -> usize {
        self.children.len()
    }

    pub fn root(&self) -> usize {
        0
    }

    /// `(left, right)` children of `v`, if it has any.
    pub fn children(&self, v: usize) -> Option<(usize, usize)> {
        self.children[v]
    }

    /// Indices (into the generator list) of the diagrams whose vertices were
    /// folded into `v`.
    pub fn provenance(&self, v: usize) -> &BTreeSet<usize> {
        &self.provenance[v]
    }

    /// Follows `addr` from the root; `None` if a step needs a missing child.
    pub fn walk(&self, addr: &[u8]) -> Option<usize> {
        addr.iter().try_fold(0, |v, &d| {
            self.children[v].map(|(l, r)| if d == 0 { l } else { r })
        })
    }

    /// Whether the reduced diagram of `f` maps into the core with both roots
    /// going to the core root.
    pub fn accepts(&self, f: &TreePair) -> bool {
        if f.arity() != 2 {
            return false;
        }
        let f = f.reduce();
        let walk_all = |leaves: Vec<Address>| -> Option<Vec<usize>> {
            leaves.iter().map(|a| self.walk(a)).collect()
        };
        let (Some(dom), Some(ran)) = (walk_all(f.domain().leaves()), walk_all(f.range().leaves()))
        else {
            return false;
        };
        dom.iter()
            .enumerate()
            .all(|(i, &v)| ran[f.image_index(i)] == v)
    }

    /// Rule 1 and rule 2 hold and every vertex is reachable from the root.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let mut seen = HashMap::new();
        for (v, kids) in self.children.iter().enumerate() {
            if let Some(pair) = kids {
                if pair.0 >= self.vertex_count() || pair.1 >= self.vertex_count() {
                    return Err(format!("vertex {v} has a dangling child"));
                }
                if let Some(u) = seen.insert(*pair, v) {
                    return Err(format!("vertices {u} and {v} share both children"));
                }
            }
        }
        let mut reached = vec![false; self.vertex_count()];
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            if std::mem::replace(&mut reached[v], true) {
                continue;
            }
            if let Some((l, r)) = self.children[v] {
                stack.extend([l, r]);
            }
        }
        match reached.iter().position(|&r| !r) {
            Some(v) => Err(format!("vertex {v} is unreachable")),
            None => Ok(()),
        }
    }

    /// Graphviz text with left edges labeled 0 and right edges 1.
    pub fn to_dot(&self) -> String {
        let names = presentation::vertex_names(self.vertex_count());
        let mut out = String::from("digraph core {\n");
        for (v, name) in names.iter().enumerate() {
            let shape = if v == 0 { "doublecircle" } else { "circle" };
            writeln!(out, "  {v} [label=\"{name}\", shape={shape}];").unwrap();
        }
        for (v, kids) in self.children.iter().enumerate() {
            if let Some((l, r)) = kids {
                writeln!(out, "  {v} -> {l} [label=\"0\"];").unwrap();
                writeln!(out, "  {v} -> {r} [label=\"1\"];").unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Whether `f` has an interior fixed point at `alpha`; returns the pieces
/// `(f1, f2)` with `f1 = f` on `[0, alpha]` and the identity after, and
/// `f2` the identity on `[0, alpha]` and `f` after. `f1 · f2 = f`.
pub fn components(f: &TreePair, alpha: &DyadicRational) -> Result<(TreePair, TreePair)> {
    let not_fixed = || Error::NotAFixedPoint {
        alpha: alpha.to_string(),
    };
    let mut pair = f.reduce();
    if pair.arity() != 2 {
        return Err(Error::UnsupportedArity {
            operation: "components",
            expected: 2,
            arity: pair.arity(),
        });
    }
    if pair.rotation() != 1 {
        return Err(Error::NotInF(pair.rotation()));
    }
    if alpha.is_zero() || pair.evaluate(alpha)? != *alpha {
        return Err(not_fixed());
    }
    let word = alpha.to_word(None)?.into_bits();
    // Grow the diagram until alpha starts a domain leaf.
    let split = loop {
        let leaves = pair.domain().leaves();
        let i = leaves
            .iter()
            .position(|l| {
                let padded = word.iter().copied().chain(std::iter::repeat(0));
                l.iter().zip(padded).all(|(a, b)| *a == b)
            })
            .expect("domain leaves cover the circle");
        if leaves[i].len() >= word.len() {
            break i;
        }
        pair = pair.expand(i)?;
    };
    let map = pair.leaf_map();
    let f1: Vec<_> = map
        .iter()
        .enumerate()
        .map(|(i, (d, r))| (d.clone(), if i < split { r.clone() } else { d.clone() }))
        .collect();
    let f2: Vec<_> = map
        .iter()
        .enumerate()
        .map(|(i, (d, r))| (d.clone(), if i < split { d.clone() } else { r.clone() }))
        .collect();
    Ok((
        TreePair::from_leaf_map(2, &f1)?.reduce(),
        TreePair::from_leaf_map(2, &f2)?.reduce(),
    ))
}

/// Disagreements between acceptance by a core and another membership test.
#[derive(Clone, Debug, Default)]
pub struct ClosureReport {
    pub checked: usize,
    /// `(element, accepted by the core, member by the predicate)`.
    pub disagreements: Vec<(TreePair, bool, bool)>,
}

impl ClosureReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty()
    }
}

pub fn core_closed_on<'a>(
    core: &CoreGraph,
    sample: impl IntoIterator<Item = &'a TreePair>,
    mut membership: impl FnMut(&TreePair) -> bool,
) -> ClosureReport {
    let mut report = ClosureReport::default();
    for f in sample {
        report.checked += 1;
        let accepted = core.accepts(f);
        let member = membership(f);
        if accepted != member {
            report.disagreements.push((f.clone(), accepted, member));
        }
    }
    report
}
