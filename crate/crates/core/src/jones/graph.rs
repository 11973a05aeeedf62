use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::treepair::{Tree, TreePair};

/// Graph on the gaps between leaves: vertex `i` (1-based) sits just left of
/// leaf `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThompsonGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// Outcome of a 2-coloring attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    /// `colors[i - 1]` is the color of vertex `i`.
    Coloring(Vec<u8>),
    /// Vertices of an odd cycle, in cyclic order.
    OddCycle(Vec<usize>),
}

fn require_binary(tree_arity: u8, operation: &'static str) -> Result<()> {
    if tree_arity != 2 {
        return Err(Error::UnsupportedArity {
            operation,
            expected: 2,
            arity: tree_arity,
        });
    }
    Ok(())
}

// 1-based index of the first leaf below each internal vertex and of the
// first leaf below its right child.
fn left_edges(tree: &Tree) -> Vec<(usize, usize)> {
    let leaves = tree.leaves();
    let first_below = |addr: &[u8]| {
        leaves
            .iter()
            .position(|l| l.starts_with(addr))
            .expect("internal vertex has leaves")
            + 1
    };
    tree.internal_nodes()
        .into_iter()
        .map(|u| {
            let mut right = u.clone();
            right.push(1);
            (first_below(&u), first_below(&right))
        })
        .collect()
}

impl ThompsonGraph {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            edges: BTreeSet::new(),
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(
            (1..=self.vertex_count).contains(&u) && (1..=self.vertex_count).contains(&v),
            "vertex out of range"
        );
        self.edges.insert((u.min(v), u.max(v)));
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Edges as `(smaller, larger)` vertex pairs, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count + 1];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// One edge per internal vertex `u`, joining the vertex left of the
    /// first leaf below `u` and the vertex left of the first leaf below the
    /// right child of `u`.
    pub fn of_tree(tree: &Tree) -> Result<Self> {
        require_binary(tree.arity(), "thompson_graph_of_tree")?;
        let mut g = Self::new(tree.leaf_count());
        for (u, v) in left_edges(tree) {
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Union of the graphs of both trees on the vertices of the domain tree;
    /// range vertices are carried over along the leaf matching.
    pub fn of_pair(pair: &TreePair) -> Result<Self> {
        require_binary(pair.arity(), "thompson_graph_of_pair")?;
        let mut g = Self::of_tree(pair.domain())?;
        for (u, v) in left_edges(pair.range()) {
            g.add_edge(
                pair.preimage_index(u - 1) + 1,
                pair.preimage_index(v - 1) + 1,
            );
        }
        Ok(g)
    }

    /// Breadth-first 2-coloring. In each component the smallest vertex gets
    /// color 0.
    pub fn bipartition(&self) -> Bipartition {
        let adj = self.adjacency();
        let mut color: Vec<Option<u8>> = vec![None; self.vertex_count + 1];
        let mut parent = vec![0usize; self.vertex_count + 1];
        let mut depth = vec![0usize; self.vertex_count + 1];
        for start in 1..=self.vertex_count {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(0);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].expect("queued vertices are colored");
                for &v in &adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(1 - cu);
                            parent[v] = u;
                            depth[v] = depth[u] + 1;
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => {
                            return Bipartition::OddCycle(odd_cycle(u, v, &parent, &depth));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Bipartition::Coloring(
            color
                .into_iter()
                .skip(1)
                .map(|c| c.expect("all colored"))
                .collect(),
        )
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartition::Coloring(_))
    }

    /// Graphviz text; vertices are filled by color when a coloring is given.
    pub fn to_dot(&self, coloring: Option<&[u8]>) -> String {
        let mut out = String::from("graph thompson {\n");
        for v in 1..=self.vertex_count {
            match coloring {
                Some(colors) => {
                    let fill = if colors[v - 1] == 0 { "white" } else { "gray" };
                    writeln!(
                        out,
                        "  {v} [label=\"{v}\", style=filled, fillcolor={fill}];"
                    )
                    .unwrap();
                }
                None => writeln!(out, "  {v} [label=\"{v}\"];").unwrap(),
            }
        }
        for &(u, v) in &self.edges {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

// The cycle closed by the edge `u`-`v` in the breadth-first forest.
fn odd_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}
