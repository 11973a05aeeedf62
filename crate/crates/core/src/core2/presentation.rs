use std::fmt;

use super::CoreGraph;

/// `lhs = left right`, read off one vertex with children.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupPresentation {
    pub letters: Vec<String>,
    pub rules: Vec<Rule>,
    pub base: String,
}

/// `e`, then `f` to `z`, then `a` to `d`, then `v26`, `v27`, ...
pub(super) fn vertex_names(count: usize) -> Vec<String> {
    let alphabet: Vec<char> = ('e'..='z').chain('a'..='d').collect();
    (0..count)
        .map(|i| match alphabet.get(i) {
            Some(c) => c.to_string(),
            None => format!("v{i}"),
        })
        .collect()
}

/// One rule `x = yz` per vertex `x` with left child `y` and right child `z`;
/// the base letter names the root.
pub fn core_presentation(core: &CoreGraph) -> SemigroupPresentation {
    let letters = vertex_names(core.vertex_count());
    let rules = (0..core.vertex_count())
        .filter_map(|v| {
            core.children(v).map(|(l, r)| Rule {
                lhs: letters[v].clone(),
                left: letters[l].clone(),
                right: letters[r].clone(),
            })
        })
        .collect();
    SemigroupPresentation {
        base: letters[0].clone(),
        letters,
        rules,
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Long names are separated so the right-hand side stays readable.
        if self.left.len() > 1 || self.right.len() > 1 {
            write!(f, "{} = {} {}", self.lhs, self.left, self.right)
        } else {
            write!(f, "{} = {}{}", self.lhs, self.left, self.right)
        }
    }
}

impl fmt::Display for SemigroupPresentation {
    /// `e = ff, f = fe ; base e`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, rule) in self.rules.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{rule}")?;
        }
        if !self.rules.is_empty() {
            f.write_str(" ")?;
        }
        write!(f, "; base {}", self.base)
    }
}
