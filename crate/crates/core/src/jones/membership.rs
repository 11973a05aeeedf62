use std::fmt;

use super::{Bipartition, ThompsonGraph};
use crate::error::{Error, Result};
use crate::treepair::{Generator, Tree, TreePair};

/// How an element acts on the digit-sum parity of dyadic points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParityClass {
    Preserves,
    Switches,
    Neither,
}

impl ParityClass {
    /// The image in `Z/2`, for members only.
    pub fn bit(self) -> Option<u8> {
        match self {
            ParityClass::Preserves => Some(0),
            ParityClass::Switches => Some(1),
            ParityClass::Neither => None,
        }
    }

    pub fn is_member(self) -> bool {
        self != ParityClass::Neither
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParityClass::Preserves => "preserves",
            ParityClass::Switches => "switches",
            ParityClass::Neither => "neither",
        })
    }
}

/// Bipartiteness of the Thompson graph of the reduced diagram.
pub fn member_vect_bipartite(f: &TreePair) -> Result<bool> {
    Ok(ThompsonGraph::of_pair(&f.reduce())?.is_bipartite())
}

/// Compares the digit parity of every matched pair of leaf labels in the
/// reduced diagram.
pub fn member_vect_parity(f: &TreePair) -> Result<ParityClass> {
    if f.arity() != 2 {
        return Err(Error::UnsupportedArity {
            operation: "member_vect_parity",
            expected: 2,
            arity: f.arity(),
        });
    }
    let ones = |a: &[u8]| a.iter().filter(|&&d| d == 1).count() % 2;
    let mut seen = [false; 2];
    for (d, r) in f.reduce().leaf_map() {
        seen[ones(&d) ^ ones(&r)] = true;
    }
    Ok(match seen {
        [true, false] => ParityClass::Preserves,
        [false, true] => ParityClass::Switches,
        _ => ParityClass::Neither,
    })
}

fn require_member(f: &TreePair) -> Result<()> {
    if member_vect_bipartite(f)? {
        Ok(())
    } else {
        Err(Error::NotInJonesSubgroup)
    }
}

fn coloring(pair: &TreePair) -> Vec<u8> {
    match ThompsonGraph::of_pair(pair).expect("binary").bipartition() {
        Bipartition::Coloring(c) => c,
        Bipartition::OddCycle(_) => unreachable!("expansions of members stay bipartite"),
    }
}

/// A diagram of `f` with an even number of leaves whose Thompson graph is
/// colored alternately from left to right.
///
/// Scans the vertices left to right; whenever vertices `m` and `m + 1` share
/// a color a caret is hung under leaf `m` of both trees, which puts a vertex
/// of the other color between them. A final caret fixes an odd leaf count.
pub fn alternating_form(f: &TreePair) -> Result<TreePair> {
    require_member(f)?;
    let mut pair = f.reduce();
    let mut m = 1;
    while m < pair.leaf_count() {
        let colors = coloring(&pair);
        if colors[m - 1] == colors[m] {
            pair = pair.expand(m - 1)?;
        }
        m += 1;
    }
    if pair.leaf_count() % 2 == 1 {
        pair = pair.expand(pair.leaf_count() - 1)?;
    }
    Ok(pair)
}

/// `f = p · c_(2n)^m · q` with `p`, `q` in the rotation-free part of Jones'
/// subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub p: TreePair,
    pub n: u32,
    pub m: u32,
    pub q: TreePair,
}

impl Factorization {
    pub fn product(&self) -> TreePair {
        let c = TreePair::generator(Generator::C(2 * self.n)).expect("c index is valid");
        self.p
            .multiply(&c.pow(self.m as i64))
            .and_then(|pc| pc.multiply(&self.q))
            .expect("binary factors")
    }
}

/// Splits the alternating form `(R, S, k)` with `2n + 2` leaves as
/// `(R, S_2n, 1) · c_2n^(k-1) · (S_2n, S, 1)`.
pub fn factorize(f: &TreePair) -> Result<Factorization> {
    let alt = alternating_form(f)?;
    let n = (alt.leaf_count() - 2) / 2;
    let comb = Tree::s_tree(2 * n);
    let p = TreePair::new(alt.domain().clone(), comb.clone(), 1)?.reduce();
    let q = TreePair::new(comb, alt.range().clone(), 1)?.reduce();
    Ok(Factorization {
        p,
        n: n as u32,
        m: (alt.rotation() - 1) as u32,
        q,
    })
}

/// Least `n <= cap` such that `f⁻¹ gⁿ f` is not a member, `g = (x0 x1)⁻¹`.
pub fn commensurator_witness(f: &TreePair, cap: u32) -> Result<u32> {
    if member_vect_bipartite(f)? {
        return Err(Error::InJonesSubgroup);
    }
    let g = TreePair::generator(Generator::G(1))?.inverse();
    let f_inv = f.inverse();
    let mut g_pow = TreePair::identity(2);
    for n in 1..=cap {
        g_pow = g_pow.multiply(&g)?;
        let conj = f_inv.multiply(&g_pow)?.multiply(f)?;
        if !member_vect_bipartite(&conj)? {
            return Ok(n);
        }
    }
    Err(Error::CapExhausted { cap })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(g: Generator) -> TreePair {
        TreePair::generator(g).unwrap()
    }

    #[test]
    fn parity_classes() {
        assert_eq!(
            member_vect_parity(&gen(Generator::X(0))).unwrap(),
            ParityClass::Neither
        );
        assert_eq!(
            member_vect_parity(&gen(Generator::C(0))).unwrap(),
            ParityClass::Switches
        );
        assert_eq!(
            member_vect_parity(&gen(Generator::G(1))).unwrap(),
            ParityClass::Preserves
        );
        assert_eq!(
            member_vect_parity(&gen(Generator::C(1))).unwrap(),
            ParityClass::Neither
        );
        assert_eq!(
            member_vect_parity(&TreePair::identity(2)).unwrap(),
            ParityClass::Preserves
        );
    }

    #[test]
    fn generators_of_the_subgroup() {
        for g in [
            Generator::G(1),
            Generator::G(2),
            Generator::G(3),
            Generator::C(0),
        ] {
            assert!(member_vect_bipartite(&gen(g)).unwrap(), "{g}");
        }
        for g in [
            Generator::X(0),
            Generator::X(1),
            Generator::C(1),
            Generator::C(3),
        ] {
            assert!(!member_vect_bipartite(&gen(g)).unwrap(), "{g}");
        }
    }

    #[test]
    fn alternating_forms() {
        let f12 = gen(Generator::C(0));
        assert_eq!(alternating_form(&f12).unwrap(), f12);
        let id = alternating_form(&TreePair::identity(2)).unwrap();
        assert_eq!(id.leaf_count(), 2);
        let g1 = gen(Generator::G(1));
        let alt = alternating_form(&g1).unwrap();
        assert_eq!(alt.leaf_count() % 2, 0);
        assert_eq!(alt.reduce(), g1);
        let colors = coloring(&alt);
        assert!(colors.windows(2).all(|w| w[0] != w[1]));
        assert!(matches!(
            alternating_form(&gen(Generator::X(0))),
            Err(Error::NotInJonesSubgroup)
        ));
    }

    #[test]
    fn factorizations() {
        let f = factorize(&gen(Generator::C(0))).unwrap();
        assert_eq!((f.n, f.m), (0, 1));
        assert!(f.p.is_identity() && f.q.is_identity());
        let f = factorize(&gen(Generator::C(2))).unwrap();
        assert_eq!((f.n, f.m), (1, 1));
        assert!(f.p.is_identity() && f.q.is_identity());
        let g1 = gen(Generator::G(1));
        let f = factorize(&g1).unwrap();
        assert_eq!(f.m, 0);
        assert_eq!(f.p.multiply(&f.q).unwrap(), g1);
        assert_eq!(f.product(), g1);
    }

    #[test]
    fn witnesses() {
        for g in [Generator::X(0), Generator::C(1)] {
            let n = commensurator_witness(&gen(g), 30).unwrap();
            assert!((1..=30).contains(&n));
        }
        assert_eq!(
            commensurator_witness(&gen(Generator::C(0)), 30),
            Err(Error::InJonesSubgroup)
        );
    }
}
