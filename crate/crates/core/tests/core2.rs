use rand::rngs::StdRng;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use thompson_core::core2::{build_core_with, components, core_presentation, FoldOrder};
use thompson_core::{build_core, enumerate, BinaryWord, CoreGraph, DyadicRational, TreePair};

fn word(s: &str) -> TreePair {
    TreePair::from_word(&s.parse().unwrap()).unwrap()
}

// Edges only; provenance records generator positions, which differ between
// generating lists.
fn shape(core: &CoreGraph) -> Vec<Option<(usize, usize)>> {
    (0..core.vertex_count()).map(|v| core.children(v)).collect()
}

fn generator_sets() -> Vec<Vec<TreePair>> {
    [
        vec!["x0"],
        vec!["x0", "x1"],
        vec!["g1", "g2", "g3", "c0"],
        vec!["c"],
        vec!["x0 x1", "c0"],
        vec!["x1^2", "x0 x2^-1"],
        vec!["c2", "x1"],
    ]
    .into_iter()
    .map(|ws| ws.into_iter().map(word).collect())
    .collect()
}

#[test]
fn folding_order_does_not_matter() {
    for gens in generator_sets() {
        let fifo = build_core(&gens).unwrap();
        fifo.check_invariants().unwrap();
        for seed in 0..10 {
            assert_eq!(
                build_core_with(&gens, FoldOrder::Shuffled(seed)).unwrap(),
                fifo
            );
        }
        let mut reversed = gens.clone();
        reversed.reverse();
        assert_eq!(shape(&build_core(&reversed).unwrap()), shape(&fifo));
    }
}

#[test]
fn cores_accept_their_subgroup() {
    let mut rng = StdRng::seed_from_u64(7);
    for gens in generator_sets() {
        let core = build_core(&gens).unwrap();
        for g in &gens {
            assert!(core.accepts(g));
            assert!(core.accepts(&g.inverse()));
        }
        for _ in 0..50 {
            let mut f = TreePair::identity(2);
            for _ in 0..rng.random_range(1..6) {
                let g = gens.choose(&mut rng).unwrap();
                let g = if rng.random_bool(0.5) {
                    g.clone()
                } else {
                    g.inverse()
                };
                f = f.multiply(&g).unwrap();
            }
            assert!(core.accepts(&f), "{} rejects {f}", core_presentation(&core));
        }
    }
}

// What a core accepts is itself a subgroup.
#[test]
fn accepted_elements_are_closed() {
    let small = enumerate(2, 4);
    for gens in generator_sets() {
        let core = build_core(&gens).unwrap();
        let accepted: Vec<&TreePair> = small.iter().filter(|f| core.accepts(f)).collect();
        for a in &accepted {
            assert!(core.accepts(&a.inverse()));
            for b in &accepted {
                assert!(core.accepts(&a.multiply(b).unwrap()), "{a} * {b}");
            }
        }
        // Folding the accepted elements back in gives the same core.
        let mut more = gens.clone();
        more.extend(accepted.iter().map(|f| (*f).clone()));
        assert_eq!(shape(&build_core(&more).unwrap()), shape(&core));
    }
}

#[test]
fn components_split_at_fixed_points() {
    let core = build_core(&[word("x0"), word("x1")]).unwrap();
    let mut split = 0;
    for f in enumerate(2, 6).into_iter().filter(|f| f.rotation() == 1) {
        for leaf in f.domain().leaves().iter().skip(1) {
            let alpha = DyadicRational::from_word(&BinaryWord::from_bits(leaf).unwrap());
            if f.evaluate(&alpha).unwrap() != alpha {
                assert!(components(&f, &alpha).is_err());
                continue;
            }
            let (f1, f2) = components(&f, &alpha).unwrap();
            assert_eq!(f1.multiply(&f2).unwrap(), f);
            assert_eq!(f1.evaluate(&alpha).unwrap(), alpha);
            assert!(core.accepts(&f1) && core.accepts(&f2));
            split += 1;
        }
    }
    assert!(split > 100);
}
