use rand::rngs::StdRng;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use thompson_core::jones::{alternating_form, factorize, Bipartition};
use thompson_core::{
    enumerate, member_vect_bipartite, member_vect_parity, DyadicRational, ParityClass,
    ThompsonGraph, TreePair,
};

#[test]
fn colorings_and_cycles_are_valid() {
    for f in enumerate(2, 6) {
        let graph = ThompsonGraph::of_pair(&f).unwrap();
        match graph.bipartition() {
            Bipartition::Coloring(colors) => {
                assert_eq!(colors.len(), f.leaf_count());
                for (a, b) in graph.edges() {
                    assert_ne!(colors[a - 1], colors[b - 1], "{f}: edge {a}-{b}");
                }
            }
            Bipartition::OddCycle(cycle) => {
                assert_eq!(cycle.len() % 2, 1, "{f}");
                for (i, &a) in cycle.iter().enumerate() {
                    let b = cycle[(i + 1) % cycle.len()];
                    assert!(graph.has_edge(a, b), "{f}: cycle step {a}-{b}");
                }
            }
        }
    }
}

fn points(rng: &mut StdRng) -> Vec<DyadicRational> {
    (0..40)
        .map(|_| {
            let exp = rng.random_range(1..14);
            DyadicRational::new(rng.random_range(0..1u64 << exp), exp)
        })
        .collect()
}

// Classification read off sampled points, compared with the exact answer.
#[test]
fn parity_class_matches_samples() {
    let mut rng = StdRng::seed_from_u64(3);
    for f in enumerate(2, 5) {
        let class = member_vect_parity(&f).unwrap();
        let mut seen = [false; 2];
        for t in points(&mut rng) {
            let image = f.evaluate(&t).unwrap();
            seen[usize::from(image.parity() ^ t.parity())] = true;
        }
        match class {
            ParityClass::Preserves => assert!(!seen[1], "{f}"),
            ParityClass::Switches => assert!(!seen[0], "{f}"),
            ParityClass::Neither => {}
        }
        if seen[0] && seen[1] {
            assert_eq!(class, ParityClass::Neither, "{f}");
        }
    }
}

#[test]
fn members_form_a_subgroup() {
    let members: Vec<TreePair> = enumerate(2, 6)
        .into_iter()
        .filter(|f| member_vect_bipartite(f).unwrap())
        .collect();
    let mut rng = StdRng::seed_from_u64(4);
    for _ in 0..2000 {
        let a = members.choose(&mut rng).unwrap();
        let b = members.choose(&mut rng).unwrap();
        let ab = a.multiply(b).unwrap();
        assert!(member_vect_bipartite(&ab).unwrap(), "{a} * {b}");
        assert!(member_vect_bipartite(&a.inverse()).unwrap());
        // The parity class is a homomorphism onto Z/2.
        let bit = |f: &TreePair| member_vect_parity(f).unwrap().bit().unwrap();
        assert_eq!(bit(&ab), bit(a) ^ bit(b));
    }
}

#[test]
fn non_members_stay_out_under_member_multiplication() {
    let all = enumerate(2, 5);
    let members: Vec<&TreePair> = all
        .iter()
        .filter(|f| member_vect_bipartite(f).unwrap())
        .collect();
    let outside: Vec<&TreePair> = all
        .iter()
        .filter(|f| !member_vect_bipartite(f).unwrap())
        .collect();
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..1000 {
        let h = members.choose(&mut rng).unwrap();
        let f = outside.choose(&mut rng).unwrap();
        assert!(!member_vect_bipartite(&h.multiply(f).unwrap()).unwrap());
    }
}

#[test]
fn factorizations_round_trip() {
    for f in enumerate(2, 6) {
        if !member_vect_bipartite(&f).unwrap() {
            assert!(factorize(&f).is_err());
            continue;
        }
        let alt = alternating_form(&f).unwrap();
        assert!(alt.same_element(&f).unwrap());
        assert_eq!(alt.leaf_count() % 2, 0);
        let fz = factorize(&f).unwrap();
        assert!(fz.m < 2 * fz.n + 2);
        assert_eq!(fz.product(), f);
        for part in [&fz.p, &fz.q] {
            assert_eq!(part.rotation(), 1);
            assert!(member_vect_bipartite(part).unwrap());
        }
    }
}
