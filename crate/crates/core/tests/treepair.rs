use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use thompson_core::{enumerate, DyadicRational, Generator, GroupWord, TreePair};

// Leaf depths of every full binary tree with `n` leaves, built without the
// library's tree type.
fn depth_lists(n: usize) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    for k in 1..n {
        for l in depth_lists(k) {
            for r in depth_lists(n - k) {
                out.push(l.iter().chain(&r).map(|d| d + 1).collect());
            }
        }
    }
    out
}

// Leaves i and i + 1 are siblings when they have equal depth and leaf i
// starts on a boundary of the parent's size.
fn siblings(depths: &[u32], i: usize) -> bool {
    let d = depths[i];
    if d == 0 || depths[i + 1] != d {
        return false;
    }
    let start: f64 = depths[..i].iter().map(|&e| 0.5f64.powi(e as i32)).sum();
    let parent = 0.5f64.powi(d as i32 - 1);
    (start / parent).fract() == 0.0
}

fn reduced(r: &[u32], s: &[u32], rotation: usize) -> bool {
    let l = r.len();
    (0..l.saturating_sub(1)).all(|i| {
        let j = (i + rotation - 1) % l;
        !(siblings(r, i) && j + 1 < l && siblings(s, j))
    })
}

#[test]
fn enumeration_matches_independent_count() {
    let mut count = 0;
    for l in 1..=5 {
        let trees = depth_lists(l);
        for r in &trees {
            for s in &trees {
                count += (1..=l).filter(|&n| reduced(r, s, n)).count();
            }
        }
    }
    assert_eq!(count, 692);
    assert_eq!(enumerate(2, 5).len(), count);
    assert!(enumerate(2, 5).iter().all(TreePair::is_reduced));
}

fn random_expansion(f: &TreePair, rng: &mut StdRng) -> TreePair {
    let mut g = f.clone();
    for _ in 0..rng.random_range(1..=5) {
        g = g.expand(rng.random_range(0..g.leaf_count())).unwrap();
    }
    g
}

#[test]
fn reduction_is_confluent() {
    let all = enumerate(2, 5);
    let mut rng = StdRng::seed_from_u64(1);
    for _ in 0..1000 {
        let f = all.choose(&mut rng).unwrap();
        let mut g = random_expansion(f, &mut rng);
        assert!(!g.is_reduced());
        while let Some(&i) = g.dipoles().choose(&mut rng) {
            g = g.remove_dipole(i).unwrap();
        }
        assert_eq!(&g, f);
    }
}

fn sample_points() -> Vec<DyadicRational> {
    let mut rng = StdRng::seed_from_u64(2);
    let mut points = vec![DyadicRational::zero(), DyadicRational::half()];
    while points.len() < 20 {
        let exp = rng.random_range(1..12);
        points.push(DyadicRational::new(rng.random_range(0..1u64 << exp), exp));
    }
    points
}

#[test]
fn evaluation_is_a_homomorphism() {
    let small = enumerate(2, 4);
    let points = sample_points();
    for a in &small {
        for b in &small {
            let ab = a.multiply(b).unwrap();
            for t in &points {
                let first = a.evaluate(t).unwrap();
                assert_eq!(
                    ab.evaluate(t).unwrap(),
                    b.evaluate(&first).unwrap(),
                    "{a} then {b} at {t}"
                );
            }
        }
    }
}

#[test]
fn piecewise_maps_agree() {
    for f in enumerate(2, 5) {
        let map = f.to_plmap().unwrap();
        map.check_homeomorphism().unwrap();
        for piece in map.pieces() {
            let start = piece.start.fract();
            let mid = (&piece.start + &piece.end).mul_pow2(-1).fract();
            for t in [start, mid] {
                assert_eq!(map.evaluate(&t), f.evaluate(&t).unwrap(), "{f} at {t}");
            }
        }
    }
}

#[test]
fn normal_forms_round_trip() {
    let f_elements: Vec<_> = enumerate(2, 6)
        .into_iter()
        .filter(|f| f.rotation() == 1)
        .collect();
    assert_eq!(f_elements.len(), 1055);
    for f in f_elements {
        let word = f.normal_form().unwrap();
        assert!(word
            .letters()
            .iter()
            .all(|(g, _)| matches!(g, Generator::X(_))));
        assert_eq!(TreePair::from_word(&word).unwrap(), f, "{word}");
    }
}

#[test]
fn rotation_orders() {
    for n in 0..=8u32 {
        let c = TreePair::generator(Generator::C(n)).unwrap();
        assert_eq!(c.order(n as usize + 3), Some(n as usize + 2));
    }
    assert_eq!(
        TreePair::generator(Generator::X(0)).unwrap().order(50),
        None
    );
}

fn letter() -> impl Strategy<Value = (Generator, i64)> {
    let g = prop_oneof![
        (0u32..4).prop_map(Generator::X),
        (0u32..4).prop_map(Generator::C),
    ];
    (g, prop_oneof![Just(-1i64), Just(1), Just(2)])
}

fn word() -> impl Strategy<Value = GroupWord> {
    prop::collection::vec(letter(), 0..8).prop_map(|v| v.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn group_axioms(u in word(), v in word(), w in word()) {
        let (a, b, c) = (
            TreePair::from_word(&u).unwrap(),
            TreePair::from_word(&v).unwrap(),
            TreePair::from_word(&w).unwrap(),
        );
        let id = TreePair::identity(2);
        prop_assert_eq!(a.multiply(&b).unwrap().multiply(&c).unwrap(), a.multiply(&b.multiply(&c).unwrap()).unwrap());
        prop_assert_eq!(a.multiply(&a.inverse()).unwrap(), id.clone());
        prop_assert_eq!(id.multiply(&a).unwrap(), a.clone());
        prop_assert_eq!(TreePair::from_word(&u.concat(&v)).unwrap(), a.multiply(&b).unwrap());
        prop_assert_eq!(TreePair::from_word(&u.inverse()).unwrap(), a.inverse());
        prop_assert!(a.is_reduced());
    }

    #[test]
    fn text_and_json_round_trip(u in word()) {
        let f = TreePair::from_word(&u).unwrap();
        prop_assert_eq!(TreePair::parse(&f.to_string()).unwrap(), f.clone());
        prop_assert_eq!(TreePair::from_json(&f.to_json()).unwrap(), f);
    }
}

#[test]
fn ternary_group_axioms() {
    let all = enumerate(3, 5);
    let id = TreePair::identity(3);
    for a in &all {
        assert_eq!(a.multiply(&a.inverse()).unwrap(), id);
        for b in all.iter().step_by(3) {
            let ab = a.multiply(b).unwrap();
            assert_eq!(ab.multiply(&b.inverse()).unwrap(), *a);
        }
    }
}
