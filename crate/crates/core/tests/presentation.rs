use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thompson_core::presentation::{
    dihedral_alpha, relation_suite, suite_names, symbolic_standard_form,
};
use thompson_core::{Generator, GroupWord, TreePair};

fn random_word(rng: &mut StdRng, max_len: usize) -> GroupWord {
    let len = rng.random_range(0..=max_len);
    let mut w = GroupWord::new();
    for _ in 0..len {
        let g = if rng.random_bool(0.3) {
            Generator::C(2 * rng.random_range(0..3))
        } else {
            Generator::G(rng.random_range(1..=6))
        };
        w.push(g, if rng.random_bool(0.5) { 1 } else { -1 });
    }
    w
}

#[test]
fn standard_forms_keep_the_element() {
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..1000 {
        let w = random_word(&mut rng, 12);
        let form = symbolic_standard_form(&w).unwrap();
        assert!(form.m < 2 * form.n + 2, "{w}: {form}");
        assert_eq!(
            TreePair::from_word(&w).unwrap(),
            TreePair::from_word(&form.to_word()).unwrap(),
            "{w}: {form}"
        );
        assert_eq!(
            dihedral_alpha(&w).unwrap(),
            dihedral_alpha(&form.to_word()).unwrap()
        );
    }
}

#[test]
fn equal_elements_have_equal_dihedral_images() {
    let mut rng = StdRng::seed_from_u64(13);
    let mut seen: Vec<(TreePair, GroupWord)> = Vec::new();
    let mut collisions = 0;
    for _ in 0..3000 {
        let w = random_word(&mut rng, 4);
        let f = TreePair::from_word(&w).unwrap();
        if let Some((_, v)) = seen.iter().find(|(g, _)| *g == f) {
            assert_eq!(
                dihedral_alpha(&w).unwrap(),
                dihedral_alpha(v).unwrap(),
                "{w} and {v}"
            );
            collisions += 1;
        } else {
            seen.push((f, w));
        }
    }
    assert!(collisions > 100);
}

#[test]
fn dihedral_images_multiply() {
    let mut rng = StdRng::seed_from_u64(14);
    for _ in 0..1000 {
        let (u, v) = (random_word(&mut rng, 8), random_word(&mut rng, 8));
        let a = dihedral_alpha(&u).unwrap();
        let b = dihedral_alpha(&v).unwrap();
        assert_eq!(dihedral_alpha(&u.concat(&v)).unwrap(), a.then(b));
        assert!(dihedral_alpha(&u.concat(&u.inverse()))
            .unwrap()
            .is_identity());
    }
    let c0 = dihedral_alpha(&"c0".parse().unwrap()).unwrap();
    let g1 = dihedral_alpha(&"g1".parse().unwrap()).unwrap();
    assert_eq!(c0.order(4), Some(2));
    assert_eq!(g1.then(c0).order(4), Some(2));
}

#[test]
fn every_bundled_suite_holds() {
    for name in suite_names() {
        let report = relation_suite(name, None).unwrap();
        assert!(report.total() > 0, "{name}");
        assert!(report.all_hold(), "{name}: {}", report.to_text());
    }
}
