mod common;

use std::collections::BTreeSet;

use hwcone::classification::simple_types_up_to;
use hwcone::{CartanType, RootSystem, SimpleType, Weight};
use num_bigint::BigUint;

use common::{freudenthal_dimension, oracle_cartan, oracle_positive_roots};

#[test]
fn positive_roots_match_euclidean_realisation() {
    for t in simple_types_up_to(8) {
        let rs = RootSystem::simple(t);
        let generated: BTreeSet<Vec<i64>> = rs.positive_roots().iter().map(|r| r.coords().to_vec()).collect();
        let oracle = oracle_positive_roots(t);
        assert_eq!(generated, oracle, "{t}");
        assert_eq!(rs.positive_roots().len(), t.positive_root_count(), "{t}");
        for r in rs.positive_roots() {
            assert!(!rs.positive_roots().contains(&r.neg()));
        }
    }
}

#[test]
fn cartan_matches_euclidean_realisation() {
    for t in simple_types_up_to(8) {
        assert_eq!(RootSystem::simple(t).cartan(), oracle_cartan(t).as_slice(), "{t}");
    }
}

#[test]
fn simple_roots_are_unit_vectors() {
    for t in simple_types_up_to(8) {
        let rs = RootSystem::simple(t);
        let l = t.rank();
        let height_one: BTreeSet<hwcone::Root> = rs
            .positive_roots()
            .iter()
            .filter(|r| r.height() == 1)
            .cloned()
            .collect();
        let units: BTreeSet<hwcone::Root> = (0..l).map(|i| hwcone::Root::simple(l, i)).collect();
        assert_eq!(height_one, units, "{t}");
    }
}

#[test]
fn rank_four_tables() {
    // highest roots, Bourbaki plates
    let cases: [(&str, &[i64]); 8] = [
        ("A4", &[1, 1, 1, 1]),
        ("B4", &[1, 2, 2, 2]),
        ("C4", &[2, 2, 2, 1]),
        ("D4", &[1, 2, 1, 1]),
        ("F4", &[2, 3, 4, 2]),
        ("G2", &[3, 2]),
        ("B2", &[1, 2]),
        ("E8", &[2, 3, 4, 6, 5, 4, 3, 2]),
    ];
    for (t, top) in cases {
        let rs = RootSystem::new(&t.parse().unwrap());
        assert_eq!(rs.positive_roots().last().unwrap().coords(), top, "{t}");
    }
}

#[test]
fn weyl_dimension_agrees_with_freudenthal() {
    let cases: &[(&str, &[u32])] = &[
        ("A2", &[1, 1]),
        ("A3", &[0, 2, 0]),
        ("B2", &[2, 0]),
        ("B3", &[2, 0, 0]),
        ("B4", &[2, 0, 0, 0]),
        ("C3", &[0, 0, 1]),
        ("D3", &[2, 0, 0]),
        ("D4", &[2, 0, 0, 0]),
        ("D4", &[0, 1, 0, 0]),
        ("G2", &[1, 1]),
        ("F4", &[0, 0, 0, 1]),
        ("E6", &[1, 0, 0, 0, 0, 0]),
        ("E6", &[0, 1, 0, 0, 0, 0]),
        ("E7", &[0, 0, 0, 0, 0, 0, 1]),
    ];
    for (t, labels) in cases {
        let rs = RootSystem::new(&t.parse().unwrap());
        let w = Weight::new(labels.to_vec());
        let weyl = rs.irrep_dimension(&w).unwrap();
        let fr = freudenthal_dimension(&rs, &w);
        assert_eq!(weyl, BigUint::from(fr), "{t} {w}");
    }
}

#[test]
fn e6_first_fundamental_is_27() {
    let rs = RootSystem::new(&"E6".parse().unwrap());
    let w = Weight::fundamental(6, 0);
    assert_eq!(freudenthal_dimension(&rs, &w), 27);
    assert_eq!(rs.irrep_dimension(&w).unwrap(), BigUint::from(27u32));
}

#[test]
fn product_systems_factor() {
    let t: CartanType = "A2xB2xG2".parse().unwrap();
    let rs = RootSystem::new(&t);
    let parts: Vec<RootSystem> = t.components().iter().map(|&c| RootSystem::simple(c)).collect();
    assert_eq!(
        rs.positive_roots().len(),
        parts.iter().map(|p| p.positive_roots().len()).sum::<usize>()
    );
    let labels = vec![1, 2, 0, 1, 1, 0];
    let w = Weight::new(labels.clone());
    let mut expect = BigUint::from(1u32);
    for (p, range) in parts.iter().zip(t.component_ranges()) {
        expect *= p.irrep_dimension(&Weight::new(labels[range].to_vec())).unwrap();
    }
    assert_eq!(rs.irrep_dimension(&w).unwrap(), expect);
    // no root mixes components
    for r in rs.positive_roots() {
        let touched = t
            .component_ranges()
            .iter()
            .filter(|range| r.coords()[(*range).clone()].iter().any(|&c| c != 0))
            .count();
        assert_eq!(touched, 1);
    }
}

#[test]
fn dual_representations_have_equal_dimension() {
    for l in 1..=8 {
        let rs = RootSystem::simple(SimpleType::new(hwcone::Family::A, l).unwrap());
        for k in 0..l {
            assert_eq!(
                rs.irrep_dimension(&Weight::fundamental(l, k)).unwrap(),
                rs.irrep_dimension(&Weight::fundamental(l, l - 1 - k)).unwrap()
            );
        }
    }
}
