mod common;

use std::collections::BTreeSet;

use lattice_chow::catalog::{fy_example_lattice, partition_lattice};
use lattice_chow::nested::{is_nested, minimal_non_nested, NestedComplex};
use lattice_chow::BuildingSet;
use proptest::prelude::*;

fn brute_force_faces(case: &common::Case) -> BTreeSet<Vec<usize>> {
    let members = &case.members;
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << members.len()) {
        let set: Vec<usize> = (0..members.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| members[i])
            .collect();
        if common::brute_force_is_nested(&case.lattice, members, &set) {
            out.insert(set);
        }
    }
    out
}

fn check_against_brute_force(case: &common::Case) {
    let g = case.building();
    let complex = NestedComplex::new(&g);
    let faces: BTreeSet<Vec<usize>> = complex.faces().iter().cloned().collect();
    assert_eq!(faces.len(), complex.faces().len(), "{}: duplicate faces", case.name);
    assert_eq!(faces, brute_force_faces(case), "{}", case.name);
}

#[test]
fn criterion_cases_match_brute_force() {
    for case in common::criterion_cases() {
        check_against_brute_force(&case);
    }
}

#[test]
fn pi4_minimal_face_counts() {
    let l = partition_lattice(4).unwrap();
    let g = BuildingSet::minimal(&l).unwrap();
    let complex = NestedComplex::new(&g);
    // 6 atoms, 4 triples and U; the top faces have size 3.
    assert_eq!(complex.face_counts()[1], 11);
    assert_eq!(complex.dimension(), 2);
    let u = l.top();
    let t = l.index_of("123").unwrap();
    let a = l.index_of("12").unwrap();
    assert!(complex.contains(&[a, t, u]));
    // 12 and 34 join to 12|34, which is not a member; 12 and 13 join to 123.
    let b = l.index_of("34").unwrap();
    assert!(is_nested(&g, &[a, b]).unwrap());
    let c = l.index_of("13").unwrap();
    assert!(!is_nested(&g, &[a, c]).unwrap());
}

#[test]
fn fy_nested_sets() {
    let l = fy_example_lattice();
    let g = BuildingSet::from_labels(&l, &["A1", "A2", "A3", "U"]).unwrap();
    let ids: Vec<usize> = ["A1", "A3"].iter().map(|s| l.index_of(s).unwrap()).collect();
    assert!(!is_nested(&g, &ids).unwrap());
    let ids: Vec<usize> = ["A1", "A2"].iter().map(|s| l.index_of(s).unwrap()).collect();
    assert!(is_nested(&g, &ids).unwrap());
}

#[test]
fn maximal_building_set_gives_order_complex() {
    for (name, l) in common::catalog_lattices().into_iter().filter(|(_, l)| l.len() <= 16) {
        let g = BuildingSet::maximal(&l).unwrap();
        let complex = NestedComplex::new(&g);
        for face in complex.faces() {
            for (i, &a) in face.iter().enumerate() {
                for &b in &face[i + 1..] {
                    assert!(l.comparable(a, b), "{name}: {face:?}");
                }
            }
        }
        let chains = brute_force_faces(&common::Case {
            name: name.clone(),
            members: g.members().to_vec(),
            lattice: l.clone(),
        });
        assert_eq!(chains.len(), complex.faces().len(), "{name}");
    }
}

fn check_structure(case: &common::Case) -> Result<(), TestCaseError> {
    let g = case.building();
    let l = &case.lattice;
    let complex = NestedComplex::new(&g);
    for face in complex.faces() {
        // Closed under taking subsets.
        for skip in 0..face.len() {
            let mut smaller = face.clone();
            smaller.remove(skip);
            prop_assert!(complex.contains(&smaller));
        }
        // Maximal elements of a nested set meet in the bottom.
        let tops: Vec<usize> = face
            .iter()
            .copied()
            .filter(|&a| !face.iter().any(|&b| l.lt(a, b)))
            .collect();
        for (i, &a) in tops.iter().enumerate() {
            for &b in &tops[i + 1..] {
                prop_assert_eq!(l.meet(a, b), l.bottom());
            }
        }
    }
    for facet in complex.facets() {
        prop_assert_eq!(facet.contains(&l.top()), g.contains(l.top()));
        // Pure of full dimension only for geometric lattices.
        prop_assert!(facet.len() <= l.atoms().len());
    }
    for s in minimal_non_nested(&g) {
        prop_assert!(!common::brute_force_is_nested(l, &case.members, &s));
        for skip in 0..s.len() {
            let mut smaller = s.clone();
            smaller.remove(skip);
            prop_assert!(common::brute_force_is_nested(l, &case.members, &smaller));
        }
    }
    Ok(())
}

#[test]
fn criterion_cases_structure() {
    for case in common::criterion_cases() {
        check_structure(&case).unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_cases_match_brute_force(seed in any::<u64>()) {
        let case = common::random_case(seed);
        check_against_brute_force(&case);
        check_structure(&case)?;
    }
}
