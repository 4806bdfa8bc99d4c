mod common;

use lattice_chow::algebra::hilbert_series_enumerated;
use lattice_chow::catalog::{
    boolean_lattice, fy_example_lattice, generic_arrangement_lattice, partition_lattice,
};
use lattice_chow::hilbert::{
    binomial, flag_count, hilbert_generic_closed, hilbert_maximal_closed,
    hilbert_partition_closed, rank_function, stirling2, RankSequence,
};
use lattice_chow::{BuildingSet, Error, HilbertSeries, Lattice};
use num_bigint::BigInt;
use proptest::prelude::*;

fn enumerated(l: &Lattice) -> HilbertSeries {
    hilbert_series_enumerated(&BuildingSet::maximal(l).unwrap()).unwrap()
}

fn distance_is_rank_difference(l: &Lattice) -> bool {
    let Ok(rank) = rank_function(l) else {
        return false;
    };
    l.elements().all(|x| {
        l.elements()
            .filter(|&y| l.leq(x, y))
            .all(|y| l.atom_distance(x, y).unwrap() == rank[y] - rank[x])
    })
}

/// Chains `0 < X_1 < ... < X_k` with prescribed ranks, counted by walking
/// every chain.
fn brute_force_flags(l: &Lattice, rank: &[usize], ranks: &[usize]) -> usize {
    fn go(l: &Lattice, rank: &[usize], from: usize, rest: &[usize]) -> usize {
        match rest.split_first() {
            None => 1,
            Some((&r, tail)) => l
                .elements()
                .filter(|&y| l.lt(from, y) && rank[y] == r)
                .map(|y| go(l, rank, y, tail))
                .sum(),
        }
    }
    go(l, rank, l.bottom(), ranks)
}

#[test]
fn partition_closed_matches_enumeration() {
    let expected = ["1", "1 + t", "1 + 8t + t^2", "1 + 41t + 41t^2 + t^3"];
    for n in 2..=5 {
        let closed = hilbert_partition_closed(n).unwrap();
        assert_eq!(closed, enumerated(&partition_lattice(n).unwrap()), "pi{n}");
        assert_eq!(closed.to_string(), expected[n - 2]);
        assert_eq!(closed, hilbert_maximal_closed(&partition_lattice(n).unwrap()).unwrap());
    }
}

#[test]
fn generic_closed_matches_enumeration() {
    for n in 2..=6 {
        for l in 2..=n.min(4) {
            let lattice = generic_arrangement_lattice(n, l).unwrap();
            let closed = hilbert_generic_closed(n, l).unwrap();
            assert_eq!(closed, enumerated(&lattice), "generic({n},{l})");
            assert_eq!(closed, hilbert_maximal_closed(&lattice).unwrap());
        }
    }
    assert_eq!(hilbert_generic_closed(4, 3).unwrap().to_string(), "1 + 7t + t^2");
    assert_eq!(hilbert_generic_closed(1, 1).unwrap(), HilbertSeries::one());
}

#[test]
fn boolean_closed_matches_enumeration() {
    for n in 1..=4 {
        let l = boolean_lattice(n).unwrap();
        assert_eq!(hilbert_maximal_closed(&l).unwrap(), enumerated(&l), "bool{n}");
    }
    let b3 = boolean_lattice(3).unwrap();
    assert_eq!(hilbert_maximal_closed(&b3).unwrap().to_string(), "1 + 4t + t^2");
}

/// The fy lattice is graded but the atom distance from the bottom to the
/// top is 2 while the rank difference is 3, so the rank-based closed form
/// does not apply to it.
#[test]
fn fy_closed_form_differs_from_enumeration() {
    let l = fy_example_lattice();
    assert!(!distance_is_rank_difference(&l));
    assert_eq!(rank_function(&l).unwrap()[l.top()], 3);
    assert_eq!(l.atom_distance(l.bottom(), l.top()).unwrap(), 2);
    assert_eq!(hilbert_maximal_closed(&l).unwrap().to_string(), "1 + 3t + t^2");
    assert_eq!(enumerated(&l).to_string(), "1 + 3t");
}

#[test]
fn flag_counts_match_chain_walks() {
    for (name, l) in common::catalog_lattices() {
        let rank = rank_function(&l).unwrap();
        let top = rank[l.top()];
        for mask in 1u32..(1 << top) {
            let ranks: Vec<usize> = (1..=top).filter(|r| mask & (1 << (r - 1)) != 0).collect();
            let seq = RankSequence::new(ranks.clone()).unwrap();
            assert_eq!(
                flag_count(&l, &seq).unwrap(),
                BigInt::from(brute_force_flags(&l, &rank, &ranks)),
                "{name} {ranks:?}"
            );
        }
    }
}

#[test]
fn numeric_helpers() {
    assert_eq!(binomial(5, 2), BigInt::from(10));
    assert_eq!(binomial(2, 5), BigInt::from(0));
    let stirling: Vec<BigInt> = (0..=5).map(|k| stirling2(5, k)).collect();
    let expected: Vec<BigInt> = [0, 1, 15, 25, 10, 1].into_iter().map(BigInt::from).collect();
    assert_eq!(stirling, expected);
    assert_eq!(stirling2(0, 0), BigInt::from(1));
    assert_eq!(RankSequence::new(vec![2, 3, 5]).unwrap().steps(), vec![2, 1, 2]);
    assert!(RankSequence::new(vec![2, 2]).is_err());
    assert!(RankSequence::new(vec![0, 1]).is_err());
    // One step of length 3 contributes t + t^2.
    assert_eq!(RankSequence::new(vec![3]).unwrap().weight().to_string(), "t + t^2");
}

#[test]
fn closed_form_errors() {
    assert!(matches!(hilbert_partition_closed(1), Err(Error::InvalidParameters(_))));
    assert!(matches!(hilbert_generic_closed(3, 1), Err(Error::InvalidParameters(_))));
    assert!(matches!(hilbert_generic_closed(3, 4), Err(Error::InvalidParameters(_))));
    // Atomic but not graded: 0 < a < x < U against 0 < c < U.
    let l = Lattice::from_covers(
        &["0", "a", "b", "c", "x", "U"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "x"),
            ("b", "x"),
            ("x", "U"),
            ("c", "U"),
        ],
    )
    .unwrap();
    assert!(l.is_atomic());
    assert_eq!(rank_function(&l), Err(Error::NotGraded("U".into())));
    assert!(hilbert_maximal_closed(&l).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_form_on_random_lattices(seed in any::<u64>()) {
        let mut rng = rand::SeedableRng::seed_from_u64(seed);
        let l = common::random_atomic_lattice(&mut rng, 8);
        if distance_is_rank_difference(&l) {
            prop_assert_eq!(hilbert_maximal_closed(&l).unwrap(), enumerated(&l));
        }
    }

    #[test]
    fn series_starts_with_one(seed in any::<u64>()) {
        let case = common::random_case(seed);
        let series = hilbert_series_enumerated(&case.building()).unwrap();
        prop_assert_eq!(series.coefficient(0), BigInt::from(1));
    }
}
