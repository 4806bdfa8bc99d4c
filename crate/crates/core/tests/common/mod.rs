#![allow(dead_code)]

use std::collections::BTreeSet;

use lattice_chow::building::{all_building_sets, minimal_building_set};
use lattice_chow::catalog::{
    boolean_lattice, fy_example_lattice, generic_arrangement_lattice, partition_lattice,
};
use lattice_chow::fan::default_theta_order;
use lattice_chow::{BuildingSet, Lattice};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

/// A lattice with one of its building sets.
pub struct Case {
    pub name: String,
    pub lattice: Lattice,
    pub members: Vec<usize>,
}

impl Case {
    pub fn building(&self) -> BuildingSet<'_> {
        BuildingSet::new(&self.lattice, self.members.iter().copied()).expect("valid case")
    }
}

fn maximal_members(l: &Lattice) -> Vec<usize> {
    l.elements().filter(|&x| x != l.bottom()).collect()
}

/// Π₃ maximal, Π₄ minimal and maximal, every building set of B₃, generic
/// (4,3) minimal and maximal, and every building set of the fy lattice.
pub fn criterion_cases() -> Vec<Case> {
    let mut cases = Vec::new();
    let pi3 = partition_lattice(3).unwrap();
    cases.push(Case {
        name: "pi3/maximal".into(),
        members: maximal_members(&pi3),
        lattice: pi3,
    });
    for (kind, minimal) in [("minimal", true), ("maximal", false)] {
        let pi4 = partition_lattice(4).unwrap();
        let members = if minimal {
            minimal_building_set(&pi4).unwrap()
        } else {
            maximal_members(&pi4)
        };
        cases.push(Case {
            name: format!("pi4/{kind}"),
            lattice: pi4,
            members,
        });
    }
    let b3 = boolean_lattice(3).unwrap();
    for (i, members) in all_building_sets(&b3).unwrap().into_iter().enumerate() {
        cases.push(Case {
            name: format!("bool3/G{i}"),
            lattice: b3.clone(),
            members,
        });
    }
    for (kind, minimal) in [("minimal", true), ("maximal", false)] {
        let g = generic_arrangement_lattice(4, 3).unwrap();
        let members = if minimal {
            minimal_building_set(&g).unwrap()
        } else {
            maximal_members(&g)
        };
        cases.push(Case {
            name: format!("generic43/{kind}"),
            lattice: g,
            members,
        });
    }
    let fy = fy_example_lattice();
    for (i, members) in all_building_sets(&fy).unwrap().into_iter().enumerate() {
        cases.push(Case {
            name: format!("fy/G{i}"),
            lattice: fy.clone(),
            members,
        });
    }
    cases
}

/// Every catalog lattice small enough for exhaustive triple checks.
pub fn catalog_lattices() -> Vec<(String, Lattice)> {
    let mut out = Vec::new();
    for n in 2..=5 {
        out.push((format!("pi{n}"), partition_lattice(n).unwrap()));
    }
    for n in 1..=4 {
        out.push((format!("bool{n}"), boolean_lattice(n).unwrap()));
    }
    for (n, l) in [(2, 2), (3, 2), (4, 2), (4, 3), (4, 4), (5, 3), (5, 4)] {
        out.push((
            format!("generic{n}{l}"),
            generic_arrangement_lattice(n, l).unwrap(),
        ));
    }
    out.push(("fy".into(), fy_example_lattice()));
    out
}

/// Distinct admissible subdivision orders: the default one, the same with
/// ties broken by descending label, and random reversed linear extensions.
pub fn admissible_orders(building: &BuildingSet<'_>, wanted: usize, seed: u64) -> Vec<Vec<usize>> {
    let lattice = building.lattice();
    let mut orders: Vec<Vec<usize>> = vec![default_theta_order(building)];
    let mut reversed_ties = building.members().to_vec();
    reversed_ties.sort_by(|&a, &b| {
        let ha = lattice.down_set(a).count_ones(..);
        let hb = lattice.down_set(b).count_ones(..);
        hb.cmp(&ha).then_with(|| lattice.label(b).cmp(lattice.label(a)))
    });
    if !orders.contains(&reversed_ties) {
        orders.push(reversed_ties);
    }
    let mut rng: StdRng = rand::SeedableRng::seed_from_u64(seed);
    let mut attempts = 0;
    while orders.len() < wanted && attempts < 200 {
        attempts += 1;
        let mut remaining = building.members().to_vec();
        let mut order = Vec::new();
        while !remaining.is_empty() {
            let tops: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&x| !remaining.iter().any(|&y| lattice.lt(x, y)))
                .collect();
            let pick = *tops.choose(&mut rng).unwrap();
            remaining.retain(|&x| x != pick);
            order.push(pick);
        }
        if !orders.contains(&order) {
            orders.push(order);
        }
    }
    orders
}

/// A random atomic lattice: an intersection-closed family of subsets of a
/// small atom set containing the empty set, the singletons and the whole
/// set, ordered by inclusion. Retries until it has at most `max_elements`.
pub fn random_atomic_lattice(rng: &mut StdRng, max_elements: usize) -> Lattice {
    loop {
        let k = rng.gen_range(1..=4usize);
        let full: u32 = (1 << k) - 1;
        let mut family: BTreeSet<u32> = BTreeSet::new();
        family.insert(0);
        family.insert(full);
        for i in 0..k {
            family.insert(1 << i);
        }
        for _ in 0..rng.gen_range(0..=4) {
            family.insert(rng.gen_range(0..=full));
        }
        loop {
            let snapshot: Vec<u32> = family.iter().copied().collect();
            let mut grew = false;
            for &a in &snapshot {
                for &b in &snapshot {
                    grew |= family.insert(a & b);
                }
            }
            if !grew {
                break;
            }
        }
        if family.len() > max_elements {
            continue;
        }
        let sets: Vec<u32> = family.into_iter().collect();
        let labels: Vec<String> = sets.iter().map(|s| format!("s{s}")).collect();
        let lattice = Lattice::from_leq(&labels, |i, j| sets[i] & !sets[j] == 0)
            .expect("closure systems are lattices");
        assert!(lattice.is_atomic());
        return lattice;
    }
}

/// Definition check of a building set, written independently of the
/// library: for every nonzero `x`, the join map from the product of the
/// lower intervals of the maximal members below `x` onto `[0, x]` is a
/// bijection that preserves and reflects order.
pub fn brute_force_is_building_set(lattice: &Lattice, members: &[usize]) -> bool {
    let bottom = lattice.bottom();
    if members.contains(&bottom) {
        return false;
    }
    for x in lattice.elements().filter(|&x| x != bottom) {
        let below: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&g| lattice.leq(g, x))
            .collect();
        let factors: Vec<usize> = below
            .iter()
            .copied()
            .filter(|&g| !below.iter().any(|&h| g != h && lattice.leq(g, h)))
            .collect();
        let intervals: Vec<Vec<usize>> = factors
            .iter()
            .map(|&g| lattice.elements().filter(|&y| lattice.leq(y, g)).collect())
            .collect();
        let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
        for interval in &intervals {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    interval.iter().map(move |&y| {
                        let mut t = t.clone();
                        t.push(y);
                        t
                    })
                })
                .collect();
        }
        let target: Vec<usize> = lattice.elements().filter(|&y| lattice.leq(y, x)).collect();
        if tuples.len() != target.len() {
            return false;
        }
        let images: Vec<usize> = tuples
            .iter()
            .map(|t| t.iter().fold(bottom, |acc, &y| lattice.join(acc, y)))
            .collect();
        let distinct: BTreeSet<usize> = images.iter().copied().collect();
        if distinct.len() != target.len() {
            return false;
        }
        for (s, a) in tuples.iter().enumerate() {
            for (t, b) in tuples.iter().enumerate() {
                let componentwise = a.iter().zip(b).all(|(&p, &q)| lattice.leq(p, q));
                if componentwise != lattice.leq(images[s], images[t]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Nestedness straight from the definition: every antichain of size at
/// least two has its join outside the building set.
pub fn brute_force_is_nested(lattice: &Lattice, members: &[usize], set: &[usize]) -> bool {
    let n = set.len();
    for mask in 0u32..(1 << n) {
        let chosen: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| set[i]).collect();
        if chosen.len() < 2 {
            continue;
        }
        let antichain = chosen.iter().enumerate().all(|(i, &a)| {
            chosen[i + 1..]
                .iter()
                .all(|&b| !lattice.leq(a, b) && !lattice.leq(b, a))
        });
        if antichain && members.contains(&lattice.join_set(chosen.iter().copied())) {
            return false;
        }
    }
    true
}

/// Least number of atoms joining `x` up to `y`, by trying atom subsets of
/// increasing size.
pub fn brute_force_distance(lattice: &Lattice, x: usize, y: usize) -> usize {
    let atoms: Vec<usize> = lattice
        .atoms()
        .iter()
        .copied()
        .filter(|&a| lattice.leq(a, y))
        .collect();
    let mut best = usize::MAX;
    for mask in 0u32..(1 << atoms.len()) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let j = (0..atoms.len())
            .filter(|i| mask & (1 << i) != 0)
            .fold(x, |acc, i| lattice.join(acc, atoms[i]));
        if j == y {
            best = size;
        }
    }
    best
}

/// Checks metric properties (i) to (iv) on every pair and triple.
pub fn check_metric_properties(lattice: &Lattice) -> Result<(), String> {
    let d = lattice.distance_table().map_err(|e| e.to_string())?;
    let dist = |x: usize, y: usize| d[x][y].expect("comparable");
    let n = lattice.len();
    let name = |x: usize| lattice.label(x).to_string();
    for x in 0..n {
        for y in (0..n).filter(|&y| lattice.leq(x, y)) {
            for z in (0..n).filter(|&z| lattice.leq(y, z)) {
                if dist(x, z) < dist(y, z) {
                    return Err(format!("(i) fails at {}, {}, {}", name(x), name(y), name(z)));
                }
                if dist(x, y) + dist(y, z) < dist(x, z) {
                    return Err(format!("(ii) fails at {}, {}, {}", name(x), name(y), name(z)));
                }
            }
            for z in 0..n {
                let (xz, yz) = (lattice.join(x, z), lattice.join(y, z));
                if dist(xz, yz) > dist(x, y) {
                    return Err(format!("(iii) fails at {}, {}, {}", name(x), name(y), name(z)));
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if dist(a, lattice.join(a, b)) > dist(lattice.meet(a, b), b) {
                return Err(format!("(iv) fails at {}, {}", name(a), name(b)));
            }
        }
    }
    Ok(())
}

/// A random lattice from [`random_atomic_lattice`] with one of its building
/// sets, both determined by `seed`.
pub fn random_case(seed: u64) -> Case {
    let mut rng: StdRng = rand::SeedableRng::seed_from_u64(seed);
    let lattice = random_atomic_lattice(&mut rng, 8);
    let sets = all_building_sets(&lattice).expect("small lattice");
    let members = sets.choose(&mut rng).expect("the maximal set").clone();
    Case {
        name: format!("random/{seed}"),
        lattice,
        members,
    }
}
