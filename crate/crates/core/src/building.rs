//! Building sets, their factor decompositions and enumeration.

use crate::error::{Error, Result};
use crate::lattice::{Lattice, Poset};

/// Largest lattice accepted by [`all_building_sets`] by default.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;

/// How the product decomposition below each element is verified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DecompositionCheck {
    /// The join map `(y_1, ..., y_k) -> y_1 ∨ ... ∨ y_k` must be an order
    /// isomorphism.
    #[default]
    JoinMap,
    /// Any order isomorphism sending the `i`-th unit tuple to the `i`-th
    /// factor is accepted. Found by exhaustive search, so intervals are
    /// limited to [`crate::lattice::ISOMORPHISM_LIMIT`] elements.
    Exhaustive,
}

/// A validated building set of an atomic lattice.
#[derive(Debug, Clone)]
pub struct BuildingSet<'a> {
    lattice: &'a Lattice,
    members: Vec<usize>,
    is_member: Vec<bool>,
}

impl<'a> BuildingSet<'a> {
    pub fn new(lattice: &'a Lattice, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if !is_building_set(lattice, &members)? {
            let culprit = first_failure(lattice, &members, DecompositionCheck::JoinMap)?
                .unwrap_or(lattice.top());
            return Err(Error::NotABuildingSet(lattice.label(culprit).to_string()));
        }
        Ok(Self::new_unchecked(lattice, members))
    }

    pub fn from_labels<S: AsRef<str>>(lattice: &'a Lattice, labels: &[S]) -> Result<Self> {
        let members = labels
            .iter()
            .map(|s| lattice.index_of(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(lattice, members)
    }

    pub(crate) fn new_unchecked(lattice: &'a Lattice, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        let mut is_member = vec![false; lattice.len()];
        for &m in &members {
            is_member[m] = true;
        }
        BuildingSet {
            lattice,
            members,
            is_member,
        }
    }

    /// The irreducible elements.
    pub fn minimal(lattice: &'a Lattice) -> Result<Self> {
        let members = minimal_building_set(lattice)?;
        Ok(Self::new_unchecked(lattice, members))
    }

    /// Every element except the bottom.
    pub fn maximal(lattice: &'a Lattice) -> Result<Self> {
        lattice.require_atomic()?;
        let members = lattice
            .elements()
            .filter(|&x| x != lattice.bottom())
            .collect();
        Ok(Self::new_unchecked(lattice, members))
    }

    pub fn lattice(&self) -> &'a Lattice {
        self.lattice
    }

    /// Members in ascending element order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.is_member[x]
    }

    pub fn labels(&self) -> Vec<String> {
        self.lattice.labels_of(&self.members)
    }

    /// The factors of `x`: the maximal members below it.
    pub fn factors(&self, x: usize) -> Result<Vec<usize>> {
        if x == self.lattice.bottom() {
            return Err(Error::BottomElement(self.lattice.label(x).to_string()));
        }
        Ok(maximal_below(self.lattice, &self.members, x))
    }

    pub fn require_member(&self, x: usize) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::NotInBuildingSet(self.lattice.label(x).to_string()))
        }
    }
}

impl PartialEq for BuildingSet<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.lattice, other.lattice) && self.members == other.members
    }
}

/// Maximal elements of `candidates` lying below `x`.
fn maximal_below(lattice: &Lattice, candidates: &[usize], x: usize) -> Vec<usize> {
    let below: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&g| lattice.leq(g, x))
        .collect();
    below
        .iter()
        .copied()
        .filter(|&g| !below.iter().any(|&h| lattice.lt(g, h)))
        .collect()
}

/// Checks the building set condition with the join map.
pub fn is_building_set(lattice: &Lattice, members: &[usize]) -> Result<bool> {
    is_building_set_with(lattice, members, DecompositionCheck::JoinMap)
}

pub fn is_building_set_with(
    lattice: &Lattice,
    members: &[usize],
    check: DecompositionCheck,
) -> Result<bool> {
    Ok(first_failure(lattice, members, check)?.is_none())
}

/// First element whose lower interval is not decomposed by its factors.
fn first_failure(
    lattice: &Lattice,
    members: &[usize],
    check: DecompositionCheck,
) -> Result<Option<usize>> {
    lattice.require_atomic()?;
    if members.contains(&lattice.bottom()) {
        return Err(Error::ContainsBottom(
            lattice.label(lattice.bottom()).to_string(),
        ));
    }
    for x in lattice.elements() {
        if x == lattice.bottom() {
            continue;
        }
        let factors = maximal_below(lattice, members, x);
        let ok = match check {
            DecompositionCheck::JoinMap => join_map_is_isomorphism(lattice, &factors, x),
            DecompositionCheck::Exhaustive => some_isomorphism_exists(lattice, &factors, x)?,
        };
        if !ok {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Whether `(y_1, ..., y_k) -> ⋁ y_i` maps `∏ [0, f_i]` isomorphically onto
/// `[0, x]`.
///
/// The map always preserves order. When it is a bijection, its inverse is
/// order-preserving exactly when it is `z -> (z ∧ f_1, ..., z ∧ f_k)`, which
/// is what gets checked per tuple.
pub(crate) fn join_map_is_isomorphism(lattice: &Lattice, factors: &[usize], x: usize) -> bool {
    let bottom = lattice.bottom();
    let target = lattice.interval_elements(bottom, x);
    let intervals: Vec<Vec<usize>> = factors
        .iter()
        .map(|&f| lattice.interval_elements(bottom, f))
        .collect();
    let product_size = intervals
        .iter()
        .try_fold(1usize, |acc, iv| acc.checked_mul(iv.len()));
    if product_size != Some(target.len()) {
        return false;
    }
    let mut hit = vec![false; lattice.len()];
    let mut ok = true;
    for_each_tuple(&intervals, |tuple| {
        let z = lattice.join_set(tuple.iter().copied());
        if hit[z] {
            ok = false;
            return false;
        }
        hit[z] = true;
        if factors
            .iter()
            .zip(tuple)
            .any(|(&f, &y)| lattice.meet(z, f) != y)
        {
            ok = false;
            return false;
        }
        true
    });
    ok
}

fn some_isomorphism_exists(lattice: &Lattice, factors: &[usize], x: usize) -> Result<bool> {
    let bottom = lattice.bottom();
    let target_members = lattice.interval_elements(bottom, x);
    let intervals: Vec<Vec<usize>> = factors
        .iter()
        .map(|&f| lattice.interval_elements(bottom, f))
        .collect();
    let product_size = intervals
        .iter()
        .try_fold(1usize, |acc, iv| acc.checked_mul(iv.len()));
    if product_size != Some(target_members.len()) {
        return Ok(false);
    }
    let mut tuples = Vec::new();
    for_each_tuple(&intervals, |t| {
        tuples.push(t.to_vec());
        true
    });
    let product = Poset {
        leq: tuples
            .iter()
            .map(|a| {
                tuples
                    .iter()
                    .map(|b| a.iter().zip(b).all(|(&p, &q)| lattice.leq(p, q)))
                    .collect()
            })
            .collect(),
    };
    let target = Poset::induced(lattice, &target_members);
    let mut fixed = Vec::new();
    for (i, &f) in factors.iter().enumerate() {
        let unit: Vec<usize> = (0..factors.len())
            .map(|j| if i == j { f } else { bottom })
            .collect();
        let from = tuples.iter().position(|t| *t == unit).unwrap();
        let to = target_members.iter().position(|&m| m == f).unwrap();
        fixed.push((from, to));
    }
    Ok(product.find_isomorphism(&target, &fixed)?.is_some())
}

/// Calls `f` on every tuple of the cartesian product, stopping early when
/// `f` returns `false`.
fn for_each_tuple(sets: &[Vec<usize>], mut f: impl FnMut(&[usize]) -> bool) {
    fn go(
        sets: &[Vec<usize>],
        prefix: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if prefix.len() == sets.len() {
            return f(prefix);
        }
        for &v in &sets[prefix.len()] {
            prefix.push(v);
            let go_on = go(sets, prefix, f);
            prefix.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    go(sets, &mut Vec::with_capacity(sets.len()), &mut f);
}

/// The irreducible elements: those whose lower interval is not the join-map
/// product of two smaller nontrivial intervals.
pub fn minimal_building_set(lattice: &Lattice) -> Result<Vec<usize>> {
    lattice.require_atomic()?;
    let bottom = lattice.bottom();
    let irreducible = lattice
        .elements()
        .filter(|&x| x != bottom)
        .filter(|&x| {
            let below = lattice.interval_elements(bottom, x);
            !below.iter().any(|&y| {
                y != bottom
                    && y != x
                    && below.iter().any(|&z| {
                        y < z
                            && z != x
                            && lattice.meet(y, z) == bottom
                            && lattice.join(y, z) == x
                            && join_map_is_isomorphism(lattice, &[y, z], x)
                    })
            })
        })
        .collect();
    Ok(irreducible)
}

/// Every building set, as sorted member lists, ordered by size then
/// lexicographically.
pub fn all_building_sets(lattice: &Lattice) -> Result<Vec<Vec<usize>>> {
    all_building_sets_limited(lattice, DEFAULT_ENUMERATION_LIMIT)
}

pub fn all_building_sets_limited(lattice: &Lattice, limit: usize) -> Result<Vec<Vec<usize>>> {
    if lattice.len() > limit {
        return Err(Error::TooLarge {
            what: "lattice for building set enumeration",
            size: lattice.len(),
            limit,
        });
    }
    let minimal = minimal_building_set(lattice)?;
    let optional: Vec<usize> = lattice
        .elements()
        .filter(|&x| x != lattice.bottom() && !minimal.contains(&x))
        .collect();
    let mut found = Vec::new();
    for mask in 0u64..(1u64 << optional.len()) {
        let mut members = minimal.clone();
        members.extend(
            optional
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &x)| x),
        );
        members.sort_unstable();
        if is_building_set(lattice, &members)? {
            found.push(members);
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean2() -> Lattice {
        Lattice::from_covers(
            &["0", "a", "b", "ab"],
            &[("0", "a"), ("0", "b"), ("a", "ab"), ("b", "ab")],
        )
        .unwrap()
    }

    fn pi3() -> Lattice {
        Lattice::from_covers(
            &["0", "12", "13", "23", "123"],
            &[
                ("0", "12"),
                ("0", "13"),
                ("0", "23"),
                ("12", "123"),
                ("13", "123"),
                ("23", "123"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn pi3_only_maximal() {
        let l = pi3();
        assert!(is_building_set(&l, &[1, 2, 3, 4]).unwrap());
        // Product of three 2-chains has 8 elements, [0, U] only 5.
        assert!(!is_building_set(&l, &[1, 2, 3]).unwrap());
        assert_eq!(minimal_building_set(&l).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(all_building_sets(&l).unwrap(), vec![vec![1, 2, 3, 4]]);
    }

    #[test]
    fn boolean2_building_sets() {
        let l = boolean2();
        assert_eq!(minimal_building_set(&l).unwrap(), vec![1, 2]);
        assert_eq!(
            all_building_sets(&l).unwrap(),
            vec![vec![1, 2], vec![1, 2, 3]]
        );
    }

    #[test]
    fn bottom_and_missing_atoms() {
        let l = boolean2();
        assert_eq!(
            is_building_set(&l, &[0, 1, 2]).unwrap_err(),
            Error::ContainsBottom("0".into())
        );
        assert!(!is_building_set(&l, &[1, 3]).unwrap());
        assert_eq!(
            BuildingSet::new(&l, [1, 3]).unwrap_err(),
            Error::NotABuildingSet("b".into())
        );
    }

    #[test]
    fn factors_join_back() {
        let l = boolean2();
        let g = BuildingSet::minimal(&l).unwrap();
        assert_eq!(g.factors(3).unwrap(), vec![1, 2]);
        assert_eq!(g.factors(0).unwrap_err(), Error::BottomElement("0".into()));
        let g = BuildingSet::maximal(&l).unwrap();
        assert_eq!(g.factors(3).unwrap(), vec![3]);
    }

    #[test]
    fn exhaustive_check_agrees_on_small_cases() {
        for l in [pi3(), boolean2()] {
            let n = l.len();
            for mask in 0u32..(1 << (n - 1)) {
                let members: Vec<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                assert_eq!(
                    is_building_set_with(&l, &members, DecompositionCheck::JoinMap).unwrap(),
                    is_building_set_with(&l, &members, DecompositionCheck::Exhaustive).unwrap()
                );
            }
        }
    }

    #[test]
    fn enumeration_guard() {
        let l = pi3();
        assert!(matches!(
            all_building_sets_limited(&l, 3),
            Err(Error::TooLarge { .. })
        ));
    }
}
