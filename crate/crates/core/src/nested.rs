//! Nested sets and the simplicial complex they form.

use std::collections::HashSet;

use crate::building::BuildingSet;
use crate::error::{Error, Result};

/// Whether `set` is nested: every antichain in it with at least two elements
/// has its join outside the building set.
pub fn is_nested(building: &BuildingSet<'_>, set: &[usize]) -> Result<bool> {
    for &x in set {
        building.require_member(x)?;
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut prefix = Vec::with_capacity(sorted.len());
    for &v in &sorted {
        if !extends_nested(building, &prefix, v) {
            return Ok(false);
        }
        prefix.push(v);
    }
    Ok(true)
}

/// Given a nested `face`, decides whether `face ∪ {v}` is nested by looking
/// only at antichains that contain `v`.
pub(crate) fn extends_nested(building: &BuildingSet<'_>, face: &[usize], v: usize) -> bool {
    let lattice = building.lattice();
    let candidates: Vec<usize> = face
        .iter()
        .copied()
        .filter(|&x| x != v && !lattice.comparable(x, v))
        .collect();
    if candidates.is_empty() {
        return true;
    }
    // Depth-first over antichains {v} ∪ A with A ⊆ candidates nonempty.
    fn search(
        building: &BuildingSet<'_>,
        candidates: &[usize],
        start: usize,
        chosen: &mut Vec<usize>,
        join: usize,
    ) -> bool {
        let lattice = building.lattice();
        for i in start..candidates.len() {
            let c = candidates[i];
            if chosen.iter().any(|&x| lattice.comparable(x, c)) {
                continue;
            }
            let j = lattice.join(join, c);
            if building.contains(j) {
                return false;
            }
            chosen.push(c);
            let ok = search(building, candidates, i + 1, chosen, j);
            chosen.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    search(building, &candidates, 0, &mut Vec::new(), v)
}

/// The complex of nested sets, with every face stored explicitly.
///
/// Faces are sorted vectors of lattice elements. The list starts with the
/// empty face and is ordered by size, then lexicographically.
#[derive(Debug, Clone)]
pub struct NestedComplex {
    faces: Vec<Vec<usize>>,
    facets: Vec<Vec<usize>>,
    lookup: HashSet<Vec<usize>>,
}

impl NestedComplex {
    pub fn new(building: &BuildingSet<'_>) -> NestedComplex {
        let members = building.members();
        let mut faces = Vec::new();
        let mut facets = Vec::new();
        let mut stack = vec![(Vec::new(), 0usize)];
        while let Some((face, next)) = stack.pop() {
            for (i, &v) in members.iter().enumerate().skip(next) {
                if extends_nested(building, &face, v) {
                    let mut grown = face.clone();
                    grown.push(v);
                    stack.push((grown, i + 1));
                }
            }
            let is_facet = members
                .iter()
                .all(|&v| face.contains(&v) || !extends_nested(building, &face, v));
            if is_facet {
                facets.push(face.clone());
            }
            faces.push(face);
        }
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        facets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let lookup = faces.iter().cloned().collect();
        NestedComplex {
            faces,
            facets,
            lookup,
        }
    }

    /// All faces, including the empty one.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// Inclusion-maximal faces.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        let mut key = face.to_vec();
        key.sort_unstable();
        self.lookup.contains(&key)
    }

    /// Largest face size minus one; `-1` for the complex holding only the
    /// empty face.
    pub fn dimension(&self) -> isize {
        self.faces.last().map_or(-1, |f| f.len() as isize - 1)
    }

    /// `counts[k]` = number of faces with `k` elements.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.faces.last().map_or(0, Vec::len) + 1];
        for f in &self.faces {
            counts[f.len()] += 1;
        }
        counts
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.faces
            .iter()
            .filter(|f| f.len() == 1)
            .map(|f| f[0])
            .collect()
    }
}

pub fn nested_complex(building: &BuildingSet<'_>) -> NestedComplex {
    NestedComplex::new(building)
}

/// Maximal faces only.
pub fn nested_facets(building: &BuildingSet<'_>) -> Vec<Vec<usize>> {
    NestedComplex::new(building).facets
}

/// Inclusion-minimal non-nested subsets of the building set.
///
/// Such a set `T` is an antichain (otherwise a proper subset would already
/// fail), and removing its largest-index element leaves a face. So every
/// candidate is a face extended by a vertex beyond its last element.
pub fn minimal_non_nested(building: &BuildingSet<'_>) -> Vec<Vec<usize>> {
    minimal_non_nested_in(building, &NestedComplex::new(building))
}

pub(crate) fn minimal_non_nested_in(
    building: &BuildingSet<'_>,
    complex: &NestedComplex,
) -> Vec<Vec<usize>> {
    let mut minimal = Vec::new();
    for face in complex.faces() {
        let last = face.last().copied();
        for &v in building.members() {
            if last.is_some_and(|l| v <= l) {
                continue;
            }
            let mut candidate = face.clone();
            candidate.push(v);
            if complex.contains(&candidate) {
                continue;
            }
            let all_facets_nested = (0..candidate.len()).all(|skip| {
                let sub: Vec<usize> = candidate
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &x)| x)
                    .collect();
                complex.contains(&sub)
            });
            if all_facets_nested {
                minimal.push(candidate);
            }
        }
    }
    minimal.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    minimal
}

/// Errors unless `set` is a nested subset of the building set.
pub fn require_nested(building: &BuildingSet<'_>, set: &[usize]) -> Result<()> {
    if is_nested(building, set)? {
        Ok(())
    } else {
        Err(Error::NotNested(building.lattice().labels_of(set)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Lattice;

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
    fn pi3_faces() {
        let l = pi3();
        let g = BuildingSet::maximal(&l).unwrap();
        assert!(is_nested(&g, &[1, 4]).unwrap());
        assert!(!is_nested(&g, &[1, 2]).unwrap());
        assert!(is_nested(&g, &[]).unwrap());
        let c = nested_complex(&g);
        let nonempty: Vec<_> = c.faces().iter().skip(1).cloned().collect();
        assert_eq!(
            nonempty,
            vec![
                vec![1],
                vec![2],
                vec![3],
                vec![4],
                vec![1, 4],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        assert_eq!(c.dimension(), 1);
        assert_eq!(c.face_counts(), vec![1, 4, 3]);
        assert_eq!(c.facets(), &[vec![1, 4], vec![2, 4], vec![3, 4]]);
        assert_eq!(
            minimal_non_nested(&g),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn chain_has_no_minimal_non_nested() {
        let l = Lattice::from_covers(&["0", "a"], &[("0", "a")]).unwrap();
        let g = BuildingSet::maximal(&l).unwrap();
        assert!(minimal_non_nested(&g).is_empty());
        assert_eq!(nested_complex(&g).faces().len(), 2);
    }

    #[test]
    fn non_member_is_rejected() {
        let l = Lattice::from_covers(
            &["0", "a", "b", "ab"],
            &[("0", "a"), ("0", "b"), ("a", "ab"), ("b", "ab")],
        )
        .unwrap();
        let g = BuildingSet::minimal(&l).unwrap();
        assert_eq!(
            is_nested(&g, &[3]).unwrap_err(),
            Error::NotInBuildingSet("ab".into())
        );
        // With G = atoms the pair {a, b} is nested: its join is not in G.
        assert!(is_nested(&g, &[1, 2]).unwrap());
    }
}
