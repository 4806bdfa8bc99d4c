//! Linear relations of the toric Chow ring of the nested-set fan, and the
//! check that they already hold in `D(L, G)`.
//!
//! For a nested set `T` and a dual vector `b` vanishing on every `v_X`,
//! `X ∈ T`, the relation is
//!
//! ```text
//! r(T, b) = Σ_{Y ∉ T, T ∪ {Y} nested} <b, v_Y> · Π_{Z ∈ T ∪ {Y}} x_Z.
//! ```
//!
//! For each `T` it suffices to take `n - |T|` vectors `b` spanning the
//! annihilator of `T`: differences of atoms inside one block `Δ_T(X)` and
//! coordinate vectors of atoms outside `⌊⋁T⌋`.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::GroebnerBasis;
use crate::building::BuildingSet;
use crate::error::Result;
use crate::fan::characteristic_vector;
use crate::nested::{is_nested, require_nested, NestedComplex};
use crate::poly::{IntPolynomial, Polynomial, VariableOrder};

#[derive(Debug, Clone, PartialEq)]
pub struct ChowRelation {
    /// The nested set `T`, sorted.
    pub base: Vec<usize>,
    /// The dual vector `b`, one entry per atom.
    pub dual: Vec<i64>,
    pub polynomial: IntPolynomial,
}

/// `Δ_T(X)`: atoms below `x` but below no member of `T` that lies under `x`.
pub fn delta(building: &BuildingSet<'_>, base: &[usize], x: usize) -> Vec<usize> {
    let lattice = building.lattice();
    lattice
        .atoms_below(x)
        .into_iter()
        .filter(|&a| {
            !base
                .iter()
                .any(|&y| lattice.lt(y, x) && lattice.leq(a, y))
        })
        .collect()
}

/// The dual vectors for `T`: consecutive differences within each `Δ_T(X)`,
/// then coordinate vectors of the atoms outside `⌊⋁T⌋`.
pub fn dual_vectors(building: &BuildingSet<'_>, base: &[usize]) -> Vec<Vec<i64>> {
    let lattice = building.lattice();
    let n = lattice.atoms().len();
    let unit = |a: usize| {
        let mut v = vec![0; n];
        v[lattice.atom_position(a).expect("atom")] = 1;
        v
    };
    let mut out = Vec::new();
    for &x in base {
        let block = delta(building, base, x);
        for pair in block.windows(2) {
            let mut v = unit(pair[0]);
            v[lattice.atom_position(pair[1]).expect("atom")] = -1;
            out.push(v);
        }
    }
    let top = lattice.join_set(base.iter().copied());
    for &a in lattice.atoms() {
        if !lattice.leq(a, top) {
            out.push(unit(a));
        }
    }
    out
}

/// All relations `r(T, b)` for the dual vectors of a nested `T`.
pub fn chow_relations(
    building: &BuildingSet<'_>,
    base: &[usize],
    order: &VariableOrder,
) -> Result<Vec<ChowRelation>> {
    require_nested(building, base)?;
    let lattice = building.lattice();
    let mut base = base.to_vec();
    base.sort_unstable();
    base.dedup();
    let extensions: Vec<(usize, Vec<i64>)> = building
        .members()
        .iter()
        .copied()
        .filter(|y| !base.contains(y))
        .filter(|&y| {
            let mut set = base.clone();
            set.push(y);
            is_nested(building, &set).unwrap_or(false)
        })
        .map(|y| (y, characteristic_vector(lattice, y)))
        .collect();
    let relations = dual_vectors(building, &base)
        .into_iter()
        .map(|dual| {
            let mut polynomial = Polynomial::zero(order.len());
            for (y, v) in &extensions {
                let pairing: i64 = dual.iter().zip(v).map(|(b, x)| b * x).sum();
                if pairing != 0 {
                    let mut set = base.clone();
                    set.push(*y);
                    polynomial.add_term(order.monomial_of(&set), BigInt::from(pairing));
                }
            }
            ChowRelation {
                base: base.clone(),
                dual,
                polynomial,
            }
        })
        .collect();
    Ok(relations)
}

/// Whether every relation `r(T, b)`, over all nested `T`, reduces to zero
/// modulo the Gröbner basis of `D(L, G)`.
pub fn verify_chow_iso(building: &BuildingSet<'_>) -> Result<bool> {
    let basis = GroebnerBasis::new(building)?;
    verify_chow_iso_with(building, &basis)
}

pub fn verify_chow_iso_with(building: &BuildingSet<'_>, basis: &GroebnerBasis) -> Result<bool> {
    let complex = NestedComplex::new(building);
    let outcomes: Vec<Result<bool>> = complex
        .faces()
        .par_iter()
        .map(|face| {
            let relations = chow_relations(building, face, basis.order())?;
            Ok(relations
                .iter()
                .all(|r| basis.normal_form(&r.polynomial).is_zero()))
        })
        .collect();
    for outcome in outcomes {
        if !outcome? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::partition_lattice;
    use crate::lattice::Lattice;

    #[test]
    fn pi3_relations() {
        let l = partition_lattice(3).unwrap();
        let g = BuildingSet::maximal(&l).unwrap();
        let ord = VariableOrder::new(&g);
        let empty = chow_relations(&g, &[], &ord).unwrap();
        let rendered: Vec<String> = empty.iter().map(|r| ord.render(&r.polynomial)).collect();
        assert_eq!(
            rendered,
            vec!["1*x[12] + 1*x[U]", "1*x[13] + 1*x[U]", "1*x[23] + 1*x[U]"]
        );
        let u = l.top();
        let over_u = chow_relations(&g, &[u], &ord).unwrap();
        assert_eq!(over_u.len(), 2);
        assert_eq!(ord.render(&over_u[0].polynomial), "1*x[12]*x[U] - 1*x[13]*x[U]");
        assert!(chow_relations(&g, &[1, 2], &ord).is_err());
        assert!(verify_chow_iso(&g).unwrap());
    }

    #[test]
    fn one_atom() {
        let l = Lattice::from_covers(&["0", "a"], &[("0", "a")]).unwrap();
        let g = BuildingSet::maximal(&l).unwrap();
        let ord = VariableOrder::new(&g);
        let r = chow_relations(&g, &[], &ord).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(ord.render(&r[0].polynomial), "1*x[a]");
        assert!(verify_chow_iso(&g).unwrap());
    }
}
