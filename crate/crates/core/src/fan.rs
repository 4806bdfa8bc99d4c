//! Simplicial fans spanned by characteristic vectors, the fan of nested sets,
//! and its construction by stellar subdivisions of the positive orthant.

use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::building::BuildingSet;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::lp;
use crate::nested::{is_nested, NestedComplex};

/// Sorted ray indices.
pub type Cone = Vec<usize>;

/// Maximal cone pairs examined by [`try_check_fan`] before giving up.
pub const FAN_CHECK_LIMIT: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ray {
    pub label: String,
    pub vector: Vec<i64>,
}

/// A face-closed family of cones over a ray list in `Z^dim`. Rays are
/// identified by their vectors; labels are carried along for display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<Ray>,
    cones: BTreeSet<Cone>,
}

fn subsets(cone: &[usize], out: &mut BTreeSet<Cone>) {
    if !out.insert(cone.to_vec()) {
        return;
    }
    for skip in 0..cone.len() {
        let face: Cone = cone
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &r)| r)
            .collect();
        subsets(&face, out);
    }
}

impl Fan {
    /// The fan generated by `cones` and all their faces. Rays with equal
    /// vectors are merged, keeping the first label.
    pub fn new(dim: usize, rays: Vec<Ray>, cones: impl IntoIterator<Item = Cone>) -> Fan {
        let mut unique: Vec<Ray> = Vec::new();
        let mut by_vector: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut remap = Vec::with_capacity(rays.len());
        for ray in rays {
            assert_eq!(ray.vector.len(), dim, "ray `{}` has wrong length", ray.label);
            let idx = *by_vector.entry(ray.vector.clone()).or_insert_with(|| {
                unique.push(ray);
                unique.len() - 1
            });
            remap.push(idx);
        }
        let mut closed = BTreeSet::new();
        closed.insert(Vec::new());
        for cone in cones {
            let mut c: Cone = cone.into_iter().map(|r| remap[r]).collect();
            c.sort_unstable();
            c.dedup();
            subsets(&c, &mut closed);
        }
        Fan {
            dim,
            rays: unique,
            cones: closed,
        }
    }

    /// Builds a fan from an already face-closed family without re-closing.
    fn from_closed(dim: usize, rays: Vec<Ray>, cones: BTreeSet<Cone>) -> Fan {
        Fan { dim, rays, cones }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    /// All cones including the zero cone, by ray indices.
    pub fn cones(&self) -> &BTreeSet<Cone> {
        &self.cones
    }

    pub fn contains(&self, cone: &[usize]) -> bool {
        let mut c = cone.to_vec();
        c.sort_unstable();
        self.cones.contains(&c)
    }

    pub fn ray_index(&self, vector: &[i64]) -> Option<usize> {
        self.rays.iter().position(|r| r.vector == vector)
    }

    pub fn ray_by_label(&self, label: &str) -> Option<usize> {
        self.rays.iter().position(|r| r.label == label)
    }

    /// Cones not strictly contained in another cone.
    pub fn maximal_cones(&self) -> Vec<Cone> {
        // A cone is maximal unless adding one more ray gives a cone.
        self.cones
            .iter()
            .filter(|c| {
                !(0..self.rays.len()).any(|r| {
                    if c.contains(&r) {
                        return false;
                    }
                    let mut bigger = (*c).clone();
                    bigger.push(r);
                    bigger.sort_unstable();
                    self.cones.contains(&bigger)
                })
            })
            .cloned()
            .collect()
    }

    /// `counts[k]` = number of cones with `k` rays.
    pub fn cone_counts(&self) -> Vec<usize> {
        let top = self.cones.iter().map(Vec::len).max().unwrap_or(0);
        let mut counts = vec![0; top + 1];
        for c in &self.cones {
            counts[c.len()] += 1;
        }
        counts
    }

    pub fn labels_of(&self, cone: &[usize]) -> Vec<String> {
        cone.iter().map(|&r| self.rays[r].label.clone()).collect()
    }

    /// Maximal cones as label lists, each in ray order, sorted
    /// lexicographically.
    pub fn maximal_cone_labels(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .maximal_cones()
            .iter()
            .map(|c| self.labels_of(c))
            .collect();
        out.sort();
        out
    }

    fn vector_set(&self, cone: &[usize]) -> BTreeSet<Vec<i64>> {
        cone.iter().map(|&r| self.rays[r].vector.clone()).collect()
    }

    pub fn to_record(&self) -> FanRecord {
        FanRecord {
            dim: self.dim,
            rays: self.rays.clone(),
            maximal_cones: self.maximal_cone_labels(),
        }
    }
}

/// Serializable description of a fan: rays plus maximal cones by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanRecord {
    pub dim: usize,
    pub rays: Vec<Ray>,
    pub maximal_cones: Vec<Vec<String>>,
}

impl FanRecord {
    pub fn to_fan(&self) -> Result<Fan> {
        let index: HashMap<&str, usize> = self
            .rays
            .iter()
            .enumerate()
            .map(|(i, r)| (r.label.as_str(), i))
            .collect();
        let mut cones = Vec::new();
        for labels in &self.maximal_cones {
            let cone = labels
                .iter()
                .map(|l| {
                    index
                        .get(l.as_str())
                        .copied()
                        .ok_or_else(|| Error::UnknownLabel(l.clone()))
                })
                .collect::<Result<Cone>>()?;
            cones.push(cone);
        }
        if let Some(r) = self.rays.iter().find(|r| r.vector.len() != self.dim) {
            return Err(Error::Validation(format!(
                "ray `{}` does not have {} coordinates",
                r.label, self.dim
            )));
        }
        Ok(Fan::new(self.dim, self.rays.clone(), cones))
    }
}

/// `v_X`: entry `i` is 1 exactly when the `i`-th atom lies below `x`.
pub fn characteristic_vector(lattice: &Lattice, x: usize) -> Vec<i64> {
    lattice
        .atoms()
        .iter()
        .map(|&a| i64::from(lattice.leq(a, x)))
        .collect()
}

/// The cones spanned by `{v_X : X ∈ S}` for nested `S`.
pub fn sigma_fan(building: &BuildingSet<'_>) -> Result<Fan> {
    let lattice = building.lattice();
    lattice.require_atomic()?;
    let members = building.members();
    let rays = members
        .iter()
        .map(|&g| Ray {
            label: lattice.label(g).to_string(),
            vector: characteristic_vector(lattice, g),
        })
        .collect();
    let position: HashMap<usize, usize> =
        members.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let complex = NestedComplex::new(building);
    let cones = complex
        .faces()
        .iter()
        .map(|f| f.iter().map(|g| position[g]).collect::<Cone>())
        .collect();
    Ok(Fan::from_closed(lattice.atoms().len(), rays, cones))
}

/// Rank of an integer matrix given by rows, by fraction-free elimination.
pub fn matrix_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| i128::from(v)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            if m[i][c] == 0 {
                continue;
            }
            let (a, b) = (m[rank][c], m[i][c]);
            let g = a.gcd(&b);
            let (fa, fb) = (a / g, b / g);
            for j in c..cols {
                m[i][j] = m[i][j] * fa - m[rank][j] * fb;
            }
        }
        rank += 1;
    }
    rank
}

fn is_simplicial(fan: &Fan, cone: &[usize]) -> bool {
    let rows: Vec<Vec<i64>> = cone.iter().map(|&r| fan.rays[r].vector.clone()).collect();
    matrix_rank(&rows) == cone.len()
}

fn is_face_closed(fan: &Fan) -> bool {
    fan.cones.contains(&Vec::new())
        && fan.cones.iter().all(|c| {
            (0..c.len()).all(|skip| {
                let face: Cone = c
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &r)| r)
                    .collect();
                fan.cones.contains(&face)
            })
        })
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Whether two simplicial cones meet in their common face.
///
/// They fail to exactly when some point `Σ λ_u u = Σ μ_w w` with
/// `λ, μ >= 0` puts positive weight on a generator of the first cone that
/// the second does not share; scale that weight to 1.
fn meet_properly(fan: &Fan, first: &[usize], second: &[usize]) -> bool {
    let own: Vec<bool> = first.iter().map(|r| !second.contains(r)).collect();
    if !own.iter().any(|&o| o) {
        return true;
    }
    let vars = first.len() + second.len();
    let mut a = Vec::with_capacity(fan.dim + 1);
    let mut b = Vec::with_capacity(fan.dim + 1);
    for coord in 0..fan.dim {
        let mut row = Vec::with_capacity(vars);
        row.extend(first.iter().map(|&r| q(fan.rays[r].vector[coord])));
        row.extend(second.iter().map(|&r| q(-fan.rays[r].vector[coord])));
        a.push(row);
        b.push(BigRational::zero());
    }
    let mut norm: Vec<BigRational> = own.iter().map(|&o| q(i64::from(o))).collect();
    norm.extend(std::iter::repeat(BigRational::zero()).take(second.len()));
    a.push(norm);
    b.push(q(1));
    !lp::is_feasible(&a, &b)
}

/// Simplicial, face-closed, and any two cones meet in a common face.
pub fn check_fan(fan: &Fan) -> bool {
    let maximal = fan.maximal_cones();
    if !is_face_closed(fan) || !maximal.iter().all(|c| is_simplicial(fan, c)) {
        return false;
    }
    // One direction per pair suffices: if no common point puts weight on a
    // generator of the first cone outside the second, the intersection lies
    // in the cone on the shared generators, which is a face of both.
    let duals: Vec<Option<Vec<Vec<i128>>>> =
        maximal.par_iter().map(|c| dual_columns(fan, c)).collect();
    (0..maximal.len()).into_par_iter().all(|i| {
        (i + 1..maximal.len()).all(|j| {
            let (a, b) = (&maximal[i], &maximal[j]);
            independent_union(fan, a, b)
                || separated(fan, duals[i].as_deref(), a, b)
                || separated(fan, duals[j].as_deref(), b, a)
                || meet_properly(fan, a, b)
        })
    })
}

/// For a full-dimensional cone with generator matrix `M`, the columns of
/// `sign(det M) · adj(M)`: `u_i · c_j` is `|det M|` if `i = j`, else 0.
fn dual_columns(fan: &Fan, cone: &[usize]) -> Option<Vec<Vec<i128>>> {
    let n = fan.dim;
    if cone.len() != n || n == 0 {
        return None;
    }
    let rows: Vec<Vec<i64>> = cone.iter().map(|&r| fan.rays[r].vector.clone()).collect();
    let all: Vec<usize> = (0..n).collect();
    let det = determinant(&rows, &all);
    if det == 0 {
        return None;
    }
    let columns = (0..n)
        .map(|i| {
            let others: Vec<Vec<i64>> = rows
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != i)
                .map(|(_, v)| v.clone())
                .collect();
            (0..n)
                .map(|c| {
                    let cols: Vec<usize> = (0..n).filter(|&x| x != c).collect();
                    let sign = if (i + c) % 2 == 0 { 1 } else { -1 };
                    det.signum() * sign * determinant(&others, &cols)
                })
                .collect()
        })
        .collect();
    Some(columns)
}

/// Exact certificate that `first` and `second` meet in their shared face:
/// the functional summing the dual vectors of the generators of `first`
/// outside `second` is positive on those, zero on the shared ones, and must
/// be nonpositive on all of `second`.
fn separated(fan: &Fan, duals: Option<&[Vec<i128>]>, first: &[usize], second: &[usize]) -> bool {
    let Some(duals) = duals else {
        return false;
    };
    let mut h = vec![0i128; fan.dim];
    for (i, r) in first.iter().enumerate() {
        if !second.contains(r) {
            for (hc, d) in h.iter_mut().zip(&duals[i]) {
                *hc += d;
            }
        }
    }
    second.iter().all(|&w| {
        let v = &fan.rays[w].vector;
        h.iter().zip(v).map(|(a, &b)| a * i128::from(b)).sum::<i128>() <= 0
    })
}

/// Linearly independent generators leave no room for a common point
/// outside the shared face.
fn independent_union(fan: &Fan, first: &[usize], second: &[usize]) -> bool {
    let mut union: Vec<usize> = first.iter().chain(second).copied().collect();
    union.sort_unstable();
    union.dedup();
    if union.len() > fan.dim {
        return false;
    }
    let rows: Vec<Vec<i64>> = union.iter().map(|&r| fan.rays[r].vector.clone()).collect();
    matrix_rank(&rows) == union.len()
}

/// [`check_fan`] with a guard on the number of maximal cone pairs.
pub fn try_check_fan(fan: &Fan) -> Result<bool> {
    let k = fan.maximal_cones().len();
    let pairs = k * k.saturating_sub(1) / 2;
    if pairs > FAN_CHECK_LIMIT {
        return Err(Error::TooLarge {
            what: "number of maximal cone pairs",
            size: pairs,
            limit: FAN_CHECK_LIMIT,
        });
    }
    Ok(check_fan(fan))
}

/// All `k x k` minors of the `k x n` matrix `rows` have gcd 1.
fn minors_coprime(rows: &[Vec<i64>]) -> bool {
    let k = rows.len();
    if k == 0 {
        return true;
    }
    let n = rows[0].len();
    if k > n {
        return false;
    }
    let mut g: i128 = 0;
    let mut cols: Vec<usize> = (0..k).collect();
    loop {
        let minor = determinant(rows, &cols);
        g = g.gcd(&minor);
        if g == 1 {
            return true;
        }
        // Next k-subset of 0..n in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if cols[i] < n - k + i {
                break;
            }
        }
        cols[i] += 1;
        for j in i + 1..k {
            cols[j] = cols[j - 1] + 1;
        }
    }
}

/// Bareiss determinant of the square submatrix on `cols`.
fn determinant(rows: &[Vec<i64>], cols: &[usize]) -> i128 {
    let k = cols.len();
    if k == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| cols.iter().map(|&c| i128::from(r[c])).collect())
        .collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for c in 0..k {
        if m[c][c] == 0 {
            let Some(p) = (c + 1..k).find(|&i| m[i][c] != 0) else {
                return 0;
            };
            m.swap(c, p);
            sign = -sign;
        }
        for i in c + 1..k {
            for j in c + 1..k {
                m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    sign * m[k - 1][k - 1]
}

/// Every maximal cone's generators extend to a basis of `Z^dim`.
pub fn is_unimodular(fan: &Fan) -> bool {
    fan.maximal_cones().par_iter().all(|c| {
        let rows: Vec<Vec<i64>> = c.iter().map(|&r| fan.rays[r].vector.clone()).collect();
        minors_coprime(&rows)
    })
}

/// Coefficients of `v` in the generators of `cone`, if it lies in its span
/// with nonnegative coefficients.
fn cone_coordinates(fan: &Fan, cone: &[usize], v: &[i64]) -> Option<Vec<BigRational>> {
    let a: Vec<Vec<BigRational>> = (0..fan.dim)
        .map(|coord| cone.iter().map(|&r| q(fan.rays[r].vector[coord])).collect())
        .collect();
    let b: Vec<BigRational> = v.iter().map(|&x| q(x)).collect();
    lp::feasible_point(&a, &b)
}

/// Stellar subdivision of `fan` at `sigma` with `new_ray` in its relative
/// interior: each cone `τ ⊇ σ` is replaced by the joins of `new_ray` with
/// the faces of `τ` not containing `σ`.
pub fn stellar_subdivide(fan: &Fan, sigma: &[usize], new_ray: Ray) -> Result<Fan> {
    let mut sigma = sigma.to_vec();
    sigma.sort_unstable();
    sigma.dedup();
    if !fan.cones.contains(&sigma) || sigma.iter().any(|&r| r >= fan.rays.len()) {
        return Err(Error::ConeNotInFan(
            sigma
                .iter()
                .map(|&r| fan.rays.get(r).map_or(r.to_string(), |x| x.label.clone()))
                .collect(),
        ));
    }
    if sigma.len() < 2 {
        return Err(Error::InvalidParameters(
            "stellar subdivision needs a cone with at least two rays".into(),
        ));
    }
    let interior = new_ray.vector.len() == fan.dim
        && fan.ray_index(&new_ray.vector).is_none()
        && cone_coordinates(fan, &sigma, &new_ray.vector)
            .is_some_and(|x| x.iter().all(Signed::is_positive));
    if !interior {
        return Err(Error::RayNotInterior(new_ray.label));
    }

    let contains_sigma = |c: &Cone| sigma.iter().all(|r| c.contains(r));
    let new_index = fan.rays.len();
    let mut cones: BTreeSet<Cone> = fan
        .cones
        .iter()
        .filter(|c| !contains_sigma(c))
        .cloned()
        .collect();
    for rho in fan.cones.iter().filter(|c| !contains_sigma(c)) {
        let mut with_sigma: Cone = rho.iter().chain(&sigma).copied().collect();
        with_sigma.sort_unstable();
        with_sigma.dedup();
        if fan.cones.contains(&with_sigma) {
            let mut joined = rho.clone();
            joined.push(new_index);
            cones.insert(joined);
        }
    }
    let mut rays = fan.rays.clone();
    rays.push(new_ray);
    Ok(Fan::from_closed(fan.dim, rays, cones))
}

/// The positive orthant on the atom rays with all its faces.
pub fn orthant_fan(lattice: &Lattice) -> Fan {
    let atoms = lattice.atoms();
    let rays = atoms
        .iter()
        .map(|&a| Ray {
            label: lattice.label(a).to_string(),
            vector: characteristic_vector(lattice, a),
        })
        .collect();
    Fan::new(atoms.len(), rays, [(0..atoms.len()).collect()])
}

/// Checks that `order` lists the members exactly once, larger elements
/// before smaller ones.
pub fn validate_order(building: &BuildingSet<'_>, order: &[usize]) -> Result<()> {
    let lattice = building.lattice();
    let mut seen: Vec<usize> = order.to_vec();
    seen.sort_unstable();
    if seen != building.members() {
        return Err(Error::InvalidParameters(format!(
            "order {{{}}} must list every building set member exactly once",
            lattice.labels_of(order).join(", ")
        )));
    }
    for (i, &x) in order.iter().enumerate() {
        if let Some(&y) = order[i + 1..].iter().find(|&&y| lattice.lt(x, y)) {
            return Err(Error::OrderNotAdmissible(
                lattice.label(x).to_string(),
                lattice.label(y).to_string(),
            ));
        }
    }
    Ok(())
}

/// Members by decreasing rank-like height, ties broken by label.
pub fn default_theta_order(building: &BuildingSet<'_>) -> Vec<usize> {
    let lattice = building.lattice();
    let mut order = building.members().to_vec();
    order.sort_by(|&a, &b| {
        let ha = lattice.down_set(a).count_ones(..);
        let hb = lattice.down_set(b).count_ones(..);
        hb.cmp(&ha).then_with(|| lattice.label(a).cmp(lattice.label(b)))
    });
    order
}

/// Every stage of the construction: the orthant, the fan after each
/// subdivision at a non-atom member, and the final fan with non-nested
/// cones removed.
pub fn theta_fan_steps(building: &BuildingSet<'_>, order: &[usize]) -> Result<Vec<Fan>> {
    let lattice = building.lattice();
    lattice.require_atomic()?;
    validate_order(building, order)?;
    let mut stages = vec![orthant_fan(lattice)];
    for &g in order.iter().filter(|&&g| !lattice.is_atom(g)) {
        let current = stages.last().expect("nonempty");
        let sigma: Cone = lattice
            .atoms_below(g)
            .iter()
            .map(|&a| lattice.atom_position(a).expect("atom"))
            .collect();
        if !current.contains(&sigma) {
            return Err(Error::FaceMissing(format!(
                "{{{}}}",
                lattice.labels_of(&lattice.atoms_below(g)).join(", ")
            )));
        }
        let ray = Ray {
            label: lattice.label(g).to_string(),
            vector: characteristic_vector(lattice, g),
        };
        let next = stellar_subdivide(current, &sigma, ray)?;
        stages.push(next);
    }

    let last = stages.last().expect("nonempty");
    let elements: Vec<usize> = last
        .rays
        .iter()
        .map(|r| lattice.index_of(&r.label))
        .collect::<Result<_>>()?;
    // The final fan lists its rays in building-set order, so its
    // representation does not depend on the subdivision order.
    let position: HashMap<usize, usize> = building
        .members()
        .iter()
        .enumerate()
        .map(|(i, &g)| (g, i))
        .collect();
    let mut rays: Vec<Option<Ray>> = vec![None; building.len()];
    for (r, &x) in elements.iter().enumerate() {
        rays[position[&x]] = Some(last.rays[r].clone());
    }
    let mut kept = BTreeSet::new();
    for cone in &last.cones {
        let set: Vec<usize> = cone.iter().map(|&r| elements[r]).collect();
        if is_nested(building, &set)? {
            let mut renumbered: Cone = set.iter().map(|x| position[x]).collect();
            renumbered.sort_unstable();
            kept.insert(renumbered);
        }
    }
    let rays = rays
        .into_iter()
        .zip(building.members())
        .map(|(r, &g)| {
            r.unwrap_or_else(|| Ray {
                label: lattice.label(g).to_string(),
                vector: characteristic_vector(lattice, g),
            })
        })
        .collect();
    let fan = Fan::from_closed(last.dim, rays, kept);
    stages.push(fan);
    Ok(stages)
}

/// The fan obtained from the orthant by stellar subdivisions along `order`,
/// with non-nested cones removed.
pub fn theta_fan(building: &BuildingSet<'_>, order: &[usize]) -> Result<Fan> {
    Ok(theta_fan_steps(building, order)?
        .pop()
        .expect("at least the final stage"))
}

/// Same rays and same maximal cones, both compared as vector sets.
pub fn fans_equal(a: &Fan, b: &Fan) -> bool {
    if a.dim != b.dim {
        return false;
    }
    // A ray counts when some cone uses it.
    let used = |f: &Fan| -> BTreeSet<Vec<i64>> {
        f.cones
            .iter()
            .flatten()
            .map(|&r| f.rays[r].vector.clone())
            .collect()
    };
    let maximal = |f: &Fan| -> BTreeSet<BTreeSet<Vec<i64>>> {
        f.maximal_cones().iter().map(|c| f.vector_set(c)).collect()
    };
    used(a) == used(b) && maximal(a) == maximal(b)
}
