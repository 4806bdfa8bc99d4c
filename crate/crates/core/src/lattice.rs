//! Finite lattices with precomputed order, join and meet tables.
//!
//! A [`Lattice`] is validated once at construction. Every downstream
//! computation works on element indices (`usize`); labels are only used for
//! input and output.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Upper limit on the size of posets handed to the brute-force isomorphism
/// search.
pub const ISOMORPHISM_LIMIT: usize = 12;

#[derive(Debug, Clone)]
pub struct Lattice {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// `up[x]` holds every `y` with `x <= y`.
    up: Vec<FixedBitSet>,
    /// `down[x]` holds every `y` with `y <= x`.
    down: Vec<FixedBitSet>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
    atoms: Vec<usize>,
    atom_position: Vec<Option<usize>>,
    atomic: bool,
}

impl Lattice {
    /// Builds a lattice from labels and a cover relation given as
    /// `(lower, upper)` label pairs.
    ///
    /// The pairs need not be exact covers; the order is the reflexive
    /// transitive closure of whatever is supplied.
    pub fn from_covers<S: AsRef<str>>(labels: &[S], covers: &[(S, S)]) -> Result<Lattice> {
        if labels.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = labels.len();
        let index = label_index(labels)?;
        let mut succ = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for (lo, hi) in covers {
            let lo_ix = *index
                .get(lo.as_ref())
                .ok_or_else(|| Error::UnknownLabel(lo.as_ref().to_string()))?;
            let hi_ix = *index
                .get(hi.as_ref())
                .ok_or_else(|| Error::UnknownLabel(hi.as_ref().to_string()))?;
            if lo_ix == hi_ix {
                return Err(Error::CyclicCovers(lo.as_ref().to_string()));
            }
            succ[lo_ix].push(hi_ix);
            indegree[hi_ix] += 1;
        }

        // Kahn's algorithm; leftovers lie on a cycle.
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            topo.push(v);
            for &w in &succ[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if topo.len() < n {
            let culprit = (0..n).find(|&v| indegree[v] > 0).unwrap();
            return Err(Error::CyclicCovers(labels[culprit].as_ref().to_string()));
        }

        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &v in topo.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(v);
            for &w in &succ[v] {
                set.union_with(&up[w]);
            }
            up[v] = set;
        }
        Self::from_up_sets(owned(labels), up)
    }

    /// Builds a lattice from labels and an order predicate `leq(i, j)`.
    ///
    /// The predicate must describe a partial order; antisymmetry and
    /// transitivity are checked.
    pub fn from_leq<S: AsRef<str>>(
        labels: &[S],
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<Lattice> {
        if labels.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, set) in up.iter_mut().enumerate() {
            set.insert(i);
            for j in 0..n {
                if i != j && leq(i, j) {
                    set.insert(j);
                }
            }
        }
        for i in 0..n {
            for j in up[i].ones() {
                if i != j && up[j].contains(i) {
                    return Err(Error::CyclicCovers(labels[i].as_ref().to_string()));
                }
                if !up[j].is_subset(&up[i]) {
                    return Err(Error::Validation(format!(
                        "order relation is not transitive at `{}`",
                        labels[j].as_ref()
                    )));
                }
            }
        }
        Self::from_up_sets(owned(labels), up)
    }

    fn from_up_sets(labels: Vec<String>, up: Vec<FixedBitSet>) -> Result<Lattice> {
        let n = labels.len();
        let index = label_index(&labels)?;
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (x, set) in up.iter().enumerate() {
            for y in set.ones() {
                down[y].insert(x);
            }
        }

        // A linear extension: sort by the size of the down-set.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (down[x].count_ones(..), x));
        let mut position = vec![0; n];
        for (p, &x) in order.iter().enumerate() {
            position[x] = p;
        }

        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let mut common = up[a].clone();
                common.intersect_with(&up[b]);
                let least = common.ones().min_by_key(|&c| position[c]);
                let j = match least {
                    Some(c) if common.is_subset(&up[c]) => c,
                    _ => {
                        return Err(Error::NotALattice(
                            labels[a].clone(),
                            labels[b].clone(),
                            "join",
                        ))
                    }
                };
                join[a * n + b] = j;
                join[b * n + a] = j;

                let mut common = down[a].clone();
                common.intersect_with(&down[b]);
                let greatest = common.ones().max_by_key(|&c| position[c]);
                let m = match greatest {
                    Some(c) if common.is_subset(&down[c]) => c,
                    _ => {
                        return Err(Error::NotALattice(
                            labels[a].clone(),
                            labels[b].clone(),
                            "meet",
                        ))
                    }
                };
                meet[a * n + b] = m;
                meet[b * n + a] = m;
            }
        }

        let bottom = (0..n).fold(order[0], |acc, x| meet[acc * n + x]);
        let top = (0..n).fold(order[0], |acc, x| join[acc * n + x]);
        let atoms: Vec<usize> = (0..n)
            .filter(|&x| x != bottom && down[x].count_ones(..) == 2)
            .collect();
        let mut atom_position = vec![None; n];
        for (i, &a) in atoms.iter().enumerate() {
            atom_position[a] = Some(i);
        }

        let mut lattice = Lattice {
            labels,
            index,
            up,
            down,
            join,
            meet,
            bottom,
            top,
            atoms,
            atom_position,
            atomic: false,
        };
        lattice.atomic = (0..n).all(|x| lattice.join_set(lattice.atoms_below(x)) == x);
        Ok(lattice)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn labels_of<'a>(&'a self, set: impl IntoIterator<Item = &'a usize>) -> Vec<String> {
        set.into_iter().map(|&x| self.labels[x].clone()).collect()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Atoms in element order. This order fixes the coordinates of
    /// characteristic vectors.
    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    pub fn atom_position(&self, x: usize) -> Option<usize> {
        self.atom_position[x]
    }

    pub fn is_atom(&self, x: usize) -> bool {
        self.atom_position[x].is_some()
    }

    pub fn is_atomic(&self) -> bool {
        self.atomic
    }

    pub fn require_atomic(&self) -> Result<()> {
        if self.atomic {
            return Ok(());
        }
        let culprit = self
            .elements()
            .find(|&x| self.join_set(self.atoms_below(x)) != x)
            .unwrap_or(self.top);
        Err(Error::NotAtomic(self.labels[culprit].clone()))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.up[x].contains(y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y]
    }

    /// Join of a set of elements; the join of the empty set is the bottom.
    pub fn join_set(&self, set: impl IntoIterator<Item = usize>) -> usize {
        set.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_set(&self, set: impl IntoIterator<Item = usize>) -> usize {
        set.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    pub fn down_set(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    /// The atoms below `x`, in atom order.
    pub fn atoms_below(&self, x: usize) -> Vec<usize> {
        self.atoms
            .iter()
            .copied()
            .filter(|&a| self.leq(a, x))
            .collect()
    }

    /// Elements of the closed interval `[x, y]`, ascending by index.
    pub fn interval_elements(&self, x: usize, y: usize) -> Vec<usize> {
        let mut set = self.up[x].clone();
        set.intersect_with(&self.down[y]);
        set.ones().collect()
    }

    /// The interval `[x, y]` as a lattice of its own, with bottom `x`.
    pub fn interval(&self, x: usize, y: usize) -> Result<Lattice> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable(
                self.labels[x].clone(),
                self.labels[y].clone(),
            ));
        }
        let members = self.interval_elements(x, y);
        let labels: Vec<String> = members.iter().map(|&m| self.labels[m].clone()).collect();
        Lattice::from_leq(&labels, |i, j| self.leq(members[i], members[j]))
    }

    /// Covering pairs `(lower, upper)`, sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for x in self.elements() {
            for y in self.up[x].ones() {
                if x != y && self.interval_elements(x, y).len() == 2 {
                    pairs.push((x, y));
                }
            }
        }
        pairs
    }

    /// Least number of atoms whose join with `x` equals `y`.
    ///
    /// Breadth-first search over the elements of `[x, y]`, stepping from `z`
    /// to `z ∨ a` for atoms `a <= y`. Reaching an element first at depth `k`
    /// means it is the join of `x` with `k` atoms and no fewer.
    pub fn atom_distance(&self, x: usize, y: usize) -> Result<usize> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable(
                self.labels[x].clone(),
                self.labels[y].clone(),
            ));
        }
        let atoms = self.atoms_below(y);
        let mut seen = FixedBitSet::with_capacity(self.len());
        seen.insert(x);
        let mut frontier = vec![x];
        let mut depth = 0;
        while !frontier.is_empty() {
            if frontier.contains(&y) {
                return Ok(depth);
            }
            let mut next = Vec::new();
            for &z in &frontier {
                for &a in &atoms {
                    let w = self.join(z, a);
                    if !seen.contains(w) {
                        seen.insert(w);
                        next.push(w);
                    }
                }
            }
            frontier = next;
            depth += 1;
        }
        Err(Error::NotAtomic(self.labels[y].clone()))
    }

    /// `table[x][y] = Some(d(x, y))` for `x <= y`, `None` otherwise.
    pub fn distance_table(&self) -> Result<Vec<Vec<Option<usize>>>> {
        let mut table = vec![vec![None; self.len()]; self.len()];
        for x in self.elements() {
            for y in self.up[x].ones() {
                table[x][y] = Some(self.atom_distance(x, y)?);
            }
        }
        Ok(table)
    }

    /// Poset isomorphism test by exhaustive search; both sides must have at
    /// most [`ISOMORPHISM_LIMIT`] elements.
    pub fn is_isomorphic(&self, other: &Lattice) -> Result<bool> {
        let a = Poset::from_lattice(self);
        let b = Poset::from_lattice(other);
        Ok(a.find_isomorphism(&b, &[])?.is_some())
    }
}

/// A small finite poset stored as a dense order matrix.
///
/// Used for product decompositions and brute-force isomorphism checks.
#[derive(Debug, Clone)]
pub(crate) struct Poset {
    pub(crate) leq: Vec<Vec<bool>>,
}

impl Poset {
    pub(crate) fn from_lattice(lattice: &Lattice) -> Poset {
        Self::induced(lattice, &lattice.elements().collect::<Vec<_>>())
    }

    pub(crate) fn induced(lattice: &Lattice, members: &[usize]) -> Poset {
        let leq = members
            .iter()
            .map(|&x| members.iter().map(|&y| lattice.leq(x, y)).collect())
            .collect();
        Poset { leq }
    }

    pub(crate) fn len(&self) -> usize {
        self.leq.len()
    }

    fn signature(&self, x: usize) -> (usize, usize) {
        let above = (0..self.len()).filter(|&y| self.leq[x][y]).count();
        let below = (0..self.len()).filter(|&y| self.leq[y][x]).count();
        (above, below)
    }

    /// Searches for an order isomorphism `self -> other` that respects the
    /// given fixed assignments.
    pub(crate) fn find_isomorphism(
        &self,
        other: &Poset,
        fixed: &[(usize, usize)],
    ) -> Result<Option<Vec<usize>>> {
        let n = self.len();
        if n != other.len() {
            return Ok(None);
        }
        if n > ISOMORPHISM_LIMIT {
            return Err(Error::TooLarge {
                what: "poset for isomorphism search",
                size: n,
                limit: ISOMORPHISM_LIMIT,
            });
        }
        let sig_a: Vec<_> = (0..n).map(|x| self.signature(x)).collect();
        let sig_b: Vec<_> = (0..n).map(|x| other.signature(x)).collect();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        for &(x, y) in fixed {
            if sig_a[x] != sig_b[y] || (image[x] != usize::MAX && image[x] != y) {
                return Ok(None);
            }
            image[x] = y;
            used[y] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&x| image[x] == usize::MAX).collect();
        if self.extend(other, &sig_a, &sig_b, &free, 0, &mut image, &mut used) {
            Ok(Some(image))
        } else {
            Ok(None)
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        other: &Poset,
        sig_a: &[(usize, usize)],
        sig_b: &[(usize, usize)],
        free: &[usize],
        depth: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == free.len() {
            return (0..self.len()).all(|x| {
                (0..self.len()).all(|y| self.leq[x][y] == other.leq[image[x]][image[y]])
            });
        }
        let x = free[depth];
        for y in 0..other.len() {
            if used[y] || sig_a[x] != sig_b[y] {
                continue;
            }
            let consistent = (0..self.len()).all(|z| {
                image[z] == usize::MAX
                    || (self.leq[x][z] == other.leq[y][image[z]]
                        && self.leq[z][x] == other.leq[image[z]][y])
            });
            if !consistent {
                continue;
            }
            image[x] = y;
            used[y] = true;
            if self.extend(other, sig_a, sig_b, free, depth + 1, image, used) {
                return true;
            }
            image[x] = usize::MAX;
            used[y] = false;
        }
        false
    }
}

fn owned<S: AsRef<str>>(labels: &[S]) -> Vec<String> {
    labels.iter().map(|s| s.as_ref().to_string()).collect()
}

fn label_index<S: AsRef<str>>(labels: &[S]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, label) in labels.iter().enumerate() {
        if index.insert(label.as_ref().to_string(), i).is_some() {
            return Err(Error::DuplicateLabel(label.as_ref().to_string()));
        }
    }
    Ok(index)
}
