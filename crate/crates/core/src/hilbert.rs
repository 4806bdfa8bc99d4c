//! Hilbert series of `D(L, L \ {0})` from flag counts.
//!
//! For a graded lattice the maximal building set gives
//!
//! ```text
//! H(t) = 1 + Σ_r f(r) · Π_i (t + t^2 + ... + t^(r_i - r_{i-1} - 1))
//! ```
//!
//! where `r = (r_1 < ... < r_k)` runs over rank sequences, `r_0 = 0`, and
//! `f(r)` counts the chains `0 < X_1 < ... < X_k` with `rk X_i = r_i`.
//! The formula agrees with basis enumeration whenever the atom distance
//! equals the rank difference, which holds for geometric lattices.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::series::HilbertSeries;

/// Largest parameter accepted by the purely numeric closed forms.
pub const MAX_CLOSED_FORM_N: usize = 40;

/// A strictly increasing sequence of positive ranks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankSequence(Vec<usize>);

impl RankSequence {
    pub fn new(ranks: Vec<usize>) -> Result<Self> {
        let increasing = ranks.windows(2).all(|w| w[0] < w[1]);
        if !increasing || ranks.first() == Some(&0) {
            return Err(Error::InvalidParameters(format!(
                "rank sequence {ranks:?} must be positive and strictly increasing"
            )));
        }
        Ok(RankSequence(ranks))
    }

    pub fn ranks(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Successive differences `r_i - r_{i-1}` with `r_0 = 0`.
    pub fn steps(&self) -> Vec<usize> {
        let mut prev = 0;
        self.0
            .iter()
            .map(|&r| {
                let d = r - prev;
                prev = r;
                d
            })
            .collect()
    }

    /// `Π_i (t + ... + t^(d_i - 1))` over the steps `d_i`.
    pub fn weight(&self) -> HilbertSeries {
        self.steps()
            .into_iter()
            .fold(HilbertSeries::one(), |acc, d| {
                acc.mul(&HilbertSeries::partial_geometric(d))
            })
    }

    /// Every nonempty sequence with entries in `1..=top` and no step of 1,
    /// since those contribute nothing.
    fn contributing(top: usize) -> Vec<RankSequence> {
        let mut out = Vec::new();
        for mask in 1u64..(1u64 << top) {
            let ranks: Vec<usize> = (1..=top).filter(|r| mask & (1 << (r - 1)) != 0).collect();
            let seq = RankSequence(ranks);
            if seq.steps().iter().all(|&d| d >= 2) {
                out.push(seq);
            }
        }
        out.sort();
        out
    }
}

/// Rank of every element: the common length of all maximal chains from the
/// bottom. Fails with `NotGraded` naming an element where lengths differ.
pub fn rank_function(lattice: &Lattice) -> Result<Vec<usize>> {
    let mut order: Vec<usize> = lattice.elements().collect();
    order.sort_by_key(|&x| lattice.down_set(x).count_ones(..));
    let covers = lattice.cover_pairs();
    let mut lower: Vec<Vec<usize>> = vec![Vec::new(); lattice.len()];
    for (a, b) in covers {
        lower[b].push(a);
    }
    let mut rank: Vec<Option<usize>> = vec![None; lattice.len()];
    for x in order {
        if x == lattice.bottom() {
            rank[x] = Some(0);
            continue;
        }
        let mut value = None;
        for &y in &lower[x] {
            let r = rank[y].expect("lower covers come first") + 1;
            match value {
                None => value = Some(r),
                Some(v) if v != r => {
                    return Err(Error::NotGraded(lattice.label(x).to_string()));
                }
                _ => {}
            }
        }
        rank[x] = value;
    }
    Ok(rank.into_iter().map(|r| r.expect("every element ranked")).collect())
}

/// Number of chains `0 < X_1 < ... < X_k` with `rk X_i = r_i`.
pub fn flag_count(lattice: &Lattice, ranks: &RankSequence) -> Result<BigInt> {
    let rank = rank_function(lattice)?;
    Ok(flag_count_with(lattice, &rank, ranks))
}

fn flag_count_with(lattice: &Lattice, rank: &[usize], ranks: &RankSequence) -> BigInt {
    let mut counts: Vec<(usize, BigInt)> = vec![(lattice.bottom(), BigInt::one())];
    for &r in ranks.ranks() {
        counts = lattice
            .elements()
            .filter(|&x| rank[x] == r)
            .map(|x| {
                let c = counts
                    .iter()
                    .filter(|(y, _)| lattice.lt(*y, x))
                    .fold(BigInt::zero(), |acc, (_, c)| acc + c);
                (x, c)
            })
            .collect();
    }
    counts.into_iter().map(|(_, c)| c).sum()
}

fn chain_sum(top: usize, mut f: impl FnMut(&RankSequence) -> BigInt) -> HilbertSeries {
    RankSequence::contributing(top)
        .iter()
        .fold(HilbertSeries::one(), |acc, r| {
            acc.add(&r.weight().scale(&f(r)))
        })
}

/// Closed-form Hilbert series of the maximal building set of a graded
/// lattice.
pub fn hilbert_maximal_closed(lattice: &Lattice) -> Result<HilbertSeries> {
    lattice.require_atomic()?;
    let rank = rank_function(lattice)?;
    let top = rank[lattice.top()];
    if top > 62 {
        return Err(Error::TooLarge {
            what: "lattice rank",
            size: top,
            limit: 62,
        });
    }
    Ok(chain_sum(top, |r| flag_count_with(lattice, &rank, r)))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Number of partitions of an `m`-set into `k` blocks.
pub fn stirling2(m: usize, k: usize) -> BigInt {
    // row[j] = S(i, j) for the current i.
    let mut row = vec![BigInt::zero(); k + 1];
    row[0] = BigInt::one();
    for _ in 0..m {
        for j in (1..=k).rev() {
            row[j] = &row[j] * j + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[k].clone()
}

/// Series for `n` generic hyperplanes in dimension `l`, using binomial flag
/// counts. Below the top rank there are `C(n, r)` elements of rank `r`, each
/// with `C(n - r, s - r)` elements of rank `s < l` above it; the top is
/// unique.
pub fn hilbert_generic_closed(n: usize, l: usize) -> Result<HilbertSeries> {
    if l == 0 || l > n || (l == 1 && n > 1) || n > MAX_CLOSED_FORM_N {
        return Err(Error::InvalidParameters(format!(
            "generic arrangement series needs 2 <= l <= n <= {MAX_CLOSED_FORM_N} \
             (or n = l = 1), got n = {n}, l = {l}"
        )));
    }
    Ok(chain_sum(l, |r| {
        let mut prev = 0;
        let mut count = BigInt::one();
        for &ri in r.ranks() {
            if ri < l {
                count *= binomial(n - prev, ri - prev);
            }
            prev = ri;
        }
        count
    }))
}

/// Series for the partition lattice `Π_n`, using Stirling flag counts
/// `f(r) = Π_i S(n - r_{i-1}, n - r_i)`.
pub fn hilbert_partition_closed(n: usize) -> Result<HilbertSeries> {
    if !(2..=MAX_CLOSED_FORM_N).contains(&n) {
        return Err(Error::InvalidParameters(format!(
            "partition lattice series needs 2 <= n <= {MAX_CLOSED_FORM_N}, got {n}"
        )));
    }
    Ok(chain_sum(n - 1, |r| {
        let mut prev = 0;
        r.ranks().iter().fold(BigInt::one(), |acc, &ri| {
            let f = stirling2(n - prev, n - ri);
            prev = ri;
            acc * f
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{boolean_lattice, fy_example_lattice, partition_lattice};

    fn series(c: &[i64]) -> HilbertSeries {
        HilbertSeries::from_counts(c.iter().copied())
    }

    #[test]
    fn numbers() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(5, 3), BigInt::from(25));
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(3, 0), BigInt::zero());
    }

    #[test]
    fn ranks_and_flags() {
        let pi4 = partition_lattice(4).unwrap();
        let rank = rank_function(&pi4).unwrap();
        assert_eq!(rank[pi4.index_of("12|34").unwrap()], 2);
        assert_eq!(rank[pi4.bottom()], 0);
        let two = RankSequence::new(vec![2]).unwrap();
        assert_eq!(flag_count(&pi4, &two).unwrap(), BigInt::from(7));
        let pi3 = partition_lattice(3).unwrap();
        let chain = RankSequence::new(vec![1, 2]).unwrap();
        assert_eq!(flag_count(&pi3, &chain).unwrap(), BigInt::from(3));
        let empty = RankSequence::new(vec![]).unwrap();
        assert_eq!(flag_count(&pi3, &empty).unwrap(), BigInt::one());
        assert!(RankSequence::new(vec![2, 2]).is_err());
        assert!(RankSequence::new(vec![0, 1]).is_err());
    }

    #[test]
    fn non_graded_is_reported() {
        let l = Lattice::from_covers(
            &["0", "a", "b", "c", "top"],
            &[("0", "a"), ("0", "b"), ("a", "c"), ("c", "top"), ("b", "top")],
        )
        .unwrap();
        assert_eq!(rank_function(&l).unwrap_err(), Error::NotGraded("top".into()));
    }

    #[test]
    fn closed_forms() {
        let pi3 = partition_lattice(3).unwrap();
        assert_eq!(hilbert_maximal_closed(&pi3).unwrap(), series(&[1, 1]));
        let pi4 = partition_lattice(4).unwrap();
        assert_eq!(hilbert_maximal_closed(&pi4).unwrap(), series(&[1, 8, 1]));
        let b3 = boolean_lattice(3).unwrap();
        assert_eq!(hilbert_maximal_closed(&b3).unwrap(), series(&[1, 4, 1]));
        assert_eq!(hilbert_partition_closed(3).unwrap(), series(&[1, 1]));
        assert_eq!(hilbert_partition_closed(4).unwrap(), series(&[1, 8, 1]));
        assert_eq!(hilbert_generic_closed(3, 2).unwrap(), series(&[1, 1]));
        assert_eq!(hilbert_generic_closed(4, 3).unwrap(), series(&[1, 7, 1]));
        assert_eq!(hilbert_generic_closed(1, 1).unwrap(), series(&[1]));
        assert!(hilbert_generic_closed(3, 1).is_err());
        assert!(hilbert_generic_closed(2, 3).is_err());
        assert!(hilbert_partition_closed(1).is_err());
        // The fy lattice is graded, so the formula evaluates; it is not
        // geometric, so the value differs from the enumerated 1 + 3t.
        assert_eq!(
            hilbert_maximal_closed(&fy_example_lattice()).unwrap(),
            series(&[1, 3, 1])
        );
    }
}
