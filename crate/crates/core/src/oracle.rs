//! Independent checks of the algebra that do not rely on the explicit
//! Gröbner basis: a per-degree rank computation and a plain Buchberger
//! completion over the rationals.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{s_polynomial, IntPolynomial, Monomial, RatPolynomial, Reducer};

/// All monomials of total degree `degree` in `nvars` variables, descending.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn go(exps: &mut Vec<u32>, var: usize, left: u32, out: &mut Vec<Monomial>) {
        if var + 1 == exps.len() {
            exps[var] = left;
            out.push(Monomial::from_exponents(exps.clone()));
            exps[var] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[var] = e;
            go(exps, var + 1, left - e, out);
        }
        exps[var] = 0;
    }
    if nvars == 0 {
        return if degree == 0 {
            vec![Monomial::one(0)]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    go(&mut vec![0; nvars], 0, degree, &mut out);
    out
}

/// Row echelon form over the rationals, filled one sparse row at a time.
#[derive(Default)]
struct Echelon {
    pivots: HashMap<Monomial, BTreeMap<Monomial, BigRational>>,
}

impl Echelon {
    fn insert(&mut self, mut row: BTreeMap<Monomial, BigRational>) -> bool {
        while let Some((lead, c)) = row.iter().next().map(|(m, c)| (m.clone(), c.clone())) {
            match self.pivots.get(&lead) {
                Some(pivot) => {
                    for (m, p) in pivot {
                        let v = row.remove(m).unwrap_or_else(BigRational::zero) - &c * p;
                        if !v.is_zero() {
                            row.insert(m.clone(), v);
                        }
                    }
                }
                None => {
                    let inv = c.recip();
                    for v in row.values_mut() {
                        *v = &*v * &inv;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Dimension over the rationals of the degree-`degree` part of the quotient
/// of the polynomial ring in `nvars` variables by the ideal of `gens`.
///
/// Every generator must be homogeneous; the zero polynomial is ignored.
pub fn quotient_rank_oracle(gens: &[IntPolynomial], nvars: usize, degree: u32) -> Result<usize> {
    let mut graded = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        if !g.is_homogeneous() {
            return Err(Error::NonHomogeneousGenerator(i));
        }
        graded.push((g.degree().unwrap_or(0), g));
    }
    let monomials = monomials_of_degree(nvars, degree);
    let mut echelon = Echelon::default();
    let mut multipliers: HashMap<u32, Vec<Monomial>> = HashMap::new();
    for (d, g) in graded {
        if d > degree {
            continue;
        }
        let shifts = multipliers
            .entry(degree - d)
            .or_insert_with(|| monomials_of_degree(nvars, degree - d));
        for m in shifts.iter() {
            let row = g
                .terms()
                .map(|(t, c)| (t * m, BigRational::from_integer(c.clone())))
                .collect();
            echelon.insert(row);
            if echelon.rank() == monomials.len() {
                return Ok(0);
            }
        }
    }
    Ok(monomials.len() - echelon.rank())
}

fn to_rational(p: &IntPolynomial) -> RatPolynomial {
    p.map_coefficients(|c| BigRational::from_integer(c.clone()))
}

fn make_monic(p: &RatPolynomial) -> RatPolynomial {
    let lead = p.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(BigRational::one);
    p.scale(&lead.recip())
}

/// A Gröbner basis over the rationals obtained by Buchberger completion.
#[derive(Debug, Clone)]
pub struct Completion {
    basis: Vec<RatPolynomial>,
    reducer: Reducer<BigRational>,
    degree_bound: Option<u32>,
}

impl Completion {
    /// Completes `gens` under the lexicographic order on variable indices.
    ///
    /// With `degree_bound = Some(D)` only S-pairs whose lcm has degree at
    /// most `D` are processed; for homogeneous input the result then decides
    /// membership for polynomials of degree at most `D`. Fails with
    /// `BudgetExhausted` after `budget` S-pair reductions.
    pub fn new(gens: &[IntPolynomial], degree_bound: Option<u32>, budget: usize) -> Result<Self> {
        let mut basis: Vec<RatPolynomial> = Vec::new();
        let mut reducer = Reducer::new(std::iter::empty::<&RatPolynomial>())?;
        for g in gens {
            let r = reducer.normal_form(&to_rational(g));
            if !r.is_zero() {
                let r = make_monic(&r);
                reducer.push(&r)?;
                basis.push(r);
            }
        }
        // Pairs ordered by the degree of their lcm, then by index.
        let mut queue = BinaryHeap::new();
        let push_pairs = |queue: &mut BinaryHeap<Reverse<(u32, usize, usize)>>,
                          basis: &[RatPolynomial],
                          j: usize| {
            let lj = basis[j].leading_monomial().expect("nonzero").clone();
            for (i, b) in basis.iter().enumerate().take(j) {
                let li = b.leading_monomial().expect("nonzero");
                if li.is_coprime(&lj) {
                    continue;
                }
                let d = li.lcm(&lj).degree();
                if degree_bound.map_or(true, |bound| d <= bound) {
                    queue.push(Reverse((d, i, j)));
                }
            }
        };
        for j in 0..basis.len() {
            push_pairs(&mut queue, &basis, j);
        }
        let mut steps = 0;
        while let Some(Reverse((_, i, j))) = queue.pop() {
            steps += 1;
            if steps > budget {
                return Err(Error::BudgetExhausted(budget));
            }
            let r = reducer.normal_form(&s_polynomial(&basis[i], &basis[j]));
            if !r.is_zero() {
                let r = make_monic(&r);
                reducer.push(&r)?;
                basis.push(r);
                push_pairs(&mut queue, &basis, basis.len() - 1);
            }
        }
        Ok(Completion {
            basis,
            reducer,
            degree_bound,
        })
    }

    pub fn basis(&self) -> &[RatPolynomial] {
        &self.basis
    }

    pub fn degree_bound(&self) -> Option<u32> {
        self.degree_bound
    }

    pub fn normal_form(&self, p: &IntPolynomial) -> RatPolynomial {
        self.reducer.normal_form(&to_rational(p))
    }

    /// Whether `p` lies in the ideal. Only meaningful up to the degree bound.
    pub fn contains(&self, p: &IntPolynomial) -> bool {
        self.normal_form(p).is_zero()
    }
}

/// Whether every polynomial of `members` lies in the ideal generated by
/// `gens`, decided by a completion truncated at the largest degree among
/// `members`.
pub fn ideal_contains_all(
    gens: &[IntPolynomial],
    members: &[IntPolynomial],
    budget: usize,
) -> Result<bool> {
    let bound = members.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    let completion = Completion::new(gens, Some(bound), budget)?;
    Ok(members.iter().all(|p| completion.contains(p)))
}
