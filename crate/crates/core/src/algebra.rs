//! The graded algebra `D(L, G)`.
//!
//! `D(L, G)` is the polynomial ring over the integers with one variable
//! `x_G` per building set member, modulo
//!
//! * the monomials `∏_{G ∈ S} x_G` for non-nested `S`, and
//! * the linear forms `Σ_{G >= H} x_G` for atoms `H`.
//!
//! The enlarged generating family of [`GroebnerBasis`] is a Gröbner basis for
//! the lexicographic order of a [`VariableOrder`]; its standard monomials are
//! the basis returned by [`monomial_basis`].

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::building::BuildingSet;
use crate::error::Result;
use crate::nested::{minimal_non_nested_in, NestedComplex};
use crate::poly::{s_polynomial, IntPolynomial, Monomial, Polynomial, Reducer, VariableOrder};
use crate::series::HilbertSeries;

/// Where a Gröbner basis element comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    /// `h_S = ∏_{G ∈ S} x_G` for a minimal non-nested `S`.
    NonNested { set: Vec<usize> },
    /// `g_{H,B} = ∏_{A ∈ H} x_A · (Σ_{G >= B} x_G)^d` for a nested antichain
    /// `H` with join `A < B` and `d = d(A, B)`.
    Linear {
        antichain: Vec<usize>,
        upper: usize,
        exponent: u32,
    },
}

#[derive(Debug, Clone)]
pub struct GroebnerElement {
    pub polynomial: IntPolynomial,
    pub origin: Origin,
}

/// The generators `h_S` and `g_{H,B}` together with a prepared reducer.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: VariableOrder,
    elements: Vec<GroebnerElement>,
    reducer: Reducer<BigInt>,
}

impl GroebnerBasis {
    pub fn new(building: &BuildingSet<'_>) -> Result<GroebnerBasis> {
        Self::with_order(building, VariableOrder::new(building))
    }

    pub fn with_order(building: &BuildingSet<'_>, order: VariableOrder) -> Result<GroebnerBasis> {
        let lattice = building.lattice();
        lattice.require_atomic()?;
        let complex = NestedComplex::new(building);
        let n = order.len();
        let mut elements = Vec::new();

        for set in minimal_non_nested_in(building, &complex) {
            elements.push(GroebnerElement {
                polynomial: Polynomial::monomial(order.monomial_of(&set), BigInt::from(1)),
                origin: Origin::NonNested { set },
            });
        }

        let mut upper_sums: HashMap<usize, IntPolynomial> = HashMap::new();
        for antichain in complex.faces() {
            let is_antichain = antichain.iter().enumerate().all(|(i, &a)| {
                antichain[i + 1..]
                    .iter()
                    .all(|&b| !lattice.comparable(a, b))
            });
            if !is_antichain {
                continue;
            }
            let join = lattice.join_set(antichain.iter().copied());
            let prefix = Polynomial::monomial(order.monomial_of(antichain), BigInt::from(1));
            for &upper in building.members() {
                if !lattice.lt(join, upper) {
                    continue;
                }
                let exponent = lattice.atom_distance(join, upper)? as u32;
                let sum = upper_sums.entry(upper).or_insert_with(|| {
                    building
                        .members()
                        .iter()
                        .filter(|&&g| lattice.leq(upper, g))
                        .fold(Polynomial::zero(n), |acc, &g| &acc + &order.x(g))
                });
                elements.push(GroebnerElement {
                    polynomial: &prefix * &sum.pow(exponent),
                    origin: Origin::Linear {
                        antichain: antichain.clone(),
                        upper,
                        exponent,
                    },
                });
            }
        }

        let reducer = Reducer::new(elements.iter().map(|e| &e.polynomial))?;
        Ok(GroebnerBasis {
            order,
            elements,
            reducer,
        })
    }

    pub fn order(&self) -> &VariableOrder {
        &self.order
    }

    pub fn elements(&self) -> &[GroebnerElement] {
        &self.elements
    }

    pub fn polynomials(&self) -> Vec<IntPolynomial> {
        self.elements.iter().map(|e| e.polynomial.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Remainder of `p` on division by the basis.
    pub fn normal_form(&self, p: &IntPolynomial) -> IntPolynomial {
        self.reducer.normal_form(p)
    }

    /// Product in `D(L, G)` of two normal forms.
    pub fn multiply(&self, a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
        self.normal_form(&(a * b))
    }

    pub fn is_groebner(&self) -> bool {
        buchberger_criterion(&self.reducer, &self.polynomials())
    }

    /// Monomials of degree at most `degree_cap` divisible by no leading
    /// monomial.
    pub fn standard_monomials(&self, degree_cap: u32) -> Vec<Monomial> {
        standard_monomials(self.reducer.leading_monomials(), self.order.len(), degree_cap)
    }
}

/// `h_S` for minimal non-nested `S` and `g_{H,B}` for every nested antichain
/// `H` and member `B` above its join.
pub fn groebner_generators(building: &BuildingSet<'_>) -> Result<GroebnerBasis> {
    GroebnerBasis::new(building)
}

/// The defining presentation: minimal non-nested monomials followed by the
/// atom linear forms.
pub fn defining_generators(
    building: &BuildingSet<'_>,
    order: &VariableOrder,
) -> Result<Vec<IntPolynomial>> {
    let lattice = building.lattice();
    lattice.require_atomic()?;
    let n = order.len();
    let complex = NestedComplex::new(building);
    let mut gens: Vec<IntPolynomial> = minimal_non_nested_in(building, &complex)
        .into_iter()
        .map(|set| Polynomial::monomial(order.monomial_of(&set), BigInt::from(1)))
        .collect();
    for &atom in lattice.atoms() {
        gens.push(
            building
                .members()
                .iter()
                .filter(|&&g| lattice.leq(atom, g))
                .fold(Polynomial::zero(n), |acc, &g| &acc + &order.x(g)),
        );
    }
    Ok(gens)
}

pub fn normal_form(p: &IntPolynomial, basis: &GroebnerBasis) -> IntPolynomial {
    basis.normal_form(p)
}

pub fn multiply_in_d(a: &IntPolynomial, b: &IntPolynomial, basis: &GroebnerBasis) -> IntPolynomial {
    basis.multiply(a, b)
}

/// Buchberger's criterion for monic integer polynomials: every S-polynomial
/// of a pair with non-coprime leading monomials reduces to zero.
///
/// With all leading coefficients equal to one, division over the integers
/// never needs to invert anything, so the field criterion applies verbatim.
/// Fails with `NotMonic` if some input is not monic.
pub fn is_groebner(polys: &[IntPolynomial]) -> Result<bool> {
    let reducer = Reducer::new(polys)?;
    Ok(buchberger_criterion(&reducer, polys))
}

fn buchberger_criterion(reducer: &Reducer<BigInt>, polys: &[IntPolynomial]) -> bool {
    let leads = reducer.leading_monomials();
    (0..polys.len()).into_par_iter().all(|i| {
        (i + 1..polys.len()).all(|j| {
            if leads[i].is_coprime(&leads[j]) || (polys[i].len() == 1 && polys[j].len() == 1) {
                return true;
            }
            reducer
                .normal_form(&s_polynomial(&polys[i], &polys[j]))
                .is_zero()
        })
    })
}

/// Monomials in `nvars` variables of degree at most `degree_cap` that no
/// monomial of `leads` divides, ordered by degree and then descending
/// lexicographically.
pub fn standard_monomials(leads: &[Monomial], nvars: usize, degree_cap: u32) -> Vec<Monomial> {
    fn go(
        leads: &[Monomial],
        exps: &mut Vec<u32>,
        var: usize,
        budget: u32,
        out: &mut Vec<Monomial>,
    ) {
        if var == exps.len() {
            out.push(Monomial::from_exponents(exps.clone()));
            return;
        }
        for e in 0..=budget {
            exps[var] = e;
            let m = Monomial::from_exponents(exps.clone());
            // Later variables are still zero, so a divisor now divides every
            // extension.
            if e > 0 && leads.iter().any(|l| l.divides(&m)) {
                break;
            }
            go(leads, exps, var + 1, budget - e, out);
        }
        exps[var] = 0;
    }
    let mut out = Vec::new();
    go(leads, &mut vec![0; nvars], 0, degree_cap, &mut out);
    sort_canonical(&mut out);
    out
}

fn sort_canonical(monomials: &mut [Monomial]) {
    monomials.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
}

/// The monomials `∏_{A ∈ S} x_A^{m(A)}` over nested `S` with
/// `1 <= m(A) < d(A', A)`, where `A'` is the join of the members of `S`
/// strictly below `A`. Includes the empty product.
pub fn monomial_basis(building: &BuildingSet<'_>, order: &VariableOrder) -> Result<Vec<Monomial>> {
    let lattice = building.lattice();
    lattice.require_atomic()?;
    let complex = NestedComplex::new(building);
    let mut distances: HashMap<(usize, usize), usize> = HashMap::new();
    let mut basis = Vec::new();
    for face in complex.faces() {
        let mut bounds = Vec::with_capacity(face.len());
        for &a in face {
            let below = lattice.join_set(face.iter().copied().filter(|&y| lattice.lt(y, a)));
            let d = match distances.get(&(below, a)) {
                Some(&d) => d,
                None => {
                    let d = lattice.atom_distance(below, a)?;
                    distances.insert((below, a), d);
                    d
                }
            };
            bounds.push(d.saturating_sub(1) as u32);
        }
        if bounds.contains(&0) {
            continue;
        }
        // Every exponent vector with 1 <= m(A) <= bound(A).
        let mut current: Vec<u32> = vec![1; face.len()];
        loop {
            let mut e = vec![0; order.len()];
            for (&a, &m) in face.iter().zip(&current) {
                e[order.var(a).expect("member")] = m;
            }
            basis.push(Monomial::from_exponents(e));
            let mut k = 0;
            while k < current.len() && current[k] == bounds[k] {
                current[k] = 1;
                k += 1;
            }
            if k == current.len() {
                break;
            }
            current[k] += 1;
        }
    }
    sort_canonical(&mut basis);
    Ok(basis)
}

/// Counts basis monomials by degree.
pub fn hilbert_series_enumerated(building: &BuildingSet<'_>) -> Result<HilbertSeries> {
    let order = VariableOrder::new(building);
    let basis = monomial_basis(building, &order)?;
    let top = basis.iter().map(Monomial::degree).max().unwrap_or(0) as usize;
    let mut counts = vec![0u64; top + 1];
    for m in &basis {
        counts[m.degree() as usize] += 1;
    }
    Ok(HilbertSeries::from_counts(counts))
}
