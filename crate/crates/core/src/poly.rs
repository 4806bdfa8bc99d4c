//! Sparse multivariate polynomials under a lexicographic monomial order.
//!
//! Variables are indexed by their precedence in a [`VariableOrder`]: index 0
//! is the greatest variable. A [`Monomial`] is an exponent vector in that
//! indexing, so the derived lexicographic `Ord` on the vector is exactly the
//! lexicographic monomial order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::building::BuildingSet;
use crate::error::{Error, Result};

/// Coefficient rings usable in [`Polynomial`].
pub trait Coefficient:
    Clone
    + Zero
    + One
    + PartialEq
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + fmt::Debug
    + Send
    + Sync
{
}

impl<T> Coefficient for T where
    T: Clone
        + Zero
        + One
        + PartialEq
        + Neg<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + fmt::Debug
        + Send
        + Sync
{
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn variable(nvars: usize, var: usize) -> Monomial {
        let mut e = vec![0; nvars];
        e[var] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Monomial {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

/// A polynomial as a map from monomials to nonzero coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<C> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

pub type IntPolynomial = Polynomial<BigInt>;
pub type RatPolynomial = Polynomial<BigRational>;

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(Monomial::one(nvars), C::one())
    }

    pub fn variable(nvars: usize, var: usize) -> Self {
        Self::monomial(Monomial::variable(nvars, var), C::one())
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.last_key_value()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last_key_value().map(|(m, _)| m)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_term().is_some_and(|(_, c)| c.is_one())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())),
        )
    }

    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(n, a)| (n * m, a.clone() * c.clone())),
        )
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = Polynomial::zero(self.nvars);
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m * n, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        self.map_coefficients(|c| -c.clone())
    }
}

/// A set of monic polynomials prepared for repeated division.
#[derive(Debug, Clone)]
pub struct Reducer<C> {
    leads: Vec<Monomial>,
    tails: Vec<Vec<(Monomial, C)>>,
}

impl<C: Coefficient> Reducer<C> {
    /// Fails with [`Error::NotMonic`] on the first polynomial whose leading
    /// coefficient is not one (zero polynomials included).
    pub fn new<'p>(divisors: impl IntoIterator<Item = &'p Polynomial<C>>) -> Result<Self>
    where
        C: 'p,
    {
        let mut leads = Vec::new();
        let mut tails = Vec::new();
        for (i, g) in divisors.into_iter().enumerate() {
            if !g.is_monic() {
                return Err(Error::NotMonic(i));
            }
            let mut terms = g.terms();
            let (lead, _) = terms.next().unwrap();
            leads.push(lead.clone());
            tails.push(terms.map(|(m, c)| (m.clone(), c.clone())).collect());
        }
        Ok(Reducer { leads, tails })
    }

    pub fn len(&self) -> usize {
        self.leads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leads.is_empty()
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn push(&mut self, g: &Polynomial<C>) -> Result<()> {
        let mut more = Reducer::new([g]).map_err(|_| Error::NotMonic(self.len()))?;
        self.leads.append(&mut more.leads);
        self.tails.append(&mut more.tails);
        Ok(())
    }

    pub fn divisor_of(&self, m: &Monomial) -> Option<usize> {
        self.leads.iter().position(|l| l.divides(m))
    }

    /// Full multivariate division remainder: no monomial of the result is
    /// divisible by a leading monomial.
    pub fn normal_form(&self, p: &Polynomial<C>) -> Polynomial<C> {
        let mut work = p.terms.clone();
        let mut remainder = BTreeMap::new();
        while let Some((m, c)) = work.pop_last() {
            match self.divisor_of(&m) {
                Some(i) => {
                    let q = m.quotient(&self.leads[i]);
                    for (tm, tc) in &self.tails[i] {
                        let key = tm * &q;
                        let delta = c.clone() * tc.clone();
                        match work.entry(key) {
                            std::collections::btree_map::Entry::Vacant(e) => {
                                e.insert(-delta);
                            }
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                let v = e.get().clone() - delta;
                                if v.is_zero() {
                                    e.remove();
                                } else {
                                    *e.get_mut() = v;
                                }
                            }
                        }
                    }
                }
                None => {
                    remainder.insert(m, c);
                }
            }
        }
        Polynomial {
            nvars: p.nvars,
            terms: remainder,
        }
    }
}

/// S-polynomial of two monic polynomials.
pub fn s_polynomial<C: Coefficient>(f: &Polynomial<C>, g: &Polynomial<C>) -> Polynomial<C> {
    let lf = f.leading_monomial().expect("nonzero");
    let lg = g.leading_monomial().expect("nonzero");
    let lcm = lf.lcm(lg);
    let one = C::one();
    &f.mul_term(&lcm.quotient(lf), &one) - &g.mul_term(&lcm.quotient(lg), &one)
}

/// Total order on the building set used for the lexicographic monomial
/// order. Smaller lattice elements get higher precedence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableOrder {
    vars: Vec<usize>,
    names: Vec<String>,
    position: Vec<Option<usize>>,
}

impl VariableOrder {
    /// The reversed linear extension of the building set that repeatedly
    /// takes, among the remaining members with nothing remaining below them,
    /// the one with the smallest label.
    pub fn new(building: &BuildingSet<'_>) -> VariableOrder {
        let lattice = building.lattice();
        let mut remaining: Vec<usize> = building.members().to_vec();
        let mut vars = Vec::with_capacity(remaining.len());
        while !remaining.is_empty() {
            let (pos, _) = remaining
                .iter()
                .enumerate()
                .filter(|(_, &g)| !remaining.iter().any(|&h| lattice.lt(h, g)))
                .min_by(|(_, &a), (_, &b)| lattice.label(a).cmp(lattice.label(b)))
                .expect("finite poset has a minimal element");
            vars.push(remaining.remove(pos));
        }
        Self::from_sequence(building, vars).expect("constructed order is admissible")
    }

    /// Uses the given precedence sequence, which must list every member once
    /// and never put a member before one of its lower elements.
    pub fn from_sequence(building: &BuildingSet<'_>, vars: Vec<usize>) -> Result<VariableOrder> {
        let lattice = building.lattice();
        let mut sorted = vars.clone();
        sorted.sort_unstable();
        if sorted != building.members() {
            return Err(Error::InvalidParameters(
                "variable order must list every building set member exactly once".into(),
            ));
        }
        for (i, &a) in vars.iter().enumerate() {
            for &b in &vars[i + 1..] {
                if lattice.lt(b, a) {
                    return Err(Error::OrderNotAdmissible(
                        lattice.label(a).to_string(),
                        lattice.label(b).to_string(),
                    ));
                }
            }
        }
        let mut position = vec![None; lattice.len()];
        for (i, &v) in vars.iter().enumerate() {
            position[v] = Some(i);
        }
        let names = vars.iter().map(|&v| lattice.label(v).to_string()).collect();
        Ok(VariableOrder {
            vars,
            names,
            position,
        })
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    /// Lattice elements, greatest precedence first.
    pub fn elements(&self) -> &[usize] {
        &self.vars
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, var: usize) -> usize {
        self.vars[var]
    }

    /// Variable index of a building set member.
    pub fn var(&self, element: usize) -> Option<usize> {
        self.position.get(element).copied().flatten()
    }

    pub fn var_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn x<C: Coefficient>(&self, element: usize) -> Polynomial<C> {
        Polynomial::variable(self.len(), self.var(element).expect("building set member"))
    }

    /// Square-free monomial on a set of members.
    pub fn monomial_of(&self, elements: &[usize]) -> Monomial {
        let mut e = vec![0; self.len()];
        for &x in elements {
            e[self.var(x).expect("building set member")] += 1;
        }
        Monomial::from_exponents(e)
    }

    /// `(element, exponent)` pairs of a monomial, in precedence order.
    pub fn factors_of(&self, m: &Monomial) -> Vec<(usize, u32)> {
        m.exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (self.vars[i], e))
            .collect()
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x[{}]", self.names[i])
                } else {
                    format!("x[{}]^{}", self.names[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Canonical text: descending monomial order, explicit integer
    /// coefficients, e.g. `1*x[12]*x[123] - 2*x[123]^2`.
    pub fn render(&self, p: &IntPolynomial) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in p.terms().enumerate() {
            let body = if m.is_one() {
                c.abs().to_string()
            } else {
                format!("{}*{}", c.abs(), self.render_monomial(m))
            };
            match (i, c.is_negative()) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }

    /// Parses the text form produced by [`VariableOrder::render`]. Omitted
    /// coefficients default to one, and factors may repeat.
    pub fn parse(&self, text: &str) -> Result<IntPolynomial> {
        PolyParser {
            order: self,
            chars: text.char_indices().collect(),
            pos: 0,
            text,
        }
        .parse()
    }

    /// Machine form: `[[coefficient, {member: exponent, ...}], ...]` in
    /// descending monomial order. Coefficients outside `i64` are strings.
    pub fn to_machine(&self, p: &IntPolynomial) -> Value {
        Value::Array(
            p.terms()
                .map(|(m, c)| {
                    let coefficient = match c.to_i64() {
                        Some(v) => json!(v),
                        None => json!(c.to_string()),
                    };
                    json!([coefficient, self.monomial_to_machine(m)])
                })
                .collect(),
        )
    }

    pub fn monomial_to_machine(&self, m: &Monomial) -> Value {
        let map: serde_json::Map<String, Value> = self
            .factors_of(m)
            .into_iter()
            .map(|(x, e)| (self.names[self.var(x).unwrap()].clone(), json!(e)))
            .collect();
        Value::Object(map)
    }

    pub fn monomial_from_machine(&self, value: &Value) -> Result<Monomial> {
        let map = value
            .as_object()
            .ok_or_else(|| Error::Validation("monomial must be an object".into()))?;
        let mut e = vec![0u32; self.len()];
        for (name, exp) in map {
            let var = self
                .var_by_name(name)
                .ok_or_else(|| Error::UnknownLabel(name.clone()))?;
            let exp = exp
                .as_u64()
                .and_then(|v| u32::try_from(v).ok())
                .ok_or_else(|| Error::Validation(format!("bad exponent for `{name}`")))?;
            e[var] += exp;
        }
        Ok(Monomial::from_exponents(e))
    }

    pub fn from_machine(&self, value: &Value) -> Result<IntPolynomial> {
        let terms = value
            .as_array()
            .ok_or_else(|| Error::Validation("polynomial must be an array".into()))?;
        let mut p = Polynomial::zero(self.len());
        for term in terms {
            let pair = term
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::Validation("term must be [coefficient, monomial]".into()))?;
            let c: BigInt = match &pair[0] {
                Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| Error::Validation("coefficient must be an integer".into()))?,
                Value::String(s) => s
                    .parse()
                    .map_err(|_| Error::Validation(format!("bad coefficient `{s}`")))?,
                _ => return Err(Error::Validation("coefficient must be an integer".into())),
            };
            p.add_term(self.monomial_from_machine(&pair[1])?, c);
        }
        Ok(p)
    }
}

struct PolyParser<'a> {
    order: &'a VariableOrder,
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl PolyParser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        let offset = self.chars.get(self.pos).map_or(self.text.len(), |&(o, _)| o);
        Error::Syntax {
            line: 1,
            column: self.text[..offset].chars().count() + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn number(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }

    fn parse(mut self) -> Result<IntPolynomial> {
        let n = self.order.len();
        let mut p = Polynomial::zero(n);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if first => return Err(self.error("empty polynomial")),
                None => break,
                Some('+') => {
                    self.pos += 1;
                    BigInt::one()
                }
                Some('-') => {
                    self.pos += 1;
                    -BigInt::one()
                }
                Some(_) if first => BigInt::one(),
                Some(c) => return Err(self.error(format!("expected `+` or `-`, found `{c}`"))),
            };
            first = false;
            let (m, c) = self.term()?;
            p.add_term(m, sign * c);
        }
        Ok(p)
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut c = BigInt::one();
        let mut m = Monomial::one(self.order.len());
        loop {
            match self.peek() {
                Some(d) if d.is_ascii_digit() => {
                    let digits = self.number().unwrap();
                    c *= digits.parse::<BigInt>().unwrap();
                }
                Some('x') => {
                    self.pos += 1;
                    if self.peek() != Some('[') {
                        return Err(self.error("expected `[` after `x`"));
                    }
                    self.pos += 1;
                    let start = self.pos;
                    while self.chars.get(self.pos).is_some_and(|&(_, c)| c != ']') {
                        self.pos += 1;
                    }
                    if self.pos >= self.chars.len() {
                        return Err(self.error("unterminated variable name"));
                    }
                    let name: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
                    self.pos += 1;
                    let var = self
                        .order
                        .var_by_name(&name)
                        .ok_or_else(|| Error::UnknownLabel(name.clone()))?;
                    let mut exp = 1u32;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        exp = self
                            .number()
                            .and_then(|d| d.parse().ok())
                            .ok_or_else(|| self.error("expected exponent after `^`"))?;
                    }
                    m = &m * &Monomial::from_exponents({
                        let mut e = vec![0; self.order.len()];
                        e[var] = exp;
                        e
                    });
                }
                Some(c) => return Err(self.error(format!("unexpected `{c}`"))),
                None => return Err(self.error("unexpected end of input")),
            }
            match self.peek() {
                Some('*') => self.pos += 1,
                Some(ch) if ch == 'x' || ch.is_ascii_digit() => {}
                _ => return Ok((m, c)),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Lattice;

    fn pi3() -> Lattice {
        Lattice::from_covers(
            &["0", "12", "13", "23", "U"],
            &[
                ("0", "12"),
                ("0", "13"),
                ("0", "23"),
                ("12", "U"),
                ("13", "U"),
                ("23", "U"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn pi3_variable_order() {
        let l = pi3();
        let g = BuildingSet::maximal(&l).unwrap();
        let ord = VariableOrder::new(&g);
        assert_eq!(ord.names(), &["12", "13", "23", "U"]);
        assert!(matches!(
            VariableOrder::from_sequence(&g, vec![4, 1, 2, 3]),
            Err(Error::OrderNotAdmissible(..))
        ));
    }

    #[test]
    fn lex_order_puts_x_b_first() {
        // (x_12 + x_U)^2: leading monomial x_12^2.
        let l = pi3();
        let g = BuildingSet::maximal(&l).unwrap();
        let ord = VariableOrder::new(&g);
        let s: IntPolynomial = &ord.x(1) + &ord.x(4);
        let sq = s.pow(2);
        assert_eq!(ord.render(&sq), "1*x[12]^2 + 2*x[12]*x[U] + 1*x[U]^2");
        assert_eq!(sq.leading_monomial().unwrap().exponents(), &[2, 0, 0, 0]);
    }

    #[test]
    fn text_round_trip() {
        let l = pi3();
        let g = BuildingSet::maximal(&l).unwrap();
        let ord = VariableOrder::new(&g);
        let p = ord.parse("x[12]*x[U] - 3 x[U]^2 + 2 - x[13]").unwrap();
        let text = ord.render(&p);
        assert_eq!(text, "1*x[12]*x[U] - 1*x[13] - 3*x[U]^2 + 2");
        assert_eq!(ord.parse(&text).unwrap(), p);
        assert_eq!(ord.from_machine(&ord.to_machine(&p)).unwrap(), p);
        assert_eq!(ord.render(&IntPolynomial::zero(4)), "0");
    }

    #[test]
    fn parse_errors() {
        let l = pi3();
        let g = BuildingSet::maximal(&l).unwrap();
        let ord = VariableOrder::new(&g);
        assert_eq!(
            ord.parse("x[99]").unwrap_err(),
            Error::UnknownLabel("99".into())
        );
        assert!(matches!(
            ord.parse("x[12] ) x[13]").unwrap_err(),
            Error::Syntax { column: 7, .. }
        ));
        assert!(matches!(ord.parse("").unwrap_err(), Error::Syntax { .. }));
    }

    #[test]
    fn reducer_rejects_non_monic() {
        let p = IntPolynomial::monomial(Monomial::variable(2, 0), BigInt::from(2));
        assert_eq!(Reducer::new([&p]).unwrap_err(), Error::NotMonic(0));
    }

    #[test]
    fn division_by_linear_form() {
        // x0 mod (x0 + x1) = -x1
        let g = &IntPolynomial::variable(2, 0) + &IntPolynomial::variable(2, 1);
        let r = Reducer::new([&g]).unwrap();
        let nf = r.normal_form(&IntPolynomial::variable(2, 0));
        assert_eq!(nf, -&IntPolynomial::variable(2, 1));
    }
}
