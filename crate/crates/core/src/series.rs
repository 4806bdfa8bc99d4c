use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bigint_serde::JsonInt;

/// A polynomial in one formal variable `t` with integer coefficients.
///
/// `coefficients()[k]` is the coefficient of `t^k`; trailing zeros are
/// trimmed, so equal series compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertSeries(Vec<BigInt>);

impl HilbertSeries {
    pub fn new(coefficients: Vec<BigInt>) -> Self {
        let mut s = HilbertSeries(coefficients);
        s.trim();
        s
    }

    pub fn from_counts<I: Into<BigInt>>(counts: impl IntoIterator<Item = I>) -> Self {
        Self::new(counts.into_iter().map(Into::into).collect())
    }

    pub fn zero() -> Self {
        HilbertSeries(Vec::new())
    }

    pub fn one() -> Self {
        HilbertSeries(vec![BigInt::one()])
    }

    /// `t + t^2 + ... + t^(d-1)`; zero when `d <= 1`.
    pub fn partial_geometric(d: usize) -> Self {
        let mut c = vec![BigInt::zero(); d.max(1)];
        for slot in c.iter_mut().skip(1) {
            *slot = BigInt::one();
        }
        Self::new(c)
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        let n = self.0.len().max(other.0.len());
        Self::new(
            (0..n)
                .map(|k| self.coefficient(k) + other.coefficient(k))
                .collect(),
        )
    }

    pub fn mul(&self, other: &HilbertSeries) -> HilbertSeries {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn scale(&self, factor: &BigInt) -> HilbertSeries {
        Self::new(self.0.iter().map(|c| c * factor).collect())
    }
}

impl From<Vec<BigInt>> for HilbertSeries {
    fn from(c: Vec<BigInt>) -> Self {
        Self::new(c)
    }
}

/// Serialized as a coefficient list, constant term first.
impl Serialize for HilbertSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let ints: Vec<JsonInt> = self.0.iter().cloned().map(JsonInt).collect();
        ints.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HilbertSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ints = Vec::<JsonInt>::deserialize(deserializer)?;
        Ok(Self::new(ints.into_iter().map(|i| i.0).collect()))
    }
}

/// Renders as `1 + 5t + t^2`.
impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            let body = match (k, magnitude.is_one()) {
                (0, _) => magnitude.to_string(),
                (1, true) => "t".to_string(),
                (1, false) => format!("{magnitude}t"),
                (_, true) => format!("t^{k}"),
                (_, false) => format!("{magnitude}t^{k}"),
            };
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(HilbertSeries::from_counts([1, 5, 1]).to_string(), "1 + 5t + t^2");
        assert_eq!(HilbertSeries::from_counts([1, 1]).to_string(), "1 + t");
        assert_eq!(HilbertSeries::from_counts([0, 0]).to_string(), "0");
        assert_eq!(HilbertSeries::from_counts([1, -2]).to_string(), "1 - 2t");
    }

    #[test]
    fn arithmetic() {
        let a = HilbertSeries::partial_geometric(3);
        assert_eq!(a, HilbertSeries::from_counts([0, 1, 1]));
        assert!(HilbertSeries::partial_geometric(1).is_zero());
        assert_eq!(a.mul(&a), HilbertSeries::from_counts([0, 0, 1, 2, 1]));
        assert_eq!(
            HilbertSeries::one().add(&a),
            HilbertSeries::from_counts([1, 1, 1])
        );
    }

    #[test]
    fn serde_round_trip() {
        let s = HilbertSeries::from_counts([1, 8, 1]);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, "[1,8,1]");
        assert_eq!(serde_json::from_str::<HilbertSeries>(&text).unwrap(), s);
    }
}
