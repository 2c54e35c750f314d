//! Truncated Laurent series in `ε` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => s.trim().parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// `Σ c_k ε^k` with every stored `c_k ≠ 0` and `k ≤ order`. Terms above the
/// order are dropped on construction and the series is flagged truncated.
#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    order: i32,
    coeffs: BTreeMap<i32, Rational>,
    truncated: bool,
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.coeffs == other.coeffs
    }
}

impl Eq for TruncatedSeries {}

impl TruncatedSeries {
    pub fn zero(order: i32) -> Self {
        TruncatedSeries { order, coeffs: BTreeMap::new(), truncated: false }
    }

    pub fn one(order: i32) -> Self {
        TruncatedSeries::monomial(integer(1), 0, order)
    }

    pub fn monomial(c: Rational, exp: i32, order: i32) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.add_term(exp, c);
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(terms: I, order: i32) -> Self {
        let mut s = TruncatedSeries::zero(order);
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    pub fn order(&self) -> i32 {
        self.order
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn add_term(&mut self, exp: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        if exp > self.order {
            self.truncated = true;
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Same coefficients, reinterpreted at another order.
    pub fn with_order(&self, order: i32) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(order);
        s.truncated = self.truncated || order < self.order;
        for (e, c) in &self.coeffs {
            s.add_term(*e, c.clone());
        }
        s
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(other.order);
        let mut s = self.with_order(order);
        s.truncated |= other.truncated;
        for (e, c) in &other.coeffs {
            s.add_term(*e, c.clone());
        }
        s
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
            truncated: self.truncated,
        }
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(self.order);
        s.truncated = self.truncated;
        for (e, x) in &self.coeffs {
            s.add_term(*e, x * c);
        }
        s
    }

    /// Multiplies by `ε^k`.
    pub fn shift(&self, k: i32) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(self.order);
        s.truncated = self.truncated;
        for (e, x) in &self.coeffs {
            s.add_term(e + k, x.clone());
        }
        s
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(other.order);
        let mut s = TruncatedSeries::zero(order);
        s.truncated = self.truncated || other.truncated;
        for (ea, a) in &self.coeffs {
            for (eb, b) in &other.coeffs {
                s.add_term(ea + eb, a * b);
            }
        }
        s
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        if self.valuation() != Some(0) {
            return Err(Error::InvalidArgument(format!(
                "series {self} has no constant term to invert"
            )));
        }
        let c0 = self.coeff(0);
        let inv0 = c0.recip();
        // b_k = -inv0 · Σ_{j=1..k} a_j b_{k-j}
        let mut b: Vec<Rational> = vec![inv0.clone()];
        for k in 1..=self.order.max(0) {
            let mut acc = Rational::zero();
            for j in 1..=k {
                let a = self.coeff(j);
                if !a.is_zero() {
                    acc += a * &b[(k - j) as usize];
                }
            }
            b.push(-(&inv0 * acc));
        }
        let mut s = TruncatedSeries::from_terms(
            b.into_iter().enumerate().map(|(k, c)| (k as i32, c)),
            self.order,
        );
        s.truncated = self.truncated;
        Ok(s)
    }

    pub fn pow(&self, k: u32) -> TruncatedSeries {
        let mut acc = TruncatedSeries::one(self.order);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// The coefficient of `ε^d`, i.e. the degree-`d` homogeneous part.
    pub fn homogeneous_part(&self, d: i32) -> Result<Rational> {
        if d > self.order {
            return Err(Error::InvalidArgument(format!(
                "degree {d} exceeds truncation order {}",
                self.order
            )));
        }
        Ok(self.coeff(d))
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// `[exponent, "p/q"]` pairs for serialization.
    pub fn to_pairs(&self) -> Vec<(i32, String)> {
        self.coeffs.iter().map(|(e, c)| (*e, format_rational(c))).collect()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        }
        for (k, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let coef = format_rational(&a);
            match *e {
                0 => write!(f, "{coef}")?,
                e if a.is_one() => write!(f, "ε^{e}")?,
                e => write!(f, "{coef}ε^{e}")?,
            }
        }
        write!(f, " + O(ε^{})", self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation_drops_high_terms() {
        let s = TruncatedSeries::from_terms([(0, integer(1)), (3, integer(2))], 2);
        assert!(s.is_truncated());
        assert_eq!(s.coeff(3), integer(0));
        let t = TruncatedSeries::from_terms([(-2, integer(1)), (1, integer(2))], 2);
        assert!(!t.is_truncated());
        assert!(s.mul(&t).is_truncated());
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let a = TruncatedSeries::from_terms([(1, integer(2)), (2, integer(1))], 4);
        let b = TruncatedSeries::from_terms([(1, integer(-2))], 4);
        let s = a.add(&b);
        assert_eq!(s.terms().count(), 1);
        assert_eq!(s.valuation(), Some(2));
    }

    #[test]
    fn inverse_of_geometric() {
        // 1 / (1 - ε) = Σ ε^k
        let s = TruncatedSeries::from_terms([(0, integer(1)), (1, integer(-1))], 5);
        let inv = s.inverse().unwrap();
        for k in 0..=5 {
            assert_eq!(inv.coeff(k), integer(1));
        }
        assert_eq!(s.mul(&inv), TruncatedSeries::one(5));
        assert!(TruncatedSeries::monomial(integer(1), 1, 3).inverse().is_err());
    }

    #[test]
    fn homogeneous_parts() {
        let s = TruncatedSeries::from_terms([(0, integer(1)), (1, integer(2)), (2, integer(3))], 4);
        assert_eq!(s.homogeneous_part(1).unwrap(), integer(2));
        assert_eq!(s.homogeneous_part(0).unwrap(), integer(1));
        assert!(s.homogeneous_part(5).is_err());
        let rebuilt = TruncatedSeries::from_terms((0..=4).map(|d| (d, s.homogeneous_part(d).unwrap())), 4);
        assert_eq!(rebuilt, s);
    }

    #[test]
    fn rational_format_roundtrip() {
        for r in [rational(3, 4), rational(-7, 2), integer(5), integer(0)] {
            assert_eq!(parse_rational(&format_rational(&r)), Some(r));
        }
        assert_eq!(format_rational(&rational(6, 3)), "2");
        assert_eq!(parse_rational("1/0"), None);
    }
}
