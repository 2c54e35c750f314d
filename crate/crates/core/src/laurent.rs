//! Laurent polynomials in `q` with integer coefficients.

use std::cmp::{max, min};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense Laurent polynomial `Σ coeffs[k] q^{low + k}`.
///
/// Always normalized: either `coeffs` is empty (zero) or its first and last
/// entries are nonzero. Arithmetic panics on `i64` overflow rather than wrap.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn monomial(coeff: i64, exp: i32) -> Self {
        if coeff == 0 {
            return LaurentPoly::zero();
        }
        LaurentPoly { low: exp, coeffs: vec![coeff] }
    }

    /// The variable `q`.
    pub fn q() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let terms: Vec<(i32, i64)> = terms.into_iter().collect();
        if terms.is_empty() {
            return LaurentPoly::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![0i64; (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        LaurentPoly::normalized(lo, coeffs)
    }

    fn normalized(mut low: i32, mut coeffs: Vec<i64>) -> Self {
        let lead = coeffs.iter().position(|&c| c != 0);
        match lead {
            None => LaurentPoly::zero(),
            Some(first) => {
                let last = coeffs.iter().rposition(|&c| c != 0).unwrap();
                coeffs.truncate(last + 1);
                coeffs.drain(..first);
                low += first as i32;
                LaurentPoly { low, coeffs }
            }
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(k, &c)| (self.low + k as i32, c))
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        if self.coeffs.is_empty() || exp < self.low {
            return 0;
        }
        self.coeffs.get((exp - self.low) as usize).copied().unwrap_or(0)
    }

    pub fn min_exp(&self) -> Option<i32> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i32> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    /// `Some((c, e))` when the polynomial is the single term `c q^e`.
    pub fn as_monomial(&self) -> Option<(i64, i32)> {
        (self.coeffs.len() == 1).then(|| (self.coeffs[0], self.low))
    }

    /// Units of `ℤ[q, q^{-1}]` are `±q^e`.
    pub fn is_unit(&self) -> bool {
        matches!(self.as_monomial(), Some((c, _)) if c == 1 || c == -1)
    }

    /// Integer power; negative exponents need a unit.
    pub fn pow(&self, k: i64) -> Result<LaurentPoly> {
        if k < 0 {
            let (c, e) = self
                .as_monomial()
                .filter(|(c, _)| *c == 1 || *c == -1)
                .ok_or_else(|| Error::InvalidArgument(format!("{self} is not invertible")))?;
            let sign = if (-k) % 2 == 1 { c } else { 1 };
            let exp = i32::try_from(-(e as i64) * -k)
                .map_err(|_| Error::Resource("exponent overflow".into()))?;
            return Ok(LaurentPoly::monomial(sign, exp));
        }
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: i64) -> LaurentPoly {
        if c == 0 {
            return LaurentPoly::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn shift(&self, e: i32) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    /// `self += c q^e · other`.
    pub fn add_scaled(&mut self, other: &LaurentPoly, c: i64, e: i32) {
        if other.is_zero() || c == 0 {
            return;
        }
        if self.is_zero() {
            *self = other.scale(c).shift(e);
            return;
        }
        let olo = other.low + e;
        let lo = min(self.low, olo);
        let hi = max(self.max_exp().unwrap(), other.max_exp().unwrap() + e);
        if lo < self.low {
            let pad = (self.low - lo) as usize;
            let mut v = vec![0i64; pad];
            v.extend_from_slice(&self.coeffs);
            self.coeffs = v;
            self.low = lo;
        }
        let need = (hi - self.low + 1) as usize;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, 0);
        }
        let off = (olo - self.low) as usize;
        for (k, &x) in other.coeffs.iter().enumerate() {
            self.coeffs[off + k] += c * x;
        }
        let fixed = LaurentPoly::normalized(self.low, std::mem::take(&mut self.coeffs));
        *self = fixed;
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let dlead = *d.coeffs.last().unwrap();
        let dlen = d.coeffs.len();
        if self.coeffs.len() < dlen {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![0i64; qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + dlen - 1];
            if top == 0 {
                continue;
            }
            if top % dlead != 0 {
                return None;
            }
            let c = top / dlead;
            quot[k] = c;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= c * dc;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(LaurentPoly::normalized(self.low - d.low, quot))
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Parses whitespace-separated `exponent:coefficient` pairs; `"0"` and
    /// the empty string are zero.
    pub fn parse_pairs(s: &str) -> Result<LaurentPoly> {
        let mut terms = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "0" {
                continue;
            }
            let (e, c) = tok.split_once(':').ok_or_else(|| {
                Error::Syntax { position: 0, message: format!("expected exponent:coefficient, got {tok:?}") }
            })?;
            let e: i32 = e.parse().map_err(|_| Error::Syntax {
                position: 0,
                message: format!("bad exponent in {tok:?}"),
            })?;
            let c: i64 = c.parse().map_err(|_| Error::Syntax {
                position: 0,
                message: format!("bad coefficient in {tok:?}"),
            })?;
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }

    pub fn to_pairs(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms().map(|(e, c)| format!("{e}:{c}")).collect::<Vec<_>>().join(" ")
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::constant(1)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let (sign, a) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (a, e) {
                (a, 0) => write!(f, "{a}")?,
                (1, 1) => write!(f, "q")?,
                (1, e) => write!(f, "q^{e}")?,
                (a, 1) => write!(f, "{a}q")?,
                (a, e) => write!(f, "{a}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, 1, 0);
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_scaled(&rhs, 1, 0);
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, -1, 0);
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_scaled(&rhs, -1, 0);
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled(rhs, 1, 0);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled(rhs, -1, 0);
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::normalized(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn normalization() {
        let a = p(&[(-1, 1), (1, 1)]);
        let b = p(&[(-1, -1), (2, 3)]);
        let s = &a + &b;
        assert_eq!(s, p(&[(1, 1), (2, 3)]));
        assert_eq!(s.min_exp(), Some(1));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplication() {
        let d = p(&[(-1, 1), (1, 1)]);
        assert_eq!(&d * &d, p(&[(-2, 1), (0, 2), (2, 1)]));
        assert_eq!(d.pow(2).unwrap(), &d * &d);
        assert_eq!(LaurentPoly::q().pow(-3).unwrap(), LaurentPoly::monomial(1, -3));
        assert_eq!(LaurentPoly::monomial(-1, 2).pow(-1).unwrap(), LaurentPoly::monomial(-1, -2));
        assert!(d.pow(-1).is_err());
    }

    #[test]
    fn exact_division() {
        let d = p(&[(-1, 1), (1, 1)]);
        let x = p(&[(-3, 2), (0, -1), (4, 7)]);
        assert_eq!((&x * &d).div_exact(&d), Some(x.clone()));
        assert_eq!(x.div_exact(&d), None);
        assert_eq!(LaurentPoly::zero().div_exact(&d), Some(LaurentPoly::zero()));
    }

    #[test]
    fn display_and_pairs() {
        let x = p(&[(-1, -1), (0, 2), (3, 1)]);
        assert_eq!(x.to_string(), "q^3 + 2 - q^-1");
        assert_eq!(LaurentPoly::parse_pairs(&x.to_pairs()).unwrap(), x);
        assert_eq!(LaurentPoly::parse_pairs("0").unwrap(), LaurentPoly::zero());
        assert!(LaurentPoly::parse_pairs("1-2").is_err());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i32..6, -5i64..5), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!((&a * &b).at_one(), a.at_one() * b.at_one());
            if !b.is_zero() {
                prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
            }
        }
    }
}
