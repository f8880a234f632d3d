//! Sparse one-variable Laurent polynomials with integer coefficients.
//!
//! This is the value type for the knot invariants: the Kauffman bracket and
//! the normalized Jones polynomial live in the variable `A`, the Alexander
//! polynomial in `t`. All arithmetic is exact; zero coefficients are never
//! stored, so equality of the coefficient maps is equality of polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyParseError {
    #[error("malformed term `{0}`: expected `coeff:exp`")]
    MalformedTerm(String),
    #[error("repeated exponent {0}")]
    RepeatedExponent(i64),
}

/// Integer-coefficient Laurent polynomial in one variable.
///
/// Kept in canonical form: the exponent map contains no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Laurent {
    terms: BTreeMap<i64, i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Laurent::monomial(1, 0)
    }

    /// The polynomial `coeff * x^exp`.
    pub fn monomial(coeff: i64, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        Laurent { terms }
    }

    pub fn constant(c: i64) -> Self {
        Laurent::monomial(c, 0)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(coeff_exp: I) -> Self {
        let mut p = Laurent::zero();
        for (c, e) in coeff_exp {
            p.add_term(c, e);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0) == Some(&1)
    }

    pub fn add_term(&mut self, coeff: i64, exp: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Terms as `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Width of the exponent range; 0 for monomials and the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Multiply by `coeff * x^exp` in place.
    pub fn scale(&mut self, coeff: i64, exp: i64) {
        if coeff == 0 {
            self.terms.clear();
            return;
        }
        let old = std::mem::take(&mut self.terms);
        for (e, c) in old {
            self.terms.insert(e + exp, c * coeff);
        }
    }

    pub fn scaled(&self, coeff: i64, exp: i64) -> Self {
        let mut p = self.clone();
        p.scale(coeff, exp);
        p
    }

    /// Substitute `x -> x^-1` (exponent negation). This is the mirror
    /// transform for both the bracket variable and the Alexander variable.
    pub fn invert_variable(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// True when the polynomial is fixed by `x -> x^-1`.
    pub fn is_palindromic(&self) -> bool {
        *self == self.invert_variable()
    }

    /// Evaluate at an integer point. Exponents must be non-negative unless
    /// `x = ±1`. Used only for small sanity checks, hence i128.
    pub fn eval_unit(&self, x: i64) -> i128 {
        assert!(x == 1 || x == -1, "eval_unit only supports x = ±1");
        self.terms
            .iter()
            .map(|(&e, &c)| {
                let sign = if x == -1 && e.rem_euclid(2) == 1 { -1i128 } else { 1 };
                sign * c as i128
            })
            .sum()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Laurent::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division: returns `Some(q)` with `self == q * rhs`, or `None`
    /// when `rhs` does not divide `self` over the integers.
    pub fn div_exact(&self, rhs: &Laurent) -> Option<Laurent> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        // shift both to ordinary polynomials and long-divide
        let (slo, shi) = (self.min_exp().unwrap(), self.max_exp().unwrap());
        let (rlo, rhi) = (rhs.min_exp().unwrap(), rhs.max_exp().unwrap());
        let deg_s = (shi - slo) as usize;
        let deg_r = (rhi - rlo) as usize;
        if deg_s < deg_r {
            return None;
        }
        let mut num = vec![0i64; deg_s + 1];
        for (e, c) in self.iter() {
            num[(e - slo) as usize] = c;
        }
        let mut den = vec![0i64; deg_r + 1];
        for (e, c) in rhs.iter() {
            den[(e - rlo) as usize] = c;
        }
        let lead = den[deg_r];
        let mut quo = vec![0i64; deg_s - deg_r + 1];
        for k in (0..quo.len()).rev() {
            let c = num[k + deg_r];
            if c == 0 {
                continue;
            }
            if c % lead != 0 {
                return None;
            }
            let q = c / lead;
            quo[k] = q;
            for (j, &d) in den.iter().enumerate() {
                num[k + j] -= q * d;
            }
        }
        if num.iter().any(|&c| c != 0) {
            return None;
        }
        Some(Laurent::from_terms(
            quo.into_iter().enumerate().map(|(k, c)| (c, k as i64 + slo - rlo)),
        ))
    }

    /// Render in the sparse text form `coeff:exp,...` sorted by exponent,
    /// e.g. `-1:-16,1:-12,1:-4`. The zero polynomial renders as `0`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(e, c)| format!("{c}:{e}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parse the `to_text` form. Accepts `0` and the empty string as zero.
    pub fn parse_text(s: &str) -> Result<Self, PolyParseError> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Laurent::zero());
        }
        let mut terms = BTreeMap::new();
        for part in s.split(',') {
            let (c, e) = part
                .split_once(':')
                .ok_or_else(|| PolyParseError::MalformedTerm(part.to_string()))?;
            let c: i64 = c.trim().parse().map_err(|_| PolyParseError::MalformedTerm(part.to_string()))?;
            let e: i64 = e.trim().parse().map_err(|_| PolyParseError::MalformedTerm(part.to_string()))?;
            if terms.insert(e, c).is_some() {
                return Err(PolyParseError::RepeatedExponent(e));
            }
        }
        terms.retain(|_, c| *c != 0);
        Ok(Laurent { terms })
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({})", self.to_text())
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl TryFrom<String> for Laurent {
    type Error = PolyParseError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        Laurent::parse_text(&s)
    }
}

impl From<Laurent> for String {
    fn from(p: Laurent) -> String {
        p.to_text()
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in rhs.iter() {
            out.add_term(c, e);
        }
        out
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        for (e, c) in rhs.iter() {
            self.add_term(c, e);
        }
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in rhs.iter() {
            out.add_term(-c, e);
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scaled(-1, 0)
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in self.iter() {
            for (e2, c2) in rhs.iter() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_laurent() -> impl Strategy<Value = Laurent> {
        proptest::collection::vec((-6i64..=6, -20i64..=20), 0..6)
            .prop_map(Laurent::from_terms)
    }

    #[test]
    fn text_round_trip() {
        let p = Laurent::from_terms([(-1, -16), (1, -12), (1, -4)]);
        assert_eq!(p.to_text(), "-1:-16,1:-12,1:-4");
        assert_eq!(Laurent::parse_text(&p.to_text()).unwrap(), p);
        assert_eq!(Laurent::parse_text("0").unwrap(), Laurent::zero());
        assert_eq!(Laurent::zero().to_text(), "0");
    }

    #[test]
    fn parse_rejects_junk() {
        assert!(Laurent::parse_text("1:2,3").is_err());
        assert!(Laurent::parse_text("1:2,1:2").is_err());
    }

    #[test]
    fn mirror_is_exponent_negation() {
        let p = Laurent::from_terms([(1, -1), (2, 3)]);
        assert_eq!(p.invert_variable(), Laurent::from_terms([(1, 1), (2, -3)]));
        assert!(Laurent::from_terms([(1, -2), (3, 0), (1, 2)]).is_palindromic());
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            // commutativity and associativity
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            // distributivity
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            // units and inverses
            prop_assert_eq!(&a * &Laurent::one(), a.clone());
            prop_assert_eq!(&a + &Laurent::zero(), a.clone());
            prop_assert_eq!(&a - &a, Laurent::zero());
        }

        #[test]
        fn text_form_round_trips(a in arb_laurent()) {
            prop_assert_eq!(Laurent::parse_text(&a.to_text()).unwrap(), a);
        }

        #[test]
        fn variable_inversion_is_ring_map(a in arb_laurent(), b in arb_laurent()) {
            prop_assert_eq!((&a * &b).invert_variable(),
                            &a.invert_variable() * &b.invert_variable());
            prop_assert_eq!(a.invert_variable().invert_variable(), a);
        }

        #[test]
        fn division_inverts_multiplication(a in arb_laurent(), b in arb_laurent()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b), Some(a));
        }
    }

    #[test]
    fn inexact_division_fails() {
        let a = Laurent::from_terms([(1, 0), (1, 1)]); // 1 + x
        let b = Laurent::from_terms([(1, 0), (1, 2)]); // 1 + x^2
        assert_eq!(b.div_exact(&a), None);
        assert_eq!(Laurent::constant(3).div_exact(&Laurent::constant(2)), None);
    }
}
