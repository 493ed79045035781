//! Signed square roots of rationals and finite sums of rational multiples of
//! square roots.
//!
//! Structure constants are square roots of rationals. Every curvature value is
//! a sum of products of two of them, so the field `Q(√d₁, √d₂, …)` represented
//! by [`Surd`] holds all of them exactly. Products of monomials never need
//! integer factorisation: for squarefree `d₁`, `d₂` with `g = gcd(d₁, d₂)`,
//! `√d₁·√d₂ = g·√(d₁d₂/g²)` and `d₁d₂/g²` is again squarefree.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::rational::{fmt_q, to_f64, Q};

/// Splits a positive integer into `(s, d)` with `n = s²·d` and `d` squarefree.
pub fn squarefree_split(n: u128) -> (u128, u128) {
    assert!(n > 0, "squarefree_split of zero");
    let mut rest = n;
    let mut s = 1u128;
    let mut d = 1u128;
    let mut p = 2u128;
    while p * p <= rest {
        let mut e = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            d *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    d *= rest;
    (s, d)
}

/// `sign · √radicand` with a nonnegative rational radicand.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedSqrt {
    sign: i8,
    radicand: Q,
}

impl SignedSqrt {
    pub fn zero() -> Self {
        SignedSqrt { sign: 0, radicand: Q::zero() }
    }

    pub fn new(sign: i8, radicand: Q) -> Self {
        assert!(!radicand.is_negative(), "negative radicand");
        if sign == 0 || radicand.is_zero() {
            return Self::zero();
        }
        SignedSqrt { sign: sign.signum(), radicand }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn radicand(&self) -> &Q {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// The square of the represented value, always rational.
    pub fn square(&self) -> Q {
        self.radicand
    }

    pub fn neg(&self) -> Self {
        SignedSqrt { sign: -self.sign, radicand: self.radicand }
    }

    /// Whether the represented value is itself a rational number.
    pub fn is_rational(&self) -> bool {
        if self.sign == 0 {
            return true;
        }
        let (_, dn) = squarefree_split(*self.radicand.numer() as u128);
        let (_, dd) = squarefree_split(*self.radicand.denom() as u128);
        dn == 1 && dd == 1
    }

    pub fn to_surd(&self) -> Surd {
        if self.sign == 0 {
            return Surd::zero();
        }
        // √(a/b) = √(ab)/b
        let a = *self.radicand.numer();
        let b = *self.radicand.denom();
        let (s, d) = squarefree_split((a * b) as u128);
        Surd::monomial(Q::new(self.sign as i128 * s as i128, b), d as u64)
    }

    pub fn to_f64(&self) -> f64 {
        self.sign as f64 * to_f64(&self.radicand).sqrt()
    }
}

impl Mul for &SignedSqrt {
    type Output = SignedSqrt;
    fn mul(self, rhs: &SignedSqrt) -> SignedSqrt {
        SignedSqrt::new(self.sign * rhs.sign, self.radicand * rhs.radicand)
    }
}

impl fmt::Display for SignedSqrt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => write!(f, "0"),
            s => write!(f, "{}sqrt({})", if s < 0 { "-" } else { "" }, fmt_q(&self.radicand)),
        }
    }
}

/// Finite sum `Σ cᵢ √dᵢ` with rational `cᵢ ≠ 0` and distinct squarefree `dᵢ`,
/// sorted by `dᵢ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Surd {
    terms: Vec<(u64, Q)>,
}

impl Surd {
    pub fn zero() -> Self {
        Surd { terms: Vec::new() }
    }

    pub fn from_q(c: Q) -> Self {
        Self::monomial(c, 1)
    }

    /// `c·√d`; `d` must be squarefree.
    pub fn monomial(c: Q, d: u64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Surd { terms: vec![(d, c)] }
        }
    }

    pub fn terms(&self) -> &[(u64, Q)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.iter().all(|(d, _)| *d == 1)
    }

    pub fn as_rational(&self) -> Option<Q> {
        match self.terms.as_slice() {
            [] => Some(Q::zero()),
            [(1, c)] => Some(*c),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms.iter().map(|(d, c)| to_f64(c) * (*d as f64).sqrt()).sum()
    }

    pub fn scale(&self, k: &Q) -> Surd {
        if k.is_zero() {
            return Surd::zero();
        }
        Surd { terms: self.terms.iter().map(|(d, c)| (*d, c * k)).collect() }
    }

    /// Adds `c·√d` in place.
    pub fn add_monomial(&mut self, c: Q, d: u64) {
        if c.is_zero() {
            return;
        }
        match self.terms.binary_search_by_key(&d, |(r, _)| *r) {
            Ok(i) => {
                let sum = self.terms[i].1 + c;
                if sum.is_zero() {
                    self.terms.remove(i);
                } else {
                    self.terms[i].1 = sum;
                }
            }
            Err(i) => self.terms.insert(i, (d, c)),
        }
    }

    /// Product of two monomials `(c₁√d₁)(c₂√d₂)` as a monomial.
    pub fn mono_mul(c1: Q, d1: u64, c2: Q, d2: u64) -> (Q, u64) {
        let g = d1.gcd(&d2);
        let d = (d1 / g) * (d2 / g);
        (c1 * c2 * Q::from_integer(g as i128), d)
    }

    pub fn abs_f64(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl Add for &Surd {
    type Output = Surd;
    fn add(self, rhs: &Surd) -> Surd {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Surd> for Surd {
    fn add_assign(&mut self, rhs: &Surd) {
        for (d, c) in &rhs.terms {
            self.add_monomial(*c, *d);
        }
    }
}

impl Sub for &Surd {
    type Output = Surd;
    fn sub(self, rhs: &Surd) -> Surd {
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_monomial(-c, *d);
        }
        out
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd { terms: self.terms.iter().map(|(d, c)| (*d, -c)).collect() }
    }
}

impl Mul for &Surd {
    type Output = Surd;
    fn mul(self, rhs: &Surd) -> Surd {
        let mut out = Surd::zero();
        for (d1, c1) in &self.terms {
            for (d2, c2) in &rhs.terms {
                let (c, d) = Surd::mono_mul(*c1, *d1, *c2, *d2);
                out.add_monomial(c, d);
            }
        }
        out
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "{}", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = fmt_q(&c.abs());
            if *d == 1 {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*sqrt({d})")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};
    use proptest::prelude::*;

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_split(1), (1, 1));
        assert_eq!(squarefree_split(12), (2, 3));
        assert_eq!(squarefree_split(72), (6, 2));
        assert_eq!(squarefree_split(49), (7, 1));
        assert_eq!(squarefree_split(30), (1, 30));
    }

    #[test]
    fn signed_sqrt_rationality() {
        assert!(SignedSqrt::new(1, q(1, 4)).is_rational());
        assert!(!SignedSqrt::new(1, q(1, 2)).is_rational());
        assert!(SignedSqrt::zero().is_rational());
        let a = SignedSqrt::new(-1, q(1, 6));
        let b = SignedSqrt::new(1, q(3, 2));
        let p = &a * &b;
        assert_eq!(p.sign(), -1);
        assert_eq!(p.square(), q(1, 4));
        assert!(p.is_rational());
        assert_eq!(p.to_surd().as_rational(), Some(q(-1, 2)));
    }

    #[test]
    fn surd_display() {
        let mut s = Surd::from_q(q(3, 2));
        s.add_monomial(q(-1, 4), 2);
        assert_eq!(s.to_string(), "3/2-1/4*sqrt(2)");
        assert_eq!(Surd::zero().to_string(), "0");
    }

    #[test]
    fn cancellation_leaves_zero() {
        let a = SignedSqrt::new(1, q(2, 3)).to_surd();
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(d.as_rational(), Some(qi(0)));
    }

    proptest! {
        #[test]
        fn surd_product_matches_float(a in 1i128..60, b in 1i128..60, c in 1i128..60, d in 1i128..60, s1 in prop::bool::ANY) {
            let x = SignedSqrt::new(if s1 { 1 } else { -1 }, q(a, b));
            let y = SignedSqrt::new(1, q(c, d));
            let exact = &x.to_surd() * &y.to_surd();
            let float = x.to_f64() * y.to_f64();
            prop_assert!((exact.to_f64() - float).abs() <= 1e-12 * float.abs().max(1.0));
            prop_assert_eq!(exact, (&x * &y).to_surd());
        }

        #[test]
        fn square_of_surd_is_radicand(a in 1i128..200, b in 1i128..200) {
            let x = SignedSqrt::new(1, q(a, b)).to_surd();
            prop_assert_eq!((&x * &x).as_rational(), Some(q(a, b)));
        }
    }
}
