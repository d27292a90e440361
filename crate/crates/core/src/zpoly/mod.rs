//! Dense univariate polynomials over ℤ (and ℚ for Bézout identities).
//!
//! Coefficients are stored in ascending order: `coeffs[i]` multiplies `X^i`.
//! The zero polynomial is the empty vector and has no degree.

mod rat;
mod resultant;
mod text;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use rat::{bezout_bound, xeuclid_q, BezoutCertificate, RatPoly, RatScalar};
pub use resultant::{
    discriminant, gcd_q, resultant, resultant_linear_sub, resultant_linear_sub_sylvester,
    sylvester_resultant,
};

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `X`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `X - r`.
    pub fn linear_root(r: &BigInt) -> Self {
        Self::new(vec![-r, BigInt::one()])
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0. Only for callers that
    /// have already excluded zero.
    pub(crate) fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn lc_ref(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Divide every coefficient by `k`, which must divide all of them.
    pub fn div_scalar_exact(&self, k: &BigInt) -> Self {
        debug_assert!(self.coeffs.iter().all(|c| (c % k).is_zero()));
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / k).collect(),
        }
    }

    /// Multiply by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Largest absolute coefficient (0 for the zero polynomial).
    pub fn max_norm(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    /// gcd of the coefficients, always positive.
    pub fn content(&self) -> Result<BigInt> {
        if self.is_zero() {
            return Err(Error::ZeroContent);
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        Ok(g)
    }

    /// `self / content(self)` with a positive leading coefficient.
    pub fn primitive_part(&self) -> Result<Self> {
        let c = self.content()?;
        let c = if self.lc().is_negative() { -c } else { c };
        Ok(self.div_scalar_exact(&c))
    }

    /// Flip the sign so the leading coefficient is positive.
    pub fn normalize_sign(self) -> Self {
        if self.lc().is_negative() {
            -self
        } else {
            self
        }
    }

    /// Pseudo-division: returns `(q, r)` with `lc(d)^(deg a - deg d + 1) · a = q·d + r`.
    pub fn pseudo_div_rem(&self, d: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(!d.is_zero(), "pseudo-division by zero polynomial");
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return (IntPoly::zero(), self.clone());
        }
        let lc = d.lc();
        let steps = self.deg() - dd + 1;
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); steps];
        // Classic pseudo-division, scaling the remainder before each step.
        for k in (0..steps).rev() {
            let top = r[k + dd].clone();
            for c in q.iter_mut() {
                *c *= &lc;
            }
            for c in r.iter_mut() {
                *c *= &lc;
            }
            q[k] += &top;
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &top * dc;
            }
            debug_assert!(r[k + dd].is_zero());
            r.truncate(k + dd);
        }
        (IntPoly::new(q), IntPoly::new(r))
    }

    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        self.pseudo_div_rem(d).1
    }

    /// Exact division in `ℤ[X]`: `Some(q)` iff `self = q·d` with `q` integral.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = d.deg();
        if self.deg() < dd {
            return None;
        }
        let lc = d.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); self.deg() - dd + 1];
        for k in (0..q.len()).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, rem) = top.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &qk * dc;
            }
            q[k] = qk;
        }
        if r.iter().all(Zero::is_zero) {
            Some(IntPoly::new(q))
        } else {
            None
        }
    }

    /// True iff `d` divides `self` in `ℚ[X]`.
    pub fn divisible_over_q(&self, d: &IntPoly) -> bool {
        match d.primitive_part() {
            Ok(pd) => self.div_exact(&pd).is_some(),
            Err(_) => self.is_zero(),
        }
    }

    /// `X ↦ X + a`, i.e. the Taylor shift `f(X + a)`.
    pub fn taylor_shift(&self, a: &BigInt) -> IntPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * a;
                c[j] += t;
            }
        }
        IntPoly::new(c)
    }

    /// `f(k·X)`.
    pub fn scale_arg(&self, k: &BigInt) -> IntPoly {
        let mut pw = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw *= k;
        }
        IntPoly::new(out)
    }

    /// Primitive part of `θ^deg(g)·g(X/θ)`: roots are scaled by `θ`, multiplicities kept.
    pub fn scale_roots(&self, theta: &BigInt) -> Result<IntPoly> {
        if theta.is_zero() {
            return Err(Error::ZeroScale);
        }
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        self.compose_scaled_signed(theta).primitive_part()
    }

    /// Exactly `N^d·φ(X/N)` with `d = deg φ`; no content is removed.
    pub fn compose_scaled(&self, n: &BigInt) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !n.is_positive() {
            return Err(Error::ZeroScale);
        }
        Ok(self.compose_scaled_signed(n))
    }

    fn compose_scaled_signed(&self, n: &BigInt) -> IntPoly {
        let d = self.deg();
        let mut pw = BigInt::one();
        let mut out = vec![BigInt::zero(); d + 1];
        for i in (0..=d).rev() {
            out[i] = &self.coeffs[i] * &pw;
            pw *= n;
        }
        IntPoly::new(out)
    }

    /// `primitive_part(a / gcd_q(a, a'))`.
    pub fn squarefree_part(&self) -> Result<IntPoly> {
        if self.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        let g = gcd_q(self, &self.derivative());
        let q = self
            .primitive_part()?
            .div_exact(&g)
            .expect("gcd with derivative divides a primitive polynomial");
        q.primitive_part()
    }

    /// Canonical ordering: by degree, then coefficients from the top down.
    pub fn canonical_cmp(&self, other: &IntPoly) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            self.coeffs
                .iter()
                .rev()
                .zip(other.coeffs.iter().rev())
                .map(|(a, b)| a.cmp(b))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * &p)
    }
}
