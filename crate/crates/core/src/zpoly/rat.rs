use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{gcd_q, IntPoly};
use crate::{Error, Result};

/// Reduced fraction with positive denominator.
pub type RatScalar = BigRational;

/// Polynomial with rational coefficients, ascending order, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<RatScalar>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<RatScalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: RatScalar) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[RatScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lc(&self) -> &RatScalar {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn scale(&self, k: &RatScalar) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = RatScalar::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-RatScalar::one()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![RatScalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let inv = d.lc().recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![RatScalar::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let t = &r[k + dd] * &inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &t * dc;
            }
            q[k] = t;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Least common multiple of all coefficient denominators (1 for zero).
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// `k·self` for an integer `k` that clears every denominator.
    pub fn to_int_scaled(&self, k: &BigInt) -> IntPoly {
        let kq = RatScalar::from_integer(k.clone());
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let v = c * &kq;
                    assert!(v.is_integer(), "scale does not clear denominators");
                    v.to_integer()
                })
                .collect(),
        )
    }

    /// Scale by the denominator lcm, giving an integer polynomial.
    pub fn clear_denominators(&self) -> IntPoly {
        self.to_int_scaled(&self.denominator_lcm())
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        RatPoly::new(
            p.coeffs()
                .iter()
                .map(|c| RatScalar::from_integer(c.clone()))
                .collect(),
        )
    }
}

/// Extended Euclid over ℚ: returns `(A, B, g)` with `a·A + b·B = g`, where
/// `g = gcd_q(a, b)`; when the gcd is constant, `g = 1`.
pub fn xeuclid_q(a: &IntPoly, b: &IntPoly) -> Result<(RatPoly, RatPoly, IntPoly)> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let one = RatScalar::one();
    let (mut r0, mut r1) = (RatPoly::from(a), RatPoly::from(b));
    let (mut s0, mut s1) = (RatPoly::constant(one.clone()), RatPoly::zero());
    let (mut t0, mut t1) = (RatPoly::zero(), RatPoly::constant(one));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let g = gcd_q(a, b);
    // r0 is a rational multiple of g; rescale so the identity hits g exactly.
    let factor = RatScalar::from_integer(g.lc()) / r0.lc();
    Ok((s0.scale(&factor), t0.scale(&factor), g))
}

/// Integral Bézout identity `R·A₁ + S·B₁ = λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub lambda: BigInt,
    pub a1: IntPoly,
    pub b1: IntPoly,
}

/// Bound `λ` with `gcd(R(t), S(t)) | λ` for every integer `t`.
///
/// `λ` is the lcm of the denominators of the rational Bézout coefficients, so
/// it clears them; it is not necessarily the least such bound.
pub fn bezout_bound(r: &IntPoly, s: &IntPoly) -> Result<BezoutCertificate> {
    let (a, b, g) = xeuclid_q(r, s)?;
    if !g.is_constant() {
        return Err(Error::CommonRoot);
    }
    let lambda = a.denominator_lcm().lcm(&b.denominator_lcm());
    Ok(BezoutCertificate {
        a1: a.to_int_scaled(&lambda),
        b1: b.to_int_scaled(&lambda),
        lambda,
    })
}
