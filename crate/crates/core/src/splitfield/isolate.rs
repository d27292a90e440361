//! Certified isolation of the complex roots of a squarefree integer polynomial.
//!
//! Approximations come from Aberth's simultaneous iteration in rounded dyadic
//! arithmetic. They are then certified exactly: with `z_1..z_n` distinct and
//! `r_i = n·|f(z_i)| / (|lc f|·∏_{j≠i} |z_i - z_j|)`, every root of `f` lies in
//! the union of the disks `D(z_i, r_i)` and each connected component of `m`
//! disks holds exactly `m` roots. Pairwise disjoint disks therefore hold one
//! root each.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::dyadic::{sqrt_ratio_upper, CDyadic, Dyadic};
use crate::zpoly::IntPoly;
use crate::{Error, Result};

/// Closed complex disk with dyadic center and radius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disk {
    pub center: CDyadic,
    pub radius: Dyadic,
}

impl Disk {
    pub fn new(center: CDyadic, radius: Dyadic) -> Self {
        Disk { center, radius }
    }

    /// True unless the disks are certified disjoint.
    pub fn overlaps(&self, o: &Disk) -> bool {
        let r = self.radius.add(&o.radius);
        self.center.sub(&o.center).norm_sqr() <= r.mul(&r)
    }

    /// True when `o` lies entirely inside `self`.
    pub fn contains_disk(&self, o: &Disk) -> bool {
        let slack = self.radius.sub(&o.radius);
        !slack.is_negative() && self.center.sub(&o.center).norm_sqr() <= slack.mul(&slack)
    }

    /// Disk containing `x + k·y` for all `x ∈ self`, `y ∈ o`.
    pub fn add_scaled(&self, o: &Disk, k: &BigInt) -> Disk {
        Disk {
            center: self.center.add(&o.center.mul_int(k)),
            radius: self.radius.add(&o.radius.mul_int(&k.abs())),
        }
    }

    pub fn scaled(&self, k: &BigInt) -> Disk {
        Disk {
            center: self.center.mul_int(k),
            radius: self.radius.mul_int(&k.abs()),
        }
    }

    pub fn point(center: CDyadic) -> Disk {
        Disk {
            center,
            radius: Dyadic::zero(),
        }
    }
}

/// Exact value of `f` at a dyadic point.
pub(crate) fn eval_exact(f: &IntPoly, z: &CDyadic) -> CDyadic {
    let mut acc = CDyadic::zero();
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(z).add(&CDyadic::real(Dyadic::from_int(c)));
    }
    acc
}

/// False only when `f` is certified nonzero on the whole disk.
///
/// Uses `|f(z) - f(c)| ≤ F(U + r) - F(U)` where `F` has the absolute values of
/// the coefficients of `f` and `U ≥ |c|`.
pub fn may_vanish(f: &IntPoly, d: &Disk) -> bool {
    let fc = eval_exact(f, &d.center);
    if fc.is_zero() {
        return true;
    }
    let u = d.center.norm_sqr().sqrt_upper(64);
    let big_f = |t: &Dyadic| {
        f.coeffs()
            .iter()
            .rev()
            .fold(Dyadic::zero(), |acc, c| acc.mul(t).add(&Dyadic::from_int(&c.abs())))
    };
    let bound = big_f(&u.add(&d.radius)).sub(&big_f(&u));
    fc.norm_sqr() <= bound.mul(&bound)
}

fn start_points(f: &IntPoly) -> Vec<CDyadic> {
    let n = f.degree().expect("nonconstant");
    let lc = f.lc().to_f64().unwrap_or(f64::MAX).abs();
    let ratio = f
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::MAX).abs() / lc)
        .fold(0.0f64, f64::max)
        .min(1e300);
    let radius = 1.0 + ratio;
    (0..n)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            CDyadic::from_f64(radius * t.cos(), radius * t.sin()).round(53)
        })
        .collect()
}

fn one() -> CDyadic {
    CDyadic::real(Dyadic::from_i64(1))
}

/// Runs Aberth steps at `prec` bits until the corrections fall below `2^-prec`
/// (relative to `max(1, |z|)`) or an iteration budget is spent.
fn aberth(f: &IntPoly, zs: &mut [CDyadic], prec: u32) {
    let n = zs.len();
    let wp = prec + 16;
    let df = f.derivative();
    let coeffs: Vec<CDyadic> = f.coeffs().iter().map(|c| CDyadic::real(Dyadic::from_int(c))).collect();
    let dcoeffs: Vec<CDyadic> = df.coeffs().iter().map(|c| CDyadic::real(Dyadic::from_int(c))).collect();
    let horner = |cs: &[CDyadic], z: &CDyadic| {
        cs.iter()
            .rev()
            .fold(CDyadic::zero(), |acc, c| acc.mul(z).add(c).round(wp))
    };
    let tol = -2 * (prec as i64 + 2);
    let nudge = Dyadic::new(BigInt::from(1), -(prec as i64 / 2));
    for _ in 0..(200 + 20 * n) {
        let mut converged = true;
        for i in 0..n {
            let z = zs[i].clone();
            let fz = horner(&coeffs, &z);
            if fz.is_zero() {
                continue;
            }
            let dfz = horner(&dcoeffs, &z);
            let mut s = CDyadic::zero();
            let mut clash = false;
            for (j, zj) in zs.iter().enumerate() {
                if j == i {
                    continue;
                }
                let diff = z.sub(zj);
                if diff.is_zero() {
                    clash = true;
                    break;
                }
                s = s.add(&one().div_approx(&diff, wp));
            }
            if clash {
                zs[i] = z.add(&CDyadic::new(nudge.clone(), nudge.mul_int(&BigInt::from(i + 1))));
                converged = false;
                continue;
            }
            let denom = dfz.div_approx(&fz, wp).sub(&s);
            if denom.is_zero() {
                zs[i] = z.add(&CDyadic::new(nudge.clone(), nudge.clone()));
                converged = false;
                continue;
            }
            let w = one().div_approx(&denom, wp);
            let scale = z.norm_sqr().msb().max(1);
            if w.norm_sqr().msb() > tol + scale {
                converged = false;
            }
            zs[i] = z.sub(&w).round(wp);
        }
        if converged {
            break;
        }
    }
}

/// Exact ratio `a / b` of dyadics as a pair of integers.
fn ratio(a: &Dyadic, b: &Dyadic) -> (BigInt, BigInt) {
    let e = a.exponent() - b.exponent();
    if e >= 0 {
        (a.mantissa() << e as usize, b.mantissa().clone())
    } else {
        (a.mantissa().clone(), b.mantissa() << (-e) as usize)
    }
}

/// Certified disks around `zs`, or `None` when they are not yet disjoint or
/// some radius exceeds `2^-(prec/2)`.
fn certify(f: &IntPoly, zs: &[CDyadic], prec: u32) -> Option<Vec<Disk>> {
    let n = zs.len();
    let lc = Dyadic::from_int(&f.lc());
    let n2 = BigInt::from(n * n);
    let max_radius = Dyadic::new(BigInt::from(1), -(prec as i64 / 2));
    let mut disks = Vec::with_capacity(n);
    for (i, z) in zs.iter().enumerate() {
        let num = eval_exact(f, z).norm_sqr().mul_int(&n2);
        let mut den = lc.mul(&lc);
        for (j, zj) in zs.iter().enumerate() {
            if j != i {
                den = den.mul(&z.sub(zj).norm_sqr());
            }
        }
        if den.is_zero() {
            return None;
        }
        let radius = if num.is_zero() {
            Dyadic::zero()
        } else {
            let (a, b) = ratio(&num, &den);
            let (a, b) = if b.is_negative() { (-a, -b) } else { (a, b) };
            sqrt_ratio_upper(&a, &b, prec + 8)
        };
        if radius > max_radius {
            return None;
        }
        disks.push(Disk::new(z.clone(), radius));
    }
    for i in 0..n {
        for j in i + 1..n {
            if disks[i].overlaps(&disks[j]) {
                return None;
            }
        }
    }
    Some(disks)
}

/// Certified disjoint disks, one per root of the squarefree `f`, with radii at
/// most `2^-(prec/2)`. Precision doubles on failure up to `cap`.
///
/// Returns the disks and the precision at which they were certified.
pub(crate) fn isolate_squarefree(
    f: &IntPoly,
    prec: u32,
    cap: u32,
    warm: Option<Vec<CDyadic>>,
) -> Result<(Vec<Disk>, u32)> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let mut zs = match warm {
        Some(w) if w.len() == n => w,
        _ => start_points(f),
    };
    let mut p = prec.max(8);
    loop {
        aberth(f, &mut zs, p);
        if let Some(disks) = certify(f, &zs, p) {
            return Ok((disks, p));
        }
        if p >= cap {
            return Err(Error::Isolation(format!(
                "roots of {f} not separated at the precision cap of {cap} bits"
            )));
        }
        p = (p * 2).min(cap);
    }
}

/// Sort key giving the canonical (real part, imaginary part) order. Real parts
/// are compared on a grid of `2^-(prec/4)` so that conjugates, whose computed
/// real parts differ only by rounding, are ordered by imaginary part.
pub(crate) fn order_key(z: &CDyadic, prec: u32) -> (BigInt, Dyadic) {
    let q = (prec / 4) as i64;
    let re = &z.re;
    let shift = re.exponent() + q;
    let cell = if re.is_zero() {
        BigInt::zero()
    } else if shift >= 0 {
        re.mantissa() << shift as usize
    } else {
        re.mantissa() >> (-shift) as usize
    };
    (cell, z.im.clone())
}
