//! Exact dyadic rationals `m·2^e` and complex numbers built from them.
//!
//! Ring operations are exact. Rounding happens only where a caller asks for
//! it ([`Dyadic::round`], [`Dyadic::div_approx`]), so rigorous error bounds can
//! be computed from exact values and one-sided square roots.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, Default)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        let mut d = Dyadic { mant, exp };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic::default()
    }

    pub fn from_int(n: &BigInt) -> Self {
        Dyadic::new(n.clone(), 0)
    }

    pub fn from_i64(n: i64) -> Self {
        Dyadic::new(BigInt::from(n), 0)
    }

    /// Exact conversion of a finite double.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "non-finite value");
        if x == 0.0 {
            return Dyadic::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        Dyadic::new(BigInt::from(m) * sign, e)
    }

    fn normalize(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz;
            self.exp += tz as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    /// Position of the most significant bit: `2^(msb-1) ≤ |x| < 2^msb`.
    pub fn msb(&self) -> i64 {
        self.mant.bits() as i64 + self.exp
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    pub fn neg(&self) -> Self {
        Dyadic {
            mant: -&self.mant,
            exp: self.exp,
        }
    }

    fn aligned(a: &Dyadic, b: &Dyadic) -> (BigInt, BigInt, i64) {
        let e = a.exp.min(b.exp);
        (
            &a.mant << (a.exp - e) as usize,
            &b.mant << (b.exp - e) as usize,
            e,
        )
    }

    pub fn add(&self, o: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let (a, b, e) = Self::aligned(self, o);
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, o: &Dyadic) -> Dyadic {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mant * &o.mant, self.exp + o.exp)
    }

    pub fn mul_int(&self, k: &BigInt) -> Dyadic {
        Dyadic::new(&self.mant * k, self.exp)
    }

    pub fn shl(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            mant: self.mant.clone(),
            exp: self.exp + k,
        }
    }

    /// Round to at most `prec` significant bits (nearest).
    pub fn round(&self, prec: u32) -> Dyadic {
        let bits = self.mant.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let drop = bits - prec as u64;
        let neg = self.mant.is_negative();
        let mag = self.mant.abs();
        let half = BigInt::one() << (drop - 1) as usize;
        let rounded = (mag + half) >> drop as usize;
        let mant = if neg { -rounded } else { rounded };
        Dyadic::new(mant, self.exp + drop as i64)
    }

    /// `self / o` to roughly `prec` significant bits. Not rigorous.
    pub fn div_approx(&self, o: &Dyadic, prec: u32) -> Dyadic {
        assert!(!o.is_zero(), "division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let shift = (prec as i64 + o.mant.bits() as i64 - self.mant.bits() as i64 + 2).max(0);
        let num = &self.mant << shift as usize;
        Dyadic::new(num / &o.mant, self.exp - shift - o.exp).round(prec)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let r = self.round(60);
        let m = r.mant.to_f64().unwrap_or(f64::NAN);
        let e = r.exp.clamp(-2000, 2000) as i32;
        m * 2f64.powi(e)
    }

    /// Exact value as `(numerator, denominator)` with a power-of-two denominator.
    pub fn to_ratio(&self) -> (BigInt, BigInt) {
        if self.exp >= 0 {
            (&self.mant << self.exp as usize, BigInt::one())
        } else {
            (self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    /// Dyadic `y ≥ √x` with `y - √x ≤ 2^-k` (x ≥ 0).
    pub fn sqrt_upper(&self, k: u32) -> Dyadic {
        let (n, d) = self.to_ratio();
        sqrt_ratio_upper(&n, &d, k)
    }

    /// Dyadic `y ≤ √x` with `√x - y ≤ 2^-k` (x ≥ 0).
    pub fn sqrt_lower(&self, k: u32) -> Dyadic {
        assert!(!self.is_negative());
        let (n, d) = self.to_ratio();
        let scaled = (n << (2 * k as usize)) / d;
        Dyadic::new(scaled.sqrt(), -(k as i64))
    }
}

/// Dyadic `y ≥ √(num/den)` with absolute error at most `2^-k`.
pub fn sqrt_ratio_upper(num: &BigInt, den: &BigInt, k: u32) -> Dyadic {
    assert!(!num.is_negative() && den.is_positive());
    let scaled = num << (2 * k as usize);
    let (q, r) = scaled.div_rem(den);
    let q = if r.is_zero() { q } else { q + 1 };
    let s = q.sqrt();
    let s = if &s * &s < q { s + 1 } else { s };
    Dyadic::new(s, -(k as i64))
}

impl PartialEq for Dyadic {
    fn eq(&self, o: &Self) -> bool {
        self.mant == o.mant && self.exp == o.exp
    }
}

impl Eq for Dyadic {}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, o: &Self) -> Ordering {
        match (self.mant.sign(), o.mant.sign()) {
            (a, b) if a != b => {
                let rank = |s: Sign| match s {
                    Sign::Minus => 0,
                    Sign::NoSign => 1,
                    Sign::Plus => 2,
                };
                rank(a).cmp(&rank(b))
            }
            _ => {
                let (a, b, _) = Self::aligned(self, o);
                a.cmp(&b)
            }
        }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

/// Complex number with exact dyadic parts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CDyadic {
    pub re: Dyadic,
    pub im: Dyadic,
}

impl CDyadic {
    pub fn new(re: Dyadic, im: Dyadic) -> Self {
        CDyadic { re, im }
    }

    pub fn real(re: Dyadic) -> Self {
        CDyadic {
            re,
            im: Dyadic::zero(),
        }
    }

    pub fn zero() -> Self {
        CDyadic::default()
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        CDyadic::new(Dyadic::from_f64(re), Dyadic::from_f64(im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        CDyadic::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &Self) -> Self {
        CDyadic::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn mul(&self, o: &Self) -> Self {
        CDyadic::new(
            self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        )
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        CDyadic::new(self.re.mul_int(k), self.im.mul_int(k))
    }

    pub fn conj(&self) -> Self {
        CDyadic::new(self.re.clone(), self.im.neg())
    }

    /// Exact `|z|²`.
    pub fn norm_sqr(&self) -> Dyadic {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn round(&self, prec: u32) -> Self {
        CDyadic::new(self.re.round(prec), self.im.round(prec))
    }

    /// `self / o` to roughly `prec` bits. Not rigorous.
    pub fn div_approx(&self, o: &Self, prec: u32) -> Self {
        let den = o.norm_sqr().round(prec + 8);
        let num = self.mul(&o.conj());
        CDyadic::new(
            num.re.round(prec + 8).div_approx(&den, prec),
            num.im.round(prec + 8).div_approx(&den, prec),
        )
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for CDyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_f64();
        if im < 0.0 {
            write!(f, "{re:.17e} - {:.17e}i", -im)
        } else {
            write!(f, "{re:.17e} + {im:.17e}i")
        }
    }
}
