use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::{Error, Result};

fn is_odd(n: usize) -> bool {
    n % 2 == 1
}

/// Primitive representative of the monic gcd over ℚ, leading coefficient positive.
///
/// Uses the subresultant polynomial remainder sequence, so all intermediate
/// values stay in `ℤ[X]`. `gcd_q(0, b) = primitive_part(b)`; two zeros give zero.
pub fn gcd_q(a: &IntPoly, b: &IntPoly) -> IntPoly {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return IntPoly::zero(),
        (true, false) => return b.primitive_part().unwrap(),
        (false, true) => return a.primitive_part().unwrap(),
        _ => {}
    }
    let (a, b) = if a.deg() >= b.deg() { (a, b) } else { (b, a) };
    let mut a = a.primitive_part().unwrap();
    let mut b = b.primitive_part().unwrap();
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.deg() - b.deg();
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return b.primitive_part().unwrap();
        }
        if r.deg() == 0 {
            return IntPoly::one();
        }
        a = b;
        b = r.div_scalar_exact(&(&g * h.pow(delta as u32)));
        g = a.lc();
        h = next_h(&h, &g, delta);
    }
}

// h^(1-δ)·g^δ, an exact integer for δ ≥ 1.
fn next_h(h: &BigInt, g: &BigInt, delta: usize) -> BigInt {
    if delta == 0 {
        return h.clone();
    }
    let num = g.pow(delta as u32);
    let den = h.pow(delta as u32 - 1);
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Exact resultant `Res(a, b)`, zero iff `a` and `b` share a complex root.
///
/// Fraction-free subresultant algorithm; the Sylvester determinant
/// ([`sylvester_resultant`]) is kept as an independent check.
pub fn resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    let mut sign = 1i32;
    let (a, b) = if a.deg() < b.deg() {
        if is_odd(a.deg()) && is_odd(b.deg()) {
            sign = -1;
        }
        (b, a)
    } else {
        (a, b)
    };
    if b.deg() == 0 {
        let r = b.lc().pow(a.deg() as u32);
        return if sign < 0 { -r } else { r };
    }
    let ac = a.content().unwrap();
    let bc = b.content().unwrap();
    let t = ac.pow(b.deg() as u32) * bc.pow(a.deg() as u32);
    let mut a = a.div_scalar_exact(&ac);
    let mut b = b.div_scalar_exact(&bc);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    while b.deg() > 0 {
        let delta = a.deg() - b.deg();
        if is_odd(a.deg()) && is_odd(b.deg()) {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            return BigInt::zero();
        }
        b = r.div_scalar_exact(&(&g * h.pow(delta as u32)));
        g = a.lc();
        h = next_h(&h, &g, delta);
    }
    let da = a.deg() as u32;
    let h = if da == 0 {
        h
    } else {
        b.lc().pow(da) / h.pow(da - 1)
    };
    let r = t * h;
    if sign < 0 {
        -r
    } else {
        r
    }
}

/// Discriminant `(-1)^(n(n-1)/2)·Res(f, f')/lc(f)`.
pub fn discriminant(f: &IntPoly) -> Result<BigInt> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let r = resultant(f, &f.derivative());
    let d = r / f.lc();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

/// Minimal ring interface for fraction-free elimination.
trait Domain: Clone {
    fn el_is_zero(&self) -> bool;
    fn el_mul(&self, o: &Self) -> Self;
    fn el_sub(&self, o: &Self) -> Self;
    fn el_div_exact(&self, o: &Self) -> Self;
    fn el_neg(&self) -> Self;
    fn el_one() -> Self;
}

impl Domain for BigInt {
    fn el_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn el_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn el_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn el_div_exact(&self, o: &Self) -> Self {
        let (q, r) = self.div_rem(o);
        debug_assert!(Zero::is_zero(&r));
        q
    }
    fn el_neg(&self) -> Self {
        -self
    }
    fn el_one() -> Self {
        One::one()
    }
}

impl Domain for IntPoly {
    fn el_is_zero(&self) -> bool {
        IntPoly::is_zero(self)
    }
    fn el_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn el_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn el_div_exact(&self, o: &Self) -> Self {
        IntPoly::div_exact(self, o).expect("Bareiss division is exact")
    }
    fn el_neg(&self) -> Self {
        -self
    }
    fn el_one() -> Self {
        IntPoly::one()
    }
}

/// Bareiss fraction-free determinant with row pivoting.
fn bareiss_det<T: Domain>(mut m: Vec<Vec<T>>, zero: T) -> T {
    let n = m.len();
    if n == 0 {
        return T::el_one();
    }
    let mut negate = false;
    let mut prev = T::el_one();
    for k in 0..n - 1 {
        if m[k][k].el_is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].el_is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return zero,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].el_mul(&m[k][k]).el_sub(&m[i][k].el_mul(&m[k][j]));
                m[i][j] = v.el_div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.el_neg()
    } else {
        d
    }
}

/// Sylvester matrix of two coefficient lists (ascending), rows of `a` first.
fn sylvester<T: Domain>(a: &[T], b: &[T], zero: &T) -> Vec<Vec<T>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (j, c) in a.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (j, c) in b.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant as the determinant of the Sylvester matrix.
pub fn sylvester_resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    let z = BigInt::zero();
    bareiss_det(sylvester(a.coeffs(), b.coeffs(), &z), z)
}

fn check_linear_sub(m: &IntPoly, g: &IntPoly) -> Result<()> {
    if m.is_constant() || g.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    Ok(())
}

/// The composed weighted sum of `M` and `g`: the polynomial
/// `lc(M)^deg(g)·lc(g)^deg(M)·∏ (x - μ - c·ν)` over roots `M(μ) = 0`, `g(ν) = 0`.
///
/// This is `Res_y(g(y), M(x - c·y))`, computed by evaluating at
/// `deg(M)·deg(g) + 1` integer points and interpolating with forward differences.
pub fn resultant_linear_sub(m: &IntPoly, g: &IntPoly, c: &BigInt) -> Result<IntPoly> {
    check_linear_sub(m, g)?;
    if c.is_zero() {
        return Ok(degenerate_linear_sub(m, g));
    }
    let dm = m.deg();
    let dg = g.deg();
    let d = dm * dg;
    let neg_c = -c;
    let values: Vec<BigInt> = (0..=d)
        .map(|x0| {
            let a = m.taylor_shift(&BigInt::from(x0)).scale_arg(&neg_c);
            resultant(g, &a)
        })
        .collect();
    Ok(interpolate_consecutive(values))
}

fn degenerate_linear_sub(m: &IntPoly, g: &IntPoly) -> IntPoly {
    m.pow(g.deg() as u32)
        .scale(&g.lc().pow(m.deg() as u32))
}

/// Same polynomial as [`resultant_linear_sub`], via a Sylvester determinant over `ℤ[x]`.
pub fn resultant_linear_sub_sylvester(m: &IntPoly, g: &IntPoly, c: &BigInt) -> Result<IntPoly> {
    check_linear_sub(m, g)?;
    if c.is_zero() {
        return Ok(degenerate_linear_sub(m, g));
    }
    let dm = m.deg();
    // Coefficient of y^j in M(x - c·y): (-c)^j · Σ_{k≥j} M_k·C(k, j)·x^(k-j).
    let neg_c = -c;
    let mut a_coeffs = Vec::with_capacity(dm + 1);
    let mut cpow = BigInt::one();
    for j in 0..=dm {
        let mut coeffs = Vec::with_capacity(dm - j + 1);
        let mut binom = BigInt::one();
        for k in j..=dm {
            if k > j {
                binom = binom * BigInt::from(k) / BigInt::from(k - j);
            }
            coeffs.push(&m.coeffs()[k] * &binom * &cpow);
        }
        a_coeffs.push(IntPoly::new(coeffs));
        cpow *= &neg_c;
    }
    let g_coeffs: Vec<IntPoly> = g.coeffs().iter().cloned().map(IntPoly::constant).collect();
    let z = IntPoly::zero();
    Ok(bareiss_det(sylvester(&g_coeffs, &a_coeffs, &z), z))
}

/// Interpolate the integer polynomial taking `values[i]` at `x = i`.
fn interpolate_consecutive(values: Vec<BigInt>) -> IntPoly {
    let n = values.len();
    // Forward differences Δ^k T(0).
    let mut diffs = Vec::with_capacity(n);
    let mut row = values;
    while !row.is_empty() {
        diffs.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    // T(x) = Σ Δ^k T(0)/k! · x(x-1)···(x-k+1).
    let mut result = IntPoly::zero();
    let mut falling = IntPoly::one();
    let mut fact = BigInt::one();
    for (k, dk) in diffs.iter().enumerate() {
        if k > 0 {
            fact *= BigInt::from(k);
            falling = &falling * &IntPoly::linear_root(&BigInt::from(k - 1));
        }
        if !dk.is_zero() {
            let (q, r) = dk.div_rem(&fact);
            debug_assert!(r.is_zero(), "integer polynomial has Δ^k divisible by k!");
            result = &result + &falling.scale(&q);
        }
    }
    result
}
