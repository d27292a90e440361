//! Polynomials over prime fields `𝔽_p` with `p < 2^62`.
//!
//! The two predicates the scan harness relies on are [`ModPoly::splits_completely`]
//! and [`ModPoly::has_root`]; both reduce to a gcd with `X^p - X`.

use std::hash::{DefaultHasher, Hash, Hasher};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::primes::{inv_mod, is_prime_u64, mul_mod};
use crate::zpoly::IntPoly;
use crate::{Error, Result};

pub const MAX_MODULUS: u64 = 1 << 62;

/// Below this modulus roots are found by evaluating at every residue.
const EXHAUSTIVE_ROOT_LIMIT: u64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
    preimage_degree: Option<usize>,
}

fn check_modulus(p: u64) -> Result<()> {
    if p >= MAX_MODULUS {
        return Err(Error::ModulusTooLarge(p));
    }
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

impl ModPoly {
    /// Coefficients are reduced mod `p`; `p` must be prime.
    pub fn new(coeffs: Vec<u64>, p: u64) -> Result<Self> {
        check_modulus(p)?;
        Ok(Self::from_raw(coeffs.into_iter().map(|c| c % p).collect(), p))
    }

    pub fn from_i64s(coeffs: &[i64], p: u64) -> Result<Self> {
        check_modulus(p)?;
        let v = coeffs
            .iter()
            .map(|&c| c.rem_euclid(p as i64) as u64)
            .collect();
        Ok(Self::from_raw(v, p))
    }

    // Caller guarantees p prime and coefficients already reduced.
    fn from_raw(mut coeffs: Vec<u64>, p: u64) -> Self {
        trim(&mut coeffs);
        let preimage_degree = coeffs.len().checked_sub(1);
        ModPoly {
            p,
            coeffs,
            preimage_degree,
        }
    }

    fn with(&self, mut coeffs: Vec<u64>) -> Self {
        trim(&mut coeffs);
        let preimage_degree = coeffs.len().checked_sub(1);
        ModPoly {
            p: self.p,
            coeffs,
            preimage_degree,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of the integer polynomial this was reduced from.
    pub fn preimage_degree(&self) -> Option<usize> {
        self.preimage_degree
    }

    /// True when reduction lost the leading term(s), i.e. `p | lc`.
    pub fn degree_dropped(&self) -> bool {
        self.preimage_degree != self.degree()
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        let x = x % p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = inv_mod(lc, self.p);
                self.with(self.coeffs.iter().map(|&c| mul_mod(c, inv, self.p)).collect())
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(o.coeffs.len());
        self.with(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).copied().unwrap_or(0);
                    let b = o.coeffs.get(i).copied().unwrap_or(0);
                    (a + b) % p
                })
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(o.coeffs.len());
        self.with(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).copied().unwrap_or(0);
                    let b = o.coeffs.get(i).copied().unwrap_or(0);
                    (a + p - b) % p
                })
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.with(mul_raw(&self.coeffs, &o.coeffs, self.p))
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let (q, r) = div_rem_raw(&self.coeffs, &d.coeffs, self.p);
        (self.with(q), self.with(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.with(rem_raw(self.coeffs.clone(), &d.coeffs, self.p))
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        self.with(gcd_raw(self.coeffs.clone(), o.coeffs.clone(), self.p))
    }

    /// `(g, s, t)` with `s·self + t·o = g`, `g` monic.
    pub fn xgcd(&self, o: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (self.with(vec![1]), self.with(vec![]));
        let (mut t0, mut t1) = (self.with(vec![]), self.with(vec![1]));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.coeffs.last() {
            None => (r0, s0, t0),
            Some(&lc) => {
                let k = self.with(vec![inv_mod(lc, self.p)]);
                (r0.mul(&k), s0.mul(&k), t0.mul(&k))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        self.with(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    /// `base^e mod self`.
    pub fn pow_mod_poly(&self, base: &Self, e: &BigUint) -> Self {
        let modulus = &self.coeffs;
        let p = self.p;
        let b = rem_raw(base.coeffs.clone(), modulus, p);
        let mut acc = rem_raw(vec![1], modulus, p);
        for i in (0..e.bits()).rev() {
            acc = mulmod_raw(&acc, &acc, modulus, p);
            if e.bit(i) {
                acc = mulmod_raw(&acc, &b, modulus, p);
            }
        }
        self.with(acc)
    }

    /// `X^e mod f` by square-and-multiply.
    pub fn powmod_x(&self, e: u64) -> Result<Self> {
        if self.degree().unwrap_or(0) < 1 {
            return Err(Error::ConstantPolynomial);
        }
        Ok(self.with(x_pow_mod(e, &self.coeffs, self.p)))
    }

    // gcd(X^p - X, f): the product of the distinct linear factors of f.
    fn linear_radical(&self) -> Self {
        if self.degree() == Some(0) {
            return self.with(vec![1]);
        }
        let p = self.p;
        let mut xp = x_pow_mod(p, &self.coeffs, p);
        if xp.len() < 2 {
            xp.resize(2, 0);
        }
        xp[1] = (xp[1] + p - 1) % p;
        self.with(gcd_raw(xp, self.coeffs.clone(), p))
    }

    /// Number of distinct roots of `f` in `𝔽_p`.
    pub fn count_distinct_roots(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.linear_radical().degree().unwrap_or(0))
    }

    pub fn has_root(&self) -> Result<bool> {
        Ok(self.count_distinct_roots()? >= 1)
    }

    /// Product of the distinct monic irreducible factors of `f`.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.with(radical_raw(&self.monic().coeffs, self.p)))
    }

    /// True iff `f` is a product of linear factors over `𝔽_p` (with multiplicity).
    pub fn splits_completely(&self) -> Result<bool> {
        match self.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::ConstantPolynomial),
            Some(1) => return Ok(true),
            _ => {}
        }
        let s = self.squarefree_part()?;
        if s.degree() == Some(1) {
            return Ok(true);
        }
        let p = self.p;
        let xp = x_pow_mod(p, &s.coeffs, p);
        Ok(xp == rem_raw(vec![0, 1], &s.coeffs, p))
    }

    /// Every root in `𝔽_p` with its multiplicity, sorted by residue.
    pub fn roots_with_multiplicity(&self) -> Result<Vec<(u64, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let roots = if self.degree() == Some(0) {
            Vec::new()
        } else if self.p < EXHAUSTIVE_ROOT_LIMIT {
            (0..self.p).filter(|&r| self.eval(r) == 0).collect()
        } else {
            let h = self.linear_radical();
            let mut rng = ChaCha8Rng::seed_from_u64(self.root_seed());
            let mut roots = Vec::new();
            split_linear(&h, &mut rng, &mut roots);
            roots.sort_unstable();
            roots
        };
        let p = self.p;
        let mut out = Vec::with_capacity(roots.len());
        for r in roots {
            let lin = vec![(p - r) % p, 1];
            let mut cur = self.coeffs.clone();
            let mut m = 0;
            loop {
                let (q, rem) = div_rem_raw(&cur, &lin, p);
                if !rem.is_empty() {
                    break;
                }
                cur = q;
                m += 1;
            }
            out.push((r, m));
        }
        Ok(out)
    }

    fn root_seed(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.p.hash(&mut h);
        self.coeffs.hash(&mut h);
        h.finish()
    }
}

/// Reduce an integer polynomial coefficientwise mod `p`.
pub fn reduce(a: &IntPoly, p: u64) -> Result<ModPoly> {
    check_modulus(p)?;
    let mut m = ModPoly::from_raw(reduce_coeffs(a, p), p);
    m.preimage_degree = a.degree();
    Ok(m)
}

pub(crate) fn reduce_coeffs(a: &IntPoly, p: u64) -> Vec<u64> {
    let bp = BigInt::from(p);
    a.coeffs()
        .iter()
        .map(|c| {
            let r = c % &bp;
            let r = if r < BigInt::zero() { r + &bp } else { r };
            r.to_u64().expect("residue fits in u64")
        })
        .collect()
}

// ---- raw coefficient-vector kernels (ascending, trimmed) ----

fn mul_raw(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u128; a.len() + b.len() - 1];
    let pp = p as u128;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u128 * y as u128) % pp;
        }
    }
    let mut v: Vec<u64> = out.into_iter().map(|c| c as u64).collect();
    trim(&mut v);
    v
}

fn rem_raw(mut a: Vec<u64>, d: &[u64], p: u64) -> Vec<u64> {
    assert!(!d.is_empty(), "division by zero polynomial");
    let dd = d.len() - 1;
    let inv = inv_mod(d[dd], p);
    while a.len() > dd {
        let top = a.len() - 1;
        let t = mul_mod(a[top], inv, p);
        if t != 0 {
            let shift = top - dd;
            for (j, &dc) in d.iter().enumerate() {
                a[shift + j] = (a[shift + j] + p - mul_mod(t, dc, p)) % p;
            }
        }
        a.pop();
        trim(&mut a);
    }
    trim(&mut a);
    a
}

fn div_rem_raw(a: &[u64], d: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!d.is_empty(), "division by zero polynomial");
    let dd = d.len() - 1;
    if a.len() <= dd {
        return (Vec::new(), a.to_vec());
    }
    let inv = inv_mod(d[dd], p);
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - dd];
    for k in (0..q.len()).rev() {
        let t = mul_mod(r[k + dd], inv, p);
        q[k] = t;
        if t != 0 {
            for (j, &dc) in d.iter().enumerate() {
                r[k + j] = (r[k + j] + p - mul_mod(t, dc, p)) % p;
            }
        }
    }
    r.truncate(dd);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

fn mulmod_raw(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    rem_raw(mul_raw(a, b, p), m, p)
}

fn gcd_raw(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem_raw(a, &b, p);
        a = b;
        b = r;
    }
    monic_raw(a, p)
}

fn x_pow_mod(e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let x = rem_raw(vec![0, 1], m, p);
    let mut acc = rem_raw(vec![1], m, p);
    if e == 0 {
        return acc;
    }
    for i in (0..64 - e.leading_zeros()).rev() {
        acc = mulmod_raw(&acc, &acc, m, p);
        if (e >> i) & 1 == 1 {
            acc = mulmod_raw(&acc, &x, m, p);
        }
    }
    acc
}

fn derivative_raw(a: &[u64], p: u64) -> Vec<u64> {
    let mut d: Vec<u64> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
        .collect();
    trim(&mut d);
    d
}

// Radical of a monic polynomial in characteristic p.
fn radical_raw(f: &[u64], p: u64) -> Vec<u64> {
    if f.len() <= 1 {
        return vec![1];
    }
    let df = derivative_raw(f, p);
    if df.is_empty() {
        // f(X) = g(X^p) = g(X)^p over 𝔽_p.
        let g: Vec<u64> = f.iter().step_by(p as usize).copied().collect();
        return radical_raw(&g, p);
    }
    let g = gcd_raw(f.to_vec(), df, p);
    if g.len() == 1 {
        return f.to_vec();
    }
    let (u, _) = div_rem_raw(f, &g, p);
    let rg = radical_raw(&g, p);
    let common = gcd_raw(u.clone(), rg.clone(), p);
    let (rest, _) = div_rem_raw(&rg, &common, p);
    monic_raw(mul_raw(&u, &rest, p), p)
}

fn monic_raw(mut a: Vec<u64>, p: u64) -> Vec<u64> {
    if let Some(&lc) = a.last() {
        let inv = inv_mod(lc, p);
        for c in a.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
    a
}

// Equal-degree splitting of a product of distinct linear factors.
fn split_linear(h: &ModPoly, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    let p = h.p;
    match h.degree() {
        None | Some(0) => return,
        Some(1) => {
            let m = h.monic();
            out.push((p - m.coeffs[0]) % p);
            return;
        }
        _ => {}
    }
    let e = BigUint::from((p - 1) / 2);
    loop {
        let a = rng.gen_range(0..p);
        let shifted = h.with(vec![a, 1]);
        let mut w = h.pow_mod_poly(&shifted, &e);
        w = w.sub(&h.with(vec![1]));
        let g = h.gcd(&w);
        let dg = g.degree().unwrap_or(0);
        if dg >= 1 && dg < h.degree().unwrap() {
            let (q, _) = h.div_rem(&g);
            split_linear(&g, rng, out);
            split_linear(&q.monic(), rng, out);
            return;
        }
    }
}

/// Factor a squarefree monic polynomial over `𝔽_p` into monic irreducibles.
///
/// Distinct-degree factorization followed by Cantor–Zassenhaus splitting
/// (`p` odd), driven by a seeded generator so results are reproducible.
pub(crate) fn factor_squarefree(f: &ModPoly, seed: u64) -> Vec<ModPoly> {
    let p = f.p;
    assert!(p % 2 == 1, "equal-degree splitting requires an odd prime");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p);
    let mut out = Vec::new();
    let mut rest = f.monic();
    let x = f.with(vec![0, 1]);
    let mut xq = x.rem(&rest);
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        xq = rest.pow_mod_poly(&xq, &BigUint::from(p));
        let g = rest.gcd(&xq.sub(&x));
        if g.degree().unwrap_or(0) > 0 {
            equal_degree(&g, d, &mut rng, &mut out);
            rest = rest.div_rem(&g).0.monic();
            xq = xq.rem(&rest);
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push(rest);
    }
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.coeffs.cmp(&b.coeffs)));
    out
}

fn equal_degree(g: &ModPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    let n = g.degree().unwrap_or(0);
    if n == d {
        out.push(g.monic());
        return;
    }
    let p = g.p;
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1;
    loop {
        let a: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        let a = g.with(a);
        if a.degree().unwrap_or(0) < 1 {
            continue;
        }
        let w = g.pow_mod_poly(&a, &e).sub(&g.with(vec![1]));
        let h = g.gcd(&w);
        let dh = h.degree().unwrap_or(0);
        if dh > 0 && dh < n {
            let q = g.div_rem(&h).0.monic();
            equal_degree(&h, d, rng, out);
            equal_degree(&q, d, rng, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(c: &[i64], p: u64) -> ModPoly {
        ModPoly::from_i64s(c, p).unwrap()
    }

    fn brute_roots(f: &ModPoly) -> Vec<u64> {
        (0..f.modulus()).filter(|&r| f.eval(r) == 0).collect()
    }

    #[test]
    fn reduce_examples() {
        let f = reduce(&IntPoly::from_i64s(&[-2, 0, 1]), 7).unwrap();
        assert_eq!(f.coeffs(), &[5, 0, 1]);
        let f = reduce(&IntPoly::from_i64s(&[0, 1, 5]), 5).unwrap();
        assert_eq!(f.coeffs(), &[0, 1]);
        assert!(f.degree_dropped());
        assert_eq!(f.preimage_degree(), Some(2));
        let f = reduce(&IntPoly::from_i64s(&[1, 0, 1]), 2).unwrap();
        assert_eq!(f.coeffs(), &[1, 0, 1]);
        assert!(!f.degree_dropped());
        assert_eq!(reduce(&IntPoly::one(), 9), Err(Error::NotPrime(9)));
        assert_eq!(
            reduce(&IntPoly::one(), MAX_MODULUS + 1),
            Err(Error::ModulusTooLarge(MAX_MODULUS + 1))
        );
    }

    #[test]
    fn powmod_x_examples() {
        assert_eq!(m(&[1, 0, 1], 5).powmod_x(5).unwrap().coeffs(), &[0, 1]);
        assert_eq!(m(&[3, 2, 1], 11).powmod_x(0).unwrap().coeffs(), &[1]);
        assert_eq!(m(&[-1, 1], 7).powmod_x(3).unwrap().coeffs(), &[1]);
        assert_eq!(m(&[4], 7).powmod_x(3), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn root_counting_examples() {
        assert_eq!(m(&[1, 0, 1], 5).count_distinct_roots().unwrap(), 2);
        assert_eq!(m(&[1, 0, 1], 7).count_distinct_roots().unwrap(), 0);
        assert_eq!(m(&[0, 0, 1], 11).count_distinct_roots().unwrap(), 1);
        assert!(m(&[-2, 0, 1], 7).has_root().unwrap());
        assert!(!m(&[1, 0, 1], 7).has_root().unwrap());
        for p in [2, 3, 101, 7919] {
            assert!(m(&[0, 1], p).has_root().unwrap());
        }
        assert_eq!(m(&[], 7).count_distinct_roots(), Err(Error::ZeroPolynomial));
        assert_eq!(m(&[3], 7).count_distinct_roots().unwrap(), 0);
    }

    #[test]
    fn splits_examples() {
        assert!(m(&[1, 0, 1], 5).splits_completely().unwrap());
        assert!(!m(&[1, 0, 1], 7).splits_completely().unwrap());
        assert!(m(&[0, 0, 1], 3).splits_completely().unwrap());
        assert_eq!(m(&[5], 7).splits_completely(), Err(Error::ConstantPolynomial));
        // (X^2+1)^3 mod 3: derivative vanishes identically, no roots
        let cube = m(&[1, 0, 3, 0, 3, 0, 1], 3);
        assert!(!cube.splits_completely().unwrap());
        // (X-1)^3 (X-2)^3 mod 3 splits
        let f = m(&[-1, 1], 3).mul(&m(&[-2, 1], 3));
        let f3 = f.mul(&f).mul(&f);
        assert!(f3.splits_completely().unwrap());
    }

    #[test]
    fn roots_with_multiplicity_examples() {
        assert_eq!(
            m(&[2, -3, 1], 7).roots_with_multiplicity().unwrap(),
            vec![(1, 1), (2, 1)]
        );
        assert_eq!(m(&[0, 0, 1], 5).roots_with_multiplicity().unwrap(), vec![(0, 2)]);
        assert_eq!(
            m(&[-2, 0, 0, 1], 31).roots_with_multiplicity().unwrap(),
            vec![(4, 1), (7, 1), (20, 1)]
        );
    }

    #[test]
    fn large_prime_root_extraction() {
        let p = 1_000_003;
        // (X-5)^2 (X-77) (X-999_999) (X^2+X+1)
        let lin = |r: i64| m(&[-r, 1], p);
        let f = lin(5)
            .mul(&lin(5))
            .mul(&lin(77))
            .mul(&lin(999_999))
            .mul(&m(&[1, 1, 1], p));
        let roots = f.roots_with_multiplicity().unwrap();
        // 1_000_003 ≡ 1 mod 3, so X^2+X+1 contributes two more roots
        assert_eq!(roots.len(), 5);
        for &(r, mult) in &roots {
            assert_eq!(f.eval(r), 0);
            assert_eq!(mult, if r == 5 { 2 } else { 1 });
        }
        assert_eq!(f.roots_with_multiplicity().unwrap(), roots, "deterministic");
    }

    #[test]
    fn xgcd_identity() {
        let a = m(&[1, 0, 1], 13).mul(&m(&[3, 1], 13));
        let b = m(&[3, 1], 13).mul(&m(&[-2, 0, 0, 1], 13));
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(g.coeffs(), &[3, 1]);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn factor_squarefree_reconstructs() {
        let f = m(&[1, 0, 1], 7).mul(&m(&[-3, 1], 7)).mul(&m(&[2, 0, 0, 1], 7));
        let sf = f.monic();
        let parts = factor_squarefree(&sf, 0);
        let prod = parts.iter().fold(m(&[1], 7), |acc, g| acc.mul(g));
        assert_eq!(prod, sf);
        for g in &parts {
            // irreducible: no proper factor of degree ≤ deg/2 shows up in DDF
            let again = factor_squarefree(g, 1);
            assert_eq!(again.len(), 1);
        }
    }

    #[test]
    fn brute_force_agreement_small_primes() {
        let corpus: [&[i64]; 6] = [
            &[1, 0, 1],
            &[-2, 0, 1],
            &[-2, 0, 0, 1],
            &[1, 0, -10, 0, 1],
            &[2, -3, 0, 1],
            &[4, 0, 0, 0, 1],
        ];
        for p in crate::primes::primes_up_to(200) {
            for c in corpus {
                let f = m(c, p);
                let roots = brute_roots(&f);
                assert_eq!(f.count_distinct_roots().unwrap(), roots.len());
                let with_mult = f.roots_with_multiplicity().unwrap();
                let total: usize = with_mult.iter().map(|r| r.1).sum();
                assert_eq!(
                    f.splits_completely().unwrap(),
                    total == f.degree().unwrap(),
                    "{c:?} mod {p}"
                );
            }
        }
    }
}
