//! Independent oracles shared by the integration tests. Nothing here calls the
//! library's modular arithmetic; everything is plain residue evaluation.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;
use splitq::IntPoly;

pub fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

/// The acceptance corpus, as written by a user.
pub const CORPUS: [&str; 10] = [
    "X^2+1",
    "X^2-2",
    "X^2+X+1",
    "X^2-3X+2",
    "2X^2+3X+1",
    "X^3-2",
    "X^3-X-1",
    "X^3-3X+2",
    "X^4-10X^2+1",
    "X^4+4",
];

pub fn corpus() -> Vec<IntPoly> {
    CORPUS.iter().map(|s| IntPoly::parse(s).unwrap()).collect()
}

/// Coefficients mod p, ascending, trailing zeros removed.
pub fn residues(f: &IntPoly, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap())
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn eval(c: &[u64], x: u64, p: u64) -> u64 {
    c.iter()
        .rev()
        .fold(0u128, |acc, &a| (acc * x as u128 + a as u128) % p as u128) as u64
}

/// Divide by `X - r`, assuming `r` is a root.
fn deflate(c: &[u64], r: u64, p: u64) -> Vec<u64> {
    let n = c.len() - 1;
    let mut q = vec![0u64; n];
    let mut carry = 0u128;
    for i in (1..=n).rev() {
        carry = (carry * r as u128 + c[i] as u128) % p as u128;
        q[i - 1] = carry as u64;
    }
    q
}

/// Every residue root with multiplicity, by exhaustive evaluation.
pub fn brute_roots(f: &IntPoly, p: u64) -> Vec<(u64, usize)> {
    let c = residues(f, p);
    if c.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for r in 0..p {
        let mut cur = c.clone();
        let mut m = 0;
        while cur.len() > 1 && eval(&cur, r, p) == 0 {
            cur = deflate(&cur, r, p);
            m += 1;
        }
        if m > 0 {
            out.push((r, m));
        }
    }
    out
}

pub fn brute_has_root(f: &IntPoly, p: u64) -> bool {
    let c = residues(f, p);
    (0..p).any(|r| eval(&c, r, p) == 0)
}

/// Roots counted with multiplicity fill the reduced degree.
pub fn brute_splits(f: &IntPoly, p: u64) -> bool {
    let d = residues(f, p).len().saturating_sub(1);
    brute_roots(f, p).iter().map(|(_, m)| m).sum::<usize>() == d
}

pub fn small_primes(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)).collect()
}

pub fn random_poly<R: Rng>(rng: &mut R, max_deg: usize, bound: i64) -> IntPoly {
    let d = rng.gen_range(0..=max_deg);
    let mut c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-bound..=bound)).collect();
    if c[d] == 0 {
        c[d] = 1;
    }
    poly(&c)
}
