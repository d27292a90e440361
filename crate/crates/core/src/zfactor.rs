//! Factorization of integer polynomials into irreducible factors over ℚ.
//!
//! Squarefree decomposition, then for every squarefree part: factor modulo a
//! small prime, Hensel-lift the modular factors past a coefficient bound, and
//! recombine subsets by trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::fpoly::{self, ModPoly};
use crate::primes::is_prime_u64;
use crate::zpoly::{gcd_q, IntPoly};
use crate::{Error, Result};

/// Number of admissible primes tried for the modular image; the one with the
/// fewest modular factors is kept.
const PRIME_CANDIDATES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorConfig {
    /// Largest squarefree degree accepted.
    pub degree_cap: usize,
    /// Seed for the randomized equal-degree splitting mod p.
    pub seed: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            degree_cap: 64,
            seed: 0,
        }
    }
}

/// `unit · ∏ factor^multiplicity`, factors primitive, irreducible, positive
/// leading coefficient, sorted by degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub unit: BigInt,
    pub factors: Vec<(IntPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::constant(self.unit.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m as u32)
            })
    }

    /// Distinct irreducible factors, in canonical order.
    pub fn irreducibles(&self) -> impl Iterator<Item = &IntPoly> {
        self.factors.iter().map(|(f, _)| f)
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if !self.unit.is_one() || self.factors.is_empty() {
            parts.push(self.unit.to_string());
        }
        for (g, m) in &self.factors {
            if *m == 1 {
                parts.push(format!("({g})"));
            } else {
                parts.push(format!("({g})^{m}"));
            }
        }
        f.write_str(&parts.join(" * "))
    }
}

pub fn factor_q(a: &IntPoly) -> Result<Factorization> {
    factor_q_with(a, &FactorConfig::default())
}

pub fn factor_q_with(a: &IntPoly, cfg: &FactorConfig) -> Result<Factorization> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let content = a.content()?;
    let unit = if a.lc().is_negative() { -content } else { content };
    if a.is_constant() {
        return Ok(Factorization {
            unit,
            factors: Vec::new(),
        });
    }
    let prim = a.div_scalar_exact(&unit);
    let parts = squarefree_decomposition(&prim);
    let sf_degree: usize = parts.iter().map(|(g, _)| g.deg()).sum();
    if sf_degree > cfg.degree_cap {
        return Err(Error::DegreeCap {
            degree: sf_degree,
            cap: cfg.degree_cap,
        });
    }
    let mut factors = Vec::new();
    for (g, mult) in parts {
        for h in factor_squarefree_primitive(&g, cfg) {
            factors.push((h, mult));
        }
    }
    factors.sort_by(|(f, m), (g, n)| f.canonical_cmp(g).then(m.cmp(n)));
    Ok(Factorization { unit, factors })
}

/// True iff `a` is primitive and irreducible over ℚ.
pub fn is_irreducible_q(a: &IntPoly) -> Result<bool> {
    is_irreducible_q_with(a, &FactorConfig::default())
}

pub fn is_irreducible_q_with(a: &IntPoly, cfg: &FactorConfig) -> Result<bool> {
    if a.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let f = factor_q_with(a, cfg)?;
    Ok(f.unit.abs().is_one() && f.factors.len() == 1 && f.factors[0].1 == 1)
}

/// `f = ∏ g_i^i` for primitive `f` with positive leading coefficient; each
/// `g_i` primitive, squarefree, pairwise coprime. Only nonconstant parts are kept.
pub fn squarefree_decomposition(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    let a = f.primitive_part().expect("nonzero input");
    let mut b = gcd_q(&a, &a.derivative());
    let mut c = a.div_exact(&b).expect("gcd divides").primitive_part().unwrap();
    let mut out = Vec::new();
    let mut i = 1;
    while !c.is_constant() {
        let d = gcd_q(&b, &c);
        let part = c.div_exact(&d).expect("gcd divides");
        if !part.is_constant() {
            out.push((part.primitive_part().unwrap(), i));
        }
        b = b.div_exact(&d).expect("gcd divides");
        c = d;
        i += 1;
    }
    out
}

fn factor_squarefree_primitive(f: &IntPoly, cfg: &FactorConfig) -> Vec<IntPoly> {
    if f.deg() <= 1 {
        return vec![f.clone()];
    }
    let (p, modular) = choose_prime(f, cfg.seed);
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    let bound = coefficient_bound(f);
    let mut k = 1u32;
    let mut pk = BigInt::from(p);
    while pk <= &bound * 2 {
        pk *= p;
        k += 1;
    }
    let lifted = hensel_lift(f, &modular, p, k);
    recombine(f, lifted, &pk)
}

/// Smallest admissible primes ≥ 3 (not dividing `lc`, squarefree image);
/// among the first few, the one with the fewest modular factors wins.
fn choose_prime(f: &IntPoly, seed: u64) -> (u64, Vec<ModPoly>) {
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut tried = 0;
    let mut p = 3u64;
    while tried < PRIME_CANDIDATES {
        if is_prime_u64(p) && !(f.lc() % BigInt::from(p)).is_zero() {
            let fp = fpoly::reduce(f, p).expect("odd prime");
            let g = fp.gcd(&fp.derivative());
            if g.degree() == Some(0) {
                tried += 1;
                let parts = fpoly::factor_squarefree(&fp.monic(), seed);
                if best.as_ref().is_none_or(|(_, b)| parts.len() < b.len()) {
                    best = Some((p, parts));
                }
                if best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
                    break;
                }
            }
        }
        p += 2;
    }
    best.expect("some prime is admissible")
}

// Bound on |coefficients| of lc(f)/lc(h)·h for any factor h of f:
// |lc(f)|·2^deg(f)·⌈‖f‖₂⌉.
fn coefficient_bound(f: &IntPoly) -> BigInt {
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let root = norm2.sqrt() + 1;
    f.lc().abs() * (BigInt::one() << f.deg()) * root
}

fn to_int(m: &ModPoly) -> IntPoly {
    IntPoly::new(m.coeffs().iter().map(|&c| BigInt::from(c)).collect())
}

fn mod_coeffs(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m >> 1;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Lift monic factors `f ≡ lc(f)·∏ g_i (mod p)` to monic factors mod `p^k`.
fn hensel_lift(f: &IntPoly, factors: &[ModPoly], p: u64, k: u32) -> Vec<IntPoly> {
    let bp = BigInt::from(p);
    let pk = bp.pow(k);
    let lc_inv = f.lc().mod_floor(&pk).modinv(&pk).expect("p ∤ lc");
    let target = mod_coeffs(&f.scale(&lc_inv), &pk);

    // e_i with Σ e_i·∏_{j≠i} g_j ≡ 1 (mod p).
    let one = ModPoly::new(vec![1], p).unwrap();
    let bezout: Vec<ModPoly> = (0..factors.len())
        .map(|i| {
            let others = factors
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(one.clone(), |acc, (_, g)| acc.mul(g));
            let (g, _, t) = factors[i].xgcd(&others);
            debug_assert_eq!(g, one);
            t.rem(&factors[i])
        })
        .collect();

    let mut lifted: Vec<IntPoly> = factors.iter().map(to_int).collect();
    let mut pj = bp.clone();
    for _ in 1..k {
        let next = &pj * &bp;
        let prod: IntPoly = lifted.iter().cloned().product();
        let err = mod_coeffs(&(&target - &prod), &next);
        debug_assert!(err.coeffs().iter().all(|c| c.is_multiple_of(&pj)));
        let e = fpoly::reduce(&err.div_scalar_exact(&pj), p).unwrap();
        for (g, (gi, ei)) in lifted.iter_mut().zip(factors.iter().zip(&bezout)) {
            let delta = ei.mul(&e).rem(gi);
            *g = &*g + &to_int(&delta).scale(&pj);
        }
        pj = next;
    }
    lifted
}

/// Zassenhaus subset recombination of lifted factors.
fn recombine(f: &IntPoly, mut lifted: Vec<IntPoly>, pk: &BigInt) -> Vec<IntPoly> {
    let mut f = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let lc = f.lc();
        let f0 = f.coeff(0);
        let const_target = &lc * &f0;
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let const_ok = f0.is_zero() || {
                let c = combo
                    .iter()
                    .fold(lc.clone(), |acc, &i| (acc * lifted[i].coeff(0)).mod_floor(pk));
                let c = symmetric(&IntPoly::constant(c), pk).coeff(0);
                !c.is_zero() && const_target.is_multiple_of(&c)
            };
            if const_ok {
                let cand = combo
                    .iter()
                    .fold(IntPoly::constant(lc.clone()), |acc, &i| {
                        mod_coeffs(&(&acc * &lifted[i]), pk)
                    });
                let cand = symmetric(&cand, pk).primitive_part().unwrap();
                if let Some(q) = f.div_exact(&cand) {
                    found.push(cand);
                    f = q;
                    for &i in combo.iter().rev() {
                        lifted.remove(i);
                    }
                    continue 'outer;
                }
            }
            if !next_combination(&mut combo, lifted.len()) {
                break;
            }
        }
        size += 1;
    }
    found.push(f.primitive_part().unwrap());
    found
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
