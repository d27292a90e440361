//! Word-size prime arithmetic: deterministic Miller–Rabin, modular helpers and
//! a segmented sieve of Eratosthenes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo prime `p`; `a` must be nonzero mod `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic for all 64-bit inputs (first twelve prime bases).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Upper limit below which [`is_prime_big`] is a proof (Sorenson–Webster:
/// the first thirteen prime bases are deterministic below 3.3·10^24).
pub fn proven_prime_limit() -> BigInt {
    "3317044064679887385961981".parse().unwrap()
}

/// Miller–Rabin with the first thirteen prime bases. `Some(result)` when
/// `n` is below [`proven_prime_limit`], `None` when the test is not a proof.
pub fn is_prime_big(n: &BigInt) -> Option<bool> {
    if let Some(small) = n.to_u64() {
        return Some(is_prime_u64(small));
    }
    if n < &BigInt::from(2) {
        return Some(false);
    }
    if n >= &proven_prime_limit() {
        return None;
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    let bases = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    'bases: for a in bases {
        let a = BigInt::from(a);
        if (n % &a).is_zero() {
            return Some(false);
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2), n);
            if x == nm1 {
                continue 'bases;
            }
        }
        return Some(false);
    }
    Some(true)
}

/// All primes `≤ limit` by the simple sieve.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|s| s <= n) {
        r += 1;
    }
    r
}

/// Segments `(lo, hi]` of the half-open prime range, each of at most `segment` integers.
pub fn segments(lo: u64, hi: u64, segment: u64) -> Vec<(u64, u64)> {
    let segment = segment.max(1);
    let mut out = Vec::new();
    let mut a = lo;
    while a < hi {
        let b = a.saturating_add(segment).min(hi);
        out.push((a, b));
        a = b;
    }
    out
}

/// Primes in `(lo, hi]` using a sieve over that window only.
///
/// `base` must contain every prime up to `√hi` (see [`primes_up_to`]).
pub fn primes_in_window(lo: u64, hi: u64, base: &[u64]) -> Vec<u64> {
    if hi <= lo || hi < 2 {
        return Vec::new();
    }
    let start = lo + 1;
    let len = (hi - lo) as usize;
    let mut composite = vec![false; len];
    let root = isqrt(hi);
    for &p in base.iter().take_while(|&&p| p <= root) {
        let first = (start.div_ceil(p) * p).max(p * p);
        let mut m = first;
        while m <= hi {
            composite[(m - start) as usize] = true;
            m += p;
        }
    }
    composite
        .iter()
        .enumerate()
        .filter(|&(i, &c)| !c && start + i as u64 >= 2)
        .map(|(i, _)| start + i as u64)
        .collect()
}

/// Primes in `(lo, hi]`, sieved segment by segment.
pub fn primes_between(lo: u64, hi: u64, segment: u64) -> Vec<u64> {
    let base = primes_up_to(isqrt(hi) + 1);
    segments(lo, hi, segment)
        .into_iter()
        .flat_map(|(a, b)| primes_in_window(a, b, &base))
        .collect()
}

/// Trial division of `|n|` by `primes`; returns the distinct prime factors
/// found and the remaining cofactor.
pub fn trial_divide(n: &BigInt, primes: &[u64]) -> (Vec<u64>, BigInt) {
    let mut rest = num_traits::Signed::abs(n);
    let mut found = Vec::new();
    if rest.is_zero() {
        return (found, rest);
    }
    for &p in primes {
        let bp = BigInt::from(p);
        if &bp * &bp > rest {
            break;
        }
        if rest.is_multiple_of(&bp) {
            found.push(p);
            while rest.is_multiple_of(&bp) {
                rest /= &bp;
            }
        }
    }
    // A cofactor below the square of the next untried prime is prime or 1.
    if let Some(r) = rest.to_u64() {
        if r > 1 && primes.binary_search(&r).is_ok() {
            found.push(r);
            rest = BigInt::one();
        }
    }
    (found, rest)
}
