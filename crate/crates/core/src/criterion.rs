//! Prime scans of the splitting criterion.
//!
//! For primes `p` above a bound `B` that excludes every prime dividing a
//! leading coefficient or discriminant, a scan records whether `φ` splits
//! into linear factors mod `p`, whether `P` has a root mod `p`, and whether `P`
//! splits mod `p`. The three answers must agree; any disagreement is a violation.

use std::io::Write;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::fpoly::{reduce, MAX_MODULUS};
use crate::primes::{is_prime_big, primes_in_window, primes_up_to, segments, trial_divide};
use crate::zpoly::{discriminant, IntPoly};
use crate::{Error, Result};

/// Primes up to this limit are found by trial division in [`bad_prime_bound`].
pub const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;
/// Trial-division limit of [`schur_search`].
pub const SCHUR_SIEVE_LIMIT: u64 = 100_000;

fn saturate(n: &BigInt) -> u64 {
    n.abs().to_u64().unwrap_or(u64::MAX)
}

/// Largest prime factor of `|n|` found by trial division up to
/// [`TRIAL_DIVISION_LIMIT`]; an unfactored cofactor counts as a factor itself.
fn largest_factor(n: &BigInt, base: &[u64]) -> u64 {
    if n.is_zero() {
        return 0;
    }
    let (found, rest) = trial_divide(n, base);
    let largest = found.into_iter().max().unwrap_or(0);
    if rest > BigInt::from(1) {
        largest.max(saturate(&rest))
    } else {
        largest
    }
}

/// Bound `B` such that no prime above `B` divides `lc(φ)`, `lc(P)`,
/// `disc(squarefree part of φ)` or `disc(P)`.
pub fn bad_prime_bound(phi: &IntPoly, p_poly: &IntPoly) -> Result<u64> {
    if phi.is_constant() || p_poly.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let base = primes_up_to(TRIAL_DIVISION_LIMIT);
    let sf = phi.squarefree_part()?;
    let mut b = saturate(&phi.lc()).max(saturate(&p_poly.lc()));
    for f in [&sf, p_poly] {
        if f.degree() >= Some(2) {
            b = b.max(largest_factor(&discriminant(f)?, &base));
        }
    }
    Ok(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeRecord {
    pub p: u64,
    pub phi_splits: bool,
    pub p_has_root: bool,
    pub p_splits: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Equivalence {
    /// φ splits mod p ⟺ P has a root mod p.
    PhiSplitsIffPHasRoot,
    /// P has a root mod p ⟺ P splits mod p.
    PHasRootIffPSplits,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub p: u64,
    pub failed: Equivalence,
}

impl PrimeRecord {
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.phi_splits != self.p_has_root {
            out.push(Violation {
                p: self.p,
                failed: Equivalence::PhiSplitsIffPHasRoot,
            });
        }
        if self.p_has_root != self.p_splits {
            out.push(Violation {
                p: self.p,
                failed: Equivalence::PHasRootIffPSplits,
            });
        }
        out
    }
}

/// Evaluates the three predicates at one prime. Any prime is accepted; below
/// the bad-prime bound the answers need not agree.
pub fn record_prime(phi: &IntPoly, p_poly: &IntPoly, p: u64) -> Result<PrimeRecord> {
    let split = |f: &IntPoly| -> Result<bool> {
        let m = reduce(f, p)?;
        match m.degree() {
            None => Err(Error::ZeroPolynomial),
            Some(0) => Ok(true),
            _ => m.splits_completely(),
        }
    };
    let pm = reduce(p_poly, p)?;
    let p_has_root = match pm.degree() {
        None => true,
        Some(0) => false,
        _ => pm.has_root()?,
    };
    Ok(PrimeRecord {
        p,
        phi_splits: split(phi)?,
        p_has_root,
        p_splits: split(p_poly)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub phi: IntPoly,
    pub p_poly: IntPoly,
    pub bad_bound: u64,
    /// Half-open prime range `(lo, hi]`.
    pub range: (u64, u64),
    pub records: Vec<PrimeRecord>,
    pub violations: Vec<Violation>,
}

impl ScanReport {
    pub fn n_primes(&self) -> usize {
        self.records.len()
    }

    pub fn n_split(&self) -> usize {
        self.records.iter().filter(|r| r.phi_splits).count()
    }

    pub fn record(&self, p: u64) -> Option<&PrimeRecord> {
        self.records
            .binary_search_by_key(&p, |r| r.p)
            .ok()
            .map(|i| &self.records[i])
    }

    pub fn split_primes(&self) -> Vec<u64> {
        self.records.iter().filter(|r| r.phi_splits).map(|r| r.p).collect()
    }

    /// Concatenates the reports of adjacent ranges `(a, m]` and `(m, b]`.
    pub fn merge(mut self, other: ScanReport) -> Result<ScanReport> {
        if self.phi != other.phi || self.p_poly != other.p_poly || self.bad_bound != other.bad_bound {
            return Err(Error::Mismatch("reports are for different inputs".into()));
        }
        if self.range.1 != other.range.0 {
            return Err(Error::Mismatch(format!(
                "ranges ({}, {}] and ({}, {}] are not adjacent",
                self.range.0, self.range.1, other.range.0, other.range.1
            )));
        }
        self.range.1 = other.range.1;
        self.records.extend(other.records);
        self.violations.extend(other.violations);
        Ok(self)
    }

    pub fn summary(&self) -> ScanSummary {
        ScanSummary {
            phi: self.phi.clone(),
            p_poly: self.p_poly.clone(),
            bound: self.bad_bound,
            p_max: self.range.1,
            n_primes: self.n_primes(),
            n_split: self.n_split(),
            violations: self.violations.clone(),
        }
    }

    /// CSV with header `p,phi_splits,p_has_root,p_splits` and 0/1 booleans.
    pub fn write_csv<W: Write>(&self, w: &mut W) -> std::io::Result<()> {
        writeln!(w, "{CSV_HEADER}")?;
        write_csv_rows(&self.records, w)
    }
}

pub const CSV_HEADER: &str = "p,phi_splits,p_has_root,p_splits";

pub fn write_csv_rows<W: Write>(records: &[PrimeRecord], w: &mut W) -> std::io::Result<()> {
    for r in records {
        writeln!(
            w,
            "{},{},{},{}",
            r.p, r.phi_splits as u8, r.p_has_root as u8, r.p_splits as u8
        )?;
    }
    Ok(())
}

/// JSON summary of a scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub phi: IntPoly,
    #[serde(rename = "P")]
    pub p_poly: IntPoly,
    #[serde(rename = "B")]
    pub bound: u64,
    pub p_max: u64,
    pub n_primes: usize,
    pub n_split: usize,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    /// Integers per sieve segment.
    pub segment_size: u64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            segment_size: 1 << 20,
        }
    }
}

/// Scan of every prime in `(B, p_max]` with `B` from [`bad_prime_bound`].
pub fn scan(phi: &IntPoly, p_poly: &IntPoly, p_max: u64) -> Result<ScanReport> {
    scan_with(phi, p_poly, p_max, &ScanConfig::default(), |_| Ok(()))
}

/// As [`scan`], handing each finished segment's records to `sink` in
/// increasing order of primes (for incremental output).
pub fn scan_with<F>(phi: &IntPoly, p_poly: &IntPoly, p_max: u64, cfg: &ScanConfig, sink: F) -> Result<ScanReport>
where
    F: FnMut(&[PrimeRecord]) -> Result<()>,
{
    let bound = bad_prime_bound(phi, p_poly)?;
    if p_max <= bound {
        return Err(Error::RangeTooSmall { p_max, bound });
    }
    scan_range(phi, p_poly, bound, bound, p_max, cfg, sink)
}

/// Scan of the primes in `(lo, hi]` against a given bound `bound ≤ lo`.
pub fn scan_range<F>(
    phi: &IntPoly,
    p_poly: &IntPoly,
    bound: u64,
    lo: u64,
    hi: u64,
    cfg: &ScanConfig,
    mut sink: F,
) -> Result<ScanReport>
where
    F: FnMut(&[PrimeRecord]) -> Result<()>,
{
    if hi >= MAX_MODULUS {
        return Err(Error::ModulusTooLarge(hi));
    }
    if lo < bound || hi < lo {
        return Err(Error::Mismatch(format!("range ({lo}, {hi}] not above bound {bound}")));
    }
    let root = (hi as f64).sqrt() as u64 + 2;
    let base = primes_up_to(root);
    let segs = segments(lo, hi, cfg.segment_size);
    let batch = rayon::current_num_threads().max(1);
    let mut records = Vec::new();
    for chunk in segs.chunks(batch) {
        let done: Vec<Vec<PrimeRecord>> = chunk
            .par_iter()
            .map(|&(a, b)| {
                primes_in_window(a, b, &base)
                    .into_iter()
                    .map(|p| record_prime(phi, p_poly, p))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        for seg in done {
            sink(&seg)?;
            records.extend(seg);
        }
    }
    let violations = records.iter().flat_map(PrimeRecord::violations).collect();
    Ok(ScanReport {
        phi: phi.clone(),
        p_poly: p_poly.clone(),
        bad_bound: bound,
        range: (lo, hi),
        records,
        violations,
    })
}

/// A prime `q` dividing the nonzero value `P(m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurWitness {
    pub q: BigInt,
    pub m: BigInt,
    pub value: BigInt,
}

impl SchurWitness {
    /// Independent re-check against `P`: `value = P(m) ≠ 0`, `q | value`, `q` prime.
    pub fn validate(&self, p_poly: &IntPoly) -> bool {
        !self.value.is_zero()
            && p_poly.eval(&self.m) == self.value
            && (&self.value % &self.q).is_zero()
            && is_prime_big(&self.q) == Some(true)
    }
}

/// Distinct prime divisors of values `P(m)`, `m = 0, 1, -1, 2, -2, …, ±m_max`,
/// in order of discovery; stops after `count`. Fewer are returned when the
/// range of `m` is exhausted first.
pub fn schur_search(p_poly: &IntPoly, count: usize, m_max: u64) -> Result<Vec<SchurWitness>> {
    if p_poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p_poly.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let base = primes_up_to(SCHUR_SIEVE_LIMIT);
    let mut out: Vec<SchurWitness> = Vec::new();
    let ms = std::iter::once(0i128).chain((1..=m_max as i128).flat_map(|k| [k, -k]));
    for m in ms {
        if out.len() >= count {
            break;
        }
        let m = BigInt::from(m);
        let value = p_poly.eval(&m);
        if value.is_zero() {
            continue;
        }
        let (found, rest) = trial_divide(&value, &base);
        let mut primes: Vec<BigInt> = found.into_iter().map(BigInt::from).collect();
        if rest > BigInt::from(1) && is_prime_big(&rest) == Some(true) {
            primes.push(rest);
        }
        for q in primes {
            if out.len() < count && out.iter().all(|w| w.q != q) {
                out.push(SchurWitness {
                    q,
                    m: m.clone(),
                    value: value.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// True iff every witness prime in the report's range is a split prime of φ.
pub fn cross_check(witnesses: &[SchurWitness], report: &ScanReport) -> Result<bool> {
    for w in witnesses {
        if !w.validate(&report.p_poly) {
            return Err(Error::Mismatch(format!(
                "witness q = {} at m = {} is not valid for {}",
                w.q, w.m, report.p_poly
            )));
        }
        let q = match w.q.to_u64() {
            Some(q) if q > report.range.0 && q <= report.range.1 => q,
            _ => continue,
        };
        match report.record(q) {
            Some(r) if r.phi_splits => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Empirical split frequency next to the heuristic value `1/deg P`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityStats {
    pub split_fraction: f64,
    pub expected: f64,
    pub sample_size: usize,
}

pub fn density_stats(report: &ScanReport) -> Result<DensityStats> {
    if report.records.is_empty() {
        return Err(Error::Empty("scan report"));
    }
    let d = report.p_poly.degree().unwrap_or(1).max(1);
    Ok(DensityStats {
        split_fraction: report.n_split() as f64 / report.n_primes() as f64,
        expected: 1.0 / d as f64,
        sample_size: report.n_primes(),
    })
}
