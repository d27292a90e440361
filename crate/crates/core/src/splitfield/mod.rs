//! Primitive elements of splitting fields.
//!
//! The roots `α_1..α_n` of the squarefree part of `φ` are isolated in certified
//! disks. Starting from `β = α_1`, every further root `α` is probed: an integer
//! `c` is chosen so that all values `μ + c·ν` (μ a conjugate of `β`, ν a
//! conjugate of `α`) are distinct, and the minimal polynomial of `β + c·α` is
//! read off as the irreducible factor of a resultant that vanishes on the
//! corresponding disk. The root is adjoined when the degree grows.

mod isolate;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::dyadic::{CDyadic, Dyadic};
use crate::zfactor::{factor_q_with, FactorConfig};
use crate::zpoly::{gcd_q, resultant_linear_sub, IntPoly};
use crate::{Error, Result};

pub use isolate::{may_vanish, Disk};
use isolate::{isolate_squarefree, order_key};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitConfig {
    /// Starting precision of root isolation, in bits.
    pub precision_bits: u32,
    /// Precision never exceeds this many bits.
    pub precision_cap: u32,
    pub factor: FactorConfig,
}

impl Default for SplitConfig {
    fn default() -> Self {
        SplitConfig {
            precision_bits: 128,
            precision_cap: 8192,
            factor: FactorConfig::default(),
        }
    }
}

/// A certified disk holding exactly one root of `source_factor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootApprox {
    pub center: CDyadic,
    pub radius: Dyadic,
    /// Position in the canonical root order of whatever was isolated.
    pub index: usize,
    /// Squarefree (usually irreducible) polynomial the root belongs to.
    pub source_factor: IntPoly,
    /// Precision in bits at which the disk was certified.
    pub precision: u32,
}

impl RootApprox {
    pub fn disk(&self) -> Disk {
        Disk::new(self.center.clone(), self.radius.clone())
    }

    /// Same root at (at least) the given precision.
    pub fn refine(&self, precision: u32, cap: u32) -> Result<RootApprox> {
        let mut v = refine_roots(std::slice::from_ref(self), precision, cap)?;
        Ok(v.remove(0))
    }
}

fn isolate_factor(f: &IntPoly, prec: u32, cap: u32) -> Result<Vec<RootApprox>> {
    let (mut disks, p) = isolate_squarefree(f, prec, cap, None)?;
    disks.sort_by_cached_key(|d| order_key(&d.center, p));
    Ok(disks
        .into_iter()
        .enumerate()
        .map(|(index, d)| RootApprox {
            center: d.center,
            radius: d.radius,
            index,
            source_factor: f.clone(),
            precision: p,
        })
        .collect())
}

/// One certified disk per distinct complex root of `φ`, with multiplicities,
/// in canonical (real part, imaginary part) order.
pub fn isolate_roots(phi: &IntPoly, precision_bits: u32) -> Result<Vec<(RootApprox, usize)>> {
    let cfg = SplitConfig {
        precision_bits,
        ..SplitConfig::default()
    };
    isolate_roots_with(phi, &cfg)
}

pub fn isolate_roots_with(phi: &IntPoly, cfg: &SplitConfig) -> Result<Vec<(RootApprox, usize)>> {
    if phi.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if phi.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let fac = factor_q_with(phi, &cfg.factor)?;
    let mut prec = cfg.precision_bits;
    loop {
        let mut all = Vec::new();
        for (f, m) in &fac.factors {
            for r in isolate_factor(f, prec, cfg.precision_cap)? {
                all.push((r, *m));
            }
        }
        let disjoint = (0..all.len()).all(|i| {
            (i + 1..all.len()).all(|j| {
                all[i].0.source_factor == all[j].0.source_factor
                    || !all[i].0.disk().overlaps(&all[j].0.disk())
            })
        });
        if disjoint {
            let p = all.iter().map(|(r, _)| r.precision).min().unwrap_or(prec);
            all.sort_by_cached_key(|(r, _)| order_key(&r.center, p));
            for (i, (r, _)) in all.iter_mut().enumerate() {
                r.index = i;
            }
            return Ok(all);
        }
        if prec >= cfg.precision_cap {
            return Err(Error::Isolation(format!(
                "roots of distinct factors of {phi} not separated at {prec} bits"
            )));
        }
        prec = (prec * 2).min(cfg.precision_cap);
    }
}

/// Re-isolates every root at `prec` bits or more, keeping indices. A new disk
/// is matched to an old one only when it lies entirely inside it.
pub fn refine_roots(old: &[RootApprox], prec: u32, cap: u32) -> Result<Vec<RootApprox>> {
    let mut out: Vec<Option<RootApprox>> = vec![None; old.len()];
    let mut groups: Vec<(&IntPoly, Vec<usize>)> = Vec::new();
    for (i, r) in old.iter().enumerate() {
        match groups.iter_mut().find(|(f, _)| *f == &r.source_factor) {
            Some((_, v)) => v.push(i),
            None => groups.push((&r.source_factor, vec![i])),
        }
    }
    for (f, members) in groups {
        let mut p = members.iter().map(|&i| old[i].precision).max().unwrap_or(prec).max(prec);
        loop {
            let fresh = isolate_factor(f, p, cap)?;
            let matched: Vec<Option<&RootApprox>> = members
                .iter()
                .map(|&i| {
                    let od = old[i].disk();
                    let mut hits = fresh.iter().filter(|n| od.contains_disk(&n.disk()));
                    match (hits.next(), hits.next()) {
                        (Some(h), None) => Some(h),
                        _ => None,
                    }
                })
                .collect();
            if matched.iter().all(Option::is_some) {
                for (&i, m) in members.iter().zip(matched) {
                    let mut r = m.expect("checked").clone();
                    r.index = old[i].index;
                    out[i] = Some(r);
                }
                break;
            }
            if p >= cap {
                return Err(Error::Isolation(format!(
                    "could not refine roots of {f} within {cap} bits"
                )));
            }
            p = (p * 2).min(cap);
        }
    }
    Ok(out.into_iter().map(|r| r.expect("every root refined")).collect())
}

fn max_precision(roots: &[RootApprox]) -> u32 {
    roots.iter().map(|r| r.precision).max().unwrap_or(0)
}

fn separated(existing: &[RootApprox], new: &[RootApprox], c: &BigInt) -> bool {
    let sums: Vec<Disk> = existing
        .iter()
        .flat_map(|m| new.iter().map(move |n| m.disk().add_scaled(&n.disk(), c)))
        .collect();
    (0..sums.len()).all(|i| (i + 1..sums.len()).all(|j| !sums[i].overlaps(&sums[j])))
}

fn is_squarefree(f: &IntPoly) -> bool {
    gcd_q(f, &f.derivative()).is_constant()
}

fn single_source(roots: &[RootApprox], what: &'static str) -> Result<IntPoly> {
    let first = roots.first().ok_or(Error::Empty(what))?;
    if roots.iter().any(|r| r.source_factor != first.source_factor) {
        return Err(Error::Mismatch(format!("{what} come from different polynomials")));
    }
    Ok(first.source_factor.clone())
}

/// Smallest `c ≥ 1` for which the values `μ + c·ν` are pairwise distinct, where
/// `existing` holds all roots `μ` of one polynomial and `new` all roots `ν` of another.
pub fn choose_weight(existing: &[RootApprox], new: &[RootApprox]) -> Result<u64> {
    choose_weight_from(existing, new, 1, &SplitConfig::default())
}

/// As [`choose_weight`], searching `c = start, start + 1, …`.
///
/// A `c` whose disks overlap is rejected only after an exact test shows a true
/// collision (the composed resultant is not squarefree); otherwise the disks
/// are refined and the same `c` is tried again.
pub fn choose_weight_from(
    existing: &[RootApprox],
    new: &[RootApprox],
    start: u64,
    cfg: &SplitConfig,
) -> Result<u64> {
    let m = single_source(existing, "existing roots")?;
    let g = single_source(new, "new roots")?;
    let mut ex = existing.to_vec();
    let mut nw = new.to_vec();
    let mut c = start.max(1);
    loop {
        let cb = BigInt::from(c);
        if separated(&ex, &nw, &cb) {
            return Ok(c);
        }
        if !is_squarefree(&resultant_linear_sub(&m, &g, &cb)?) {
            c += 1;
            continue;
        }
        let prec = max_precision(&ex).max(max_precision(&nw)) * 2;
        if prec > cfg.precision_cap {
            return Err(Error::Isolation(format!(
                "weight {c} could not be certified within {} bits",
                cfg.precision_cap
            )));
        }
        ex = refine_roots(&ex, prec, cfg.precision_cap)?;
        nw = refine_roots(&nw, prec, cfg.precision_cap)?;
    }
}

/// Minimal polynomial of `θ + c·α`, where `M(θ) = 0` and `g(α) = 0`.
pub fn min_poly_of_sum(
    m: &IntPoly,
    g: &IntPoly,
    c: &BigInt,
    theta: &RootApprox,
    alpha: &RootApprox,
) -> Result<IntPoly> {
    min_poly_of_sum_with(m, g, c, theta, alpha, &SplitConfig::default())
}

pub fn min_poly_of_sum_with(
    m: &IntPoly,
    g: &IntPoly,
    c: &BigInt,
    theta: &RootApprox,
    alpha: &RootApprox,
    cfg: &SplitConfig,
) -> Result<IntPoly> {
    let r = resultant_linear_sub(m, g, c)?;
    let candidates: Vec<IntPoly> = factor_q_with(&r, &cfg.factor)?.irreducibles().cloned().collect();
    if candidates.len() == 1 {
        return Ok(candidates.into_iter().next().expect("one candidate"));
    }
    let mut theta = theta.clone();
    let mut alpha = alpha.clone();
    loop {
        let d = theta.disk().add_scaled(&alpha.disk(), c);
        let hits: Vec<&IntPoly> = candidates.iter().filter(|f| may_vanish(f, &d)).collect();
        match hits.len() {
            1 => return Ok(hits[0].clone()),
            0 => {
                return Err(Error::Isolation(format!(
                    "no factor of the composed resultant vanishes near the sum (c = {c})"
                )))
            }
            _ => {}
        }
        let prec = theta.precision.max(alpha.precision) * 2;
        if prec > cfg.precision_cap {
            return Err(Error::Ambiguous(format!(
                "{} factors remain possible at {} bits",
                hits.len(),
                cfg.precision_cap
            )));
        }
        theta = theta.refine(prec, cfg.precision_cap)?;
        alpha = alpha.refine(prec, cfg.precision_cap)?;
    }
}

/// One probe of the adjunction loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionStep {
    /// Canonical index of the probed root of φ.
    pub root_index: usize,
    /// Irreducible factor of φ the root belongs to.
    pub factor: IntPoly,
    pub weight: i64,
    /// Degree of the minimal polynomial of the probed combination.
    pub degree: usize,
    pub adjoined: bool,
}

#[derive(Clone, Debug)]
pub struct PrimitiveElement {
    pub phi: IntPoly,
    pub min_poly: IntPoly,
    /// One weight per distinct root of φ, canonical root order.
    pub weights: Vec<i64>,
    pub beta: RootApprox,
    /// Roots of the squarefree part of φ, canonical order.
    pub roots: Vec<RootApprox>,
    pub adjunction_trace: Vec<AdjunctionStep>,
}

/// Serializable summary of a [`PrimitiveElement`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimitiveElementRecord {
    pub phi: IntPoly,
    pub min_poly: IntPoly,
    pub weights: Vec<i64>,
    pub degree: usize,
    pub trace: Vec<AdjunctionStep>,
}

impl PrimitiveElement {
    pub fn degree(&self) -> usize {
        self.min_poly.degree().unwrap_or(0)
    }

    pub fn record(&self) -> PrimitiveElementRecord {
        PrimitiveElementRecord {
            phi: self.phi.clone(),
            min_poly: self.min_poly.clone(),
            weights: self.weights.clone(),
            degree: self.degree(),
            trace: self.adjunction_trace.clone(),
        }
    }

    /// Factors and weights for [`weighted_conjugate_product`]: one entry per root
    /// with nonzero weight, the factor being that root's irreducible factor.
    pub fn conjugate_product_data(&self) -> (Vec<IntPoly>, Vec<BigInt>) {
        self.roots
            .iter()
            .zip(&self.weights)
            .filter(|(_, &w)| w != 0)
            .map(|(r, &w)| (r.source_factor.clone(), BigInt::from(w)))
            .unzip()
    }

    /// Exact check that the minimal polynomial divides the weighted conjugate
    /// product. For non-monic φ both sides have their roots scaled by `lc(φ̃)`
    /// first, so that all roots involved are algebraic integers.
    pub fn divides_conjugate_product(&self) -> Result<bool> {
        let l = self.phi.squarefree_part()?.lc();
        let (factors, weights) = self.conjugate_product_data();
        if l.is_one() {
            let w = weighted_conjugate_product(&factors, &weights)?;
            return Ok(w.divisible_over_q(&self.min_poly));
        }
        let scaled = factors
            .iter()
            .map(|f| f.scale_roots(&l))
            .collect::<Result<Vec<_>>>()?;
        let w = weighted_conjugate_product(&scaled, &weights)?;
        Ok(w.divisible_over_q(&self.min_poly.scale_roots(&l)?))
    }
}

/// Disk containing `Σ w_i·α_i`.
fn weighted_disk(roots: &[RootApprox], weights: &[i64]) -> Disk {
    roots
        .iter()
        .zip(weights)
        .filter(|(_, &w)| w != 0)
        .fold(Disk::point(CDyadic::zero()), |acc, (r, &w)| {
            acc.add_scaled(&r.disk(), &BigInt::from(w))
        })
}

/// The root of `m` equal to `Σ w_i·α_i`.
fn locate_beta(m: &IntPoly, roots: &[RootApprox], weights: &[i64], cfg: &SplitConfig) -> Result<RootApprox> {
    let used: Vec<usize> = (0..roots.len()).filter(|&i| weights[i] != 0).collect();
    let mut cur: Vec<RootApprox> = used.iter().map(|&i| roots[i].clone()).collect();
    let w: Vec<i64> = used.iter().map(|&i| weights[i]).collect();
    let mut prec = max_precision(&cur).max(cfg.precision_bits);
    loop {
        let d = weighted_disk(&cur, &w);
        let conj = isolate_factor(m, prec, cfg.precision_cap)?;
        let mut hits = conj.into_iter().filter(|r| r.disk().overlaps(&d));
        match (hits.next(), hits.next()) {
            (Some(h), None) => return Ok(h),
            (None, _) => {
                return Err(Error::Isolation(format!(
                    "no root of {m} lies near the weighted sum"
                )))
            }
            _ => {}
        }
        if prec >= cfg.precision_cap {
            return Err(Error::Ambiguous(format!(
                "weighted sum not matched to a single root of {m}"
            )));
        }
        prec = (prec * 2).min(cfg.precision_cap);
        cur = refine_roots(&cur, prec, cfg.precision_cap)?;
    }
}

pub fn primitive_element(phi: &IntPoly) -> Result<PrimitiveElement> {
    primitive_element_with(phi, &SplitConfig::default(), 0)
}

/// Primitive element with all weights searched from `1 + offset` upward. The
/// first root enters with weight `1 + offset`.
///
/// Roots that provably lie in the current field are not probed: the last root
/// of each factor, and every root once the degree reaches `∏ (deg f)!`.
pub fn primitive_element_with(phi: &IntPoly, cfg: &SplitConfig, offset: u64) -> Result<PrimitiveElement> {
    if phi.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if phi.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let sf = phi.squarefree_part()?;
    let roots: Vec<RootApprox> = isolate_roots_with(&sf, cfg)?.into_iter().map(|(r, _)| r).collect();
    let factors: Vec<IntPoly> = factor_q_with(&sf, &cfg.factor)?.irreducibles().cloned().collect();
    let factor_pos = |f: &IntPoly| factors.iter().position(|g| g == f).expect("root of a listed factor");
    let mut order: Vec<usize> = (0..roots.len()).collect();
    order.sort_by_key(|&i| (factor_pos(&roots[i].source_factor), i));

    let start = 1 + offset;
    let w0 = i64::try_from(start).map_err(|_| Error::Mismatch("offset too large".into()))?;
    let mut weights = vec![0i64; roots.len()];
    let first = order[0];
    let mut m = roots[first].source_factor.scale_roots(&BigInt::from(w0))?;
    weights[first] = w0;
    let mut trace = vec![AdjunctionStep {
        root_index: first,
        factor: roots[first].source_factor.clone(),
        weight: w0,
        degree: m.deg(),
        adjoined: true,
    }];

    // [ℚ(U) : ℚ] ≤ ∏ (deg f)! over the irreducible factors f.
    let ceiling = factors
        .iter()
        .map(|f| (1..=f.deg() as u128).fold(1u128, |a, k| a.saturating_mul(k)))
        .fold(1u128, |a, b| a.saturating_mul(b));
    for (pos, &j) in order.iter().enumerate().skip(1) {
        if m.deg() as u128 >= ceiling {
            break;
        }
        // The last root of a factor is rational minus the sum of the others,
        // all of which already lie in ℚ(β).
        let last_of_factor = order
            .get(pos + 1)
            .is_none_or(|&k| roots[k].source_factor != roots[j].source_factor);
        if last_of_factor {
            continue;
        }
        let alpha = &roots[j];
        let g = &alpha.source_factor;
        let conj = isolate_factor(&m, cfg.precision_bits, cfg.precision_cap)?;
        let g_roots: Vec<RootApprox> = roots.iter().filter(|r| &r.source_factor == g).cloned().collect();
        let c = choose_weight_from(&conj, &g_roots, start, cfg)?;
        let theta = locate_beta(&m, &roots, &weights, cfg)?;
        let cand = min_poly_of_sum_with(&m, g, &BigInt::from(c), &theta, alpha, cfg)?;
        let adjoined = cand.deg() > m.deg();
        let weight = i64::try_from(c).map_err(|_| Error::Mismatch("weight overflow".into()))?;
        trace.push(AdjunctionStep {
            root_index: j,
            factor: g.clone(),
            weight,
            degree: cand.deg(),
            adjoined,
        });
        if adjoined {
            m = cand;
            weights[j] = weight;
        }
    }
    let beta = locate_beta(&m, &roots, &weights, cfg)?;
    Ok(PrimitiveElement {
        phi: phi.clone(),
        min_poly: m,
        weights,
        beta,
        roots,
        adjunction_trace: trace,
    })
}

/// `∏ (X - Σ_k γ_k·ν_k)` over all tuples of roots `ν_k` of `factors[k]`,
/// times a power product of the leading coefficients (1 for monic factors).
pub fn weighted_conjugate_product(factors: &[IntPoly], weights: &[BigInt]) -> Result<IntPoly> {
    if factors.is_empty() {
        return Err(Error::Empty("factor list"));
    }
    if factors.len() != weights.len() {
        return Err(Error::Mismatch(format!(
            "{} factors but {} weights",
            factors.len(),
            weights.len()
        )));
    }
    let mut acc = IntPoly::x();
    for (f, w) in factors.iter().zip(weights) {
        if f.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        acc = resultant_linear_sub(&acc, f, w)?;
    }
    Ok(acc)
}

pub fn family(phi: &IntPoly, k: usize) -> Result<Vec<PrimitiveElement>> {
    family_with(phi, k, &SplitConfig::default())
}

/// `k` primitive elements with pairwise distinct minimal polynomials, from
/// weight searches offset by 0, 1, 2, …
pub fn family_with(phi: &IntPoly, k: usize, cfg: &SplitConfig) -> Result<Vec<PrimitiveElement>> {
    if k == 0 {
        return Err(Error::Empty("family size"));
    }
    let mut out: Vec<PrimitiveElement> = Vec::with_capacity(k);
    let mut offset = 0u64;
    while out.len() < k {
        if offset > 64 * k as u64 + 64 {
            return Err(Error::Ambiguous(format!(
                "only {} distinct generators found for {phi}",
                out.len()
            )));
        }
        let pe = primitive_element_with(phi, cfg, offset)?;
        offset += 1;
        if let Some(first) = out.first() {
            if first.degree() != pe.degree() {
                return Err(Error::Mismatch(format!(
                    "generator degrees {} and {} differ",
                    first.degree(),
                    pe.degree()
                )));
            }
        }
        if out.iter().all(|q| q.min_poly != pe.min_poly) {
            out.push(pe);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zfactor::is_irreducible_q;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn roots_of(f: &IntPoly) -> Vec<RootApprox> {
        isolate_factor(f, 128, 8192).unwrap()
    }

    #[test]
    fn isolation_examples() {
        let r = isolate_roots(&p(&[1, 0, 1]), 128).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r[0].0.center.im.is_negative());
        assert_eq!(r.iter().map(|x| x.1).collect::<Vec<_>>(), vec![1, 1]);

        let r = isolate_roots(&p(&[2, -3, 0, 1]), 128).unwrap();
        let summary: Vec<(f64, usize)> = r.iter().map(|(a, m)| (a.center.re.to_f64(), *m)).collect();
        assert_eq!(summary.len(), 2);
        assert!((summary[0].0 + 2.0).abs() < 1e-20 && summary[0].1 == 1);
        assert!((summary[1].0 - 1.0).abs() < 1e-20 && summary[1].1 == 2);
    }

    #[test]
    fn weight_examples() {
        let r2 = roots_of(&p(&[-2, 0, 1]));
        let r3 = roots_of(&p(&[-3, 0, 1]));
        assert_eq!(choose_weight(&r2, &r3).unwrap(), 1);
        assert_eq!(choose_weight(&r2, &r2).unwrap(), 2);
        let a = roots_of(&p(&[-1, 1]));
        let b = roots_of(&p(&[-2, 1]));
        assert_eq!(choose_weight(&a, &b).unwrap(), 1);
    }

    #[test]
    fn min_poly_examples() {
        let r2 = roots_of(&p(&[-2, 0, 1]));
        let r3 = roots_of(&p(&[-3, 0, 1]));
        let sqrt2 = &r2[1];
        let sqrt3 = &r3[1];
        let got = min_poly_of_sum(&p(&[-2, 0, 1]), &p(&[-3, 0, 1]), &BigInt::from(1), sqrt2, sqrt3).unwrap();
        assert_eq!(got, p(&[1, 0, -10, 0, 1]));

        let one = &roots_of(&p(&[-1, 1]))[0];
        let two = &roots_of(&p(&[-2, 1]))[0];
        let got = min_poly_of_sum(&p(&[-1, 1]), &p(&[-2, 1]), &BigInt::from(1), one, two).unwrap();
        assert_eq!(got, p(&[-3, 1]));

        let ri = roots_of(&p(&[1, 0, 1]));
        let (minus_i, i) = (&ri[0], &ri[1]);
        let got = min_poly_of_sum(&p(&[1, 0, 1]), &p(&[1, 0, 1]), &BigInt::from(2), i, minus_i).unwrap();
        assert_eq!(got, p(&[1, 0, 1]));
    }

    #[test]
    fn primitive_element_examples() {
        let pe = primitive_element(&p(&[2, -3, 1])).unwrap();
        assert_eq!(pe.degree(), 1);
        let pe = primitive_element(&p(&[1, 0, 1])).unwrap();
        assert_eq!(pe.min_poly, p(&[1, 0, 1]));
        let pe = primitive_element(&p(&[1, 0, -10, 0, 1])).unwrap();
        assert_eq!(pe.degree(), 4);
        assert!(pe.divides_conjugate_product().unwrap());
    }

    #[test]
    fn cube_root_of_two() {
        let pe = primitive_element(&p(&[-2, 0, 0, 1])).unwrap();
        assert_eq!(pe.degree(), 6);
        assert!(is_irreducible_q(&pe.min_poly).unwrap());
        assert!(may_vanish(&pe.min_poly, &pe.beta.disk()));
        assert!(pe.divides_conjugate_product().unwrap());
        assert_eq!(pe.weights.len(), 3);
    }

    #[test]
    fn conjugate_product_examples() {
        let one = BigInt::from(1);
        let got = weighted_conjugate_product(&[p(&[-2, 0, 1]), p(&[-3, 0, 1])], &[one.clone(), one.clone()]).unwrap();
        assert_eq!(got, p(&[1, 0, -10, 0, 1]));
        assert_eq!(weighted_conjugate_product(&[p(&[-5, 1])], &[BigInt::from(2)]).unwrap(), p(&[-10, 1]));
        assert_eq!(weighted_conjugate_product(&[p(&[-2, 0, 1])], &[one]).unwrap(), p(&[-2, 0, 1]));
        assert!(weighted_conjugate_product(&[], &[]).is_err());
    }

    #[test]
    fn family_examples() {
        let fam = family(&p(&[-2, 0, 1]), 2).unwrap();
        assert_eq!(fam[0].min_poly, p(&[-2, 0, 1]));
        assert_eq!(fam[1].min_poly, p(&[-8, 0, 1]));
        let fam = family(&p(&[2, -3, 1]), 3).unwrap();
        assert!(fam.iter().all(|e| e.degree() == 1));
        assert_ne!(fam[0].min_poly, fam[2].min_poly);
    }

    #[test]
    fn non_monic_input() {
        let pe = primitive_element(&p(&[1, 3, 2])).unwrap();
        assert_eq!(pe.degree(), 1);
        let pe = primitive_element(&p(&[1, 0, 4])).unwrap();
        assert_eq!(pe.degree(), 2);
        assert!(pe.divides_conjugate_product().unwrap());
    }
}
