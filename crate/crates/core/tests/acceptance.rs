//! Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use splitq::criterion::{bad_prime_bound, cross_check, density_stats, scan, schur_search, ScanReport};
use splitq::criterion::Equivalence;
use splitq::fpoly::reduce;
use splitq::splitfield::{family, min_poly_of_sum, primitive_element, weighted_conjugate_product, PrimitiveElement};
use splitq::splitfield::isolate_roots;
use splitq::zpoly::bezout_bound;
use splitq::IntPoly;

use common::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

struct Ctx {
    corpus: Vec<IntPoly>,
    elements: Vec<PrimitiveElement>,
    bounds: Vec<u64>,
    reports: Vec<ScanReport>,
    serial_time: Duration,
    parallel_time: Duration,
}

fn splits(f: &IntPoly, p: u64) -> bool {
    reduce(f, p).unwrap().splits_completely().unwrap()
}

fn has_root(f: &IntPoly, p: u64) -> bool {
    reduce(f, p).unwrap().has_root().unwrap()
}

fn c1_small_prime_oracle(ctx: &Ctx) -> Outcome {
    let start = Instant::now();
    let primes = small_primes(1000);
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for ((phi, pe), &b) in ctx.corpus.iter().zip(&ctx.elements).zip(&ctx.bounds) {
        for &p in primes.iter().filter(|&&p| p > b) {
            checked += 1;
            let ok = splits(phi, p) == brute_splits(phi, p)
                && has_root(&pe.min_poly, p) == brute_has_root(&pe.min_poly, p)
                && splits(&pe.min_poly, p) == brute_splits(&pe.min_poly, p);
            if !ok {
                mismatches.push(format!("{phi} @ {p}"));
            }
        }
    }
    let t = start.elapsed();
    outcome(
        mismatches.is_empty() && t < Duration::from_secs(10),
        format!(
            "{checked} (polynomial, prime) pairs, {} mismatches {:?}, {:.2}s (target < 10s)",
            mismatches.len(),
            mismatches,
            t.as_secs_f64()
        ),
    )
}

fn count_kind(ctx: &Ctx, kind: Equivalence) -> usize {
    ctx.reports
        .iter()
        .flat_map(|r| &r.violations)
        .filter(|v| v.failed == kind)
        .count()
}

fn c2_result1(ctx: &Ctx) -> Outcome {
    let n = count_kind(ctx, Equivalence::PhiSplitsIffPHasRoot);
    let primes: usize = ctx.reports.iter().map(ScanReport::n_primes).sum();
    let threads = rayon::current_num_threads();
    outcome(
        n == 0 && ctx.serial_time < Duration::from_secs(120),
        format!(
            "{primes} primes over 10 polynomials, {n} violations; 1 worker {:.2}s (target < 120s), {threads} workers {:.2}s (speedup {:.2}x)",
            ctx.serial_time.as_secs_f64(),
            ctx.parallel_time.as_secs_f64(),
            ctx.serial_time.as_secs_f64() / ctx.parallel_time.as_secs_f64().max(1e-9)
        ),
    )
}

fn c3_result2(ctx: &Ctx) -> Outcome {
    let n = count_kind(ctx, Equivalence::PHasRootIffPSplits);
    outcome(n == 0, format!("{n} violations of 'P has a root iff P splits'"))
}

fn c4_reciprocity(ctx: &Ctx) -> Outcome {
    let rules: [(usize, &str, fn(u64) -> bool); 3] = [
        (0, "p = 1 mod 4", |p| p % 4 == 1),
        (1, "p = +-1 mod 8", |p| p % 8 == 1 || p % 8 == 7),
        (2, "p = 1 mod 3", |p| p % 3 == 1),
    ];
    let mut details = Vec::new();
    let mut pass = true;
    for (i, name, rule) in rules {
        let report = &ctx.reports[i];
        let lo = report.range.0.max(2);
        let got = report.split_primes();
        let expected: Vec<u64> = report.records.iter().map(|r| r.p).filter(|&p| p > lo && rule(p)).collect();
        let same = got == expected;
        pass &= same;
        details.push(format!("{}: {} split primes in ({lo}, 1e5] vs {name}: {}", ctx.corpus[i], got.len(), if same { "equal" } else { "DIFFER" }));
    }
    outcome(pass, details.join("; "))
}

fn c5_composed_sum() -> Outcome {
    let (a, b) = (poly(&[-2, 0, 1]), poly(&[-3, 0, 1]));
    let target = poly(&[1, 0, -10, 0, 1]);
    let ra = isolate_roots(&a, 128).unwrap();
    let rb = isolate_roots(&b, 128).unwrap();
    // Positive roots come last in canonical order.
    let mp = min_poly_of_sum(&a, &b, &BigInt::one(), &ra[1].0, &rb[1].0).unwrap();
    let w = weighted_conjugate_product(&[a, b], &[BigInt::one(), BigInt::one()]).unwrap();
    outcome(mp == target && w == target, format!("min poly of sqrt2+sqrt3 = {mp}; weighted product = {w}"))
}

/// Independent degree derivations: rational roots give 1; an irreducible
/// quadratic gives 2; an irreducible cubic gives 3 or 6 by whether its
/// discriminant `-4a^3 - 27b^2` (for `X^3 + aX + b`) is a square; the
/// biquadratic field of sqrt2, sqrt3 has degree 4.
fn c6_degrees(ctx: &Ctx) -> Outcome {
    let is_square = |n: &BigInt| !n.is_negative() && n.sqrt().pow(2) == *n;
    let cubic_disc = |a: i64, b: i64| BigInt::from(-4 * a * a * a - 27 * b * b);
    let cases: Vec<(usize, usize, String)> = vec![
        (3, 1, "roots 1, 2 rational".into()),
        (0, if is_square(&BigInt::from(-4)) { 1 } else { 2 }, "disc -4 not a square".into()),
        (8, 4, "Q(sqrt2, sqrt3) has degree 4".into()),
        (5, if is_square(&cubic_disc(0, -2)) { 3 } else { 6 }, format!("disc {} not a square", cubic_disc(0, -2))),
        (6, if is_square(&cubic_disc(-1, -1)) { 3 } else { 6 }, format!("disc {} not a square", cubic_disc(-1, -1))),
    ];
    let mut pass = true;
    let mut details = Vec::new();
    for (i, expected, why) in cases {
        let got = ctx.elements[i].degree();
        pass &= got == expected;
        details.push(format!("{} -> {got} (expected {expected}: {why})", ctx.corpus[i]));
    }
    outcome(pass, details.join("; "))
}

fn c7_lemma1() -> Outcome {
    let mut pairs = vec![
        (poly(&[0, 1]), poly(&[2, 1])),
        (poly(&[0, 1]), poly(&[1, 1])),
        (poly(&[1, 0, 1]), poly(&[-1, 0, 1])),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    while pairs.len() < 50 {
        let r = random_poly(&mut rng, 4, 9);
        let s = random_poly(&mut rng, 4, 9);
        if r.is_constant() || s.is_constant() || !splitq::zpoly::gcd_q(&r, &s).is_constant() {
            continue;
        }
        pairs.push((r, s));
    }
    let mut failures = 0;
    let mut max_lambda = BigInt::zero();
    for (r, s) in &pairs {
        let cert = bezout_bound(r, s).unwrap();
        if cert.lambda > max_lambda {
            max_lambda = cert.lambda.clone();
        }
        for t in -1000i64..=1000 {
            let g = r.eval_i64(t).gcd(&s.eval_i64(t));
            if g.is_zero() || !(&cert.lambda % &g).is_zero() {
                failures += 1;
            }
        }
    }
    outcome(
        failures == 0,
        format!("{} pairs x 2001 values of t, {failures} failures (largest lambda {max_lambda})", pairs.len()),
    )
}

fn c8_lemma3(ctx: &Ctx) -> Outcome {
    let primes = small_primes(20_000);
    let mut checked = 0;
    let mut failures = Vec::new();
    for (phi, &b) in ctx.corpus.iter().zip(&ctx.bounds) {
        for theta in [2i64, 3, 5, -2] {
            let scaled = phi.scale_roots(&BigInt::from(theta)).unwrap();
            let floor = b.max(theta.unsigned_abs());
            for &p in primes.iter().filter(|&&p| p > floor).take(100) {
                checked += 1;
                if splits(phi, p) != splits(&scaled, p) || brute_splits(phi, p) != brute_splits(&scaled, p) {
                    failures.push(format!("{phi}, theta {theta}, p {p}"));
                }
            }
        }
    }
    outcome(failures.is_empty(), format!("{checked} checks, {} failures {:?}", failures.len(), failures))
}

fn c9_gauss() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut pairs = 0;
    let mut failures = 0;
    while pairs < 1000 {
        let a = random_poly(&mut rng, 8, 50);
        let b = random_poly(&mut rng, 8, 50);
        if a.content().unwrap() != BigInt::one() || b.content().unwrap() != BigInt::one() {
            continue;
        }
        pairs += 1;
        if (&a * &b).content().unwrap() != BigInt::one() {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("{pairs} primitive pairs, {failures} with nontrivial content"))
}

fn c10_divisibility(ctx: &Ctx) -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for (phi, pe) in ctx.corpus.iter().zip(&ctx.elements) {
        let ok = pe.divides_conjugate_product().unwrap();
        pass &= ok;
        if !ok {
            details.push(format!("{phi}: min poly does not divide"));
        }
    }
    outcome(pass, format!("{} polynomials, {} failures {:?}", ctx.corpus.len(), details.len(), details))
}

fn c11_schur(ctx: &Ctx) -> Outcome {
    let mut pass = true;
    let mut details = Vec::new();
    for (pe, report) in ctx.elements.iter().zip(&ctx.reports) {
        let ws = schur_search(&pe.min_poly, 10, 1_000_000).unwrap();
        let valid = ws.iter().all(|w| w.validate(&pe.min_poly));
        let cross = cross_check(&ws, report).unwrap();
        let ok = ws.len() >= 10 && valid && cross;
        pass &= ok;
        if !ok {
            details.push(format!("{}: {} primes, valid {valid}, cross-check {cross}", pe.min_poly, ws.len()));
        }
    }
    outcome(pass, format!("10 polynomials, >= 10 Schur primes each; failures {:?}", details))
}

fn c12_family(ctx: &Ctx) -> Outcome {
    let primes = small_primes(10_000);
    let mut pass = true;
    let mut details = Vec::new();
    for phi in &ctx.corpus {
        let fam = family(phi, 3).unwrap();
        let distinct = fam[0].min_poly != fam[1].min_poly
            && fam[0].min_poly != fam[2].min_poly
            && fam[1].min_poly != fam[2].min_poly;
        let same_degree = fam.iter().all(|e| e.degree() == fam[0].degree());
        let b = fam.iter().map(|e| bad_prime_bound(phi, &e.min_poly).unwrap()).max().unwrap();
        let mut discrepancies = 0;
        for &p in primes.iter().filter(|&&p| p > b) {
            let phi_split = brute_splits(phi, p);
            if fam.iter().any(|e| has_root(&e.min_poly, p) != phi_split) {
                discrepancies += 1;
            }
        }
        let ok = distinct && same_degree && discrepancies == 0;
        pass &= ok;
        details.push(format!("{phi}: degree {}, B' {b}{}", fam[0].degree(), if ok { "" } else { " FAILED" }));
    }
    outcome(pass, details.join("; "))
}

fn c13_density(ctx: &Ctx) -> Outcome {
    let cube = density_stats(&ctx.reports[5]).unwrap();
    let gauss = density_stats(&ctx.reports[0]).unwrap();
    let ok = (cube.split_fraction - 1.0 / 6.0).abs() <= 0.02 && (gauss.split_fraction - 0.5).abs() <= 0.02;
    outcome(
        ok,
        format!(
            "X^3-2: {:.4} over {} primes (1/6 +- 0.02); X^2+1: {:.4} over {} primes (1/2 +- 0.02)",
            cube.split_fraction, cube.sample_size, gauss.split_fraction, gauss.sample_size
        ),
    )
}

fn scan_all(corpus: &[IntPoly], elements: &[PrimitiveElement]) -> Vec<ScanReport> {
    corpus
        .iter()
        .zip(elements)
        .map(|(phi, pe)| scan(phi, &pe.min_poly, 100_000).unwrap())
        .collect()
}

fn main() {
    let corpus = corpus();
    let elements: Vec<PrimitiveElement> = corpus.iter().map(|f| primitive_element(f).unwrap()).collect();
    let bounds: Vec<u64> = corpus
        .iter()
        .zip(&elements)
        .map(|(f, e)| bad_prime_bound(f, &e.min_poly).unwrap())
        .collect();

    let serial_pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let t = Instant::now();
    let reports = serial_pool.install(|| scan_all(&corpus, &elements));
    let serial_time = t.elapsed();
    let t = Instant::now();
    let parallel = scan_all(&corpus, &elements);
    let parallel_time = t.elapsed();
    assert_eq!(parallel, reports, "parallel and serial scans differ");

    let ctx = Ctx {
        corpus,
        elements,
        bounds,
        reports,
        serial_time,
        parallel_time,
    };

    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "iff criterion vs brute force, p <= 1000", c1_small_prime_oracle(&ctx)),
        (2, "phi splits iff P has a root, p <= 1e5", c2_result1(&ctx)),
        (3, "P has a root iff P splits, p <= 1e5", c3_result2(&ctx)),
        (4, "reciprocity patterns", c4_reciprocity(&ctx)),
        (5, "composed-sum exactness", c5_composed_sum()),
        (6, "splitting-field degrees", c6_degrees(&ctx)),
        (7, "gcd(R(t), S(t)) divides lambda", c7_lemma1()),
        (8, "split preservation under root scaling", c8_lemma3(&ctx)),
        (9, "product of primitive polynomials is primitive", c9_gauss()),
        (10, "min poly divides weighted conjugate product", c10_divisibility(&ctx)),
        (11, "Schur primes and cross-check", c11_schur(&ctx)),
        (12, "family coherence", c12_family(&ctx)),
        (13, "density sanity", c13_density(&ctx)),
    ];

    let mut failed = 0;
    for (id, name, o) in &results {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {id:>2}: {name}: {}", o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    let n_primes: u64 = ctx.reports.iter().map(|r| r.n_primes() as u64).sum();
    println!(
        "acceptance: {} passed, {failed} failed ({} primes scanned; P degrees {:?})",
        results.len() - failed,
        n_primes,
        ctx.elements.iter().map(|e| e.degree().to_u64().unwrap()).collect::<Vec<_>>()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
