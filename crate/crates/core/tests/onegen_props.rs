use gqc::analysis::{min_distance, Metric};
use gqc::onegen::{distance_lower_bound, is_free_cor42, minimal_generating_set, minimal_generating_set_unchecked, r_span, OneGenSpec};
use gqc::poly::factor_cyclotomic;
use gqc::{FElem, Field, FqPoly, RPoly, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CAP: usize = 16;

fn random_poly(rng: &mut ChaCha8Rng, f: &Field, deg: usize) -> FqPoly {
    FqPoly::new((0..deg).map(|_| FElem::from_index(rng.gen_range(0..f.q()))).collect())
}

/// A random monic divisor of x^m - 1 over R.
fn random_divisor(rng: &mut ChaCha8Rng, r: &Ring, m: usize) -> RPoly {
    let f = r.field();
    let fact = factor_cyclotomic(m, f).unwrap();
    loop {
        let mut g = FqPoly::one();
        for k in 0..fact.factors.len() {
            let e = rng.gen_range(0..=fact.exponent());
            g = g.mul(&fact.factors[k].g.pow(e, f), f);
        }
        let d = g.deg().unwrap();
        if d == m {
            continue;
        }
        let q = if d == 0 { FqPoly::zero() } else { random_poly(rng, f, d) };
        let e = RPoly::from_parts(&g, &q);
        if e.divides_xm1(m, r) {
            return e;
        }
    }
}

fn random_entry(rng: &mut ChaCha8Rng, r: &Ring, m: usize) -> RPoly {
    let f = r.field();
    RPoly::from_parts(&random_poly(rng, f, m), &random_poly(rng, f, m))
}

/// Random free 1-generator codes over F_2 and F_3 with at most 2^16 words.
fn free_instances(seed: u64, count: usize) -> Vec<OneGenSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let p = if rng.gen_bool(0.7) { 2 } else { 3 };
        let f = Field::prime(p).unwrap();
        let r = Ring::new(f.clone());
        let l = rng.gen_range(1..=3);
        let blocks: Vec<usize> = (0..l).map(|_| rng.gen_range(1..=if p == 2 { 6 } else { 4 })).collect();
        let gen: Vec<RPoly> = blocks.iter().map(|&m| random_divisor(&mut rng, &r, m)).collect();
        let spec = OneGenSpec::new(&f, &blocks, gen).unwrap();
        let size = spec.code().span().size(&f).unwrap();
        if size > 1 && size <= 1 << 16 {
            out.push(spec);
        }
    }
    out
}

fn metric_for(spec: &OneGenSpec, i: usize) -> Metric {
    if spec.field().q() == 2 && i % 2 == 0 {
        Metric::Lee
    } else {
        Metric::Hamming
    }
}

#[test]
fn subset_minimum_bound_never_exceeds_distance() {
    for (i, spec) in free_instances(43, 150).iter().enumerate() {
        let metric = metric_for(spec, i);
        let b = distance_lower_bound(spec, metric, CAP).unwrap();
        let d = min_distance(&spec.code(), metric, CAP).unwrap();
        assert!(b.min_over_subsets <= d, "{} {metric}: {} > {d}", spec.code(), b.min_over_subsets);
        assert!(b.min_over_subsets <= b.bound);
    }
}

#[test]
fn stated_bound_fails_only_through_the_choice_of_k() {
    let mut failures = 0;
    for (i, spec) in free_instances(43, 150).iter().enumerate() {
        let metric = metric_for(spec, i);
        let b = distance_lower_bound(spec, metric, CAP).unwrap();
        let d = min_distance(&spec.code(), metric, CAP).unwrap();
        if b.bound > d {
            failures += 1;
            // another subset of the same size gives a smaller sum
            assert!(!b.k.is_empty() && b.min_over_subsets < b.bound, "{}", spec.code());
        }
    }
    assert!(failures < 150);
}

#[test]
fn stated_bound_counterexample() {
    // h_1 = x+1 and h_2 = x^2+x+1 are incomparable; K = {1} gives 2, K = {2} gives 1
    let f = Field::prime(2).unwrap();
    let spec = OneGenSpec::parse(&f, &[1, 3], &["1", "x+1"]).unwrap();
    let b = distance_lower_bound(&spec, Metric::Lee, CAP).unwrap();
    assert_eq!((b.k.clone(), b.bound, b.min_over_subsets), (vec![0], 2, 1));
    assert_eq!(min_distance(&spec.code(), Metric::Lee, CAP).unwrap(), 1);
}

#[test]
fn free_codes_are_spanned_by_s1() {
    // whenever the oracle confirms freeness, S2 adds nothing
    let mut free = 0;
    for spec in free_instances(42, 150) {
        let (_, rank) = is_free_cor42(&spec);
        let code = spec.code();
        let span = code.span();
        if span.dim() != 2 * rank {
            continue;
        }
        free += 1;
        let mg = minimal_generating_set_unchecked(&spec);
        assert_eq!(r_span(&code.ambient(), &mg.s1), span, "{code}");
    }
    assert!(free >= 100, "{free}");
}

#[test]
fn divisibility_does_not_imply_freeness() {
    // both entries divide x^4-1 over R, yet the code has odd F_2-dimension
    let f = Field::prime(2).unwrap();
    let spec = OneGenSpec::parse(&f, &[4, 4], &["x+1+u", "x+1"]).unwrap();
    assert_eq!(is_free_cor42(&spec), (true, 3));
    assert_eq!(spec.code().span().dim(), 7);
    // and a free code can have t > 0 even though S2 is redundant
    let one = OneGenSpec::parse(&f, &[2], &["x+1+u"]).unwrap();
    let mg = minimal_generating_set_unchecked(&one);
    assert_eq!((mg.r, mg.t, one.code().span().dim()), (1, 1, 2));
}

#[test]
fn size_formula_bounds_the_code_for_regular_generators() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let (mut n, mut exact) = (0, 0);
    while n < 150 {
        let f = Field::prime(if rng.gen_bool(0.7) { 2 } else { 3 }).unwrap();
        let r = Ring::new(f.clone());
        let l = rng.gen_range(1..=3);
        let blocks: Vec<usize> = (0..l).map(|_| rng.gen_range(1..=5)).collect();
        let gen: Vec<RPoly> = blocks.iter().map(|&m| random_entry(&mut rng, &r, m)).collect();
        let spec = OneGenSpec::new(&f, &blocks, gen).unwrap();
        let Ok(mg) = minimal_generating_set(&spec) else { continue };
        n += 1;
        let code = spec.code();
        let amb = code.ambient();
        let span = code.span();
        let all: Vec<Vec<RPoly>> = mg.rows().cloned().collect();
        // S1 and S2 always generate the code and S1 contributes 2r dimensions
        assert_eq!(r_span(&amb, &all), span, "{code}");
        assert_eq!(r_span(&amb, &mg.s1).dim(), 2 * mg.r, "{code}");
        assert!(span.dim() <= mg.log_size(), "{code}");
        if span.dim() == mg.log_size() {
            exact += 1;
        }
    }
    assert!(exact >= 140, "{exact}");
}
