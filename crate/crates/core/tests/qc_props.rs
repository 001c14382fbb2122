use gqc::analysis::{symbol_weight, FqSubspace};
use gqc::qc::{check_thm55, euclid_dual, euclid_product, hermitian_product, product_bound, t_shift, ExtElem, GaloisExtR, QcCode};
use gqc::rring::hamming_weight;
use gqc::{FElem, Field, FqPoly, RElem, RPoly, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CAP: usize = 16;

fn random_poly(rng: &mut ChaCha8Rng, f: &Field, deg: usize) -> FqPoly {
    FqPoly::new((0..deg).map(|_| FElem::from_index(rng.gen_range(0..f.q()))).collect())
}

fn random_entry(rng: &mut ChaCha8Rng, r: &Ring, m: usize) -> RPoly {
    let f = r.field();
    // sparse entries keep the codes away from the full space
    if rng.gen_bool(0.3) {
        return RPoly::zero();
    }
    RPoly::from_parts(&random_poly(rng, f, m), &random_poly(rng, f, m))
}

fn random_code(rng: &mut ChaCha8Rng, f: &Field, m: usize, l: usize) -> QcCode {
    let r = Ring::new(f.clone());
    let k = rng.gen_range(1..=2);
    let gens = (0..k).map(|_| (0..l).map(|_| random_entry(rng, &r, m)).collect()).collect();
    QcCode::new(f, m, l, gens).unwrap()
}

fn field(p: u32) -> Field {
    Field::prime(p).unwrap()
}

#[test]
fn dual_size_invariance_and_orthogonality() {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    for case in 0..120 {
        let (p, m, l) = [(2, 2, 2), (2, 3, 2), (2, 2, 3), (3, 2, 2), (2, 1, 4)][case % 5];
        let f = field(p);
        let r = Ring::new(f.clone());
        let c = random_code(&mut rng, &f, m, l);
        let d = euclid_dual(&c).unwrap();
        let (sc, sd) = (c.span().size(&f).unwrap(), d.span().size(&f).unwrap());
        assert_eq!(sc * sd, r.size().pow((m * l) as u32), "size identity, case {case}");
        let dw = d.codewords(CAP).unwrap();
        for w in &dw {
            assert!(d.span().contains(&d.deinterleave(&t_shift(w, l).unwrap()), &f));
        }
        let cw = c.codewords(CAP).unwrap();
        for w in dw.iter().take(16) {
            assert!(cw.iter().all(|v| euclid_product(&r, v, w) == r.zero()));
        }
        // the dual of the dual is the code
        assert_eq!(euclid_dual(&d).unwrap().span(), c.span());
    }
}

#[test]
fn dual_matches_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(52);
    for _ in 0..20 {
        let f = field(2);
        let r = Ring::new(f.clone());
        let c = random_code(&mut rng, &f, 2, 2);
        let cw = c.codewords(CAP).unwrap();
        let all = FqSubspace::full(8, &f).elements(&f, CAP).unwrap();
        let mut want = FqSubspace::new(8);
        for v in &all {
            let w = c.interleave(v);
            if cw.iter().all(|x| euclid_product(&r, x, &w) == r.zero()) {
                want.insert(v, &f);
            }
        }
        assert_eq!(euclid_dual(&c).unwrap().span(), want);
    }
}

#[test]
fn hermitian_coefficients_are_shifted_inner_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(54);
    let mut both = [0usize; 2];
    for case in 0..200 {
        let (p, m, l) = [(2, 3, 2), (3, 2, 2), (2, 4, 3), (2, 1, 3)][case % 4];
        let f = field(p);
        let r = Ring::new(f.clone());
        let c = QcCode::new(&f, m, l, vec![vec![RPoly::zero(); l]]).unwrap();
        let a: Vec<RPoly> = (0..l).map(|_| random_entry(&mut rng, &r, m)).collect();
        let b: Vec<RPoly> = if case % 3 == 0 {
            // force many orthogonal pairs: b lies in the dual of the span of a
            let one = QcCode::new(&f, m, l, vec![a.clone()]).unwrap();
            let d = euclid_dual(&one).unwrap();
            let mut w = vec![FElem::ZERO; 2 * m * l];
            for row in d.span().basis() {
                let t = f.from_int(rng.gen_range(0..p as i64));
                w = w.iter().zip(row).map(|(&x, &y)| f.add(x, f.mul(t, y))).collect();
            }
            d.gqc().ambient().decode(&w)
        } else {
            (0..l).map(|_| random_entry(&mut rng, &r, m)).collect()
        };
        let h = hermitian_product(&r, &a, &b, m).unwrap();
        let (mut u, v) = (c.vector_of(&a), c.vector_of(&b));
        let mut all_zero = true;
        for k in 0..m {
            let ip = euclid_product(&r, &u, &v);
            assert_eq!(h.coeff((m - k) % m), ip, "case {case}, k {k}");
            all_zero &= ip == r.zero();
            u = t_shift(&u, l).unwrap();
        }
        assert_eq!(h.is_zero(), all_zero);
        both[all_zero as usize] += 1;
    }
    assert!(both[0] > 20 && both[1] > 20, "{both:?}");
}

fn random_ext_elem(rng: &mut ChaCha8Rng, ext: &GaloisExtR) -> ExtElem {
    let f = ext.ring().field().clone();
    (0..ext.degree())
        .map(|_| if rng.gen_bool(0.5) { RElem::ZERO } else { RElem::new(FElem::from_index(rng.gen_range(0..f.q())), FElem::from_index(rng.gen_range(0..f.q()))) })
        .collect()
}

#[test]
fn product_bound_never_exceeds_distance() {
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    let mut tight = 0;
    let mut checked = 0;
    while checked < 120 {
        let (p, m, l) = [(2, 3, 2), (2, 5, 2), (3, 2, 2), (2, 2, 3), (2, 7, 2)][checked % 5];
        let f = field(p);
        let r = Ring::new(f.clone());
        let ext = GaloisExtR::new(&r, l, None).unwrap();
        let k = rng.gen_range(1..=2);
        let gens: Vec<Vec<ExtElem>> = (0..k).map(|_| (0..m).map(|_| random_ext_elem(&mut rng, &ext)).collect()).collect();
        let tuples: Vec<Vec<RPoly>> = gens.iter().map(|g| ext.tuple_view(g)).collect();
        let c = QcCode::new(&f, m, l, tuples).unwrap();
        if c.span().dim() == 0 || ext.cyclic_span(&gens, m).dim() > 2 * CAP {
            continue;
        }
        let Ok(pb) = product_bound(&ext, &gens, m, CAP) else { continue };
        let d = c.codewords(CAP).unwrap().iter().map(|w| hamming_weight(w)).filter(|&w| w > 0).min().unwrap();
        assert!(pb.bound <= d, "bound {} above distance {d}", pb.bound);
        tight += (pb.bound == d) as usize;
        checked += 1;
    }
    assert!(tight > 0);
}

#[test]
fn ext_shift_agrees_with_t_shift() {
    let mut rng = ChaCha8Rng::seed_from_u64(56);
    for case in 0..100 {
        let (p, m, l) = [(2, 4, 2), (3, 3, 2), (2, 3, 3)][case % 3];
        let f = field(p);
        let r = Ring::new(f.clone());
        let ext = GaloisExtR::new(&r, l, None).unwrap();
        let c = QcCode::new(&f, m, l, vec![vec![RPoly::zero(); l]]).unwrap();
        let t: Vec<RPoly> = (0..l).map(|_| random_entry(&mut rng, &r, m)).collect();
        let v = ext.ext_view(&t, m).unwrap();
        assert_eq!(ext.tuple_view(&v), t);
        let shifted = c.tuple_of(&t_shift(&c.vector_of(&t), l).unwrap());
        assert_eq!(ext.tuple_view(&ext.mul_x(&v)), shifted);
        // the R~ symbol weight of the view is the number of nonzero columns
        let flat: Vec<FElem> = v.iter().flatten().flat_map(|e| [e.a, e.b]).collect();
        let cols = v.iter().filter(|col| col.iter().any(|e| !e.is_zero())).count();
        assert_eq!(symbol_weight(&flat, 2 * l), cols);
    }
}

/// Smallest number of codewords generating the code as an R[x]-module, when
/// at most two suffice.
fn brute_generators(c: &QcCode) -> Option<usize> {
    let f = c.field();
    let amb = c.gqc().ambient();
    let target = c.span();
    if target.dim() == 0 {
        return Some(0);
    }
    let words = target.elements(f, CAP).unwrap();
    if words.iter().any(|w| amb.module_span(std::slice::from_ref(w)) == target) {
        return Some(1);
    }
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            if amb.module_span(&[a.clone(), b.clone()]) == target {
                return Some(2);
            }
        }
    }
    None
}

#[test]
fn generator_counts_match_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(57);
    let mut failures = [0usize; 4];
    let mut free = 0;
    for case in 0..100 {
        let (p, m, l) = [(2, 2, 2), (2, 1, 3), (3, 1, 2), (2, 1, 2)][case % 4];
        let f = field(p);
        let c = random_code(&mut rng, &f, m, l);
        let rep = check_thm55(&c).unwrap();
        let d = euclid_dual(&c).unwrap();
        match brute_generators(&c) {
            Some(k) => assert_eq!(rep.rho, k, "case {case}"),
            None => assert!(rep.rho >= 3),
        }
        match brute_generators(&d) {
            Some(k) => assert_eq!(rep.rho_dual, k, "case {case}"),
            None => assert!(rep.rho_dual >= 3),
        }
        if rep.hypothesis {
            free += 1;
            assert!(rep.claim_code, "case {case}");
            failures[0] += !rep.claim_dual as usize;
            failures[1] += (rep.claim_equal_counts == Some(false)) as usize;
            failures[2] += (rep.claim_self_dual == Some(false)) as usize;
            failures[3] += rep.self_dual as usize;
        }
    }
    assert!(free >= 30, "only {free} free instances");
    assert_eq!(failures[..3], [0, 0, 0], "{failures:?}");
}
