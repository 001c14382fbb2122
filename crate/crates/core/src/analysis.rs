//! Exhaustive ground truth: F_q-subspaces in reduced row echelon form,
//! R[x]-module closure, codeword enumeration, weight enumerators and exact
//! minimum distances.
//!
//! A vector of an ambient module R[x]/(f_1) x ... x R[x]/(f_l) is stored as
//! one F_q-coordinate pair (a, b) per R-symbol, block after block, low
//! degree first.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::codes::GqcCode;
use crate::error::{Error, Result};
use crate::gf::{FElem, Field};
use crate::poly::{FqPoly, RPoly};
use crate::rring::{RElem, Ring};

/// Default cap on the F_q-dimension of an enumerated span.
pub const DEFAULT_CAP: usize = 20;

/// Basis of the kernel of the matrix whose rows are `a`, each of length `n`.
pub fn nullspace(mut a: Vec<Vec<FElem>>, n: usize, f: &Field) -> Vec<Vec<FElem>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, pr);
        let inv = f.inv(a[r][c]).expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let fac = a[i][c];
                for j in 0..n {
                    let t = f.mul(fac, a[r][j]);
                    a[i][j] = f.sub(a[i][j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|fc| {
            let mut v = vec![FElem::ZERO; n];
            v[fc] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(a[row][fc]);
            }
            v
        })
        .collect()
}

/// A subspace of F_q^n kept as a fully reduced echelon basis, rows sorted
/// by pivot. Two subspaces are equal iff their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqSubspace {
    n: usize,
    rows: Vec<Vec<FElem>>,
    pivots: Vec<usize>,
}

impl FqSubspace {
    pub fn new(n: usize) -> FqSubspace {
        FqSubspace { n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn spanned_by<'a>(n: usize, vs: impl IntoIterator<Item = &'a Vec<FElem>>, f: &Field) -> FqSubspace {
        let mut s = FqSubspace::new(n);
        for v in vs {
            s.insert(v, f);
        }
        s
    }

    /// The whole space F_q^n.
    pub fn full(n: usize, f: &Field) -> FqSubspace {
        let mut s = FqSubspace::new(n);
        for i in 0..n {
            let mut v = vec![FElem::ZERO; n];
            v[i] = f.one();
            s.insert(&v, f);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<FElem>] {
        &self.rows
    }

    fn reduce_in_place(&self, v: &mut [FElem], f: &Field) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if !c.is_zero() {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
    }

    pub fn reduce(&self, v: &[FElem], f: &Field) -> Vec<FElem> {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w, f);
        w
    }

    pub fn contains(&self, v: &[FElem], f: &Field) -> bool {
        self.reduce(v, f).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[FElem], f: &Field) -> bool {
        debug_assert_eq!(v.len(), self.n);
        let mut w = self.reduce(v, f);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else { return false };
        let inv = f.inv(w[p]).expect("nonzero pivot");
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[p];
            if !c.is_zero() {
                for (x, &r) in row.iter_mut().zip(&w) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, w);
        self.pivots.insert(at, p);
        true
    }

    pub fn contains_space(&self, o: &FqSubspace, f: &Field) -> bool {
        o.rows.iter().all(|r| self.contains(r, f))
    }

    /// Sum of two subspaces.
    pub fn join(&self, o: &FqSubspace, f: &Field) -> FqSubspace {
        let mut s = self.clone();
        for r in &o.rows {
            s.insert(r, f);
        }
        s
    }

    /// Intersection via the kernel of the stacked bases.
    pub fn meet(&self, o: &FqSubspace, f: &Field) -> FqSubspace {
        let k = self.dim();
        let total = k + o.dim();
        // columns are basis vectors of both; kernel gives a*A = b*B relations
        let cols: Vec<&Vec<FElem>> = self.rows.iter().chain(&o.rows).collect();
        let mat: Vec<Vec<FElem>> = (0..self.n).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
        let ker = nullspace(mat, total, f);
        let vs: Vec<Vec<FElem>> = ker
            .iter()
            .map(|coef| {
                let mut v = vec![FElem::ZERO; self.n];
                for (c, row) in coef[..k].iter().zip(&self.rows) {
                    for (x, &r) in v.iter_mut().zip(row) {
                        *x = f.add(*x, f.mul(*c, r));
                    }
                }
                v
            })
            .collect();
        FqSubspace::spanned_by(self.n, &vs, f)
    }

    /// All vectors w with sum_i row_i * w_i = 0 for every basis row.
    pub fn orthogonal(&self, f: &Field) -> FqSubspace {
        let ker = nullspace(self.rows.clone(), self.n, f);
        FqSubspace::spanned_by(self.n, &ker, f)
    }

    /// Number of elements, q^dim, when it fits in a u64.
    pub fn size(&self, f: &Field) -> Option<u64> {
        (f.q() as u64).checked_pow(self.dim() as u32)
    }

    /// Visits every vector of the subspace exactly once, in odometer order
    /// over the F_p-coordinates of the basis.
    pub fn for_each(&self, f: &Field, cap: usize, mut visit: impl FnMut(&[FElem])) -> Result<()> {
        if self.dim() > cap {
            return Err(Error::CapExceeded { dim: self.dim(), cap });
        }
        let p = f.p();
        let steps: Vec<Vec<FElem>> = self
            .rows
            .iter()
            .flat_map(|row| f.prime_basis().into_iter().map(move |b| row.iter().map(|&x| f.mul(b, x)).collect()))
            .collect();
        let mut digits = vec![0u32; steps.len()];
        let mut cur = vec![FElem::ZERO; self.n];
        loop {
            visit(&cur);
            let mut j = 0;
            loop {
                if j == steps.len() {
                    return Ok(());
                }
                for (x, &s) in cur.iter_mut().zip(&steps[j]) {
                    *x = f.add(*x, s);
                }
                digits[j] += 1;
                if digits[j] < p {
                    break;
                }
                digits[j] = 0;
                j += 1;
            }
        }
    }

    pub fn elements(&self, f: &Field, cap: usize) -> Result<Vec<Vec<FElem>>> {
        let mut out = Vec::new();
        self.for_each(f, cap, |v| out.push(v.to_vec()))?;
        Ok(out)
    }
}

/// Smallest subspace containing `gens` and closed under every map in `ops`.
/// Each map must be F_q-linear.
pub fn closure(n: usize, gens: &[Vec<FElem>], ops: &[&dyn Fn(&[FElem]) -> Vec<FElem>], f: &Field) -> FqSubspace {
    let mut space = FqSubspace::new(n);
    let mut queue: VecDeque<Vec<FElem>> = gens.iter().cloned().collect();
    while let Some(v) = queue.pop_front() {
        if space.insert(&v, f) {
            for op in ops {
                queue.push_back(op(&v));
            }
        }
    }
    space
}

/// The ambient module R[x]/(f_1) x ... x R[x]/(f_l) with monic f_i over F_q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambient {
    ring: Ring,
    moduli: Vec<FqPoly>,
    offsets: Vec<usize>,
    symbols: usize,
}

impl Ambient {
    pub fn new(ring: Ring, moduli: Vec<FqPoly>) -> Ambient {
        let mut offsets = Vec::with_capacity(moduli.len());
        let mut acc = 0;
        for m in &moduli {
            offsets.push(acc);
            acc += m.deg().unwrap_or(0);
        }
        Ambient { ring, moduli, offsets, symbols: acc }
    }

    /// R[x]/(x^{m_1} - 1) x ... x R[x]/(x^{m_l} - 1).
    pub fn cyclic(ring: Ring, blocks: &[usize]) -> Ambient {
        let f = ring.field().clone();
        Ambient::new(ring, blocks.iter().map(|&m| FqPoly::xm1(m, &f)).collect())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn moduli(&self) -> &[FqPoly] {
        &self.moduli
    }

    /// Number of R-symbols.
    pub fn symbols(&self) -> usize {
        self.symbols
    }

    /// F_q-dimension, twice the symbol count.
    pub fn dim(&self) -> usize {
        2 * self.symbols
    }

    pub fn block_len(&self, i: usize) -> usize {
        self.moduli[i].deg().unwrap_or(0)
    }

    pub fn zero(&self) -> Vec<FElem> {
        vec![FElem::ZERO; self.dim()]
    }

    /// Coordinates of a tuple of polynomials, each reduced modulo its block.
    pub fn encode(&self, tuple: &[RPoly]) -> Vec<FElem> {
        let mut v = self.zero();
        for (i, p) in tuple.iter().enumerate() {
            let red = self.reduce_entry(i, p);
            for j in 0..self.block_len(i) {
                let c = red.coeff(j);
                v[2 * (self.offsets[i] + j)] = c.a;
                v[2 * (self.offsets[i] + j) + 1] = c.b;
            }
        }
        v
    }

    pub fn decode(&self, v: &[FElem]) -> Vec<RPoly> {
        (0..self.moduli.len())
            .map(|i| {
                let o = self.offsets[i];
                RPoly::new((0..self.block_len(i)).map(|j| RElem::new(v[2 * (o + j)], v[2 * (o + j) + 1])).collect())
            })
            .collect()
    }

    /// Reduces a polynomial modulo the i-th block modulus.
    pub fn reduce_entry(&self, i: usize, p: &RPoly) -> RPoly {
        p.rem(&self.moduli[i].lift(), &self.ring).expect("block moduli are monic")
    }

    /// R-symbols of a coordinate vector.
    pub fn symbols_of(v: &[FElem]) -> Vec<RElem> {
        v.chunks(2).map(|c| RElem::new(c[0], c[1])).collect()
    }

    /// Multiplication by x in every block.
    pub fn mul_x(&self, v: &[FElem]) -> Vec<FElem> {
        let f = self.field();
        let mut out = self.zero();
        for (i, m) in self.moduli.iter().enumerate() {
            let o = self.offsets[i];
            let d = self.block_len(i);
            if d == 0 {
                continue;
            }
            let top = (v[2 * (o + d - 1)], v[2 * (o + d - 1) + 1]);
            for j in 0..d {
                let (mut a, mut b) = if j == 0 { (FElem::ZERO, FElem::ZERO) } else { (v[2 * (o + j - 1)], v[2 * (o + j - 1) + 1]) };
                let mc = m.coeff(j);
                if !mc.is_zero() {
                    a = f.sub(a, f.mul(mc, top.0));
                    b = f.sub(b, f.mul(mc, top.1));
                }
                out[2 * (o + j)] = a;
                out[2 * (o + j) + 1] = b;
            }
        }
        out
    }

    /// Multiplication by u: (a, b) -> (0, a).
    pub fn mul_u(&self, v: &[FElem]) -> Vec<FElem> {
        let mut out = self.zero();
        for s in 0..self.symbols {
            out[2 * s + 1] = v[2 * s];
        }
        out
    }

    /// Multiplication by a polynomial, the same in every block.
    pub fn mul_poly(&self, v: &[FElem], p: &RPoly) -> Vec<FElem> {
        let tuple: Vec<RPoly> = self.decode(v).iter().map(|e| e.mul(p, &self.ring)).collect();
        self.encode(&tuple)
    }

    /// Multiplication by a different polynomial in each block.
    pub fn mul_each(&self, v: &[FElem], ps: &[RPoly]) -> Vec<FElem> {
        let tuple: Vec<RPoly> = self.decode(v).iter().zip(ps).map(|(e, p)| e.mul(p, &self.ring)).collect();
        self.encode(&tuple)
    }

    /// The R[x]-submodule spanned by the given coordinate vectors.
    pub fn module_span(&self, gens: &[Vec<FElem>]) -> FqSubspace {
        let mx = |v: &[FElem]| self.mul_x(v);
        let mu = |v: &[FElem]| self.mul_u(v);
        closure(self.dim(), gens, &[&mx, &mu], self.field())
    }

    /// The R[x]-submodule spanned by polynomial tuples.
    pub fn span_tuples(&self, gens: &[Vec<RPoly>]) -> FqSubspace {
        let vs: Vec<Vec<FElem>> = gens.iter().map(|g| self.encode(g)).collect();
        self.module_span(&vs)
    }

    /// Codeword weight under a metric.
    pub fn weight(&self, v: &[FElem], metric: Metric) -> usize {
        weight(self.field(), v, metric)
    }
}

/// Weight functions on (a, b)-coordinate vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    /// Nonzero R-symbols.
    Hamming,
    /// Lee weight over F_2 + uF_2.
    Lee,
    /// Hamming weight of the Gray image.
    GrayHamming,
}

impl Metric {
    /// Length of the word the weight is measured on, for `symbols` R-symbols.
    pub fn length(self, symbols: usize) -> usize {
        match self {
            Metric::Hamming => symbols,
            Metric::Lee | Metric::GrayHamming => 2 * symbols,
        }
    }

    pub fn check(self, f: &Field) -> Result<()> {
        if self == Metric::Lee && f.q() != 2 {
            return Err(Error::LeeOutsideF2);
        }
        Ok(())
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Hamming => "hamming",
            Metric::Lee => "lee",
            Metric::GrayHamming => "gray_hamming",
        })
    }
}

impl std::str::FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Metric> {
        match s {
            "hamming" => Ok(Metric::Hamming),
            "lee" => Ok(Metric::Lee),
            "gray" | "gray_hamming" => Ok(Metric::GrayHamming),
            _ => Err(Error::Parse(format!("unknown metric {s:?}"))),
        }
    }
}

/// Weight of an (a, b)-coordinate vector. Under the Gray map a + ub becomes
/// (b, a + b), so its Gray weight is [b != 0] + [a + b != 0]; over F_2 this
/// is also the Lee weight.
pub fn weight(f: &Field, v: &[FElem], metric: Metric) -> usize {
    match metric {
        Metric::Hamming => v.chunks(2).filter(|c| !c[0].is_zero() || !c[1].is_zero()).count(),
        Metric::Lee | Metric::GrayHamming => v
            .chunks(2)
            .map(|c| usize::from(!c[1].is_zero()) + usize::from(!f.add(c[0], c[1]).is_zero()))
            .sum(),
    }
}

/// Number of nonzero groups of `size` consecutive coordinates.
pub fn symbol_weight(v: &[FElem], size: usize) -> usize {
    v.chunks(size).filter(|c| c.iter().any(|x| !x.is_zero())).count()
}

/// Codeword counts per weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEnumerator {
    pub metric: Metric,
    pub length: usize,
    pub counts: BTreeMap<usize, u64>,
}

impl WeightEnumerator {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Smallest nonzero weight, if any.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    /// Counts without the weight-0 word.
    pub fn nonzero_counts(&self) -> BTreeMap<usize, u64> {
        self.counts.iter().filter(|(&w, _)| w > 0).map(|(&w, &c)| (w, c)).collect()
    }

    /// Homogeneous form such as `x^8+14x^4y^4+y^8`.
    pub fn polynomial(&self) -> String {
        let n = self.length;
        let pw = |v: &str, e: usize| match e {
            0 => String::new(),
            1 => v.to_string(),
            _ => format!("{v}^{e}"),
        };
        self.counts
            .iter()
            .map(|(&w, &c)| {
                let mono = format!("{}{}", pw("x", n - w), pw("y", w));
                match (c, mono.is_empty()) {
                    (_, true) => c.to_string(),
                    (1, false) => mono,
                    _ => format!("{c}{mono}"),
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("enumerators serialize")
    }
}

/// Counts weights over every vector of `space`.
pub fn enumerate_weights(space: &FqSubspace, f: &Field, metric: Metric, symbols: usize, cap: usize) -> Result<WeightEnumerator> {
    metric.check(f)?;
    let mut tally = vec![0u64; metric.length(symbols) + 1];
    space.for_each(f, cap, |v| tally[weight(f, v, metric)] += 1)?;
    let counts = tally.into_iter().enumerate().filter(|&(_, c)| c > 0).collect();
    Ok(WeightEnumerator { metric, length: metric.length(symbols), counts })
}

/// [n, k, d] of the Gray image together with |C| over R.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub size: u64,
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "[{},{},{}]", self.n, self.k, d),
            None => write!(f, "[{},{},-]", self.n, self.k),
        }
    }
}

/// A code together with its enumerated F_q-span.
#[derive(Clone, Debug)]
pub struct Span {
    pub ambient: Ambient,
    pub space: FqSubspace,
}

impl Span {
    pub fn of(code: &GqcCode) -> Span {
        let ambient = code.ambient();
        let space = ambient.span_tuples(code.generators());
        Span { ambient, space }
    }

    pub fn field(&self) -> &Field {
        self.ambient.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn codewords(&self, cap: usize) -> Result<Vec<Vec<FElem>>> {
        self.space.elements(self.field(), cap)
    }

    pub fn weight_enumerator(&self, metric: Metric, cap: usize) -> Result<WeightEnumerator> {
        enumerate_weights(&self.space, self.field(), metric, self.ambient.symbols(), cap)
    }

    pub fn min_distance(&self, metric: Metric, cap: usize) -> Result<usize> {
        if self.dim() == 0 {
            return Err(Error::ZeroCode);
        }
        Ok(self.weight_enumerator(metric, cap)?.min_distance().expect("nonzero code has a nonzero word"))
    }

    pub fn gray_params(&self, cap: usize) -> Result<CodeParams> {
        let f = self.field();
        let size = self.space.size(f).ok_or(Error::CapExceeded { dim: self.dim(), cap })?;
        let d = if self.dim() == 0 { None } else { Some(self.min_distance(Metric::GrayHamming, cap)?) };
        Ok(CodeParams { n: self.ambient.dim(), k: self.dim(), d, size })
    }
}

/// All codewords of a code in R-coordinates.
pub fn enumerate_span(code: &GqcCode, cap: usize) -> Result<Vec<Vec<RElem>>> {
    let span = Span::of(code);
    Ok(span.codewords(cap)?.iter().map(|v| Ambient::symbols_of(v)).collect())
}

pub fn weight_enumerator(code: &GqcCode, metric: Metric, cap: usize) -> Result<WeightEnumerator> {
    Span::of(code).weight_enumerator(metric, cap)
}

pub fn min_distance(code: &GqcCode, metric: Metric, cap: usize) -> Result<usize> {
    Span::of(code).min_distance(metric, cap)
}

pub fn gray_params(code: &GqcCode, cap: usize) -> Result<CodeParams> {
    Span::of(code).gray_params(cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rring::gray;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rand_vec(rng: &mut ChaCha8Rng, n: usize, q: u32) -> Vec<FElem> {
        (0..n).map(|_| FElem::from_index(rng.gen_range(0..q))).collect()
    }

    #[test]
    fn rref_is_canonical() {
        let f = Field::prime(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let vs: Vec<Vec<FElem>> = (0..4).map(|_| rand_vec(&mut rng, 6, 3)).collect();
            let a = FqSubspace::spanned_by(6, &vs, &f);
            let rev: Vec<Vec<FElem>> = vs.iter().rev().cloned().collect();
            let b = FqSubspace::spanned_by(6, &rev, &f);
            assert_eq!(a, b);
            for v in &vs {
                assert!(a.contains(v, &f));
            }
        }
    }

    #[test]
    fn enumeration_visits_each_vector_once() {
        for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let f = Field::new(p, n, None).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(p as u64);
            let vs: Vec<Vec<FElem>> = (0..3).map(|_| rand_vec(&mut rng, 5, f.q())).collect();
            let s = FqSubspace::spanned_by(5, &vs, &f);
            let els = s.elements(&f, DEFAULT_CAP).unwrap();
            let set: std::collections::HashSet<_> = els.iter().cloned().collect();
            assert_eq!(set.len() as u64, s.size(&f).unwrap());
            assert_eq!(els.len(), set.len());
            assert!(els.iter().all(|v| s.contains(v, &f)));
            assert_eq!(els[0], vec![FElem::ZERO; 5]);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let f = Field::prime(2).unwrap();
        let s = FqSubspace::full(4, &f);
        assert_eq!(s.elements(&f, 3).unwrap_err(), Error::CapExceeded { dim: 4, cap: 3 });
    }

    #[test]
    fn meet_and_orthogonal_by_brute_force() {
        let f = Field::prime(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let a = FqSubspace::spanned_by(6, &(0..3).map(|_| rand_vec(&mut rng, 6, 2)).collect::<Vec<_>>(), &f);
            let b = FqSubspace::spanned_by(6, &(0..3).map(|_| rand_vec(&mut rng, 6, 2)).collect::<Vec<_>>(), &f);
            let all = FqSubspace::full(6, &f).elements(&f, 6).unwrap();
            let meet: Vec<_> = all.iter().filter(|v| a.contains(v, &f) && b.contains(v, &f)).collect();
            assert_eq!(a.meet(&b, &f).size(&f).unwrap(), meet.len() as u64);
            let av = a.elements(&f, 6).unwrap();
            let perp = all
                .iter()
                .filter(|w| av.iter().all(|v| v.iter().zip(w.iter()).fold(0, |s, (x, y)| s ^ (x.index() & y.index())) == 0))
                .count();
            assert_eq!(a.orthogonal(&f).size(&f).unwrap(), perp as u64);
        }
    }

    #[test]
    fn mul_x_is_cyclic_shift_and_reduces_general_moduli() {
        let f = Field::prime(3).unwrap();
        let r = Ring::new(f.clone());
        let amb = Ambient::cyclic(r.clone(), &[3, 2]);
        let t = vec![RPoly::parse("1+2u*x+x^2", &r).unwrap(), RPoly::parse("u+x", &r).unwrap()];
        let v = amb.encode(&t);
        let xt: Vec<RPoly> = t.iter().map(|p| p.mul(&RPoly::parse("x", &r).unwrap(), &r).mod_xm1(3, &r)).collect();
        assert_eq!(amb.decode(&amb.mul_x(&v))[0], xt[0]);
        let g = FqPoly::parse("(x^2+1)^3", &f).unwrap();
        let amb2 = Ambient::new(r.clone(), vec![g.clone()]);
        let p = RPoly::parse("x^5+u*x^3+2", &r).unwrap();
        let expect = p.mul(&RPoly::parse("x", &r).unwrap(), &r).rem(&g.lift(), &r).unwrap();
        assert_eq!(amb2.decode(&amb2.mul_x(&amb2.encode(&[p])))[0], expect);
    }

    #[test]
    fn gray_weight_matches_rring_gray() {
        let f = Field::prime(3).unwrap();
        let r = Ring::new(f.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let v = rand_vec(&mut rng, 8, 3);
            let syms = Ambient::symbols_of(&v);
            assert_eq!(weight(&f, &v, Metric::GrayHamming), crate::rring::hamming_weight_f(&gray(&r, &syms)));
            assert_eq!(weight(&f, &v, Metric::Hamming), crate::rring::hamming_weight(&syms));
        }
    }

    #[test]
    fn closure_of_single_ring_element() {
        // (1) in R[x]/(x^m - 1) is the whole ring.
        let r = Ring::new(Field::prime(2).unwrap());
        for m in 1..=5 {
            let amb = Ambient::cyclic(r.clone(), &[m]);
            let s = amb.span_tuples(&[vec![RPoly::one()]]);
            assert_eq!(s.dim(), 2 * m);
        }
    }

    #[test]
    fn enumerator_polynomial_format() {
        let we = WeightEnumerator { metric: Metric::GrayHamming, length: 8, counts: [(0, 1), (4, 14), (8, 1)].into_iter().collect() };
        assert_eq!(we.polynomial(), "x^8+14x^4y^4+y^8");
        assert_eq!(we.min_distance(), Some(4));
        let j = we.to_json();
        assert_eq!(j["counts"]["4"], 14);
        assert_eq!(j["metric"], "gray_hamming");
    }
}
