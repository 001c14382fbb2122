//! One-generator GQC codes: minimal generating sets, freeness and distance
//! lower bounds from the per-block cyclic codes.

use serde_json::{json, Value};

use crate::analysis::{enumerate_weights, Ambient, FqSubspace, Metric};
use crate::codes::{gqc_new, GqcCode};
use crate::error::{Error, Result};
use crate::gf::{FElem, Field};
use crate::poly::{is_regular, FqPoly, RPoly};
use crate::rring::{gray, Ring};

/// A 1-generator code given blockwise as base_i = f_i g_i + u q_i, with
/// optional multipliers k_i (default 1). The code is generated by
/// (k_1 base_1, ..., k_l base_l).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneGenSpec {
    ring: Ring,
    blocks: Vec<usize>,
    bases: Vec<RPoly>,
    multipliers: Vec<RPoly>,
}

fn fmt_list(ps: &[FqPoly], f: &Field) -> Vec<String> {
    ps.iter().map(|p| p.fmt(f)).collect()
}

fn fmt_tuples(ts: &[Vec<RPoly>], r: &Ring) -> Vec<Vec<String>> {
    ts.iter().map(|t| t.iter().map(|e| e.fmt(r)).collect()).collect()
}

impl OneGenSpec {
    pub fn new(fld: &Field, blocks: &[usize], bases: Vec<RPoly>) -> Result<OneGenSpec> {
        let ring = Ring::new(fld.clone());
        let code = gqc_new(fld, blocks, vec![bases])?;
        let multipliers = vec![RPoly::one(); blocks.len()];
        Ok(OneGenSpec { ring, blocks: blocks.to_vec(), bases: code.generators()[0].clone(), multipliers })
    }

    pub fn parse<S: AsRef<str>>(fld: &Field, blocks: &[usize], bases: &[S]) -> Result<OneGenSpec> {
        let r = Ring::new(fld.clone());
        let bs = bases.iter().map(|s| RPoly::parse(s.as_ref(), &r)).collect::<Result<Vec<_>>>()?;
        OneGenSpec::new(fld, blocks, bs)
    }

    /// The description of a code with exactly one generator.
    pub fn from_code(code: &GqcCode) -> Result<OneGenSpec> {
        match code.generators() {
            [g] => OneGenSpec::new(code.field(), code.blocks(), g.clone()),
            gs => Err(Error::Precondition(format!("expected one generator, found {}", gs.len()))),
        }
    }

    /// Multiplies block i by k_i.
    pub fn with_multipliers(mut self, ks: Vec<RPoly>) -> Result<OneGenSpec> {
        if ks.len() != self.blocks.len() {
            return Err(Error::Precondition(format!("{} multipliers for {} blocks", ks.len(), self.blocks.len())));
        }
        self.multipliers = ks.iter().zip(&self.blocks).map(|(k, &m)| k.mod_xm1(m, &self.ring)).collect();
        Ok(self)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn bases(&self) -> &[RPoly] {
        &self.bases
    }

    pub fn multipliers(&self) -> &[RPoly] {
        &self.multipliers
    }

    fn has_multipliers(&self) -> bool {
        self.multipliers.iter().any(|k| *k != RPoly::one())
    }

    /// The generator (k_i base_i mod x^{m_i} - 1)_i.
    pub fn generator(&self) -> Vec<RPoly> {
        self.bases
            .iter()
            .zip(&self.multipliers)
            .zip(&self.blocks)
            .map(|((b, k), &m)| b.mul(k, &self.ring).mod_xm1(m, &self.ring))
            .collect()
    }

    pub fn code(&self) -> GqcCode {
        gqc_new(self.field(), &self.blocks, vec![self.generator()]).expect("generator entries are valid")
    }

    /// The code generated by the bases alone.
    pub fn base_code(&self) -> GqcCode {
        gqc_new(self.field(), &self.blocks, vec![self.bases.clone()]).expect("generator entries are valid")
    }

    fn xm1(&self, i: usize) -> FqPoly {
        FqPoly::xm1(self.blocks[i], self.field())
    }

    /// h_i = (x^{m_i} - 1)/gcd(f_i g_i, x^{m_i} - 1) for the given entries.
    fn h_of(&self, entries: &[RPoly]) -> Vec<FqPoly> {
        let f = self.field();
        entries
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let xm1 = self.xm1(i);
                let g = e.bar().gcd(&xm1, f).expect("x^m-1 is nonzero");
                xm1.div_exact(&g, f).expect("gcd divides")
            })
            .collect()
    }

    /// Index of the first regular entry of the generator, if any.
    pub fn regular_block(&self) -> Option<usize> {
        let gen = self.generator();
        (0..gen.len()).find(|&i| is_regular(&gen[i], self.blocks[i], self.field()))
    }
}

/// The sets S1 = {x^j G : j < r} and S2 = {x^j B : j < t}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinGenSet {
    pub g: Vec<RPoly>,
    pub b: Vec<RPoly>,
    pub h_blocks: Vec<FqPoly>,
    pub h: FqPoly,
    pub r: usize,
    pub v_blocks: Vec<FqPoly>,
    pub v: FqPoly,
    pub t: usize,
    pub s1: Vec<Vec<RPoly>>,
    pub s2: Vec<Vec<RPoly>>,
    /// The block whose entry is regular, when one exists.
    pub regular_block: Option<usize>,
    q: u32,
}

impl MinGenSet {
    /// log_q of the claimed size, 2r + t.
    pub fn log_size(&self) -> usize {
        2 * self.r + self.t
    }

    /// q^{2r+t}, when it fits.
    pub fn size(&self) -> Option<u64> {
        (self.q as u64).checked_pow(self.log_size() as u32)
    }

    pub fn rows(&self) -> impl Iterator<Item = &Vec<RPoly>> {
        self.s1.iter().chain(&self.s2)
    }

    pub fn to_json(&self, r: &Ring) -> Value {
        let f = r.field();
        json!({
            "G": self.g.iter().map(|e| e.fmt(r)).collect::<Vec<_>>(),
            "B": self.b.iter().map(|e| e.fmt(r)).collect::<Vec<_>>(),
            "h_i": fmt_list(&self.h_blocks, f),
            "h": self.h.fmt(f),
            "r": self.r,
            "v_i": fmt_list(&self.v_blocks, f),
            "v": self.v.fmt(f),
            "t": self.t,
            "S1": fmt_tuples(&self.s1, r),
            "S2": fmt_tuples(&self.s2, r),
            "size": self.size(),
            "log_q_size": self.log_size(),
            "regular_block": self.regular_block.map(|i| i + 1),
        })
    }
}

/// Minimal generating set of a 1-generator code. Requires some regular
/// entry in the generator.
pub fn minimal_generating_set(spec: &OneGenSpec) -> Result<MinGenSet> {
    let mg = minimal_generating_set_unchecked(spec);
    if mg.regular_block.is_none() {
        let gen = spec.generator();
        return Err(Error::Precondition(format!(
            "no entry of the generator {} is regular (every bar-image shares a factor with its x^m-1)",
            spec.code().format_tuple(&gen)
        )));
    }
    Ok(mg)
}

/// The same formulas without checking the regularity hypothesis.
pub fn minimal_generating_set_unchecked(spec: &OneGenSpec) -> MinGenSet {
    let f = spec.field();
    let r = spec.ring();
    let g = spec.generator();
    let h_blocks = spec.h_of(&g);
    let h = h_blocks.iter().fold(FqPoly::one(), |acc, hi| acc.lcm(hi, f));
    let v_blocks: Vec<FqPoly> = g
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let qi = e.u_part();
            if qi.is_zero() {
                return FqPoly::one();
            }
            let xm1 = spec.xm1(i);
            let hq = h.mul(&qi, f).mod_xm1(spec.blocks[i], f);
            let d = hq.gcd(&xm1, f).expect("x^m-1 is nonzero");
            xm1.div_exact(&d, f).expect("gcd divides")
        })
        .collect();
    let v = v_blocks.iter().fold(FqPoly::one(), |acc, vi| acc.lcm(vi, f));
    let b: Vec<RPoly> = g
        .iter()
        .zip(&spec.blocks)
        .map(|(e, &m)| RPoly::from_parts(&FqPoly::zero(), &h.mul(&e.u_part(), f)).mod_xm1(m, r))
        .collect();
    let rdeg = h.deg().unwrap_or(0);
    let tdeg = v.deg().unwrap_or(0);
    let shifts = |t: &[RPoly], n: usize| -> Vec<Vec<RPoly>> {
        (0..n)
            .map(|j| {
                let xj = RPoly::monomial(r.one(), j);
                t.iter().zip(&spec.blocks).map(|(e, &m)| e.mul(&xj, r).mod_xm1(m, r)).collect()
            })
            .collect()
    };
    MinGenSet {
        s1: shifts(&g, rdeg),
        s2: shifts(&b, tdeg),
        g,
        b,
        h_blocks,
        h,
        r: rdeg,
        v_blocks,
        v,
        t: tdeg,
        regular_block: spec.regular_block(),
        q: f.q(),
    }
}

/// R-linear span of a list of tuples: closure under u only.
pub fn r_span(amb: &Ambient, rows: &[Vec<RPoly>]) -> FqSubspace {
    let vs: Vec<Vec<FElem>> = rows.iter().map(|t| amb.encode(t)).collect();
    let mu = |v: &[FElem]| amb.mul_u(v);
    crate::analysis::closure(amb.dim(), &vs, &[&mu], amb.field())
}

/// Gray images of the rows, one per line, entries separated by spaces.
pub fn gray_matrix(amb: &Ambient, rows: &[Vec<RPoly>]) -> String {
    let f = amb.field();
    rows.iter()
        .map(|t| {
            let syms = Ambient::symbols_of(&amb.encode(t));
            gray(amb.ring(), &syms).iter().map(|&x| f.format_elem(x)).collect::<Vec<_>>().join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Freeness test on the generator: free when every entry divides
/// x^{m_i} - 1 over R, with rank deg h.
pub fn is_free_cor42(spec: &OneGenSpec) -> (bool, usize) {
    let gen = spec.generator();
    let free = gen.iter().zip(spec.blocks()).all(|(e, &m)| e.divides_xm1(m, spec.ring()));
    let f = spec.field();
    let h = spec.h_of(&gen).iter().fold(FqPoly::one(), |acc, hi| acc.lcm(hi, f));
    (free, h.deg().unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub metric: Metric,
    /// Cofactors h_i = (x^{m_i} - 1)/(f_i g_i + u q_i) over R.
    pub h_blocks: Vec<RPoly>,
    /// lcm of the h_i, when they all lie in F_q[x].
    pub h: Option<FqPoly>,
    /// Lexicographically first subset of maximal size whose h_i have an lcm
    /// different from h (0-based).
    pub k: Vec<usize>,
    /// Exact minimum distances of the projected cyclic codes.
    pub d_blocks: Vec<usize>,
    /// Sum of d_i over the blocks outside `k`.
    pub bound: usize,
    /// Minimum of that sum over every subset whose lcm differs from h.
    pub min_over_subsets: usize,
}

impl BoundReport {
    pub fn to_json(&self, r: &Ring) -> Value {
        json!({
            "metric": self.metric,
            "h_i": self.h_blocks.iter().map(|h| h.fmt(r)).collect::<Vec<_>>(),
            "h": self.h.as_ref().map(|h| h.fmt(r.field())),
            "K": self.k.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "d_i": self.d_blocks,
            "bound": self.bound,
            "min_over_subsets": self.min_over_subsets,
        })
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Exact minimum distance of the cyclic code generated by `e` in
/// R[x]/(x^m - 1).
pub fn cyclic_distance(r: &Ring, m: usize, e: &RPoly, metric: Metric, cap: usize) -> Result<usize> {
    let amb = Ambient::cyclic(r.clone(), &[m]);
    let span = amb.span_tuples(&[vec![e.clone()]]);
    if span.dim() == 0 {
        return Err(Error::ZeroCode);
    }
    let we = enumerate_weights(&span, r.field(), metric, m, cap)?;
    Ok(we.min_distance().expect("nonzero code"))
}

/// Lower bound on the minimum distance of a free 1-generator code from the
/// distances of its block projections. With multipliers the bound is the one
/// of the base code, which requires gcd(h_i, k_i) = 1 and
/// deg(f_i g_i + u q_i) = deg(f_i g_i).
pub fn distance_lower_bound(spec: &OneGenSpec, metric: Metric, cap: usize) -> Result<BoundReport> {
    metric.check(spec.field())?;
    let f = spec.field();
    let r = spec.ring();
    let base = OneGenSpec::new(f, spec.blocks(), spec.bases().to_vec())?;
    let (free, _) = is_free_cor42(&base);
    if !free {
        return Err(Error::Precondition("the code is not free: some entry does not divide x^m-1 over R".into()));
    }
    let h_blocks: Vec<RPoly> = base
        .bases()
        .iter()
        .zip(spec.blocks())
        .map(|(e, &m)| e.cofactor_xm1(m, r).expect("free entries divide x^m-1"))
        .collect();
    if spec.has_multipliers() {
        for (i, k) in spec.multipliers().iter().enumerate() {
            if h_blocks[i].bar().gcd(&k.bar(), f).map(|g| g.deg() != Some(0)).unwrap_or(true) {
                return Err(Error::Precondition(format!("multiplier of block {} is not coprime to h_{}", i + 1, i + 1)));
            }
            let b = &spec.bases()[i];
            if b.deg() != b.bar().deg() {
                return Err(Error::Precondition(format!("entry {} has a u-part above the degree of its bar", i + 1)));
            }
        }
    }
    let h = h_blocks
        .iter()
        .all(|hi| hi.u_part().is_zero())
        .then(|| h_blocks.iter().fold(FqPoly::one(), |acc, hi| acc.lcm(&hi.bar(), f)));
    let d_blocks = base
        .bases()
        .iter()
        .zip(spec.blocks())
        .map(|(e, &m)| cyclic_distance(r, m, e, metric, cap))
        .collect::<Result<Vec<_>>>()?;
    let l = spec.blocks().len();
    if l > 12 {
        return Err(Error::Precondition(format!("subset scan over {l} blocks is too large")));
    }
    // lcm{h_i : i in K} = h is read as equality of the ideals generated
    // in R[x]/(x^L - 1), L = lcm(m_i); over F_q[x] this is the usual lcm
    let big = spec.blocks().iter().fold(1usize, |a, &m| a / gcd(a, m) * m);
    if big > 256 {
        return Err(Error::Precondition(format!("lcm of block lengths {big} is too large for the ideal test")));
    }
    let amb = Ambient::cyclic(r.clone(), &[big]);
    let ideals: Vec<FqSubspace> = h_blocks.iter().map(|hi| amb.span_tuples(&[vec![hi.clone()]])).collect();
    let mut meets: Vec<FqSubspace> = Vec::with_capacity(1 << l);
    meets.push(FqSubspace::full(amb.dim(), f));
    for mask in 1usize..(1 << l) {
        let low = mask.trailing_zeros() as usize;
        let m = meets[mask & (mask - 1)].meet(&ideals[low], f);
        meets.push(m);
    }
    let full = meets[(1 << l) - 1].clone();
    let mut best: Option<Vec<usize>> = None;
    let mut min_sum = usize::MAX;
    for (mask, meet) in meets.iter().enumerate() {
        if *meet == full {
            continue;
        }
        let set: Vec<usize> = (0..l).filter(|&i| mask >> i & 1 == 1).collect();
        let outside: usize = (0..l).filter(|i| !set.contains(i)).map(|i| d_blocks[i]).sum();
        min_sum = min_sum.min(outside);
        let better = match &best {
            None => true,
            Some(b) => set.len() > b.len() || (set.len() == b.len() && set < *b),
        };
        if better {
            best = Some(set);
        }
    }
    let k = best.unwrap_or_default();
    let bound = (0..l).filter(|i| !k.contains(i)).map(|i| d_blocks[i]).sum();
    Ok(BoundReport { metric, h_blocks, h, k, d_blocks, bound, min_over_subsets: min_sum.min(bound) })
}

/// Which case of the concatenation statement applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConcatCase {
    /// gcd(h, h') = 1: rank deg(h h'), bound min of the two distances.
    Coprime,
    /// h | h': rank deg h', bound the distance of the GQC code.
    Divides,
    /// Neither; no claim is made.
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Concatenation {
    pub code: GqcCode,
    pub case: ConcatCase,
    pub rank: Option<usize>,
    pub bound: Option<usize>,
    pub d_gqc: usize,
    pub d_cyclic: usize,
}

/// Appends a free cyclic code of length `n` generated by `cyc` as a new
/// block of a free 1-generator GQC code.
pub fn concatenate_cor45(spec: &OneGenSpec, n: usize, cyc: &RPoly, metric: Metric, cap: usize) -> Result<Concatenation> {
    let f = spec.field();
    let r = spec.ring();
    let (free1, _) = is_free_cor42(spec);
    if !free1 {
        return Err(Error::Precondition("the GQC code is not free".into()));
    }
    let cyc = cyc.mod_xm1(n, r);
    if !cyc.divides_xm1(n, r) {
        return Err(Error::Precondition("the cyclic code is not free".into()));
    }
    let gen = spec.generator();
    let hp = spec.h_of(&gen).iter().fold(FqPoly::one(), |acc, hi| acc.lcm(hi, f));
    let xn = FqPoly::xm1(n, f);
    let hc = xn.div_exact(&cyc.bar().gcd(&xn, f)?, f)?;
    let d_gqc = crate::analysis::min_distance(&spec.code(), metric, cap)?;
    let d_cyclic = cyclic_distance(r, n, &cyc, metric, cap)?;
    let mut blocks = spec.blocks().to_vec();
    blocks.push(n);
    let mut g = gen;
    g.push(cyc);
    let code = gqc_new(f, &blocks, vec![g])?;
    let (case, rank, bound) = if hc.gcd(&hp, f)?.deg() == Some(0) {
        (ConcatCase::Coprime, Some(hc.mul(&hp, f).deg().unwrap_or(0)), Some(d_gqc.min(d_cyclic)))
    } else if hc.divides(&hp, f) {
        (ConcatCase::Divides, hp.deg(), Some(d_gqc))
    } else {
        (ConcatCase::Neither, None, None)
    };
    Ok(Concatenation { code, case, rank, bound, d_gqc, d_cyclic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{min_distance, DEFAULT_CAP};

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn example_46_1_minimal_generating_set() {
        let f = f2();
        let spec = OneGenSpec::parse(&f, &[2, 4], &["x+1+u", "x^3+x^2+x+1+u"]).unwrap();
        let mg = minimal_generating_set_unchecked(&spec);
        assert_eq!(mg.h, FqPoly::parse("x+1", &f).unwrap());
        assert_eq!(mg.v, FqPoly::parse("x^3+x^2+x+1", &f).unwrap());
        assert_eq!((mg.r, mg.t, mg.size()), (1, 3, Some(32)));
        assert_eq!(spec.code().span().size(&f), Some(32));
        // neither entry is a unit modulo x^m - 1, so the strict form refuses
        assert!(minimal_generating_set(&spec).is_err());
        let amb = spec.code().ambient();
        let s1 = r_span(&amb, &mg.s1);
        let s2 = r_span(&amb, &mg.s2);
        let all: Vec<Vec<RPoly>> = mg.rows().cloned().collect();
        assert_eq!(r_span(&amb, &all).dim(), s1.dim() + s2.dim());
        let m = gray_matrix(&amb, &mg.s1);
        assert_eq!(m.lines().count(), 1);
        assert_eq!(m.split(' ').count(), 12);
    }

    #[test]
    fn example_46_2_size() {
        let f = f2();
        let spec = OneGenSpec::parse(&f, &[2, 2], &["1+u", "u*x+u+1"]).unwrap();
        let mg = minimal_generating_set(&spec).unwrap();
        assert_eq!(mg.size(), Some(16));
        assert_eq!(spec.code().span().size(&f), Some(16));
    }

    #[test]
    fn free_case_has_no_s2() {
        let f = f2();
        let spec = OneGenSpec::parse(&f, &[3, 4], &["1+x+x^2", "1+x^2"]).unwrap();
        assert_eq!(is_free_cor42(&spec), (true, 2));
        let mg = minimal_generating_set_unchecked(&spec);
        assert_eq!(mg.t, 0);
        assert!(mg.s2.is_empty());
        let spec2 = OneGenSpec::parse(&f, &[4, 6], &["1+x^2", "(1+x+x^2)^2"]).unwrap();
        assert_eq!(is_free_cor42(&spec2), (true, 2));
        let spec3 = OneGenSpec::parse(&f, &[3], &["x+u"]).unwrap();
        assert!(!is_free_cor42(&spec3).0);
    }

    #[test]
    fn example_47_bounds() {
        let f = f2();
        let s1 = OneGenSpec::parse(&f, &[3, 4], &["1+x+x^2", "1+x^2"]).unwrap();
        let b1 = distance_lower_bound(&s1, Metric::Lee, DEFAULT_CAP).unwrap();
        let r = s1.ring();
        assert_eq!(b1.h_blocks, vec![RPoly::parse("1+x", r).unwrap(), RPoly::parse("(1+x)^2", r).unwrap()]);
        assert_eq!(b1.h, Some(FqPoly::parse("(1+x)^2", &f).unwrap()));
        assert_eq!(b1.d_blocks, vec![3, 2]);
        assert_eq!(b1.k, vec![0]);
        assert_eq!(b1.bound, 2);
        assert_eq!(min_distance(&s1.code(), Metric::Lee, DEFAULT_CAP).unwrap(), 4);
        let s2 = OneGenSpec::parse(&f, &[4, 6], &["1+x^2", "(1+x+x^2)^2"]).unwrap();
        let b2 = distance_lower_bound(&s2, Metric::Lee, DEFAULT_CAP).unwrap();
        assert_eq!(b2.d_blocks, vec![2, 3]);
        assert!(b2.k.is_empty());
        assert_eq!(b2.bound, 5);
        assert_eq!(min_distance(&s2.code(), Metric::Lee, DEFAULT_CAP).unwrap(), 5);
    }

    #[test]
    fn single_block_bound_is_exact() {
        let f = Field::prime(3).unwrap();
        let s = OneGenSpec::parse(&f, &[4], &["x^2+1"]).unwrap();
        let b = distance_lower_bound(&s, Metric::Hamming, DEFAULT_CAP).unwrap();
        assert!(b.k.is_empty());
        assert_eq!(b.bound, min_distance(&s.code(), Metric::Hamming, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn non_free_input_rejected() {
        let s = OneGenSpec::parse(&f2(), &[2, 2], &["1+u", "x"]).unwrap();
        assert!(distance_lower_bound(&s, Metric::Lee, DEFAULT_CAP).is_err());
    }

    #[test]
    fn concatenation_cases() {
        let f = f2();
        let s1 = OneGenSpec::parse(&f, &[3, 4], &["1+x+x^2", "1+x^2"]).unwrap();
        let r = s1.ring().clone();
        // h = x^3+x+1 for the length-7 code generated by (x^7-1)/(x^3+x+1)
        let cyc = RPoly::parse("x^4+x^2+x+1", &r).unwrap();
        let c = concatenate_cor45(&s1, 7, &cyc, Metric::Lee, DEFAULT_CAP).unwrap();
        assert_eq!(c.case, ConcatCase::Coprime);
        assert_eq!(c.rank, Some(5));
        assert_eq!(c.code.span().dim(), 10);
        assert!(c.bound.unwrap() <= min_distance(&c.code, Metric::Lee, DEFAULT_CAP).unwrap());
        let same = concatenate_cor45(&s1, 4, &RPoly::parse("1+x^2", &r).unwrap(), Metric::Lee, DEFAULT_CAP).unwrap();
        assert_eq!(same.case, ConcatCase::Divides);
        assert_eq!(same.rank, Some(2));
        let s2 = OneGenSpec::parse(&f, &[3], &["1"]).unwrap();
        let other = concatenate_cor45(&s2, 4, &RPoly::parse("1+x", &r).unwrap(), Metric::Lee, DEFAULT_CAP).unwrap();
        assert_eq!(other.case, ConcatCase::Neither);
        assert_eq!(other.bound, None);
    }

    #[test]
    fn multipliers_scale_the_generator() {
        let f = f2();
        let s = OneGenSpec::parse(&f, &[3, 4], &["1+x+x^2", "1+x^2"])
            .unwrap()
            .with_multipliers(vec![RPoly::one(), RPoly::parse("x^2+x+1", &Ring::new(f.clone())).unwrap()])
            .unwrap();
        let b = distance_lower_bound(&s, Metric::Lee, DEFAULT_CAP).unwrap();
        assert!(b.bound <= min_distance(&s.code(), Metric::Lee, DEFAULT_CAP).unwrap());
        let bad = s.clone().with_multipliers(vec![RPoly::one(), RPoly::parse("x+1", s.ring()).unwrap()]).unwrap();
        assert!(distance_lower_bound(&bad, Metric::Lee, DEFAULT_CAP).is_err());
    }

    #[test]
    fn size_law_counterexample_with_a_regular_block() {
        // block 1 is regular, yet the formula overcounts by a factor 2
        let f = f2();
        let s = OneGenSpec::parse(&f, &[3, 4], &["(1+u)*x", "x+(1+u)*x^3"]).unwrap();
        let mg = minimal_generating_set(&s).unwrap();
        assert_eq!(mg.size(), Some(1 << 10));
        assert_eq!(s.code().span().size(&f), Some(1 << 9));
    }

    #[test]
    fn json_shapes() {
        let f = f2();
        let s = OneGenSpec::parse(&f, &[4, 6], &["1+x^2", "(1+x+x^2)^2"]).unwrap();
        let j = minimal_generating_set_unchecked(&s).to_json(s.ring());
        assert_eq!(j["r"], 2);
        assert_eq!(j["S1"].as_array().unwrap().len(), 2);
        let b = distance_lower_bound(&s, Metric::Lee, DEFAULT_CAP).unwrap().to_json(s.ring());
        assert_eq!(b["bound"], 5);
        assert_eq!(b["metric"], "lee");
    }
}
