//! Quasi-cyclic codes: the block shift T^l, the Galois-extension view over
//! R~ = R[y]/(f(y)), product distance bounds, the index-2 construction over
//! F_q, Euclidean duals and the Hermitian product.
//!
//! Vectors of R^{ml} use the row-circulant layout: position i*l + j holds the
//! x^i coefficient of component j.

use serde_json::{json, Value};

use crate::analysis::{closure, enumerate_weights, symbol_weight, Ambient, FqSubspace, Metric};
use crate::codes::{generator_count_bounds, gqc_new, CodeJson, FieldJson, GqcCode};
use crate::error::{Error, Result};
use crate::gf::{FElem, Field};
use crate::poly::{is_irreducible, smallest_irreducible, FqPoly, RPoly};
use crate::rring::{hamming_weight_f, RElem, Ring};

/// Cyclic shift by one block of `ell` coordinates.
pub fn t_shift<T: Clone>(v: &[T], ell: usize) -> Result<Vec<T>> {
    if ell == 0 || v.len() % ell != 0 {
        return Err(Error::Precondition(format!("length {} is not a multiple of {}", v.len(), ell)));
    }
    let mut out = v.to_vec();
    out.rotate_right(ell);
    Ok(out)
}

/// A QC code of index `ell` and co-index `m`, an R[x]-submodule of
/// (R[x]/(x^m - 1))^ell given by generator tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QcCode {
    gqc: GqcCode,
    m: usize,
}

impl QcCode {
    pub fn new(fld: &Field, m: usize, ell: usize, gens: Vec<Vec<RPoly>>) -> Result<QcCode> {
        if ell == 0 {
            return Err(Error::Precondition("index must be positive".into()));
        }
        Ok(QcCode { gqc: gqc_new(fld, &vec![m; ell], gens)?, m })
    }

    pub fn parse<S: AsRef<str>>(fld: &Field, m: usize, ell: usize, gens: &[Vec<S>]) -> Result<QcCode> {
        if ell == 0 {
            return Err(Error::Precondition("index must be positive".into()));
        }
        Ok(QcCode { gqc: GqcCode::parse(fld, &vec![m; ell], gens)?, m })
    }

    /// A GQC code whose blocks all have the same length.
    pub fn from_gqc(code: GqcCode) -> Result<QcCode> {
        let m = code.blocks()[0];
        if code.blocks().iter().any(|&b| b != m) {
            return Err(Error::Precondition(format!("blocks {:?} are not all equal", code.blocks())));
        }
        Ok(QcCode { gqc: code, m })
    }

    pub fn from_json(s: &str) -> Result<QcCode> {
        let j: CodeJson = serde_json::from_str(s).map_err(|e| Error::Parse(format!("code JSON: {e}")))?;
        let f = j.field.build()?;
        match (j.ell, j.blocks.as_slice()) {
            (Some(ell), [m]) => QcCode::parse(&f, *m, ell, &j.generators),
            (ell, blocks) => {
                let code = QcCode::from_gqc(GqcCode::parse(&f, blocks, &j.generators)?)?;
                match ell {
                    Some(l) if l != code.ell() => Err(Error::Precondition(format!("ell {l} does not match {} blocks", code.ell()))),
                    _ => Ok(code),
                }
            }
        }
    }

    pub fn to_json(&self) -> CodeJson {
        let mut j = self.gqc.to_json();
        j.ell = Some(self.ell());
        j
    }

    pub fn gqc(&self) -> &GqcCode {
        &self.gqc
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ell(&self) -> usize {
        self.gqc.ell()
    }

    pub fn ring(&self) -> &Ring {
        self.gqc.ring()
    }

    pub fn field(&self) -> &Field {
        self.gqc.field()
    }

    /// Block-major (a, b) coordinates to row-circulant R-symbols.
    pub fn interleave(&self, v: &[FElem]) -> Vec<RElem> {
        let (m, l) = (self.m, self.ell());
        (0..m * l)
            .map(|pos| {
                let (i, j) = (pos / l, pos % l);
                let s = j * m + i;
                RElem::new(v[2 * s], v[2 * s + 1])
            })
            .collect()
    }

    /// Inverse of [`QcCode::interleave`].
    pub fn deinterleave(&self, w: &[RElem]) -> Vec<FElem> {
        let (m, l) = (self.m, self.ell());
        let mut v = vec![FElem::ZERO; 2 * m * l];
        for (pos, e) in w.iter().enumerate() {
            let s = (pos % l) * m + pos / l;
            v[2 * s] = e.a;
            v[2 * s + 1] = e.b;
        }
        v
    }

    /// The polynomial tuple of a row-circulant vector.
    pub fn tuple_of(&self, w: &[RElem]) -> Vec<RPoly> {
        self.gqc.ambient().decode(&self.deinterleave(w))
    }

    /// The row-circulant vector of a polynomial tuple.
    pub fn vector_of(&self, t: &[RPoly]) -> Vec<RElem> {
        self.interleave(&self.gqc.ambient().encode(t))
    }

    pub fn span(&self) -> FqSubspace {
        self.gqc.span()
    }

    /// All codewords in row-circulant layout.
    pub fn codewords(&self, cap: usize) -> Result<Vec<Vec<RElem>>> {
        Ok(self.span().elements(self.field(), cap)?.iter().map(|v| self.interleave(v)).collect())
    }
}

/// The degree-l Galois extension R~ = R[y]/(f(y)) with f monic and bar(f)
/// irreducible. Elements are l-vectors over R in the basis 1, xi, ...,
/// xi^{l-1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisExtR {
    ring: Ring,
    ell: usize,
    modulus: RPoly,
}

pub type ExtElem = Vec<RElem>;

impl GaloisExtR {
    /// Defaults to the trivial lift of the first monic irreducible of degree
    /// `ell` over F_q.
    pub fn new(ring: &Ring, ell: usize, modulus: Option<RPoly>) -> Result<GaloisExtR> {
        if ell == 0 {
            return Err(Error::Precondition("extension degree must be positive".into()));
        }
        let f = ring.field();
        let modulus = modulus.unwrap_or_else(|| smallest_irreducible(ell, f).lift());
        if modulus.deg() != Some(ell) || modulus.lead() != ring.one() {
            return Err(Error::InvalidModulus(format!("{} is not monic of degree {ell}", modulus.fmt(ring))));
        }
        if !is_irreducible(&modulus.bar(), f) {
            return Err(Error::InvalidModulus(format!("{} is not basic irreducible", modulus.fmt(ring))));
        }
        Ok(GaloisExtR { ring: ring.clone(), ell, modulus })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn degree(&self) -> usize {
        self.ell
    }

    pub fn modulus(&self) -> &RPoly {
        &self.modulus
    }

    pub fn zero(&self) -> ExtElem {
        vec![RElem::ZERO; self.ell]
    }

    fn to_poly(&self, a: &[RElem]) -> RPoly {
        RPoly::new(a.to_vec())
    }

    fn from_poly(&self, p: &RPoly) -> ExtElem {
        let red = p.rem(&self.modulus, &self.ring).expect("monic modulus");
        (0..self.ell).map(|i| red.coeff(i)).collect()
    }

    pub fn xi(&self) -> ExtElem {
        self.from_poly(&RPoly::monomial(self.ring.one(), 1))
    }

    pub fn add(&self, a: &[RElem], b: &[RElem]) -> ExtElem {
        a.iter().zip(b).map(|(&x, &y)| self.ring.add(x, y)).collect()
    }

    pub fn mul(&self, a: &[RElem], b: &[RElem]) -> ExtElem {
        self.from_poly(&self.to_poly(a).mul(&self.to_poly(b), &self.ring))
    }

    /// Coefficients v_0..v_{m-1} in R~ of an l-tuple of polynomials of
    /// degree < m.
    pub fn ext_view(&self, tuple: &[RPoly], m: usize) -> Result<Vec<ExtElem>> {
        if tuple.len() != self.ell {
            return Err(Error::Precondition(format!("expected {} components, got {}", self.ell, tuple.len())));
        }
        if let Some(p) = tuple.iter().find(|p| p.deg().is_some_and(|d| d >= m)) {
            return Err(Error::Precondition(format!("{} has degree at least {m}", p.fmt(&self.ring))));
        }
        Ok((0..m).map(|i| tuple.iter().map(|p| p.coeff(i)).collect()).collect())
    }

    /// Inverse of [`GaloisExtR::ext_view`].
    pub fn tuple_view(&self, v: &[ExtElem]) -> Vec<RPoly> {
        (0..self.ell).map(|j| RPoly::new(v.iter().map(|c| c[j]).collect())).collect()
    }

    /// Multiplication by x in R~[x]/(x^m - 1).
    pub fn mul_x(&self, v: &[ExtElem]) -> Vec<ExtElem> {
        let mut out = v.to_vec();
        out.rotate_right(1);
        out
    }

    fn flat(v: &[ExtElem]) -> Vec<FElem> {
        v.iter().flatten().flat_map(|e| [e.a, e.b]).collect()
    }

    fn unflat(&self, w: &[FElem]) -> Vec<ExtElem> {
        w.chunks(2 * self.ell).map(|c| c.chunks(2).map(|p| RElem::new(p[0], p[1])).collect()).collect()
    }

    /// The R~[x]-submodule of R~[x]/(x^m - 1) spanned by `gens`, in
    /// row-circulant F_q coordinates.
    pub fn cyclic_span(&self, gens: &[Vec<ExtElem>], m: usize) -> FqSubspace {
        let l = self.ell;
        let f = self.ring.field();
        let vs: Vec<Vec<FElem>> = gens.iter().map(|g| Self::flat(g)).collect();
        let shift = |w: &[FElem]| {
            let mut o = w.to_vec();
            o.rotate_right(2 * l);
            o
        };
        let mul_u = |w: &[FElem]| {
            let mut o = vec![FElem::ZERO; w.len()];
            for s in 0..w.len() / 2 {
                o[2 * s + 1] = w[2 * s];
            }
            o
        };
        let xi = self.xi();
        let mul_xi = |w: &[FElem]| {
            let v: Vec<ExtElem> = self.unflat(w).iter().map(|c| self.mul(c, &xi)).collect();
            Self::flat(&v)
        };
        closure(2 * l * m, &vs, &[&shift, &mul_u, &mul_xi], f)
    }
}

/// d~ * d_B for a QC code given by generators over R~.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ProductBound {
    pub d_tilde: usize,
    pub d_b: usize,
    pub bound: usize,
}

/// Product bound d(C~) d(B): C~ is the cyclic code over R~ spanned by the
/// generators and B the R-linear code of length l spanned by all of their
/// coefficient vectors. Distances are Hamming over R~ and R symbols.
pub fn product_bound(ext: &GaloisExtR, gens: &[Vec<ExtElem>], m: usize, cap: usize) -> Result<ProductBound> {
    let f = ext.ring().field();
    let l = ext.degree();
    let ct = ext.cyclic_span(gens, m);
    if ct.dim() == 0 {
        return Err(Error::ZeroCode);
    }
    let mut d_tilde = usize::MAX;
    ct.for_each(f, cap, |w| {
        let wt = symbol_weight(w, 2 * l);
        if wt > 0 && wt < d_tilde {
            d_tilde = wt;
        }
    })?;
    let coeffs: Vec<Vec<FElem>> = gens.iter().flatten().map(|c| c.iter().flat_map(|e| [e.a, e.b]).collect()).collect();
    let mul_u = |w: &[FElem]| {
        let mut o = vec![FElem::ZERO; w.len()];
        for s in 0..w.len() / 2 {
            o[2 * s + 1] = w[2 * s];
        }
        o
    };
    let b = closure(2 * l, &coeffs, &[&mul_u], f);
    let we = enumerate_weights(&b, f, Metric::Hamming, l, cap)?;
    let d_b = we.min_distance().ok_or(Error::ZeroCode)?;
    Ok(ProductBound { d_tilde, d_b, bound: d_tilde * d_b })
}

/// The index-2 code over F_q spanned by the shifts of v in R[x]/(x^m - 1),
/// read through a + bu -> (a, b).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexTwoCode {
    pub m: usize,
    pub v: RPoly,
    /// x^j v for j < m, each of length 2m over F_q.
    pub rows: Vec<Vec<FElem>>,
    pub span: FqSubspace,
    /// gcd(bar v, x^m - 1).
    pub g: FqPoly,
    /// Hamming distance of the cyclic code over R generated by the lift of g.
    pub d_tilde: Option<usize>,
    /// Hamming distance of the cyclic code over R generated by v itself.
    pub d_tilde_v: Option<usize>,
    /// Distance of the length-2 code over F_q spanned by the coefficient pairs.
    pub d_b: Option<usize>,
    pub bound: Option<usize>,
    /// delta * d_b, when delta is given.
    pub bound_delta: Option<usize>,
}

impl IndexTwoCode {
    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    /// Rows as bit strings, two characters per R-symbol.
    pub fn row_strings(&self, f: &Field, rows: usize) -> Vec<String> {
        self.rows
            .iter()
            .take(rows)
            .map(|r| r.chunks(2).map(|p| format!("{}{}", f.format_elem(p[0]), f.format_elem(p[1]))).collect::<Vec<_>>().join(" "))
            .collect()
    }

    pub fn to_json(&self, r: &Ring) -> Value {
        json!({
            "m": self.m,
            "v": self.v.fmt(r),
            "dimension": self.dim(),
            "g": self.g.fmt(r.field()),
            "d_tilde": self.d_tilde,
            "d_tilde_v": self.d_tilde_v,
            "d_B": self.d_b,
            "bound": self.bound,
            "bound_delta": self.bound_delta,
            "rows": self.row_strings(r.field(), self.m),
        })
    }
}

/// Distance of a subspace of F_q^n under Hamming weight with `group`
/// coordinates per symbol.
fn subspace_distance(s: &FqSubspace, f: &Field, group: usize, cap: usize) -> Result<Option<usize>> {
    if s.dim() == 0 {
        return Ok(None);
    }
    let mut d = usize::MAX;
    s.for_each(f, cap, |w| {
        let wt = symbol_weight(w, group);
        if wt > 0 && wt < d {
            d = wt;
        }
    })?;
    Ok(Some(d))
}

pub fn construct_cor52(r: &Ring, v: &RPoly, m: usize, delta: Option<usize>, cap: usize) -> Result<IndexTwoCode> {
    let f = r.field();
    if v.deg().is_some_and(|d| d >= m) {
        return Err(Error::Precondition(format!("deg v must be below {m}")));
    }
    let amb = Ambient::cyclic(r.clone(), &[m]);
    let mut rows = Vec::with_capacity(m);
    let mut cur = amb.encode(std::slice::from_ref(v));
    for _ in 0..m {
        rows.push(cur.clone());
        cur = amb.mul_x(&cur);
    }
    let span = FqSubspace::spanned_by(2 * m, &rows, f);
    let xm1 = FqPoly::xm1(m, f);
    let g = v.bar().gcd(&xm1, f)?;
    let cyc_dist = |gen: &RPoly| -> Result<Option<usize>> {
        let s = amb.span_tuples(&[vec![gen.clone()]]);
        subspace_distance(&s, f, 2, cap)
    };
    let d_tilde = cyc_dist(&g.lift())?;
    let d_tilde_v = cyc_dist(v)?;
    let pairs: Vec<Vec<FElem>> = (0..m).map(|i| vec![v.coeff(i).a, v.coeff(i).b]).collect();
    let b = FqSubspace::spanned_by(2, &pairs, f);
    let d_b = subspace_distance(&b, f, 1, cap)?;
    let bound = d_tilde.zip(d_b).map(|(a, b)| a * b);
    let bound_delta = delta.zip(d_b).map(|(a, b)| a * b);
    Ok(IndexTwoCode { m, v: v.clone(), rows, span, g, d_tilde, d_tilde_v, d_b, bound, bound_delta })
}

/// Exact Hamming distance of a subspace of F_q^n.
pub fn fq_distance(s: &FqSubspace, f: &Field, cap: usize) -> Result<Option<usize>> {
    subspace_distance(s, f, 1, cap)
}

/// Hamming weights over F_q of the span, as counts per weight.
pub fn fq_enumerator(s: &FqSubspace, f: &Field, cap: usize) -> Result<std::collections::BTreeMap<usize, u64>> {
    let mut counts = std::collections::BTreeMap::new();
    s.for_each(f, cap, |w| *counts.entry(hamming_weight_f(w)).or_insert(0) += 1)?;
    Ok(counts)
}

/// The Euclidean dual of a QC code, again a QC code of the same index.
///
/// w is orthogonal to C over R iff sum a_i d_i + b_i c_i = 0 for every
/// (a, b) in C; the a-part condition follows from applying this to u*C.
pub fn euclid_dual(code: &QcCode) -> Result<QcCode> {
    let f = code.field();
    let span = code.span();
    let swapped: Vec<Vec<FElem>> = span
        .basis()
        .iter()
        .map(|row| row.chunks(2).flat_map(|p| [p[1], p[0]]).collect())
        .collect();
    let n = 2 * code.m() * code.ell();
    let ker = crate::analysis::nullspace(swapped, n, f);
    let amb = code.gqc().ambient();
    let gens: Vec<Vec<RPoly>> = if ker.is_empty() {
        vec![vec![RPoly::zero(); code.ell()]]
    } else {
        FqSubspace::spanned_by(n, &ker, f).basis().iter().map(|v| amb.decode(v)).collect()
    };
    QcCode::new(f, code.m(), code.ell(), gens)
}

/// Euclidean product over R of two vectors.
pub fn euclid_product(r: &Ring, u: &[RElem], v: &[RElem]) -> RElem {
    u.iter().zip(v).fold(r.zero(), |acc, (&x, &y)| r.add(acc, r.mul(x, y)))
}

/// sum_j a_j(x) * conj(b_j(x)) mod x^m - 1, where conj(c x^i) = c x^{m-i}.
pub fn hermitian_product(r: &Ring, a: &[RPoly], b: &[RPoly], m: usize) -> Result<RPoly> {
    if a.len() != b.len() {
        return Err(Error::Precondition(format!("tuples of lengths {} and {}", a.len(), b.len())));
    }
    let conj = |p: &RPoly| {
        let mut c = vec![RElem::ZERO; m];
        for i in 0..m {
            c[(m - i) % m] = p.coeff(i);
        }
        RPoly::new(c)
    };
    Ok(a.iter().zip(b).fold(RPoly::zero(), |acc, (x, y)| acc.add(&x.mul(&conj(y), r), r).mod_xm1(m, r)))
}

/// Generator counts of a QC code and its dual against the claims for free
/// decompositions.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DualCountReport {
    pub ell: usize,
    pub ranks: Vec<usize>,
    pub free: Vec<bool>,
    pub dual_ranks: Vec<usize>,
    pub dual_free: Vec<bool>,
    /// max k_i.
    pub k_max: usize,
    /// min k_i.
    pub k_min: usize,
    /// Minimal generator counts of C and of its dual.
    pub rho: usize,
    pub rho_dual: usize,
    /// Every component of C is free.
    pub hypothesis: bool,
    /// rho = max k_i.
    pub claim_code: bool,
    /// rho_dual = l - min k_i.
    pub claim_dual: bool,
    /// When rho_dual = rho: min k_i = l - rho and l <= 2 rho.
    pub claim_equal_counts: Option<bool>,
    pub self_dual: bool,
    /// For self-dual codes: l even and l <= 2 rho.
    pub claim_self_dual: Option<bool>,
}

impl DualCountReport {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

pub fn check_thm55(code: &QcCode) -> Result<DualCountReport> {
    let gc = generator_count_bounds(code.gqc())?;
    let dual = euclid_dual(code)?;
    let dc = generator_count_bounds(dual.gqc())?;
    let l = code.ell();
    let k_max = gc.ranks.iter().copied().max().unwrap_or(0);
    let k_min = gc.ranks.iter().copied().min().unwrap_or(0);
    let (rho, rho_dual) = (gc.k, dc.k);
    let self_dual = code.span() == dual.span();
    Ok(DualCountReport {
        ell: l,
        hypothesis: gc.all_free(),
        claim_code: rho == k_max,
        claim_dual: rho_dual + k_min == l,
        claim_equal_counts: (l >= 2 && rho_dual == rho).then(|| k_min + rho == l && l <= 2 * rho),
        claim_self_dual: self_dual.then(|| l % 2 == 0 && l <= 2 * rho),
        self_dual,
        ranks: gc.ranks,
        free: gc.free,
        dual_ranks: dc.ranks,
        dual_free: dc.free,
        k_max,
        k_min,
        rho,
        rho_dual,
    })
}

/// JSON for a QC code with its index.
pub fn qc_json(code: &QcCode) -> Value {
    let j = code.to_json();
    json!({ "field": FieldJson::of(code.field()), "blocks": j.blocks, "generators": j.generators, "ell": code.ell() })
}
