//! GQC codes over R: construction, cyclic generator forms, CRT decomposition
//! into components over R[x]/(g_k^d) and minimal generator counts.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::analysis::{Ambient, FqSubspace};
use crate::error::{Error, Result};
use crate::gf::{FElem, Field};
use crate::poly::{crt_idempotents, factor_cyclotomic, FqPoly, RPoly};
use crate::rring::Ring;

/// An R[x]-submodule of R[x]/(x^{m_1}-1) x ... x R[x]/(x^{m_l}-1), given by
/// generator tuples. Entries are stored reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GqcCode {
    ring: Ring,
    blocks: Vec<usize>,
    generators: Vec<Vec<RPoly>>,
}

/// Builds a code, reducing every entry modulo its block.
pub fn gqc_new(fld: &Field, blocks: &[usize], gens: Vec<Vec<RPoly>>) -> Result<GqcCode> {
    if blocks.is_empty() {
        return Err(Error::Precondition("at least one block is required".into()));
    }
    if let Some(i) = blocks.iter().position(|&m| m == 0) {
        return Err(Error::Precondition(format!("block {} has length 0", i + 1)));
    }
    let ring = Ring::new(fld.clone());
    let mut out = Vec::with_capacity(gens.len());
    for (j, g) in gens.into_iter().enumerate() {
        if g.len() != blocks.len() {
            return Err(Error::Precondition(format!(
                "generator {} has {} entries but there are {} blocks",
                j + 1,
                g.len(),
                blocks.len()
            )));
        }
        for e in &g {
            if let Some(c) = e.coeffs().iter().find(|c| !ring.contains(**c)) {
                return Err(Error::ForeignElement(format!("{} (coefficient ({},{}))", fld, c.a.index(), c.b.index())));
            }
        }
        out.push(g.iter().zip(blocks).map(|(e, &m)| e.mod_xm1(m, &ring)).collect());
    }
    Ok(GqcCode { ring, blocks: blocks.to_vec(), generators: out })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u32,
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
}

impl FieldJson {
    pub fn of(f: &Field) -> FieldJson {
        FieldJson { p: f.p(), n: f.n(), modulus: (f.n() > 1).then(|| f.modulus_string()) }
    }

    pub fn build(&self) -> Result<Field> {
        match &self.modulus {
            Some(m) => format!("GF({},{},{})", self.p, self.n, m).parse(),
            None => Field::new(self.p, self.n, None),
        }
    }
}

/// Serialized form of a code. `ell` is only used for quasi-cyclic codes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub field: FieldJson,
    pub blocks: Vec<usize>,
    pub generators: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
}

impl CodeJson {
    pub fn build(&self) -> Result<GqcCode> {
        let f = self.field.build()?;
        GqcCode::parse(&f, &self.blocks, &self.generators)
    }
}

impl GqcCode {
    /// Builds a code from generator strings such as `"x^2+(1+u)x+1"`.
    pub fn parse<S: AsRef<str>>(fld: &Field, blocks: &[usize], gens: &[Vec<S>]) -> Result<GqcCode> {
        let ring = Ring::new(fld.clone());
        let parsed = gens
            .iter()
            .map(|g| g.iter().map(|s| RPoly::parse(s.as_ref(), &ring)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        gqc_new(fld, blocks, parsed)
    }

    pub fn from_json(s: &str) -> Result<GqcCode> {
        let j: CodeJson = serde_json::from_str(s).map_err(|e| Error::Parse(format!("code JSON: {e}")))?;
        j.build()
    }

    pub fn to_json(&self) -> CodeJson {
        CodeJson {
            field: FieldJson::of(self.field()),
            blocks: self.blocks.clone(),
            generators: self.generators.iter().map(|g| g.iter().map(|e| e.fmt(&self.ring)).collect()).collect(),
            ell: None,
        }
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

    pub fn ell(&self) -> usize {
        self.blocks.len()
    }

    /// Total length over R.
    pub fn length(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn generators(&self) -> &[Vec<RPoly>] {
        &self.generators
    }

    pub fn ambient(&self) -> Ambient {
        Ambient::cyclic(self.ring.clone(), &self.blocks)
    }

    /// F_q-span of the code, closed under x and u.
    pub fn span(&self) -> FqSubspace {
        self.ambient().span_tuples(&self.generators)
    }

    pub fn format_tuple(&self, t: &[RPoly]) -> String {
        format!("({})", t.iter().map(|e| e.fmt(&self.ring)).collect::<Vec<_>>().join(", "))
    }
}

impl fmt::Display for GqcCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.blocks.iter().map(|m| m.to_string()).collect();
        let gens: Vec<String> = self.generators.iter().map(|g| self.format_tuple(g)).collect();
        write!(f, "GQC code over {}+u{} with blocks ({}) generated by {}", self.field(), self.field(), blocks.join(","), gens.join(", "))
    }
}

/// Generator shapes of a cyclic code over R.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CyclicForm {
    /// (g + ua) with a | g | x^m - 1, when gcd(p, m) = 1.
    PrincipalCoprime,
    /// (g + up) with (g + up) | x^m - 1 over R and g | p (x^m - 1)/g.
    PrincipalNonprincipal,
    /// (g + up, ua) with a | g | x^m - 1, a | p (x^m - 1)/g and deg a > deg p.
    TwoGenerator,
}

/// A cyclic code of R[x]/(x^m - 1) in canonical generator form.
///
/// `g` generates the residue code (bars of codewords), `a` the torsion code
/// {b : ub in C}, and `p` is reduced modulo `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCodeR {
    pub m: usize,
    pub g: FqPoly,
    pub p: FqPoly,
    pub a: FqPoly,
    pub form: CyclicForm,
    pub gens: Vec<RPoly>,
}

impl CyclicCodeR {
    /// Re-checks the divisibility conditions of the declared form and returns
    /// the first one that fails.
    pub fn validate(&self, r: &Ring) -> Result<()> {
        let f = r.field();
        let xm1 = FqPoly::xm1(self.m, f);
        let fail = |what: &str| Err(Error::Precondition(format!("cyclic form {:?}: {what} fails", self.form)));
        if !self.g.divides(&xm1, f) {
            return fail("g | x^m-1");
        }
        let h = xm1.div_exact(&self.g, f)?;
        match self.form {
            CyclicForm::PrincipalCoprime => {
                if self.m % f.p() as usize == 0 {
                    return fail("gcd(p,m) = 1");
                }
                if !self.a.divides(&self.g, f) {
                    return fail("a | g");
                }
            }
            CyclicForm::PrincipalNonprincipal => {
                if !self.gens[0].divides_xm1(self.m, r) {
                    return fail("(g+up) | x^m-1 over R");
                }
                if !self.g.divides(&self.p.mul(&h, f), f) {
                    return fail("g | p(x^m-1)/g");
                }
            }
            CyclicForm::TwoGenerator => {
                if !self.a.divides(&self.g, f) {
                    return fail("a | g");
                }
                if !self.a.divides(&self.p.mul(&h, f), f) {
                    return fail("a | p(x^m-1)/g");
                }
                if let Some(dp) = self.p.deg() {
                    if dp >= self.a.deg().unwrap_or(0) {
                        return fail("deg a > deg p");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn describe(&self, r: &Ring) -> String {
        let gens: Vec<String> = self.gens.iter().map(|g| g.fmt(r)).collect();
        format!("({})", gens.join(", "))
    }
}

/// Finds the generator form of the cyclic code spanned by `gens`.
pub fn classify_cyclic(r: &Ring, m: usize, gens: &[RPoly]) -> Result<CyclicCodeR> {
    if gens.is_empty() {
        return Err(Error::Precondition("classify_cyclic needs at least one generator".into()));
    }
    if m == 0 {
        return Err(Error::Precondition("length must be positive".into()));
    }
    let f = r.field();
    let amb = Ambient::cyclic(r.clone(), &[m]);
    let target = amb.span_tuples(&gens.iter().map(|g| vec![g.clone()]).collect::<Vec<_>>());
    let xm1 = FqPoly::xm1(m, f);

    let elems: Vec<RPoly> = target.basis().iter().map(|v| amb.decode(v).remove(0)).collect();
    let mut g = xm1.clone();
    for e in &elems {
        g = g.gcd(&e.bar(), f)?;
    }
    // the torsion code collects u-parts of basis rows whose bar vanishes
    let mut a = xm1.clone();
    let mut p = FqPoly::zero();
    for e in &elems {
        if e.bar().is_zero() {
            a = a.gcd(&e.u_part(), f)?;
        }
    }
    if g != xm1 {
        p = element_with_bar(&amb, &target, &g, f).ok_or_else(|| Error::Precondition("no codeword has bar equal to g".into()))?;
    }
    if a != xm1 {
        p = p.rem(&a, f)?;
    } else {
        p = p.mod_xm1(m, f);
    }
    let g_up = RPoly::from_parts(&g, &p);
    let ua = RPoly::from_parts(&FqPoly::zero(), &a);
    let span_of = |gs: &[RPoly]| amb.span_tuples(&gs.iter().map(|g| vec![g.clone()]).collect::<Vec<_>>());

    let coprime = m % f.p() as usize != 0;
    let code = if coprime {
        let single = RPoly::from_parts(&g, &a);
        if span_of(std::slice::from_ref(&single)) != target {
            return Err(Error::Precondition("cyclic form (1): (g+ua) does not generate the code".into()));
        }
        CyclicCodeR { m, g, p, a, form: CyclicForm::PrincipalCoprime, gens: vec![single] }
    } else if a == g {
        CyclicCodeR { m, g, p, a, form: CyclicForm::PrincipalNonprincipal, gens: vec![g_up] }
    } else {
        CyclicCodeR { m, g, p, a, form: CyclicForm::TwoGenerator, gens: vec![g_up, ua] }
    };
    if span_of(&code.gens) != target {
        return Err(Error::Precondition(format!("cyclic form {:?}: generators do not span the code", code.form)));
    }
    code.validate(r)?;
    Ok(code)
}

/// The u-part of some codeword whose bar is exactly `g`, found by solving
/// for a combination of basis rows with that a-part.
fn element_with_bar(amb: &Ambient, space: &FqSubspace, g: &FqPoly, f: &Field) -> Option<FqPoly> {
    let m = amb.symbols();
    let mut aug = FqSubspace::new(3 * m);
    for v in space.basis() {
        let row: Vec<FElem> = (0..m).map(|i| v[2 * i]).chain(v.iter().copied()).collect();
        aug.insert(&row, f);
    }
    let target: Vec<FElem> = (0..m).map(|i| g.coeff(i)).chain(std::iter::repeat(FElem::ZERO).take(2 * m)).collect();
    let red = aug.reduce(&target, f);
    if red[..m].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let w: Vec<FElem> = red[m..].iter().map(|&x| f.neg(x)).collect();
    let e = amb.decode(&w).remove(0);
    debug_assert_eq!(e.bar(), *g);
    Some(e.u_part())
}

/// One CRT component: the code projected into
/// prod_{i : d_{i,k} > 0} R[x]/(g_k^{d_{i,k}}).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub factor: FqPoly,
    /// Indices of blocks where g_k divides x^{m_i} - 1.
    pub blocks: Vec<usize>,
    /// g_k^{d_{i,k}} for each of those blocks.
    pub moduli: Vec<FqPoly>,
    /// Projected generators, one entry per block in `blocks`.
    pub generators: Vec<Vec<RPoly>>,
}

impl Component {
    pub fn ambient(&self, r: &Ring) -> Ambient {
        Ambient::new(r.clone(), self.moduli.clone())
    }

    pub fn span(&self, r: &Ring) -> FqSubspace {
        self.ambient(r).span_tuples(&self.generators)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrtDecomposition {
    /// Distinct irreducible factors across blocks, ordered by the cyclotomic
    /// index they come from and then canonically.
    pub factors: Vec<FqPoly>,
    /// `exponents[i][k]` is d_{i,k}: p^{e_i} or 0.
    pub exponents: Vec<Vec<usize>>,
    /// `idempotents[i][k]`, zero where d_{i,k} = 0.
    pub idempotents: Vec<Vec<RPoly>>,
    pub components: Vec<Component>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub factor: String,
    pub blocks: Vec<usize>,
    pub moduli: Vec<String>,
    pub generators: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrtJson {
    pub common_factors: Vec<String>,
    pub exponent_matrix: Vec<Vec<usize>>,
    pub idempotents: Vec<Vec<String>>,
    pub components: Vec<ComponentJson>,
}

impl CrtDecomposition {
    /// Rebuilds a generator tuple from its projections in every component.
    pub fn interpolate(&self, code: &GqcCode, projections: &[Vec<RPoly>]) -> Vec<RPoly> {
        let r = code.ring();
        let mut out = vec![RPoly::zero(); code.ell()];
        for (comp, proj) in self.components.iter().zip(projections) {
            let k = self.factors.iter().position(|g| *g == comp.factor).expect("component factor is listed");
            for (&i, e) in comp.blocks.iter().zip(proj) {
                let term = self.idempotents[i][k].mul(e, r);
                out[i] = out[i].add(&term, r).mod_xm1(code.blocks()[i], r);
            }
        }
        out
    }

    /// Maps a component vector back into the code's ambient through the
    /// idempotents.
    pub fn push_back(&self, code: &GqcCode, k: usize, v: &[FElem]) -> Vec<FElem> {
        let r = code.ring();
        let comp = &self.components[k];
        let parts = comp.ambient(r).decode(v);
        let mut tuple = vec![RPoly::zero(); code.ell()];
        for (&i, e) in comp.blocks.iter().zip(&parts) {
            tuple[i] = self.idempotents[i][k].mul(e, r).mod_xm1(code.blocks()[i], r);
        }
        code.ambient().encode(&tuple)
    }

    pub fn to_json(&self, r: &Ring) -> CrtJson {
        let f = r.field();
        CrtJson {
            common_factors: self.factors.iter().map(|g| g.fmt(f)).collect(),
            exponent_matrix: self.exponents.clone(),
            idempotents: self.idempotents.iter().map(|row| row.iter().map(|e| e.fmt(r)).collect()).collect(),
            components: self
                .components
                .iter()
                .map(|c| ComponentJson {
                    factor: c.factor.fmt(f),
                    blocks: c.blocks.iter().map(|i| i + 1).collect(),
                    moduli: c.moduli.iter().map(|g| g.fmt(f)).collect(),
                    generators: c.generators.iter().map(|t| t.iter().map(|e| e.fmt(r)).collect()).collect(),
                })
                .collect(),
        }
    }
}

/// Splits a code into its CRT components.
pub fn crt_decompose(code: &GqcCode) -> Result<CrtDecomposition> {
    let f = code.field();
    let r = code.ring();
    let facts = code.blocks().iter().map(|&m| factor_cyclotomic(m, f)).collect::<Result<Vec<_>>>()?;
    let mut keyed: Vec<(usize, FqPoly)> = Vec::new();
    for fa in &facts {
        for cf in &fa.factors {
            if !keyed.iter().any(|(_, g)| *g == cf.g) {
                keyed.push((cf.d, cf.g.clone()));
            }
        }
    }
    keyed.sort_by(|(d1, g1), (d2, g2)| d1.cmp(d2).then_with(|| g1.canonical_cmp(g2)));
    let factors: Vec<FqPoly> = keyed.into_iter().map(|(_, g)| g).collect();
    let s = factors.len();
    let mut exponents = vec![vec![0; s]; code.ell()];
    let mut idempotents = vec![vec![RPoly::zero(); s]; code.ell()];
    for (i, fa) in facts.iter().enumerate() {
        let local = crt_idempotents(fa, f);
        for (j, cf) in fa.factors.iter().enumerate() {
            let k = factors.iter().position(|g| *g == cf.g).expect("factor was collected");
            exponents[i][k] = fa.exponent();
            idempotents[i][k] = local[j].clone();
        }
    }
    let components = factors
        .iter()
        .enumerate()
        .map(|(k, g)| {
            let blocks: Vec<usize> = (0..code.ell()).filter(|&i| exponents[i][k] > 0).collect();
            let moduli: Vec<FqPoly> = blocks.iter().map(|&i| g.pow(exponents[i][k], f)).collect();
            let generators = code
                .generators()
                .iter()
                .map(|t| blocks.iter().zip(&moduli).map(|(&i, md)| t[i].rem(&md.lift(), r).expect("monic modulus")).collect())
                .collect();
            Component { factor: g.clone(), blocks, moduli, generators }
        })
        .collect();
    Ok(CrtDecomposition { factors, exponents, idempotents, components })
}

/// Minimal generator counts per component and overall.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorCount {
    /// Largest component rank; the minimal number of generators of the code.
    pub k: usize,
    /// Minimal generator count of each component.
    pub ranks: Vec<usize>,
    /// Whether each component is a free module of that rank.
    pub free: Vec<bool>,
}

impl GeneratorCount {
    pub fn all_free(&self) -> bool {
        self.free.iter().all(|&b| b)
    }
}

/// Minimal number of generators of one component, with its freeness.
///
/// The component is a module over the local ring R[x]/(g^d) with maximal
/// ideal (u, g), so its minimal generator count is the dimension of C/(u, g)C
/// over the residue field F_q[x]/(g).
pub fn component_rank(comp: &Component, r: &Ring) -> (usize, bool) {
    let f = r.field();
    let amb = comp.ambient(r);
    let c = comp.span(r);
    let gl = comp.factor.lift();
    let mut rad = FqSubspace::new(amb.dim());
    for v in c.basis() {
        rad.insert(&amb.mul_u(v), f);
        rad.insert(&amb.mul_poly(v, &gl), f);
    }
    let deg = comp.factor.deg().unwrap_or(1).max(1);
    let mu = (c.dim() - rad.dim()) / deg;
    let dmax = comp.moduli.iter().filter_map(|m| m.deg()).max().unwrap_or(0);
    let free = c.dim() == mu * 2 * dmax;
    (mu, free)
}

/// Component ranks and their maximum, the minimal generator count.
pub fn generator_count_bounds(code: &GqcCode) -> Result<GeneratorCount> {
    let p = code.field().p() as usize;
    let powers: Vec<usize> = code
        .blocks()
        .iter()
        .map(|&m| {
            let mut e = 1;
            let mut mm = m;
            while mm % p == 0 {
                mm /= p;
                e *= p;
            }
            e
        })
        .collect();
    if powers.iter().any(|&e| e != powers[0]) {
        return Err(Error::Precondition(format!(
            "blocks {:?} have unequal p-power parts {:?}",
            code.blocks(),
            powers
        )));
    }
    let dec = crt_decompose(code)?;
    let (ranks, free): (Vec<usize>, Vec<bool>) = dec.components.iter().map(|c| component_rank(c, code.ring())).unzip();
    Ok(GeneratorCount { k: ranks.iter().copied().max().unwrap_or(0), ranks, free })
}
