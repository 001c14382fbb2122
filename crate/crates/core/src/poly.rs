//! Polynomials over F_q and over R, factorization of x^m - 1 and the
//! orthogonal idempotents of R[x]/(x^m - 1).

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::gf::{FElem, Field};
use crate::rring::{RElem, Ring};

/// Dense polynomial over F_q, constant term first, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FqPoly {
    c: Vec<FElem>,
}

/// Dense polynomial over R, constant term first, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RPoly {
    c: Vec<RElem>,
}

impl FqPoly {
    pub fn new(mut c: Vec<FElem>) -> FqPoly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        FqPoly { c }
    }

    pub fn zero() -> FqPoly {
        FqPoly { c: Vec::new() }
    }

    pub fn one() -> FqPoly {
        FqPoly { c: vec![FElem::from_index(1)] }
    }

    pub fn constant(a: FElem) -> FqPoly {
        FqPoly::new(vec![a])
    }

    /// a * x^k.
    pub fn monomial(a: FElem, k: usize) -> FqPoly {
        let mut c = vec![FElem::ZERO; k + 1];
        c[k] = a;
        FqPoly::new(c)
    }

    pub fn x() -> FqPoly {
        FqPoly::monomial(FElem::from_index(1), 1)
    }

    /// Integer coefficients reduced into the prime subfield.
    pub fn from_ints(v: &[i64], f: &Field) -> FqPoly {
        FqPoly::new(v.iter().map(|&x| f.from_int(x)).collect())
    }

    /// x^m - 1.
    pub fn xm1(m: usize, f: &Field) -> FqPoly {
        let mut c = vec![FElem::ZERO; m + 1];
        c[0] = f.neg(f.one());
        c[m] = f.add(c[m], f.one());
        FqPoly::new(c)
    }

    pub fn coeffs(&self) -> &[FElem] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> FElem {
        self.c.get(i).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> FElem {
        self.c.last().copied().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().index() == 1
    }

    pub fn add(&self, o: &FqPoly, f: &Field) -> FqPoly {
        let n = self.c.len().max(o.c.len());
        FqPoly::new((0..n).map(|i| f.add(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn neg(&self, f: &Field) -> FqPoly {
        FqPoly::new(self.c.iter().map(|&a| f.neg(a)).collect())
    }

    pub fn sub(&self, o: &FqPoly, f: &Field) -> FqPoly {
        self.add(&o.neg(f), f)
    }

    pub fn scale(&self, a: FElem, f: &Field) -> FqPoly {
        FqPoly::new(self.c.iter().map(|&x| f.mul(a, x)).collect())
    }

    pub fn mul(&self, o: &FqPoly, f: &Field) -> FqPoly {
        if self.is_zero() || o.is_zero() {
            return FqPoly::zero();
        }
        let mut out = vec![FElem::ZERO; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        FqPoly::new(out)
    }

    pub fn pow(&self, e: usize, f: &Field) -> FqPoly {
        (0..e).fold(FqPoly::one(), |acc, _| acc.mul(self, f))
    }

    /// Division with remainder by a nonzero divisor.
    pub fn divmod(&self, g: &FqPoly, f: &Field) -> Result<(FqPoly, FqPoly)> {
        let dg = g.deg().ok_or(Error::DivisionByZero)?;
        let li = f.inv(g.lead())?;
        let mut r = self.c.clone();
        if r.len() <= dg {
            return Ok((FqPoly::zero(), self.clone()));
        }
        let mut q = vec![FElem::ZERO; r.len() - dg];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + dg], li);
            q[k] = c;
            if c.is_zero() {
                continue;
            }
            for (i, &gc) in g.c.iter().enumerate() {
                r[k + i] = f.sub(r[k + i], f.mul(c, gc));
            }
        }
        r.truncate(dg);
        Ok((FqPoly::new(q), FqPoly::new(r)))
    }

    pub fn rem(&self, g: &FqPoly, f: &Field) -> Result<FqPoly> {
        Ok(self.divmod(g, f)?.1)
    }

    /// Exact quotient; errors when `g` does not divide `self`.
    pub fn div_exact(&self, g: &FqPoly, f: &Field) -> Result<FqPoly> {
        let (q, r) = self.divmod(g, f)?;
        if !r.is_zero() {
            return Err(Error::Precondition(format!("{} does not divide {}", g.fmt(f), self.fmt(f))));
        }
        Ok(q)
    }

    pub fn divides(&self, h: &FqPoly, f: &Field) -> bool {
        !self.is_zero() && h.rem(self, f).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Reduction modulo x^m - 1 by folding exponents.
    pub fn mod_xm1(&self, m: usize, f: &Field) -> FqPoly {
        if self.c.len() <= m {
            return self.clone();
        }
        let mut out = vec![FElem::ZERO; m];
        for (i, &a) in self.c.iter().enumerate() {
            out[i % m] = f.add(out[i % m], a);
        }
        FqPoly::new(out)
    }

    pub fn make_monic(&self, f: &Field) -> FqPoly {
        if self.is_zero() {
            return FqPoly::zero();
        }
        self.scale(f.inv(self.lead()).expect("nonzero lead"), f)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &FqPoly, f: &Field) -> Result<FqPoly> {
        if self.is_zero() && o.is_zero() {
            return Err(Error::Precondition("gcd(0, 0) is undefined".into()));
        }
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f)?;
            a = b;
            b = r;
        }
        Ok(a.make_monic(f))
    }

    /// Returns (d, s, t) with s*self + t*o = d monic.
    pub fn xgcd(&self, o: &FqPoly, f: &Field) -> Result<(FqPoly, FqPoly, FqPoly)> {
        if self.is_zero() && o.is_zero() {
            return Err(Error::Precondition("gcd(0, 0) is undefined".into()));
        }
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (FqPoly::one(), FqPoly::zero());
        let (mut t0, mut t1) = (FqPoly::zero(), FqPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1, f)?;
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1, f), f);
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1, f), f);
            t0 = std::mem::replace(&mut t1, t);
        }
        let li = f.inv(r0.lead())?;
        Ok((r0.scale(li, f), s0.scale(li, f), t0.scale(li, f)))
    }

    /// Monic least common multiple; zero if either input is zero.
    pub fn lcm(&self, o: &FqPoly, f: &Field) -> FqPoly {
        if self.is_zero() || o.is_zero() {
            return FqPoly::zero();
        }
        let g = self.gcd(o, f).expect("nonzero inputs");
        self.mul(o, f).div_exact(&g, f).expect("gcd divides the product").make_monic(f)
    }

    pub fn lift(&self) -> RPoly {
        RPoly::new(self.c.iter().map(|&a| RElem::new(a, FElem::ZERO)).collect())
    }

    /// Ordering used for factor lists: by degree, then lexicographically
    /// from the leading coefficient down.
    pub fn canonical_cmp(&self, o: &FqPoly) -> Ordering {
        self.c.len().cmp(&o.c.len()).then_with(|| self.c.iter().rev().cmp(o.c.iter().rev()))
    }

    /// Descending-degree print such as `x^3+x+1` or `x+2`.
    pub fn fmt(&self, f: &Field) -> String {
        let terms: Vec<(String, usize)> = self
            .c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, a)| !a.is_zero())
            .map(|(k, &a)| (if a.index() == 1 && k > 0 { String::new() } else { f.format_elem(a) }, k))
            .collect();
        join_terms(terms)
    }

    pub fn parse(s: &str, f: &Field) -> Result<FqPoly> {
        let p = RPoly::parse(s, &Ring::new(f.clone()))?;
        if !p.u_part().is_zero() {
            return Err(Error::Parse(format!("{s:?} has a u-component")));
        }
        Ok(p.bar())
    }
}

fn join_terms(terms: Vec<(String, usize)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = terms
        .into_iter()
        .map(|(c, k)| {
            let mono = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{k}"),
            };
            match (c.is_empty(), k) {
                (_, 0) => c,
                (true, _) => mono,
                (false, _) => format!("{c}*{mono}"),
            }
        })
        .collect();
    parts.join("+")
}

impl RPoly {
    pub fn new(mut c: Vec<RElem>) -> RPoly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        RPoly { c }
    }

    pub fn zero() -> RPoly {
        RPoly { c: Vec::new() }
    }

    pub fn one() -> RPoly {
        RPoly { c: vec![RElem::new(FElem::from_index(1), FElem::ZERO)] }
    }

    pub fn constant(a: RElem) -> RPoly {
        RPoly::new(vec![a])
    }

    pub fn monomial(a: RElem, k: usize) -> RPoly {
        let mut c = vec![RElem::ZERO; k + 1];
        c[k] = a;
        RPoly::new(c)
    }

    /// a + u*b from its two F_q[x] parts.
    pub fn from_parts(a: &FqPoly, b: &FqPoly) -> RPoly {
        let n = a.c.len().max(b.c.len());
        RPoly::new((0..n).map(|i| RElem::new(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn coeffs(&self) -> &[RElem] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> RElem {
        self.c.get(i).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> RElem {
        self.c.last().copied().unwrap_or_default()
    }

    /// The image modulo u.
    pub fn bar(&self) -> FqPoly {
        FqPoly::new(self.c.iter().map(|x| x.a).collect())
    }

    /// The coefficient of u.
    pub fn u_part(&self) -> FqPoly {
        FqPoly::new(self.c.iter().map(|x| x.b).collect())
    }

    pub fn add(&self, o: &RPoly, r: &Ring) -> RPoly {
        let n = self.c.len().max(o.c.len());
        RPoly::new((0..n).map(|i| r.add(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn neg(&self, r: &Ring) -> RPoly {
        RPoly::new(self.c.iter().map(|&a| r.neg(a)).collect())
    }

    pub fn sub(&self, o: &RPoly, r: &Ring) -> RPoly {
        self.add(&o.neg(r), r)
    }

    pub fn scale(&self, a: RElem, r: &Ring) -> RPoly {
        RPoly::new(self.c.iter().map(|&x| r.mul(a, x)).collect())
    }

    pub fn mul(&self, o: &RPoly, r: &Ring) -> RPoly {
        if self.is_zero() || o.is_zero() {
            return RPoly::zero();
        }
        let mut out = vec![RElem::ZERO; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] = r.add(out[i + j], r.mul(a, b));
            }
        }
        RPoly::new(out)
    }

    pub fn pow(&self, e: usize, r: &Ring) -> RPoly {
        (0..e).fold(RPoly::one(), |acc, _| acc.mul(self, r))
    }

    /// Division with remainder; the divisor needs a unit leading coefficient.
    pub fn divmod(&self, g: &RPoly, r: &Ring) -> Result<(RPoly, RPoly)> {
        let dg = g.deg().ok_or(Error::DivisionByZero)?;
        if !r.is_unit(g.lead()) {
            return Err(Error::NotMonic);
        }
        let li = r.inv(g.lead())?;
        let mut rem = self.c.clone();
        if rem.len() <= dg {
            return Ok((RPoly::zero(), self.clone()));
        }
        let mut q = vec![RElem::ZERO; rem.len() - dg];
        for k in (0..q.len()).rev() {
            let c = r.mul(rem[k + dg], li);
            q[k] = c;
            if c.is_zero() {
                continue;
            }
            for (i, &gc) in g.c.iter().enumerate() {
                rem[k + i] = r.sub(rem[k + i], r.mul(c, gc));
            }
        }
        rem.truncate(dg);
        Ok((RPoly::new(q), RPoly::new(rem)))
    }

    pub fn rem(&self, g: &RPoly, r: &Ring) -> Result<RPoly> {
        Ok(self.divmod(g, r)?.1)
    }

    pub fn mod_xm1(&self, m: usize, r: &Ring) -> RPoly {
        if self.c.len() <= m {
            return self.clone();
        }
        let mut out = vec![RElem::ZERO; m];
        for (i, &a) in self.c.iter().enumerate() {
            out[i % m] = r.add(out[i % m], a);
        }
        RPoly::new(out)
    }

    /// Whether this polynomial divides x^m - 1 in R[x]. Writing it as
    /// f0 + u*f1 this holds iff f0 | x^m - 1 and f0 | f1*(x^m - 1)/f0.
    pub fn divides_xm1(&self, m: usize, r: &Ring) -> bool {
        self.cofactor_xm1(m, r).is_some()
    }

    /// The quotient (x^m - 1)/self over R when it exists.
    pub fn cofactor_xm1(&self, m: usize, r: &Ring) -> Option<RPoly> {
        let f = r.field();
        let f0 = self.bar();
        if f0.is_zero() {
            return None;
        }
        let h0 = FqPoly::xm1(m, f).div_exact(&f0, f).ok()?;
        let k1 = self.u_part().mul(&h0, f).div_exact(&f0, f).ok()?.neg(f);
        Some(RPoly::from_parts(&h0, &k1))
    }

    /// Descending-degree print such as `x^3+u*x^2+x+(1+u)`.
    pub fn fmt(&self, r: &Ring) -> String {
        let f = r.field();
        let terms: Vec<(String, usize)> = self
            .c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, a)| !a.is_zero())
            .map(|(k, &a)| {
                let ustr = |b: FElem| if b.index() == 1 { "u".to_string() } else { format!("{}*u", f.format_elem(b)) };
                let c = match (a.a.is_zero(), a.b.is_zero()) {
                    (false, true) if a.a.index() == 1 && k > 0 => String::new(),
                    (false, true) => f.format_elem(a.a),
                    (true, false) => ustr(a.b),
                    _ if k == 0 => format!("{}+{}", f.format_elem(a.a), ustr(a.b)),
                    _ => format!("({}+{})", f.format_elem(a.a), ustr(a.b)),
                };
                (c, k)
            })
            .collect();
        join_terms(terms)
    }

    /// Parses an expression in `x` and `u` built from `+`, `-`, `*`, `^`,
    /// parentheses, integers and bracketed F_q literals `[c0,c1,...]`.
    /// Juxtaposition multiplies, so `ux^2+(1+u)x` is accepted.
    pub fn parse(s: &str, r: &Ring) -> Result<RPoly> {
        let toks = tokenize(s)?;
        let mut p = Parser { toks: &toks, pos: 0, ring: r, src: s };
        let out = p.expr()?;
        if p.pos != toks.len() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Lit(String),
    X,
    U,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        match ch {
            c if c.is_whitespace() => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..=i].iter().collect();
                out.push(Tok::Int(text.parse().map_err(|_| Error::Parse(format!("integer too large in {s:?}")))?));
            }
            '[' => {
                let start = i;
                while i < chars.len() && chars[i] != ']' {
                    i += 1;
                }
                if i == chars.len() {
                    return Err(Error::Parse(format!("unclosed '[' in {s:?}")));
                }
                out.push(Tok::Lit(chars[start..=i].iter().collect()));
            }
            'x' => out.push(Tok::X),
            'u' => out.push(Tok::U),
            '+' => out.push(Tok::Plus),
            '-' => out.push(Tok::Minus),
            '*' => out.push(Tok::Star),
            '^' => out.push(Tok::Caret),
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            ',' => out.push(Tok::Comma),
            _ => return Err(Error::Parse(format!("unexpected character {ch:?} in {s:?}"))),
        }
        i += 1;
    }
    if out.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    ring: &'a Ring,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at token {} in {:?}", self.pos, self.src))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<RPoly> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            let neg = match t {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.term()?;
            acc = if neg { acc.sub(&rhs, self.ring) } else { acc.add(&rhs, self.ring) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => self.pos += 1,
                Some(Tok::Int(_) | Tok::Lit(_) | Tok::X | Tok::U | Tok::LParen) => {}
                _ => break,
            }
            let rhs = self.unary()?;
            acc = acc.mul(&rhs, self.ring);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RPoly> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(self.unary()?.neg(self.ring));
        }
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek() {
                Some(&Tok::Int(e)) if e >= 0 => {
                    self.pos += 1;
                    return Ok(base.pow(e as usize, self.ring));
                }
                _ => return Err(self.err("expected a non-negative exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RPoly> {
        let r = self.ring;
        let tok = self.peek().cloned().ok_or_else(|| self.err("unexpected end"))?;
        self.pos += 1;
        match tok {
            Tok::Int(v) => Ok(RPoly::constant(r.from_int(v))),
            Tok::Lit(s) => Ok(RPoly::constant(r.lift(r.field().parse_elem(&s)?))),
            Tok::X => Ok(RPoly::monomial(r.one(), 1)),
            Tok::U => Ok(RPoly::constant(r.u())),
            Tok::LParen => {
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some(Tok::Comma) => {
                        // (a,b) pair literal
                        self.pos += 1;
                        let second = self.expr()?;
                        if self.peek() != Some(&Tok::RParen) {
                            return Err(self.err("expected ')'"));
                        }
                        self.pos += 1;
                        let (a, b) = (inner.bar(), second.bar());
                        if a.deg().unwrap_or(0) > 0 || b.deg().unwrap_or(0) > 0 || !inner.u_part().is_zero() || !second.u_part().is_zero() {
                            return Err(self.err("pair literal needs two field elements"));
                        }
                        Ok(RPoly::constant(RElem::new(a.coeff(0), b.coeff(0))))
                    }
                    _ => Err(self.err("expected ')'")),
                }
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

/// Integer polynomial x^d - 1 divided by all Phi_e with e | d, e < d.
fn cyclotomic_int(d: usize, memo: &mut Vec<Option<Vec<i64>>>) -> Vec<i64> {
    if let Some(Some(v)) = memo.get(d) {
        return v.clone();
    }
    let mut num = vec![0i64; d + 1];
    num[0] = -1;
    num[d] = 1;
    for e in 1..d {
        if d % e == 0 {
            let den = cyclotomic_int(e, memo);
            num = int_div_exact(&num, &den);
        }
    }
    if memo.len() <= d {
        memo.resize(d + 1, None);
    }
    memo[d] = Some(num.clone());
    num
}

fn int_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; r.len() - dd];
    for k in (0..q.len()).rev() {
        let c = r[k + dd];
        q[k] = c;
        for (i, &g) in den.iter().enumerate() {
            r[k + i] -= c * g;
        }
    }
    q
}

fn multiplicative_order(q: u64, d: u64) -> u64 {
    if d == 1 {
        return 1;
    }
    let mut x = q % d;
    let mut k = 1;
    while x != 1 {
        x = x * (q % d) % d;
        k += 1;
    }
    k
}

/// One irreducible factor of x^m - 1 together with the cyclotomic index
/// `d` of the Phi_d it divides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloFactor {
    pub g: FqPoly,
    pub d: usize,
}

/// x^m - 1 = prod g_k^{p^e} with the g_k distinct monic irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    pub m: usize,
    pub m_tilde: usize,
    pub p_power: usize,
    pub factors: Vec<CycloFactor>,
}

impl CyclotomicFactorization {
    pub fn exponent(&self) -> usize {
        self.p_power
    }

    /// G_k = g_k^{p^e}.
    pub fn factor_power(&self, k: usize, f: &Field) -> FqPoly {
        self.factors[k].g.pow(self.p_power, f)
    }

    pub fn product(&self, f: &Field) -> FqPoly {
        self.factors.iter().fold(FqPoly::one(), |acc, fc| acc.mul(&fc.g.pow(self.p_power, f), f))
    }

    /// Prints factors as `(x+2)^3 (x+1)^3`.
    pub fn fmt(&self, f: &Field) -> String {
        self.factors
            .iter()
            .map(|fc| {
                let s = fc.g.fmt(f);
                let compound = fc.g.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
                let body = if compound && (self.p_power > 1 || self.factors.len() > 1) { format!("({s})") } else { s };
                if self.p_power > 1 {
                    format!("{body}^{}", self.p_power)
                } else {
                    body
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Monic polynomials of degree `d` over F_q in index order.
fn monics(d: usize, f: &Field) -> impl Iterator<Item = FqPoly> + '_ {
    let q = f.q() as u64;
    (0..q.pow(d as u32)).map(move |mut idx| {
        let mut c = Vec::with_capacity(d + 1);
        for _ in 0..d {
            c.push(FElem::from_index((idx % q) as u32));
            idx /= q;
        }
        c.push(f.one());
        FqPoly::new(c)
    })
}

/// Above this many degree-o candidates trial division gives way to
/// Berlekamp's deterministic splitting.
const TRIAL_DIVISION_LIMIT: u64 = 1 << 14;

/// Splits Phi_d (reduced into F_q) into its irreducible factors, each of
/// degree ord_d(q).
fn split_cyclotomic(phi: FqPoly, d: usize, f: &Field) -> Vec<FqPoly> {
    let deg = phi.deg().unwrap_or(0);
    let o = multiplicative_order(f.q() as u64, d as u64) as usize;
    if o >= deg {
        return vec![phi];
    }
    let mut out = if (f.q() as u64).checked_pow(o as u32).is_some_and(|c| c <= TRIAL_DIVISION_LIMIT) {
        let mut rest = phi;
        let mut out = Vec::new();
        for cand in monics(o, f) {
            if rest.deg() == Some(o) {
                break;
            }
            if cand.divides(&rest, f) {
                rest = rest.div_exact(&cand, f).expect("checked divisibility");
                out.push(cand);
            }
        }
        out.push(rest);
        out
    } else {
        berlekamp(&phi, f)
    };
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

fn pow_mod(base: &FqPoly, mut e: u64, m: &FqPoly, f: &Field) -> FqPoly {
    let mut acc = FqPoly::one();
    let mut b = base.rem(m, f).expect("nonzero modulus");
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b, f).rem(m, f).expect("nonzero modulus");
        }
        b = b.mul(&b, f).rem(m, f).expect("nonzero modulus");
        e >>= 1;
    }
    acc
}

/// Berlekamp factorization of a squarefree monic polynomial. Trying every
/// field constant keeps it deterministic.
fn berlekamp(g: &FqPoly, f: &Field) -> Vec<FqPoly> {
    let n = g.deg().unwrap_or(0);
    let xq = pow_mod(&FqPoly::x(), f.q() as u64, g, f);
    // Row i holds x^{iq} - x^i mod g; the kernel of v -> v*M parametrizes
    // the polynomials h with h^q = h mod g.
    let mut rows = Vec::with_capacity(n);
    let mut cur = FqPoly::one();
    for i in 0..n {
        let mut row: Vec<FElem> = (0..n).map(|j| cur.coeff(j)).collect();
        row[i] = f.sub(row[i], f.one());
        rows.push(row);
        cur = cur.mul(&xq, f).rem(g, f).expect("nonzero modulus");
    }
    // Left kernel of M = kernel of M^T.
    let mt: Vec<Vec<FElem>> = (0..n).map(|j| (0..n).map(|i| rows[i][j]).collect()).collect();
    let kernel = nullspace(mt, n, f);
    let k = kernel.len();
    let mut factors = vec![g.clone()];
    for v in kernel {
        if factors.len() == k {
            break;
        }
        let h = FqPoly::new(v);
        if h.deg().unwrap_or(0) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for fac in factors {
            let mut pending = vec![fac];
            for s in f.elements() {
                let shifted = h.sub(&FqPoly::constant(s), f);
                let mut keep = Vec::new();
                for w in pending {
                    let dgc = w.gcd(&shifted, f).expect("w nonzero");
                    let dd = dgc.deg().unwrap_or(0);
                    if dd > 0 && dd < w.deg().unwrap_or(0) {
                        let other = w.div_exact(&dgc, f).expect("gcd divides");
                        keep.push(dgc);
                        keep.push(other);
                    } else {
                        keep.push(w);
                    }
                }
                pending = keep;
            }
            next.extend(pending);
        }
        factors = next;
    }
    factors.into_iter().map(|p| p.make_monic(f)).collect()
}

/// Basis of the kernel of a `rows x n` matrix over F_q.
fn nullspace(mut a: Vec<Vec<FElem>>, n: usize, f: &Field) -> Vec<Vec<FElem>> {
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
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![FElem::ZERO; n];
            v[fc] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(a[row][fc]);
            }
            v
        })
        .collect()
}

/// Factors x^m - 1 over F_q. Factors are listed by cyclotomic index and
/// canonically within each cyclotomic polynomial.
pub fn factor_cyclotomic(m: usize, f: &Field) -> Result<CyclotomicFactorization> {
    if m == 0 {
        return Err(Error::Precondition("block length must be positive".into()));
    }
    let p = f.p() as usize;
    let (mut m_tilde, mut p_power) = (m, 1usize);
    while m_tilde % p == 0 {
        m_tilde /= p;
        p_power *= p;
    }
    let mut memo = Vec::new();
    let mut factors = Vec::new();
    for d in (1..=m_tilde).filter(|d| m_tilde % d == 0) {
        let phi = FqPoly::from_ints(&cyclotomic_int(d, &mut memo), f);
        for g in split_cyclotomic(phi, d, f) {
            factors.push(CycloFactor { g, d });
        }
    }
    Ok(CyclotomicFactorization { m, m_tilde, p_power, factors })
}

/// Orthogonal idempotents e_k of R[x]/(x^m - 1), one per factor power,
/// computed as b_k * (x^m - 1)/G_k with b_k from the extended Euclidean
/// algorithm. They have coefficients in F_q.
pub fn crt_idempotents(fact: &CyclotomicFactorization, f: &Field) -> Vec<RPoly> {
    let xm1 = FqPoly::xm1(fact.m, f);
    (0..fact.factors.len())
        .map(|k| {
            let gk = fact.factor_power(k, f);
            let ghat = xm1.div_exact(&gk, f).expect("factor power divides x^m - 1");
            let (_, b, _) = ghat.xgcd(&gk, f).expect("nonzero inputs");
            b.mul(&ghat, f).mod_xm1(fact.m, f).lift()
        })
        .collect()
}

/// Whether `f` is a non-zero-divisor (equivalently a unit) of R[x]/(x^m - 1).
pub fn is_regular(p: &RPoly, m: usize, f: &Field) -> bool {
    let b = p.bar().mod_xm1(m, f);
    match b.gcd(&FqPoly::xm1(m, f), f) {
        Ok(g) => g.deg() == Some(0),
        Err(_) => false,
    }
}

/// Rabin's test: g | x^{q^d} - x and gcd(g, x^{q^{d/r}} - x) = 1 for every
/// prime r | d.
pub fn is_irreducible(g: &FqPoly, f: &Field) -> bool {
    let Some(d) = g.deg() else { return false };
    if d == 0 {
        return false;
    }
    let q = f.q() as u64;
    let frob = |k: usize| (0..k).fold(FqPoly::x(), |acc, _| pow_mod(&acc, q, g, f));
    if !frob(d).sub(&FqPoly::x(), f).rem(g, f).expect("nonzero modulus").is_zero() {
        return false;
    }
    (2..=d).filter(|r| d % r == 0 && (2..*r).all(|s| r % s != 0)).all(|r| {
        let t = frob(d / r).sub(&FqPoly::x(), f);
        t.gcd(g, f).map(|c| c.deg() == Some(0)).unwrap_or(false)
    })
}

/// First monic irreducible of degree `d` in index order (constant term
/// varying fastest).
pub fn smallest_irreducible(d: usize, f: &Field) -> FqPoly {
    monics(d, f).find(|g| is_irreducible(g, f)).expect("irreducibles exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    fn fp(s: &str, fld: &Field) -> FqPoly {
        FqPoly::parse(s, fld).unwrap()
    }

    fn rp(s: &str, r: &Ring) -> RPoly {
        RPoly::parse(s, r).unwrap()
    }

    #[test]
    fn divmod_examples() {
        let f2 = f(2);
        let (q, r) = fp("x^2-1", &f2).divmod(&fp("x+1", &f2), &f2).unwrap();
        assert_eq!((q, r), (fp("x+1", &f2), FqPoly::zero()));
        let r2 = Ring::new(f2.clone());
        let v = rp("x^4+x^3+x^2+1+u*(x^3+x^2+x+1)", &r2);
        let (q, rem) = v.divmod(&rp("x+1", &r2), &r2).unwrap();
        assert!(rem.is_zero());
        assert_eq!(q.mul(&rp("x+1", &r2), &r2), v);
        assert_eq!(q, rp("x^3+u*x^2+x+1+u", &r2));
        assert_eq!(v.divmod(&RPoly::one(), &r2).unwrap(), (v.clone(), RPoly::zero()));
        assert_eq!(v.divmod(&rp("u*x+1", &r2), &r2).unwrap_err(), Error::NotMonic);
    }

    #[test]
    fn gcd_and_lcm() {
        let f2 = f(2);
        assert_eq!(fp("x+1", &f2).gcd(&fp("(x+1)^2", &f2), &f2).unwrap(), fp("x+1", &f2));
        let c = fp("x^3+x^2+x+1", &f2);
        assert_eq!(c.gcd(&FqPoly::xm1(4, &f2), &f2).unwrap(), c);
        assert_eq!(fp("x+1", &f2).lcm(&c, &f2), c);
        assert!(FqPoly::zero().gcd(&FqPoly::zero(), &f2).is_err());
    }

    #[test]
    fn bar_examples() {
        let r = Ring::new(f(2));
        assert_eq!(rp("x+1+u", &r).bar(), fp("x+1", r.field()));
        assert!(rp("u*(x^2+1)", &r).bar().is_zero());
        assert_eq!(rp("x^3+u*x^2+x+(1+u)", &r).bar(), fp("x^3+x+1", r.field()));
    }

    #[test]
    fn factorizations() {
        let f3 = f(3);
        let six = factor_cyclotomic(6, &f3).unwrap();
        assert_eq!(six.p_power, 3);
        assert_eq!(six.factors.iter().map(|c| c.g.clone()).collect::<Vec<_>>(), vec![fp("x-1", &f3), fp("x+1", &f3)]);
        assert_eq!(six.fmt(&f3), "(x+2)^3 (x+1)^3");
        let twelve = factor_cyclotomic(12, &f3).unwrap();
        let gs: Vec<FqPoly> = twelve.factors.iter().map(|c| c.g.clone()).collect();
        assert_eq!(gs, vec![fp("x-1", &f3), fp("x+1", &f3), fp("x^2+1", &f3)]);
        assert_eq!(twelve.product(&f3), FqPoly::xm1(12, &f3));
        let f2 = f(2);
        let seven = factor_cyclotomic(7, &f2).unwrap();
        let gs: Vec<String> = seven.factors.iter().map(|c| c.g.fmt(&f2)).collect();
        assert_eq!(gs, vec!["x+1", "x^3+x+1", "x^3+x^2+1"]);
        assert_eq!(fp("(x+1)*(x^3+x+1)*(x^3+x^2+1)", &f2), FqPoly::xm1(7, &f2));
        assert_eq!(factor_cyclotomic(1, &f3).unwrap().fmt(&f3), "x+2");
        assert!(factor_cyclotomic(0, &f3).is_err());
    }

    fn is_irreducible_brute(g: &FqPoly, fld: &Field) -> bool {
        let d = g.deg().unwrap();
        (1..=d / 2).all(|k| monics(k, fld).all(|c| !c.divides(g, fld)))
    }

    #[test]
    fn rabin_test_matches_trial_division() {
        for (p, n) in [(2, 1), (3, 1), (2, 2)] {
            let fld = Field::new(p, n, None).unwrap();
            for d in 1..=5 {
                for g in monics(d, &fld) {
                    assert_eq!(is_irreducible(&g, &fld), is_irreducible_brute(&g, &fld), "{}", g.fmt(&fld));
                }
            }
        }
        let f2 = Field::prime(2).unwrap();
        assert_eq!(smallest_irreducible(3, &f2).fmt(&f2), "x^3+x+1");
        assert_eq!(smallest_irreducible(1, &f2).fmt(&f2), "x");
    }

    #[test]
    fn berlekamp_agrees_with_trial_division() {
        for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let fld = Field::new(p, n, None).unwrap();
            for m in 2..=40 {
                let fact = factor_cyclotomic(m, &fld).unwrap();
                let mt = fact.m_tilde;
                if mt == 1 {
                    continue;
                }
                let phi = FqPoly::xm1(mt, &fld);
                let mut b = berlekamp(&phi, &fld);
                b.sort_by(|a, b| a.canonical_cmp(b));
                let mut expect: Vec<FqPoly> = fact.factors.iter().map(|c| c.g.clone()).collect();
                expect.sort_by(|a, b| a.canonical_cmp(b));
                assert_eq!(b, expect, "m = {m} over {fld}");
            }
        }
    }

    #[test]
    fn factorization_invariants() {
        for (p, n) in [(2, 1), (3, 1), (5, 1), (2, 2), (7, 1), (3, 2)] {
            let fld = Field::new(p, n, None).unwrap();
            for m in 1..=30 {
                let fact = factor_cyclotomic(m, &fld).unwrap();
                assert_eq!(fact.product(&fld), FqPoly::xm1(m, &fld), "m = {m} over {fld}");
                for (i, a) in fact.factors.iter().enumerate() {
                    assert!(a.g.is_monic());
                    assert!(is_irreducible(&a.g, &fld));
                    if a.g.deg().unwrap() <= 8 {
                        assert!(is_irreducible_brute(&a.g, &fld));
                    }
                    for b in &fact.factors[i + 1..] {
                        assert_eq!(a.g.gcd(&b.g, &fld).unwrap(), FqPoly::one());
                    }
                }
            }
        }
    }

    #[test]
    fn idempotent_identities() {
        for (p, n) in [(2, 1), (3, 1), (5, 1), (2, 2)] {
            let fld = Field::new(p, n, None).unwrap();
            let r = Ring::new(fld.clone());
            for m in 1..=24 {
                let fact = factor_cyclotomic(m, &fld).unwrap();
                let es = crt_idempotents(&fact, &fld);
                let mut sum = RPoly::zero();
                for (j, ej) in es.iter().enumerate() {
                    assert!(!ej.is_zero());
                    assert_eq!(ej.mul(ej, &r).mod_xm1(m, &r), *ej);
                    for ek in &es[j + 1..] {
                        assert!(ej.mul(ek, &r).mod_xm1(m, &r).is_zero());
                    }
                    sum = sum.add(ej, &r);
                }
                assert_eq!(sum, RPoly::one());
            }
        }
        let f2 = f(2);
        assert_eq!(crt_idempotents(&factor_cyclotomic(2, &f2).unwrap(), &f2), vec![RPoly::one()]);
    }

    fn all_rpolys(r: &Ring, m: usize) -> Vec<RPoly> {
        let els: Vec<RElem> = r.elements().collect();
        let total = els.len().pow(m as u32);
        (0..total)
            .map(|mut idx| {
                let mut c = Vec::with_capacity(m);
                for _ in 0..m {
                    c.push(els[idx % els.len()]);
                    idx /= els.len();
                }
                RPoly::new(c)
            })
            .collect()
    }

    #[test]
    fn regularity_matches_zero_divisor_search() {
        for (p, m) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2)] {
            let r = Ring::new(f(p));
            let all = all_rpolys(&r, m);
            for a in &all {
                let zero_divisor = all.iter().any(|b| !b.is_zero() && a.mul(b, &r).mod_xm1(m, &r).is_zero());
                assert_eq!(is_regular(a, m, r.field()), !zero_divisor, "{} mod x^{m}-1", a.fmt(&r));
            }
        }
        let r = Ring::new(f(2));
        assert!(is_regular(&rp("1+u", &r), 2, r.field()));
        assert!(!is_regular(&rp("u", &r), 5, r.field()));
        let g = rp("x+1+u", &r);
        assert!(!is_regular(&g, 2, r.field()));
        assert!(g.mul(&rp("u*(x+1)", &r), &r).mod_xm1(2, &r).is_zero());
    }

    #[test]
    fn r_divisibility_of_xm1() {
        let r = Ring::new(f(2));
        for m in 1..=4 {
            let xm1 = FqPoly::xm1(m, r.field()).lift();
            let all = all_rpolys(&r, m + 1);
            for a in &all {
                let brute = a.lead() == r.one() && xm1.rem(a, &r).unwrap().is_zero();
                if a.lead() == r.one() {
                    assert_eq!(a.divides_xm1(m, &r), brute);
                }
                if let Some(h) = a.cofactor_xm1(m, &r) {
                    assert_eq!(h.mul(a, &r), xm1);
                }
            }
        }
    }

    #[test]
    fn parse_and_print() {
        let r = Ring::new(f(3));
        let p = rp("2*u*x^2 + (1+u)x - 1", &r);
        assert_eq!(p.fmt(&r), "2*u*x^2+(1+u)*x+2");
        assert_eq!(rp(&p.fmt(&r), &r), p);
        assert_eq!(rp("(1+x+x^2)^2", &r), rp("x^4+2x^3+3x^2+2x+1", &r));
        assert_eq!(rp("(1,2)*x", &r), rp("(1+2u)x", &r));
        assert!(RPoly::parse("x^", &r).is_err());
        assert!(RPoly::parse("y", &r).is_err());
        assert!(RPoly::parse("", &r).is_err());
        assert_eq!(rp("0", &r).fmt(&r), "0");
        let r4 = Ring::new(Field::new(2, 2, None).unwrap());
        let q = rp("[0,1]x+u*[1,1]", &r4);
        assert_eq!(q.fmt(&r4), "[0,1]*x+[1,1]*u");
        assert_eq!(rp(&q.fmt(&r4), &r4), q);
    }

    fn arb_poly(p: u32, max_len: usize) -> impl Strategy<Value = Vec<(u32, u32)>> {
        proptest::collection::vec((0..p, 0..p), 0..max_len)
    }

    fn to_rpoly(v: &[(u32, u32)]) -> RPoly {
        RPoly::new(v.iter().map(|&(a, b)| RElem::new(FElem::from_index(a), FElem::from_index(b))).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn divmod_round_trip(a in arb_poly(3, 10), g in arb_poly(3, 6), p in 0usize..2) {
            let prime = [2u32, 3][p];
            let r = Ring::new(f(prime));
            let reduce = |v: &[(u32, u32)]| v.iter().map(|&(x, y)| (x % prime, y % prime)).collect::<Vec<_>>();
            let a = to_rpoly(&reduce(&a));
            let mut g = to_rpoly(&reduce(&g));
            g = g.add(&RPoly::monomial(r.one(), g.deg().map_or(0, |d| d + 1)), &r);
            let (q, rem) = a.divmod(&g, &r).unwrap();
            prop_assert!(rem.deg().map_or(true, |d| d < g.deg().unwrap()));
            prop_assert_eq!(q.mul(&g, &r).add(&rem, &r), a.clone());
            let (qb, rb) = a.bar().divmod(&g.bar(), r.field()).unwrap();
            prop_assert_eq!(qb.mul(&g.bar(), r.field()).add(&rb, r.field()), a.bar());
        }

        #[test]
        fn bar_is_multiplicative(a in arb_poly(3, 8), b in arb_poly(3, 8)) {
            let r = Ring::new(f(3));
            let (a, b) = (to_rpoly(&a), to_rpoly(&b));
            prop_assert_eq!(a.mul(&b, &r).bar(), a.bar().mul(&b.bar(), r.field()));
        }
    }
}
