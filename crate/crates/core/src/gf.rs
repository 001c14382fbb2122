//! Exact arithmetic in F_p and in extensions F_{p^n}.
//!
//! Elements are coefficient vectors with respect to the power basis of the
//! modulus. They are packed into a single integer in base `p` with the
//! constant term as the least significant digit, so that element index order
//! coincides with lexicographic order of `(c_{n-1}, ..., c_1, c_0)`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field size for which multiplication tables are built.
pub const MAX_FIELD_SIZE: u64 = 1024;

/// An element of a finite field, stored as its packed coefficient vector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FElem(u32);

impl FElem {
    pub const ZERO: FElem = FElem(0);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn from_index(i: u32) -> Self {
        FElem(i)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Field operations accepted by [`Field::apply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Neg,
    Inv,
}

struct FieldData {
    p: u32,
    n: u32,
    q: u32,
    /// Monic modulus over F_p, constant term first, length n + 1.
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

/// The finite field F_{p^n}. Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({},{},{})", self.0.p, self.0.n, fp::format(&self.0.modulus))
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Builds F_{p^n}. Without an explicit modulus the lexicographically
    /// smallest monic irreducible of degree `n` is used (`x` when `n = 1`).
    pub fn new(p: u32, n: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::InvalidModulus("extension degree must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(n).unwrap_or(u64::MAX);
        if q > MAX_FIELD_SIZE {
            return Err(Error::FieldTooLarge(q));
        }
        let modulus = match modulus {
            Some(m) => {
                let m = fp::trim(m.iter().map(|&c| c % p).collect());
                if m.len() != n as usize + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "{} has degree {}, expected {n}",
                        fp::format(&m),
                        m.len().saturating_sub(1)
                    )));
                }
                if m[n as usize] != 1 {
                    return Err(Error::InvalidModulus(format!("{} is not monic", fp::format(&m))));
                }
                if !fp::is_irreducible(&m, p) {
                    return Err(Error::InvalidModulus(format!("{} is reducible over F_{p}", fp::format(&m))));
                }
                m
            }
            None => fp::smallest_irreducible(n as usize, p),
        };
        Ok(Field(Arc::new(FieldData::build(p, n, q as u32, modulus))))
    }

    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn n(&self) -> u32 {
        self.0.n
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// The modulus over F_p, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn modulus_string(&self) -> String {
        fp::format(&self.0.modulus)
    }

    pub fn zero(&self) -> FElem {
        FElem(0)
    }

    pub fn one(&self) -> FElem {
        FElem(1)
    }

    pub fn contains(&self, a: FElem) -> bool {
        a.0 < self.0.q
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> FElem {
        FElem(v.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FElem> {
        if coeffs.len() > self.0.n as usize {
            return Err(Error::ForeignElement(format!("{coeffs:?} in {self}")));
        }
        let mut idx = 0u32;
        for &c in coeffs.iter().rev() {
            if c >= self.0.p {
                return Err(Error::ForeignElement(format!("{coeffs:?} in {self}")));
            }
            idx = idx * self.0.p + c;
        }
        Ok(FElem(idx))
    }

    /// Coefficient vector of `a`, length exactly `n`.
    pub fn coeffs(&self, a: FElem) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.0.n as usize);
        let mut x = a.0;
        for _ in 0..self.0.n {
            v.push(x % self.0.p);
            x /= self.0.p;
        }
        v
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FElem> + Clone {
        (0..self.0.q).map(FElem)
    }

    /// F_p-basis `1, x, ..., x^{n-1}` of the field.
    pub fn prime_basis(&self) -> Vec<FElem> {
        (0..self.0.n).map(|i| FElem(self.0.p.pow(i))).collect()
    }

    #[inline]
    pub fn add(&self, a: FElem, b: FElem) -> FElem {
        FElem(self.0.add[(a.0 * self.0.q + b.0) as usize])
    }

    #[inline]
    pub fn neg(&self, a: FElem) -> FElem {
        FElem(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FElem, b: FElem) -> FElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FElem, b: FElem) -> FElem {
        FElem(self.0.mul[(a.0 * self.0.q + b.0) as usize])
    }

    pub fn inv(&self, a: FElem) -> Result<FElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FElem(self.0.inv[a.0 as usize]))
    }

    pub fn div(&self, a: FElem, b: FElem) -> Result<FElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FElem, mut e: u64) -> FElem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Checked form of the field operations: operands must belong to the
    /// field and `Inv` requires a nonzero operand.
    pub fn apply(&self, op: FieldOp, a: FElem, b: Option<FElem>) -> Result<FElem> {
        for x in std::iter::once(a).chain(b) {
            if !self.contains(x) {
                return Err(Error::ForeignElement(format!("index {} in {self}", x.0)));
            }
        }
        let need = |b: Option<FElem>| b.ok_or_else(|| Error::Precondition("binary operation needs two operands".into()));
        match op {
            FieldOp::Add => Ok(self.add(a, need(b)?)),
            FieldOp::Mul => Ok(self.mul(a, need(b)?)),
            FieldOp::Neg => Ok(self.neg(a)),
            FieldOp::Inv => self.inv(a),
        }
    }

    /// Literal form: a decimal digit for prime fields, `[c0,c1,...]` otherwise.
    pub fn format_elem(&self, a: FElem) -> String {
        if self.0.n == 1 {
            a.0.to_string()
        } else {
            let parts: Vec<String> = self.coeffs(a).iter().map(|c| c.to_string()).collect();
            format!("[{}]", parts.join(","))
        }
    }

    /// Parses a decimal integer (reduced into the prime subfield) or a
    /// bracketed coefficient tuple.
    pub fn parse_elem(&self, s: &str) -> Result<FElem> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let coeffs = inner
                .split(',')
                .map(|c| c.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad coefficient in {s:?}"))))
                .collect::<Result<Vec<_>>>()?;
            return self.from_coeffs(&coeffs);
        }
        let v: i64 = s.parse().map_err(|_| Error::Parse(format!("bad field element {s:?}")))?;
        Ok(self.from_int(v))
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `GF(p,n)` and `GF(p,n,modulus)`.
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected GF(p,n[,modulus]), got {s:?}")))?;
        let mut parts = inner.splitn(3, ',');
        let num = |t: Option<&str>| -> Result<u32> {
            t.ok_or_else(|| Error::Parse(format!("missing field parameter in {s:?}")))?
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad field parameter in {s:?}")))
        };
        let p = num(parts.next())?;
        let n = num(parts.next())?;
        match parts.next() {
            Some(m) => {
                let m = fp::parse(m, p)?;
                Field::new(p, n, Some(&m))
            }
            None => Field::new(p, n, None),
        }
    }
}

impl FieldData {
    fn build(p: u32, n: u32, q: u32, modulus: Vec<u32>) -> FieldData {
        let qs = q as usize;
        let digits: Vec<Vec<u32>> = (0..q)
            .map(|mut x| {
                (0..n)
                    .map(|_| {
                        let d = x % p;
                        x /= p;
                        d
                    })
                    .collect()
            })
            .collect();
        let pack = |v: &[u32]| v.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        let mut add = vec![0u32; qs * qs];
        let mut mul = vec![0u32; qs * qs];
        for a in 0..qs {
            for b in 0..qs {
                let s: Vec<u32> = digits[a].iter().zip(&digits[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * qs + b] = pack(&s);
                let prod = fp::mul(&digits[a], &digits[b], p);
                let mut r = fp::rem(prod, &modulus, p);
                r.resize(n as usize, 0);
                mul[a * qs + b] = pack(&r);
            }
        }
        let neg = (0..qs).map(|a| (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as u32).collect();
        let inv = (0..qs)
            .map(|a| if a == 0 { 0 } else { (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as u32 })
            .collect();
        FieldData { p, n, q, modulus, add, mul, neg, inv }
    }
}

/// Dense polynomials over F_p as coefficient vectors (constant term first).
/// Used only to build and validate field moduli.
pub(crate) mod fp {
    use crate::error::{Error, Result};

    pub fn trim(mut v: Vec<u32>) -> Vec<u32> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem(a: Vec<u32>, m: &[u32], p: u32) -> Vec<u32> {
        let mut a = trim(a);
        let dm = m.len() - 1;
        while a.len() > dm {
            let c = *a.last().unwrap();
            let shift = a.len() - 1 - dm;
            for (i, &mc) in m.iter().enumerate() {
                a[shift + i] = (a[shift + i] + p - (c * mc) % p) % p;
            }
            a = trim(a);
        }
        a
    }

    /// Monic polynomials of degree `d` in lexicographic order.
    pub fn monics(d: usize, p: u32) -> impl Iterator<Item = Vec<u32>> {
        let count = (p as u64).pow(d as u32);
        (0..count).map(move |mut idx| {
            let mut v = Vec::with_capacity(d + 1);
            for _ in 0..d {
                v.push((idx % p as u64) as u32);
                idx /= p as u64;
            }
            v.push(1);
            v
        })
    }

    /// Trial division by every monic polynomial of degree at most deg/2.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let n = f.len() - 1;
        if n == 0 {
            return false;
        }
        (1..=n / 2).all(|d| monics(d, p).all(|g| !rem(f.to_vec(), &g, p).is_empty()))
    }

    pub fn smallest_irreducible(n: usize, p: u32) -> Vec<u32> {
        if n == 1 {
            return vec![0, 1];
        }
        monics(n, p).find(|f| is_irreducible(f, p)).expect("irreducible polynomials exist in every degree")
    }

    pub fn format(f: &[u32]) -> String {
        if f.is_empty() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (k, &c) in f.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{k}"),
            };
            terms.push(match (c, k) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        terms.join("+")
    }

    /// Parses `c*x^k` terms joined by `+` or `-`.
    pub fn parse(s: &str, p: u32) -> Result<Vec<u32>> {
        let bad = || Error::Parse(format!("bad F_{p} polynomial {s:?}"));
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(bad());
        }
        let mut out: Vec<u32> = Vec::new();
        let mut rest = cleaned.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1i64, &rest[1..]),
                b'-' => (-1i64, &rest[1..]),
                _ => (1i64, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return Err(bad());
            }
            let (coef, deg) = match term.find('x') {
                None => (term.parse::<i64>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let c = match term[..pos].trim_end_matches('*') {
                        "" => 1,
                        t => t.parse::<i64>().map_err(|_| bad())?,
                    };
                    let d = match &term[pos + 1..] {
                        "" => 1,
                        e => e.strip_prefix('^').ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?,
                    };
                    (c, d)
                }
            };
            if out.len() <= deg {
                out.resize(deg + 1, 0);
            }
            out[deg] = ((out[deg] as i64 + sign * coef).rem_euclid(p as i64)) as u32;
        }
        Ok(trim(out))
    }
}
