//! The ring R = F_q + uF_q with u^2 = 0.
//!
//! An element a + ub is stored as the pair (a, b). The Gray map sends a + ub
//! to (b, a + b); the plain coordinate map sends it to (a, b).

use crate::error::{Error, Result};
use crate::gf::{FElem, Field};

/// The element a + u*b of R.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RElem {
    pub a: FElem,
    pub b: FElem,
}

impl RElem {
    pub const ZERO: RElem = RElem { a: FElem::ZERO, b: FElem::ZERO };

    pub fn new(a: FElem, b: FElem) -> RElem {
        RElem { a, b }
    }

    pub fn is_zero(self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

/// Image of an R-vector under the Gray map, twice as long as its source.
pub type GrayVector = Vec<FElem>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Mul,
    Neg,
}

/// F_q + uF_q over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    fld: Field,
}

impl Ring {
    pub fn new(fld: Field) -> Ring {
        Ring { fld }
    }

    pub fn field(&self) -> &Field {
        &self.fld
    }

    /// Number of elements, q^2.
    pub fn size(&self) -> u64 {
        (self.fld.q() as u64).pow(2)
    }

    pub fn zero(&self) -> RElem {
        RElem::ZERO
    }

    pub fn one(&self) -> RElem {
        RElem::new(self.fld.one(), self.fld.zero())
    }

    pub fn u(&self) -> RElem {
        RElem::new(self.fld.zero(), self.fld.one())
    }

    /// Embeds F_q into R.
    pub fn lift(&self, a: FElem) -> RElem {
        RElem::new(a, self.fld.zero())
    }

    pub fn from_int(&self, v: i64) -> RElem {
        self.lift(self.fld.from_int(v))
    }

    pub fn contains(&self, x: RElem) -> bool {
        self.fld.contains(x.a) && self.fld.contains(x.b)
    }

    /// All q^2 elements; the F_q part varies fastest.
    pub fn elements(&self) -> impl Iterator<Item = RElem> + Clone {
        let q = self.fld.q();
        (0..q * q).map(move |i| RElem::new(FElem::from_index(i % q), FElem::from_index(i / q)))
    }

    #[inline]
    pub fn add(&self, x: RElem, y: RElem) -> RElem {
        RElem::new(self.fld.add(x.a, y.a), self.fld.add(x.b, y.b))
    }

    #[inline]
    pub fn neg(&self, x: RElem) -> RElem {
        RElem::new(self.fld.neg(x.a), self.fld.neg(x.b))
    }

    #[inline]
    pub fn sub(&self, x: RElem, y: RElem) -> RElem {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: RElem, y: RElem) -> RElem {
        let f = &self.fld;
        RElem::new(f.mul(x.a, y.a), f.add(f.mul(x.a, y.b), f.mul(x.b, y.a)))
    }

    /// Multiplication by a scalar from F_q.
    #[inline]
    pub fn scale(&self, c: FElem, x: RElem) -> RElem {
        RElem::new(self.fld.mul(c, x.a), self.fld.mul(c, x.b))
    }

    /// Units are exactly the elements with nonzero F_q part.
    pub fn is_unit(&self, x: RElem) -> bool {
        !x.a.is_zero()
    }

    /// (a + ub)^{-1} = a^{-1} - u a^{-2} b.
    pub fn inv(&self, x: RElem) -> Result<RElem> {
        let f = &self.fld;
        let ai = f.inv(x.a)?;
        Ok(RElem::new(ai, f.neg(f.mul(f.mul(ai, ai), x.b))))
    }

    pub fn apply(&self, op: RingOp, x: RElem, y: RElem) -> Result<RElem> {
        if !self.contains(x) || !self.contains(y) {
            return Err(Error::MixedFields);
        }
        Ok(match op {
            RingOp::Add => self.add(x, y),
            RingOp::Mul => self.mul(x, y),
            RingOp::Neg => self.neg(x),
        })
    }

    /// Canonical printed form `(a,b)`.
    pub fn format(&self, x: RElem) -> String {
        format!("({},{})", self.fld.format_elem(x.a), self.fld.format_elem(x.b))
    }

    /// Accepts `(a,b)` and sums of terms `a`, `u`, `u*b`, `b*u`.
    pub fn parse(&self, s: &str) -> Result<RElem> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty ring element".into()));
        }
        if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            if let Some(pos) = top_level_comma(inner) {
                let a = self.fld.parse_elem(&inner[..pos])?;
                let b = self.fld.parse_elem(&inner[pos + 1..])?;
                return Ok(RElem::new(a, b));
            }
        }
        let mut acc = self.zero();
        for term in split_top_level_plus(&s) {
            let x = match term.split_once('*') {
                _ if term == "u" => self.u(),
                Some(("u", c)) | Some((c, "u")) => RElem::new(self.fld.zero(), self.fld.parse_elem(c)?),
                None => self.lift(self.fld.parse_elem(term)?),
                Some(_) => return Err(Error::Parse(format!("bad ring element term {term:?}"))),
            };
            acc = self.add(acc, x);
        }
        Ok(acc)
    }
}

fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

fn split_top_level_plus(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            '+' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Component-wise omega(a + ub) = (b, a + b).
pub fn gray(ring: &Ring, v: &[RElem]) -> GrayVector {
    let f = ring.field();
    v.iter().flat_map(|x| [x.b, f.add(x.a, x.b)]).collect()
}

/// Inverse of [`gray`].
pub fn ungray(ring: &Ring, w: &[FElem]) -> Result<Vec<RElem>> {
    if w.len() % 2 != 0 {
        return Err(Error::Precondition(format!("Gray vector has odd length {}", w.len())));
    }
    let f = ring.field();
    Ok(w.chunks(2).map(|c| RElem::new(f.sub(c[1], c[0]), c[0])).collect())
}

/// Component-wise a + ub -> (a, b).
pub fn coords(v: &[RElem]) -> Vec<FElem> {
    v.iter().flat_map(|x| [x.a, x.b]).collect()
}

pub fn from_coords(w: &[FElem]) -> Vec<RElem> {
    w.chunks(2).map(|c| RElem::new(c[0], c.get(1).copied().unwrap_or_default())).collect()
}

fn require_f2(ring: &Ring) -> Result<()> {
    if ring.field().q() != 2 {
        return Err(Error::LeeOutsideF2);
    }
    Ok(())
}

/// Lee weight over F_2 + uF_2: 0, 1, u, 1+u weigh 0, 1, 2, 1.
pub fn lee_weight(ring: &Ring, v: &[RElem]) -> Result<usize> {
    require_f2(ring)?;
    Ok(v.iter()
        .map(|x| match (x.a.index(), x.b.index()) {
            (0, 0) => 0,
            (1, 0) | (1, 1) => 1,
            _ => 2,
        })
        .sum())
}

pub fn lee_distance(ring: &Ring, v: &[RElem], w: &[RElem]) -> Result<usize> {
    let diff: Vec<RElem> = v.iter().zip(w).map(|(&x, &y)| ring.sub(x, y)).collect();
    lee_weight(ring, &diff)
}

/// Number of nonzero R-symbols.
pub fn hamming_weight(v: &[RElem]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// Number of nonzero F_q-coordinates.
pub fn hamming_weight_f(v: &[FElem]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}
