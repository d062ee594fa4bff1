//! Multivariate Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Terms are kept sorted by exponent vector in descending lexicographic
//! order, with no zero coefficients stored, so equality, hashing and the
//! text serialization are all canonical.

use rustc_hash::FxHashMap;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::coeff::Coeff;
use crate::error::Error;

type Mono = Box<[i32]>;

/// Packed monomial layout for up to 8 variables: one biased 16-bit lane per
/// variable, variable 1 in the most significant lane, so that plain `u128`
/// comparison is exactly descending-lex-friendly ordering on exponents.
/// Lane arithmetic never carries across lanes as long as exponents stay
/// within [`PACK_LIMIT`].
mod packed {
    pub const LANES: usize = 8;
    pub const BIAS: u16 = 1 << 14;
    /// Inputs with any |exponent| beyond this take the generic path.
    pub const PACK_LIMIT: i32 = 1 << 12;
    /// BIAS in every lane; adding two packed monomials and subtracting this
    /// yields the packed sum of exponents.
    pub const BIAS_VEC: u128 = {
        let mut v = 0u128;
        let mut i = 0;
        while i < LANES {
            v = (v << 16) | BIAS as u128;
            i += 1;
        }
        v
    };

    #[inline]
    pub fn pack(exps: &[i32]) -> u128 {
        let mut v = 0u128;
        for lane in 0..LANES {
            let e = exps.get(lane).copied().unwrap_or(0);
            v = (v << 16) | ((e + BIAS as i32) as u16 as u128);
        }
        v
    }

    #[inline]
    pub fn unpack(v: u128, nvars: usize) -> Vec<i32> {
        (0..nvars)
            .map(|lane| {
                let raw = (v >> (16 * (LANES - 1 - lane))) as u16;
                raw as i32 - BIAS as i32
            })
            .collect()
    }

    /// Componentwise `a >= b` on the underlying exponents.
    #[inline]
    pub fn divides(b: u128, a: u128) -> bool {
        (0..LANES).all(|lane| {
            let shift = 16 * lane;
            ((a >> shift) as u16) >= ((b >> shift) as u16)
        })
    }

    pub fn fits(exps: &[i32]) -> bool {
        exps.iter().all(|&e| e.abs() <= PACK_LIMIT)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    /// Sorted by exponent vector, descending lexicographic; coefficients nonzero.
    terms: Vec<(Mono, Coeff)>,
}

fn desc(a: &[i32], b: &[i32]) -> Ordering {
    b.cmp(a)
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<Coeff>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        LaurentPoly {
            nvars,
            terms: vec![(vec![0; nvars].into_boxed_slice(), c)],
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    /// The single variable `x_{i}` (0-based).
    pub fn variable(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        LaurentPoly {
            nvars,
            terms: vec![(e.into_boxed_slice(), Coeff::one())],
        }
    }

    pub fn monomial(nvars: usize, exps: &[i32], coeff: impl Into<Coeff>) -> Self {
        assert_eq!(exps.len(), nvars);
        let c = coeff.into();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        LaurentPoly {
            nvars,
            terms: vec![(exps.to_vec().into_boxed_slice(), c)],
        }
    }

    /// Normalize a raw term list: combine equal exponents, drop zeros, sort.
    pub fn from_terms<C: Into<Coeff>>(nvars: usize, raw: Vec<(Vec<i32>, C)>) -> Self {
        let mut map: HashMap<Mono, Coeff> = HashMap::with_capacity(raw.len());
        for (e, c) in raw {
            assert_eq!(e.len(), nvars);
            map.entry(e.into_boxed_slice())
                .or_insert_with(Coeff::zero)
                .add_assign(&c.into());
        }
        Self::collect(nvars, map)
    }

    fn collect(nvars: usize, map: HashMap<Mono, Coeff>) -> Self {
        let mut terms: Vec<(Mono, Coeff)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| desc(&a.0, &b.0));
        LaurentPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one() && self.terms[0].0.iter().all(|&e| e == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &Coeff)> {
        self.terms.iter().map(|(e, c)| (&e[..], c))
    }

    pub fn coeff(&self, exps: &[i32]) -> Coeff {
        match self.terms.binary_search_by(|(e, _)| desc(e, exps)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Coeff::zero(),
        }
    }

    /// Componentwise minimum exponent over all terms. `None` for zero.
    pub fn min_exponents(&self) -> Option<Vec<i32>> {
        let mut it = self.terms.iter();
        let first = it.next()?;
        let mut m: Vec<i32> = first.0.to_vec();
        for (e, _) in it {
            for (mi, &ei) in m.iter_mut().zip(e.iter()) {
                *mi = (*mi).min(ei);
            }
        }
        Some(m)
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match desc(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Less => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    terms.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].1.add(&other.terms[j].1);
                    if !c.is_zero() {
                        terms.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        LaurentPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    fn packable(&self) -> bool {
        self.nvars <= packed::LANES && self.terms.iter().all(|(e, _)| packed::fits(e))
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, other.nvars);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.packable() && other.packable() {
            return self.mul_packed(other);
        }
        let mut map: FxHashMap<Mono, Coeff> = FxHashMap::default();
        map.reserve(self.terms.len() * other.terms.len());
        let mut buf = vec![0i32; self.nvars];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                for (k, x) in buf.iter_mut().enumerate() {
                    *x = ea[k] + eb[k];
                }
                match map.get_mut(buf.as_slice()) {
                    Some(c) => c.add_assign(&ca.mul(cb)),
                    None => {
                        map.insert(buf.clone().into_boxed_slice(), ca.mul(cb));
                    }
                }
            }
        }
        let mut terms: Vec<(Mono, Coeff)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| desc(&a.0, &b.0));
        LaurentPoly {
            nvars: self.nvars,
            terms,
        }
    }

    fn mul_packed(&self, other: &LaurentPoly) -> LaurentPoly {
        let pa: Vec<(u128, &Coeff)> = self
            .terms
            .iter()
            .map(|(e, c)| (packed::pack(e), c))
            .collect();
        let pb: Vec<(u128, &Coeff)> = other
            .terms
            .iter()
            .map(|(e, c)| (packed::pack(e), c))
            .collect();
        let mut map: FxHashMap<u128, Coeff> = FxHashMap::default();
        map.reserve(pa.len().saturating_mul(pb.len()).min(1 << 20));
        for (ea, ca) in &pa {
            for (eb, cb) in &pb {
                let key = ea + eb - packed::BIAS_VEC;
                match map.get_mut(&key) {
                    Some(c) => c.add_assign(&ca.mul(cb)),
                    None => {
                        map.insert(key, ca.mul(cb));
                    }
                }
            }
        }
        let mut keys: Vec<(u128, Coeff)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        keys.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let terms: Vec<(Mono, Coeff)> = keys
            .into_iter()
            .map(|(k, c)| (packed::unpack(k, self.nvars).into_boxed_slice(), c))
            .collect();
        LaurentPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        match e {
            0 => Self::one(self.nvars),
            1 => self.clone(),
            _ => {
                let mut acc = self.clone();
                for _ in 1..e {
                    acc = acc.mul(self);
                }
                acc
            }
        }
    }

    /// Multiply by the monomial `x^shift`.
    fn shift(&self, shift: &[i32]) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let m: Mono = e
                        .iter()
                        .zip(shift.iter())
                        .map(|(a, b)| a + b)
                        .collect::<Vec<_>>()
                        .into_boxed_slice();
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Exact division. Fails with [`Error::InexactDivision`] when `self` is
    /// not a multiple of `divisor`; exactness of every exchange division is
    /// what the Laurent phenomenon guarantees, so a failure here means the
    /// seed is corrupt.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, Error> {
        assert_eq!(self.nvars, divisor.nvars);
        if divisor.is_zero() {
            return Err(Error::InexactDivision);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        // Normalize both sides to ordinary polynomials (min exponent 0 in
        // every variable); monomials are units, so this loses nothing.
        let ma = self.min_exponents().expect("nonzero");
        let mb = divisor.min_exponents().expect("nonzero");
        let neg = |v: &[i32]| v.iter().map(|&x| -x).collect::<Vec<_>>();
        let pa = self.shift(&neg(&ma));
        let pb = divisor.shift(&neg(&mb));

        let quotient = if pa.packable() && pb.packable() {
            pa.div_packed(&pb)?
        } else {
            pa.div_generic(&pb)?
        };
        // Undo the monomial normalization: self/divisor = x^(ma-mb) * (pa/pb).
        let back: Vec<i32> = ma.iter().zip(mb.iter()).map(|(a, b)| a - b).collect();
        Ok(quotient.shift(&back))
    }

    /// Long division of min-normalized polynomials, remainder kept in a
    /// map keyed by packed monomials so each reduction step touches only
    /// the divisor's support.
    fn div_packed(&self, pb: &LaurentPoly) -> Result<LaurentPoly, Error> {
        use std::collections::BTreeMap;
        let divisor: Vec<(u128, &Coeff)> =
            pb.terms.iter().map(|(e, c)| (packed::pack(e), c)).collect();
        let (eb, cb) = divisor[0];
        let mut rem: BTreeMap<u128, Coeff> = self
            .terms
            .iter()
            .map(|(e, c)| (packed::pack(e), c.clone()))
            .collect();
        let mut quo: Vec<(Mono, Coeff)> = Vec::new();
        while let Some((&er, _)) = rem.last_key_value() {
            if !packed::divides(eb, er) {
                return Err(Error::InexactDivision);
            }
            let cr = rem.remove(&er).expect("present");
            let (q, r) = cr.div_rem(cb);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            let t = er - eb + packed::BIAS_VEC;
            // Leading terms cancel by construction; fold in the rest.
            for (e2, c2) in &divisor[1..] {
                let key = t + e2 - packed::BIAS_VEC;
                let delta = q.mul(c2);
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        o.get_mut().sub_assign(&delta);
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(delta.neg());
                    }
                }
            }
            quo.push((packed::unpack(t, self.nvars).into_boxed_slice(), q));
        }
        // Quotient leading monomials strictly decrease, so `quo` is sorted.
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms: quo,
        })
    }

    fn div_generic(&self, pb: &LaurentPoly) -> Result<LaurentPoly, Error> {
        let (eb, cb) = (pb.terms[0].0.clone(), pb.terms[0].1.clone());
        let mut rem = self.clone();
        let mut quo: Vec<(Mono, Coeff)> = Vec::new();
        while !rem.is_zero() {
            let (er, cr) = &rem.terms[0];
            let mut t = vec![0i32; self.nvars];
            for k in 0..self.nvars {
                t[k] = er[k] - eb[k];
                if t[k] < 0 {
                    return Err(Error::InexactDivision);
                }
            }
            let (q, r) = cr.div_rem(&cb);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            let term = LaurentPoly::monomial(self.nvars, &t, q.clone());
            rem = rem.sub(&term.mul(pb));
            quo.push((t.into_boxed_slice(), q));
        }
        let mut quotient = LaurentPoly {
            nvars: self.nvars,
            terms: quo,
        };
        quotient.terms.sort_unstable_by(|a, b| desc(&a.0, &b.0));
        Ok(quotient)
    }

    /// Substitute 1 for every variable with index >= `keep` and restrict the
    /// exponent vectors to the first `keep` coordinates.
    pub fn substitute_ones_beyond(&self, keep: usize) -> LaurentPoly {
        assert!(keep <= self.nvars);
        let mut map: HashMap<Mono, Coeff> = HashMap::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let m: Mono = e[..keep].to_vec().into_boxed_slice();
            map.entry(m).or_insert_with(Coeff::zero).add_assign(c);
        }
        Self::collect(keep, map)
    }

    /// Parse the canonical text form, e.g. `(1)*x1^-1*x2^1 + (-2)*x1^2`.
    pub fn parse(s: &str, nvars: usize) -> Result<LaurentPoly, Error> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero(nvars));
        }
        let mut raw = Vec::new();
        for term in s.split(" + ") {
            let mut exps = vec![0i32; nvars];
            let mut factors = term.split('*');
            let head = factors
                .next()
                .ok_or_else(|| Error::Parse(format!("empty term in {s:?}")))?;
            let coeff_str = head
                .strip_prefix('(')
                .and_then(|h| h.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("expected (coeff), got {head:?}")))?;
            let coeff: Coeff = coeff_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {coeff_str:?}")))?;
            for factor in factors {
                let body = factor
                    .strip_prefix('x')
                    .ok_or_else(|| Error::Parse(format!("expected x<i>^<e>, got {factor:?}")))?;
                let (idx_str, exp_str) = body
                    .split_once('^')
                    .ok_or_else(|| Error::Parse(format!("missing ^ in {factor:?}")))?;
                let idx: usize = idx_str
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable index {idx_str:?}")))?;
                if idx == 0 || idx > nvars {
                    return Err(Error::Parse(format!(
                        "variable x{idx} out of range 1..={nvars}"
                    )));
                }
                let exp: i32 = exp_str
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent {exp_str:?}")))?;
                exps[idx - 1] += exp;
            }
            raw.push((exps, coeff));
        }
        Ok(Self::from_terms(nvars, raw))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (k, &ek) in e.iter().enumerate() {
                if ek != 0 {
                    write!(f, "*x{}^{}", k + 1, ek)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> LaurentPoly {
        LaurentPoly::variable(2, i)
    }

    #[test]
    fn canonical_text_form() {
        // (x2 + 1) / x1 in two variables .
        let p = LaurentPoly::from_terms(
            2,
            vec![(vec![-1, 0], Coeff::from(1)), (vec![-1, 1], Coeff::from(1))],
        );
        assert_eq!(p.to_string(), "(1)*x1^-1*x2^1 + (1)*x1^-1");
        let q = LaurentPoly::parse(&p.to_string(), 2).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(LaurentPoly::parse("x1 + 1", 2).is_err());
        assert!(LaurentPoly::parse("(1)*x3^1", 2).is_err());
        assert!(LaurentPoly::parse("(one)", 2).is_err());
    }

    #[test]
    fn arithmetic_basics() {
        let p = x(0).add(&x(1));
        let q = x(0).sub(&x(1));
        let prod = p.mul(&q);
        let expect = LaurentPoly::from_terms(
            2,
            vec![(vec![2, 0], Coeff::from(1)), (vec![0, 2], Coeff::from(-1))],
        );
        assert_eq!(prod, expect);
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn exact_division_round_trip() {
        let p = x(0).add(&x(1)).pow(3);
        let d = x(0).add(&x(1));
        let q = p.div_exact(&d).unwrap();
        assert_eq!(q, x(0).add(&x(1)).pow(2));
        assert_eq!(q.mul(&d), p);
    }

    #[test]
    fn laurent_division_with_negative_exponents() {
        // ((x2 + 1)/x1) / x2 = (x2 + 1)/(x1 x2)
        let p = LaurentPoly::from_terms(
            2,
            vec![(vec![-1, 1], Coeff::from(1)), (vec![-1, 0], Coeff::from(1))],
        );
        let q = p.div_exact(&x(1)).unwrap();
        assert_eq!(q.mul(&x(1)), p);
    }

    #[test]
    fn inexact_division_is_detected() {
        let p = x(0).add(&LaurentPoly::one(2));
        assert!(matches!(
            p.div_exact(&x(1).add(&LaurentPoly::one(2))),
            Err(Error::InexactDivision)
        ));
        let two = LaurentPoly::constant(2, 2);
        assert!(matches!(
            x(0).div_exact(&two.mul(&x(0)).add(&two)),
            Err(Error::InexactDivision)
        ));
    }

    #[test]
    fn substitution_merges_terms() {
        // x1*h + x1 with h set to 1 becomes 2*x1.
        let p = LaurentPoly::from_terms(
            2,
            vec![(vec![1, 1], Coeff::from(1)), (vec![1, 0], Coeff::from(1))],
        );
        let s = p.substitute_ones_beyond(1);
        assert_eq!(s, LaurentPoly::monomial(1, &[1], 2));
    }

    #[test]
    fn min_exponents_and_coeff() {
        let p = LaurentPoly::from_terms(
            2,
            vec![(vec![-2, 1], Coeff::from(3)), (vec![0, -1], Coeff::from(1))],
        );
        assert_eq!(p.min_exponents(), Some(vec![-2, -1]));
        assert_eq!(p.coeff(&[-2, 1]), Coeff::from(3));
        assert_eq!(p.coeff(&[5, 5]), Coeff::from(0));
    }
}
