//! Sparse multivariate polynomials over the rationals.
//!
//! A [`Monomial`] is a fixed-width exponent vector; a [`Poly`] is a list of
//! terms kept strictly sorted, leading term first, under the order carried by
//! its [`PolyRing`]. The ring context owns the variable names and the
//! monomial order; all arithmetic goes through it so that term order never
//! silently drifts between rings.
//!
//! Two orders are provided: plain degree-reverse-lexicographic, and a block
//! order (degrevlex on a leading block of variables, ties broken by degrevlex
//! on the rest) used for subalgebra elimination.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write as _;

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use crate::error::Error;
use crate::scalar::{self, Scalar};

pub type Exp = u16;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub exps: Vec<Exp>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Compares exponent slices by degree, ties broken reverse-lexicographically.
/// Variables are listed in ascending order (`vars[0]` is the smallest), so on
/// equal degree the monomial with the smaller exponent in the first differing
/// variable is the larger one.
fn degrevlex(a: &[Exp], b: &[Exp]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for i in 0..a.len() {
        if a[i] != b[i] {
            return if a[i] < b[i] {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
    }
    Ordering::Equal
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    DegRevLex,
    /// Degrevlex on the first `split` variables, ties broken by degrevlex on
    /// the remaining ones; an elimination order for the leading block.
    Block { split: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => degrevlex(&a.exps, &b.exps),
            MonomialOrder::Block { split } => degrevlex(&a.exps[..split], &b.exps[..split])
                .then_with(|| degrevlex(&a.exps[split..], &b.exps[split..])),
        }
    }

    /// A key whose natural lexicographic order agrees with this monomial
    /// order, so ordered maps can serve as working polynomials.
    pub fn key(&self, m: &Monomial) -> Vec<u32> {
        fn push_block(out: &mut Vec<u32>, exps: &[Exp]) {
            out.push(exps.iter().map(|&e| e as u32).sum());
            out.extend(exps.iter().map(|&e| u32::from(Exp::MAX - e)));
        }
        let mut out = Vec::with_capacity(m.exps.len() + 2);
        match *self {
            MonomialOrder::DegRevLex => push_block(&mut out, &m.exps),
            MonomialOrder::Block { split } => {
                push_block(&mut out, &m.exps[..split]);
                push_block(&mut out, &m.exps[split..]);
            }
        }
        out
    }

    pub fn tag(&self) -> String {
        match *self {
            MonomialOrder::DegRevLex => "degrevlex".to_string(),
            MonomialOrder::Block { split } => format!("block({split})"),
        }
    }
}

/// Terms sorted strictly descending in the ring order; no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    pub terms: Vec<(Monomial, Scalar)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn constant_part(&self) -> Scalar {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }
}

/// Context for polynomial arithmetic: variable names and the monomial order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyRing {
    pub vars: Vec<String>,
    pub order: MonomialOrder,
}

impl PolyRing {
    pub fn new(vars: Vec<String>, order: MonomialOrder) -> Self {
        PolyRing { vars, order }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn zero(&self) -> Poly {
        Poly::zero()
    }

    pub fn constant(&self, c: Scalar) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Monomial::one(self.nvars()), c)],
            }
        }
    }

    pub fn one(&self) -> Poly {
        self.constant(scalar::one())
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly {
            terms: vec![(Monomial::var(self.nvars(), i), scalar::one())],
        }
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Sorts, merges equal monomials, and drops zeros.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, Scalar)>) -> Poly {
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 += c;
                    if last.1.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((m, c));
            }
        }
        Poly { terms: out }
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        // merge two sorted term lists
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            match self.order.cmp(&a.terms[i].0, &b.terms[j].0) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.terms[i].1 + &b.terms[j].1;
                    if !c.is_zero() {
                        out.push((a.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        out.extend_from_slice(&b.terms[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        Poly {
            terms: a.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Poly, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: a.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_term(&self, a: &Poly, m: &Monomial, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: a
                .terms
                .iter()
                .map(|(am, ac)| (am.mul(m), ac * c))
                .collect(),
        }
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(a.terms.len() * b.terms.len());
        for (am, ac) in &a.terms {
            for (bm, bc) in &b.terms {
                let m = am.mul(bm);
                let c = ac * bc;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        self.from_terms(acc.into_iter().collect())
    }

    pub fn pow(&self, a: &Poly, e: u32) -> Poly {
        let mut out = self.one();
        for _ in 0..e {
            out = self.mul(&out, a);
        }
        out
    }

    /// Scales so the coefficients are coprime integers with a positive leading
    /// coefficient. Keeps Buchberger's intermediate results small.
    pub fn content_normalize(&self, a: &Poly) -> Poly {
        if a.is_zero() {
            return Poly::zero();
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &a.terms {
            den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
        }
        let mut num_gcd = BigInt::zero();
        for (_, c) in &a.terms {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num::integer::gcd(num_gcd, scaled);
        }
        if num_gcd.is_zero() {
            return Poly::zero();
        }
        let mut factor = Scalar::new(den_lcm, num_gcd);
        if a.terms[0].1.is_negative() {
            factor = -factor;
        }
        self.scale(a, &factor)
    }

    /// Evaluates at a rational point, one value per variable.
    pub fn eval(&self, a: &Poly, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars());
        let mut out = Scalar::zero();
        for (m, c) in &a.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            out += v;
        }
        out
    }

    /// Ring morphism determined by images of the variables in `target`.
    pub fn substitute(&self, a: &Poly, target: &PolyRing, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars());
        let mut acc: Vec<(Monomial, Scalar)> = Vec::new();
        for (m, c) in &a.terms {
            let mut term = target.constant(c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    term = target.mul(&term, &target.pow(&images[i], e as u32));
                }
            }
            acc.extend(term.terms);
        }
        target.from_terms(acc)
    }

    /// Canonical text form, e.g. `3*T_g^2*U_e - 1/2*U_x`.
    pub fn render(&self, a: &Poly) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in a.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(scalar::render(&abs));
            }
            for (i, &e) in m.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            let _ = write!(out, "{}", factors.join("*"));
        }
        out
    }

    /// Parses the canonical text form produced by [`PolyRing::render`]
    /// (sums and differences of `coeff*var^e*...` terms; parentheses allowed).
    pub fn parse(&self, input: &str) -> Result<Poly, Error> {
        let mut p = Parser {
            ring: self,
            input: input.as_bytes(),
            pos: 0,
        };
        let poly = p.expr()?;
        p.skip_ws();
        if p.pos != p.input.len() {
            return Err(Error::Parse(format!(
                "unexpected trailing input at byte {} of `{input}`",
                p.pos
            )));
        }
        Ok(poly)
    }
}

struct Parser<'a> {
    ring: &'a PolyRing,
    input: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly, Error> {
        let mut negate = false;
        if let Some(c) = self.peek() {
            if c == b'+' || c == b'-' {
                self.pos += 1;
                negate = c == b'-';
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = self.ring.neg(&acc);
        }
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.ring.add(&acc, &t);
                }
                b'-' => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.ring.sub(&acc, &t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, Error> {
        let mut acc = self.factor()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = self.ring.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::Parse("missing `)`".to_string()));
                }
                self.pos += 1;
                Ok(self.maybe_pow(inner)?)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self
                    .input
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_digit())
                {
                    self.pos += 1;
                }
                let mut text =
                    std::str::from_utf8(&self.input[start..self.pos]).unwrap().to_string();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let dstart = self.pos;
                    while self
                        .input
                        .get(self.pos)
                        .is_some_and(|c| c.is_ascii_digit())
                    {
                        self.pos += 1;
                    }
                    if dstart == self.pos {
                        return Err(Error::Parse("missing denominator".to_string()));
                    }
                    text.push('/');
                    text.push_str(std::str::from_utf8(&self.input[dstart..self.pos]).unwrap());
                }
                Ok(self.ring.constant(scalar::parse(&text)?))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.input.get(self.pos).is_some_and(|c| {
                    c.is_ascii_alphanumeric() || *c == b'_' || *c == b'\''
                }) {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
                let idx = self
                    .ring
                    .var_index(name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                self.maybe_pow(self.ring.var(idx))
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }

    fn maybe_pow(&mut self, base: Poly) -> Result<Poly, Error> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self
                .input
                .get(self.pos)
                .is_some_and(|c| c.is_ascii_digit())
            {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(Error::Parse("missing exponent".to_string()));
            }
            let e: u32 = std::str::from_utf8(&self.input[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| Error::Parse("bad exponent".to_string()))?;
            Ok(self.ring.pow(&base, e))
        } else {
            Ok(base)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn ring2() -> PolyRing {
        PolyRing::new(vec!["x".into(), "y".into()], MonomialOrder::DegRevLex)
    }

    #[test]
    fn degrevlex_orders_by_degree_then_first_variable() {
        let r = ring2();
        let x = Monomial::var(2, 0);
        let y = Monomial::var(2, 1);
        assert_eq!(r.order.cmp(&x.mul(&x), &y), Ordering::Greater);
        // variables ascend left to right, so y > x
        assert_eq!(r.order.cmp(&y, &x), Ordering::Greater);
        // y^2 vs x*y: equal degree, x*y has the larger exponent in x
        assert_eq!(r.order.cmp(&y.mul(&y), &x.mul(&y)), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_the_leading_block() {
        let order = MonomialOrder::Block { split: 1 };
        // any monomial containing x beats any pure-y monomial
        let x = Monomial { exps: vec![1, 0] };
        let y5 = Monomial { exps: vec![0, 5] };
        assert_eq!(order.cmp(&x, &y5), Ordering::Greater);
    }

    #[test]
    fn arithmetic_round_trip() {
        let r = ring2();
        let p = r.parse("3*x^2*y - 1/2*y + 1").unwrap();
        assert_eq!(r.render(&p), "3*x^2*y - 1/2*y + 1");
        let q = r.parse("x + y").unwrap();
        let prod = r.mul(&p, &q);
        let back = r.sub(&prod, &r.mul(&q, &p));
        assert!(back.is_zero());
        assert_eq!(r.parse(&r.render(&prod)).unwrap(), prod);
    }

    #[test]
    fn content_normalization_produces_primitive_integers() {
        let r = ring2();
        let p = r.parse("4/3*x - 2/3*y").unwrap();
        let n = r.content_normalize(&p);
        assert_eq!(r.render(&n), "y - 2*x");
        let neg = r.parse("-4*x + 2*y").unwrap();
        assert_eq!(r.render(&r.content_normalize(&neg)), "y - 2*x");
    }

    #[test]
    fn evaluation_and_substitution_agree() {
        let r = ring2();
        let p = r.parse("x^2*y - 3*x + 2").unwrap();
        let val = r.eval(&p, &[int(2), ratio(1, 2)]);
        assert_eq!(val, int(-2));
        let images = vec![r.constant(int(2)), r.constant(ratio(1, 2))];
        let sub = r.substitute(&p, &r, &images);
        assert_eq!(sub, r.constant(int(-2)));
    }
}
