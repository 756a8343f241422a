//! Multivariate polynomials over finite fields with weighted gradings.
//!
//! A [`PolyRing`] owns the coefficient field, the variable names, their
//! positive integer weights, and the monomial order. Polynomials are sorted
//! term lists (largest term first) and only make sense together with the ring
//! that produced them.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

pub type Exponents = SmallVec<[u16; 6]>;

/// A monomial with its weighted degree cached.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial {
    deg: u32,
    exps: Exponents,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Number of variables counted with multiplicity.
    pub fn total_exponent(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            deg: self.deg + other.deg,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            deg: other.deg - self.deg,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| b - a).collect(),
        })
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Weighted degree first, ties broken by reverse lexicographic comparison.
    #[default]
    Grevlex,
    Lex,
}

impl MonomialOrder {
    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "lex" => Ok(MonomialOrder::Lex),
            other => Err(Error::Parse(format!("unknown monomial order `{other}`"))),
        }
    }
}

/// A polynomial: distinct monomials with nonzero coefficients, largest first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Elem)>,
}

impl Poly {
    pub fn terms(&self) -> &[(Monomial, Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, Elem)> {
        self.terms.first()
    }

    /// Largest weighted degree of a term (`None` for zero).
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.deg).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.deg == w[1].0.deg)
    }

    /// The nonzero constant coefficient, if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<Elem> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(m, c)] if m.is_one() => Some(*c),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Elem {
        self.terms.iter().find(|(m, _)| m.is_one()).map_or(0, |(_, c)| *c)
    }

    pub fn into_terms(self) -> Vec<(Monomial, Elem)> {
        self.terms
    }
}

#[derive(Clone)]
pub struct PolyRing {
    inner: Arc<RingInner>,
}

struct RingInner {
    field: Field,
    names: Vec<String>,
    weights: Vec<u32>,
    order: MonomialOrder,
}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.inner.field, self.inner.names.join(","))
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field
                && self.inner.names == other.inner.names
                && self.inner.weights == other.inner.weights
                && self.inner.order == other.inner.order)
    }
}

impl Eq for PolyRing {}

impl PolyRing {
    pub fn new(field: &Field, names: &[&str], weights: &[u32], order: MonomialOrder) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        Self::from_owned(field, names, weights.to_vec(), order)
    }

    pub fn from_owned(field: &Field, names: Vec<String>, weights: Vec<u32>, order: MonomialOrder) -> Result<Self> {
        if names.len() != weights.len() {
            return Err(Error::DimensionMismatch { expected: names.len(), got: weights.len() });
        }
        if weights.contains(&0) {
            return Err(Error::Input("variable degrees must be positive".into()));
        }
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Input(format!("invalid variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::Input(format!("duplicate variable `{n}`")));
            }
        }
        Ok(PolyRing { inner: Arc::new(RingInner { field: field.clone(), names, weights, order }) })
    }

    /// Standard-graded ring (all weights 1) with grevlex.
    pub fn standard(field: &Field, names: &[&str]) -> Result<Self> {
        Self::new(field, names, &vec![1; names.len()], MonomialOrder::Grevlex)
    }

    /// Same variables and order over another field.
    pub fn with_field(&self, field: &Field) -> PolyRing {
        PolyRing {
            inner: Arc::new(RingInner {
                field: field.clone(),
                names: self.inner.names.clone(),
                weights: self.inner.weights.clone(),
                order: self.inner.order,
            }),
        }
    }

    /// This ring with extra variables appended.
    pub fn extended(&self, names: &[&str], weights: &[u32]) -> Result<PolyRing> {
        let mut n = self.inner.names.clone();
        n.extend(names.iter().map(|s| s.to_string()));
        let mut w = self.inner.weights.clone();
        w.extend_from_slice(weights);
        Self::from_owned(&self.inner.field, n, w, self.inner.order)
    }

    pub fn field(&self) -> &Field {
        &self.inner.field
    }

    pub fn nvars(&self) -> usize {
        self.inner.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.inner.weights
    }

    pub fn order(&self) -> MonomialOrder {
        self.inner.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.inner.names.iter().position(|n| n == name)
    }

    // ---- monomials ----

    pub fn monomial(&self, exps: &[u16]) -> Monomial {
        assert_eq!(exps.len(), self.nvars());
        let deg = exps.iter().zip(&self.inner.weights).map(|(&e, &w)| e as u32 * w).sum();
        Monomial { deg, exps: exps.iter().copied().collect() }
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial { deg: 0, exps: smallvec::smallvec![0; self.nvars()] }
    }

    pub fn var_monomial(&self, i: usize) -> Monomial {
        let mut e: Exponents = smallvec::smallvec![0; self.nvars()];
        e[i] = 1;
        Monomial { deg: self.inner.weights[i], exps: e }
    }

    pub fn lcm(&self, a: &Monomial, b: &Monomial) -> Monomial {
        let exps: Exponents = a.exps.iter().zip(&b.exps).map(|(&x, &y)| x.max(y)).collect();
        let deg = exps.iter().zip(&self.inner.weights).map(|(&e, &w)| e as u32 * w).sum();
        Monomial { deg, exps }
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.inner.order {
            MonomialOrder::Grevlex => a.deg.cmp(&b.deg).then_with(|| {
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
        }
    }

    /// All monomials of weighted degree `deg`, in descending order.
    pub fn monomials_of_degree(&self, deg: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur: Vec<u16> = vec![0; self.nvars()];
        self.enum_monomials(0, deg, &mut cur, &mut out);
        out.sort_by(|a, b| self.cmp_monomials(b, a));
        out
    }

    fn enum_monomials(&self, i: usize, rest: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == self.nvars() {
            if rest == 0 {
                out.push(self.monomial(cur));
            }
            return;
        }
        let w = self.inner.weights[i];
        let mut e = 0;
        while e * w <= rest {
            cur[i] = e as u16;
            self.enum_monomials(i + 1, rest - e * w, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }

    // ---- polynomials ----

    pub fn zero(&self) -> Poly {
        Poly::default()
    }

    pub fn one(&self) -> Poly {
        self.constant(1)
    }

    pub fn constant(&self, c: Elem) -> Poly {
        if c == 0 {
            Poly::default()
        } else {
            Poly { terms: vec![(self.one_monomial(), c)] }
        }
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly { terms: vec![(self.var_monomial(i), 1)] }
    }

    pub fn term(&self, m: Monomial, c: Elem) -> Poly {
        if c == 0 {
            Poly::default()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, Elem)>) -> Poly {
        let k = self.field();
        terms.sort_by(|a, b| self.cmp_monomials(&b.0, &a.0));
        let mut out: Vec<(Monomial, Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = k.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        Poly { terms: out }
    }

    /// `a + c * m * b`.
    pub fn add_scaled(&self, a: &Poly, c: Elem, m: &Monomial, b: &Poly) -> Poly {
        let k = self.field();
        if c == 0 || b.is_zero() {
            return a.clone();
        }
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut i = 0;
        let mut bi = b.terms.iter().map(|(bm, bc)| (bm.mul(m), k.mul(*bc, c))).peekable();
        while i < a.terms.len() || bi.peek().is_some() {
            let ord = match (a.terms.get(i), bi.peek()) {
                (Some(x), Some(y)) => self.cmp_monomials(&x.0, &y.0),
                (Some(_), None) => Ordering::Greater,
                (None, _) => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => out.push(bi.next().unwrap()),
                Ordering::Equal => {
                    let (m2, c2) = bi.next().unwrap();
                    let s = k.add(a.terms[i].1, c2);
                    if s != 0 {
                        out.push((m2, s));
                    }
                    i += 1;
                }
            }
        }
        Poly { terms: out }
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        self.add_scaled(a, 1, &self.one_monomial(), b)
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.add_scaled(a, self.field().neg(1), &self.one_monomial(), b)
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        self.scale(a, self.field().neg(1))
    }

    pub fn scale(&self, a: &Poly, c: Elem) -> Poly {
        if c == 0 {
            return Poly::default();
        }
        let k = self.field();
        Poly { terms: a.terms.iter().map(|(m, x)| (m.clone(), k.mul(*x, c))).collect() }
    }

    pub fn mul_term(&self, a: &Poly, m: &Monomial, c: Elem) -> Poly {
        if c == 0 {
            return Poly::default();
        }
        let k = self.field();
        Poly { terms: a.terms.iter().map(|(am, x)| (am.mul(m), k.mul(*x, c))).collect() }
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut acc = Poly::default();
        for (m, c) in &small.terms {
            acc = self.add_scaled(&acc, *c, m, large);
        }
        acc
    }

    pub fn pow(&self, a: &Poly, e: u32) -> Poly {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Evaluates at a point whose coordinates live in `target`, a field
    /// containing this ring's field.
    pub fn eval_in(&self, p: &Poly, target: &Field, point: &[Elem]) -> Elem {
        assert_eq!(point.len(), self.nvars());
        let mut acc = 0;
        for (m, c) in &p.terms {
            let mut t = *c;
            for (&x, &e) in point.iter().zip(&m.exps) {
                if e > 0 {
                    t = target.mul(t, target.pow(x, e as u64));
                }
            }
            acc = target.add(acc, t);
        }
        acc
    }

    pub fn homogeneous_component(&self, p: &Poly, deg: u32) -> Poly {
        Poly { terms: p.terms.iter().filter(|(m, _)| m.deg == deg).cloned().collect() }
    }

    // ---- text form ----

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.inner.names[i].clone()),
                _ => parts.push(format!("{}^{}", self.inner.names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Canonical text: terms in descending order, e.g. `x^2*y + y^3`.
    pub fn format(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let k = self.field();
        let parts: Vec<String> = p
            .terms
            .iter()
            .map(|(m, c)| {
                let mut cs = k.format(*c);
                if cs.contains('+') {
                    cs = format!("({cs})");
                }
                match (m.is_one(), *c == 1) {
                    (true, _) => cs,
                    (false, true) => self.format_monomial(m),
                    (false, false) => format!("{cs}*{}", self.format_monomial(m)),
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn parse(&self, s: &str) -> Result<Poly> {
        let tokens = tokenize(s)?;
        let mut parser = Parser { ring: self, tokens, pos: 0, src: s };
        let p = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::Parse(format!("trailing input in `{s}`")));
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '(' => {
                out.push(Token::LParen);
                i += 1
            }
            ')' => {
                out.push(Token::RParen);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let t: String = chars[start..i].iter().collect();
                out.push(Token::Num(t.parse().map_err(|_| Error::Parse(format!("number too large in `{s}`")))?));
            }
            a if a.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}` in `{s}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a PolyRing,
    tokens: Vec<Token>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in `{}`", self.src))
    }

    fn expr(&mut self) -> Result<Poly> {
        let r = self.ring;
        let mut acc = r.zero();
        let mut sign_neg = false;
        match self.peek() {
            Some(Token::Minus) => {
                sign_neg = true;
                self.pos += 1;
            }
            Some(Token::Plus) => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.product()?;
            acc = if sign_neg { r.sub(&acc, &t) } else { r.add(&acc, &t) };
            match self.peek() {
                Some(Token::Plus) => {
                    sign_neg = false;
                    self.pos += 1
                }
                Some(Token::Minus) => {
                    sign_neg = true;
                    self.pos += 1
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Poly> {
        let r = self.ring;
        let mut acc = self.power()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            let f = self.power()?;
            acc = r.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly> {
        let r = self.ring;
        let base = match self.tokens.get(self.pos).cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                let p = r.field().characteristic() as u64;
                r.constant((n % p) as Elem)
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let i = r.var_index(&name).ok_or_else(|| self.err(&format!("unknown variable `{name}`")))?;
                r.var(i)
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(self.err("missing `)`"));
                }
                self.pos += 1;
                e
            }
            _ => return Err(self.err("expected a factor")),
        };
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some(Token::Num(e)) => {
                    let e = u32::try_from(*e).map_err(|_| self.err("exponent too large"))?;
                    self.pos += 1;
                    return Ok(r.pow(&base, e));
                }
                _ => return Err(self.err("expected exponent")),
            }
        }
        Ok(base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> PolyRing {
        PolyRing::standard(&Field::prime(2).unwrap(), &["x", "y"]).unwrap()
    }

    #[test]
    fn parse_and_format_round_trip() {
        let r = ring();
        let p = r.parse("y^3 + x^2*y").unwrap();
        assert_eq!(r.format(&p), "x^2*y + y^3");
        let q = r.parse("(x+y)^2").unwrap();
        assert_eq!(r.format(&q), "x^2 + y^2");
        assert_eq!(r.format(&r.parse("x - x").unwrap()), "0");
        assert!(r.parse("x + z").is_err());
        let r5 = PolyRing::standard(&Field::prime(5).unwrap(), &["x", "y"]).unwrap();
        assert_eq!(r5.format(&r5.parse("-x*y + 7").unwrap()), "4*x*y + 2");
    }

    #[test]
    fn grevlex_order() {
        let r = PolyRing::standard(&Field::prime(2).unwrap(), &["x", "y", "z"]).unwrap();
        let m = |s: &str| r.parse(s).unwrap().terms()[0].0.clone();
        assert_eq!(r.cmp_monomials(&m("x*z"), &m("y^2")), Ordering::Less);
        assert_eq!(r.cmp_monomials(&m("x^2"), &m("x*y")), Ordering::Greater);
        assert_eq!(r.cmp_monomials(&m("x"), &m("y^2")), Ordering::Less);
    }

    #[test]
    fn weighted_degrees() {
        let r = PolyRing::new(&Field::prime(2).unwrap(), &["x1", "x2"], &[2, 2], MonomialOrder::Grevlex).unwrap();
        let p = r.parse("x1*x2 + x2^2").unwrap();
        assert_eq!(p.degree(), Some(4));
        assert!(p.is_homogeneous());
        assert_eq!(r.monomials_of_degree(4).len(), 3);
        assert_eq!(r.monomials_of_degree(3).len(), 0);
    }
}
