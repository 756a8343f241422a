//! Elements of graded free modules `⊕ R(-s_i)` over a polynomial ring, module
//! term orders, and multivariate division with quotient tracking.

use std::borrow::Borrow;
use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::Elem;
use crate::poly::{Monomial, Poly, PolyRing};

/// One term `coeff * mono * e_comp`.
pub type VTerm = (u32, Monomial, Elem);

/// A vector of polynomials stored as a sorted term list, largest term first
/// with respect to the order of the [`FreeModule`] it belongs to.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PolyVec {
    terms: Vec<VTerm>,
}

impl PolyVec {
    pub fn terms(&self) -> &[VTerm] {
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

    pub fn leading(&self) -> Option<&VTerm> {
        self.terms.first()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ModuleOrderKind {
    /// Compare shifted degree and monomial first, component last.
    #[default]
    TermOverPosition,
    /// Compare component first (lower index is larger).
    PositionOverTerm,
}

/// A graded free module with a term order.
///
/// Components may be grouped into blocks: every term in block `b` is larger than
/// every term in block `b + 1`. This is the elimination order used for
/// syzygy and transformation bookkeeping.
#[derive(Clone, Debug)]
pub struct FreeModule {
    ring: PolyRing,
    shifts: Vec<i64>,
    blocks: Vec<u32>,
    kind: ModuleOrderKind,
}

impl FreeModule {
    pub fn new(ring: &PolyRing, shifts: Vec<i64>) -> Self {
        let blocks = vec![0; shifts.len()];
        FreeModule { ring: ring.clone(), shifts, blocks, kind: ModuleOrderKind::TermOverPosition }
    }

    /// The ring itself as a rank one module.
    pub fn ideal(ring: &PolyRing) -> Self {
        Self::new(ring, vec![0])
    }

    pub fn with_blocks(mut self, blocks: Vec<u32>) -> Self {
        assert_eq!(blocks.len(), self.shifts.len());
        self.blocks = blocks;
        self
    }

    pub fn with_kind(mut self, kind: ModuleOrderKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn block(&self, comp: u32) -> u32 {
        self.blocks[comp as usize]
    }

    pub fn term_degree(&self, comp: u32, m: &Monomial) -> i64 {
        m.degree() as i64 + self.shifts[comp as usize]
    }

    pub fn cmp_terms(&self, c1: u32, m1: &Monomial, c2: u32, m2: &Monomial) -> Ordering {
        let (b1, b2) = (self.blocks[c1 as usize], self.blocks[c2 as usize]);
        if b1 != b2 {
            return b2.cmp(&b1);
        }
        match self.kind {
            ModuleOrderKind::TermOverPosition => self
                .term_degree(c1, m1)
                .cmp(&self.term_degree(c2, m2))
                .then_with(|| self.ring.cmp_monomials(m1, m2))
                .then_with(|| c2.cmp(&c1)),
            ModuleOrderKind::PositionOverTerm => c2.cmp(&c1).then_with(|| self.ring.cmp_monomials(m1, m2)),
        }
    }

    pub fn zero(&self) -> PolyVec {
        PolyVec::default()
    }

    pub fn unit(&self, i: usize) -> PolyVec {
        PolyVec { terms: vec![(i as u32, self.ring.one_monomial(), 1)] }
    }

    pub fn from_terms(&self, mut terms: Vec<VTerm>) -> PolyVec {
        let k = self.ring.field();
        terms.sort_by(|a, b| self.cmp_terms(b.0, &b.1, a.0, &a.1));
        let mut out: Vec<VTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(l) if l.0 == t.0 && l.1 == t.1 => l.2 = k.add(l.2, t.2),
                _ => out.push(t),
            }
        }
        out.retain(|t| t.2 != 0);
        PolyVec { terms: out }
    }

    pub fn from_components(&self, comps: &[Poly]) -> PolyVec {
        assert!(comps.len() <= self.rank(), "too many components");
        let terms = comps
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.terms().iter().map(move |(m, c)| (i as u32, m.clone(), *c)))
            .collect();
        self.from_terms(terms)
    }

    pub fn to_components(&self, v: &PolyVec) -> Vec<Poly> {
        let mut buckets: Vec<Vec<(Monomial, Elem)>> = vec![Vec::new(); self.rank()];
        for (c, m, x) in &v.terms {
            buckets[*c as usize].push((m.clone(), *x));
        }
        buckets.into_iter().map(|t| self.ring.from_terms(t)).collect()
    }

    /// Keeps only the components in `range`, renumbered from zero, as a vector
    /// in `target`.
    pub fn project(&self, v: &PolyVec, range: std::ops::Range<usize>, target: &FreeModule) -> PolyVec {
        let terms = v
            .terms
            .iter()
            .filter(|t| range.contains(&(t.0 as usize)))
            .map(|(c, m, x)| (*c - range.start as u32, m.clone(), *x))
            .collect();
        target.from_terms(terms)
    }

    /// Degree of a homogeneous vector (`None` for zero).
    pub fn degree(&self, v: &PolyVec) -> Option<i64> {
        v.terms.first().map(|(c, m, _)| self.term_degree(*c, m))
    }

    pub fn max_degree(&self, v: &PolyVec) -> Option<i64> {
        v.terms.iter().map(|(c, m, _)| self.term_degree(*c, m)).max()
    }

    pub fn is_homogeneous(&self, v: &PolyVec) -> bool {
        v.terms.windows(2).all(|w| self.term_degree(w[0].0, &w[0].1) == self.term_degree(w[1].0, &w[1].1))
    }

    pub fn scale(&self, v: &PolyVec, c: Elem) -> PolyVec {
        if c == 0 {
            return PolyVec::default();
        }
        let k = self.ring.field();
        PolyVec { terms: v.terms.iter().map(|(i, m, x)| (*i, m.clone(), k.mul(*x, c))).collect() }
    }

    pub fn monic(&self, v: &PolyVec) -> PolyVec {
        match v.leading() {
            Some(&(_, _, c)) if c != 1 => self.scale(v, self.ring.field().inv(c)),
            _ => v.clone(),
        }
    }

    pub fn mul_term(&self, v: &PolyVec, m: &Monomial, c: Elem) -> PolyVec {
        if c == 0 {
            return PolyVec::default();
        }
        let k = self.ring.field();
        PolyVec { terms: v.terms.iter().map(|(i, vm, x)| (*i, vm.mul(m), k.mul(*x, c))).collect() }
    }

    pub fn mul_poly(&self, v: &PolyVec, p: &Poly) -> PolyVec {
        let mut acc = PolyVec::default();
        for (m, c) in p.terms() {
            acc = self.add_scaled(&acc, *c, m, v);
        }
        acc
    }

    pub fn add(&self, a: &PolyVec, b: &PolyVec) -> PolyVec {
        self.add_scaled(a, 1, &self.ring.one_monomial(), b)
    }

    pub fn sub(&self, a: &PolyVec, b: &PolyVec) -> PolyVec {
        self.add_scaled(a, self.ring.field().neg(1), &self.ring.one_monomial(), b)
    }

    /// `a + c * m * b`.
    pub fn add_scaled(&self, a: &PolyVec, c: Elem, m: &Monomial, b: &PolyVec) -> PolyVec {
        self.add_scaled_from(a, 0, c, m, b)
    }

    /// `a + c * m * b` where the caller guarantees that every term of `m * b`
    /// is smaller than `a.terms[start - 1]`, so the prefix is copied verbatim.
    fn add_scaled_from(&self, a: &PolyVec, start: usize, c: Elem, m: &Monomial, b: &PolyVec) -> PolyVec {
        let k = self.ring.field();
        if c == 0 || b.is_zero() {
            return a.clone();
        }
        let mut out = Vec::with_capacity(a.len() + b.len());
        out.extend_from_slice(&a.terms[..start]);
        let mut i = start;
        let mut bi = b.terms.iter().map(|(bc, bm, bx)| (*bc, bm.mul(m), k.mul(*bx, c))).peekable();
        loop {
            let ord = match (a.terms.get(i), bi.peek()) {
                (Some(x), Some(y)) => self.cmp_terms(x.0, &x.1, y.0, &y.1),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => break,
            };
            match ord {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => out.push(bi.next().unwrap()),
                Ordering::Equal => {
                    let y = bi.next().unwrap();
                    let s = k.add(a.terms[i].2, y.2);
                    if s != 0 {
                        out.push((y.0, y.1, s));
                    }
                    i += 1;
                }
            }
        }
        PolyVec { terms: out }
    }

    /// Full multivariate division: returns quotients `q` and remainder `r`
    /// with `g = Σ q_i d_i + r` and no term of `r` divisible by a leading term
    /// of a divisor. The first divisor (in list order) whose leading term
    /// divides is always used.
    pub fn divide<D: Borrow<PolyVec>>(&self, g: &PolyVec, divisors: &[D]) -> Result<(Vec<Poly>, PolyVec)> {
        if divisors.iter().any(|d| d.borrow().is_zero()) {
            return Err(Error::Input("zero divisor in division".into()));
        }
        let mut q: Vec<Vec<(Monomial, Elem)>> = vec![Vec::new(); divisors.len()];
        let r = self.reduce_impl(g, divisors, true, Some(&mut q));
        let qs = q.into_iter().map(|t| self.ring.from_terms(t)).collect();
        Ok((qs, r))
    }

    /// Remainder of full division (no quotient bookkeeping).
    pub fn reduce<D: Borrow<PolyVec>>(&self, g: &PolyVec, divisors: &[D]) -> PolyVec {
        self.reduce_impl(g, divisors, true, None)
    }

    /// Reduces only until the leading term is irreducible.
    pub fn top_reduce<D: Borrow<PolyVec>>(&self, g: &PolyVec, divisors: &[D]) -> PolyVec {
        self.reduce_impl(g, divisors, false, None)
    }

    fn reduce_impl<D: Borrow<PolyVec>>(
        &self,
        g: &PolyVec,
        divisors: &[D],
        full: bool,
        mut quotients: Option<&mut Vec<Vec<(Monomial, Elem)>>>,
    ) -> PolyVec {
        let k = self.ring.field();
        let mut p = g.clone();
        let mut start = 0;
        while start < p.terms.len() {
            let (c, m, x) = p.terms[start].clone();
            let hit = divisors.iter().enumerate().find_map(|(i, d)| {
                let (dc, dm, dx) = &d.borrow().terms[0];
                if *dc == c {
                    dm.quotient_of(&m).map(|t| (i, t, *dx))
                } else {
                    None
                }
            });
            match hit {
                Some((i, t, dx)) => {
                    let f = k.div(x, dx);
                    p = self.add_scaled_from(&p, start, k.neg(f), &t, divisors[i].borrow());
                    if let Some(q) = quotients.as_deref_mut() {
                        q[i].push((t, f));
                    }
                }
                None => {
                    if !full {
                        break;
                    }
                    start += 1;
                }
            }
        }
        p
    }

    pub fn format(&self, v: &PolyVec) -> String {
        let comps = self.to_components(v);
        let parts: Vec<String> = comps.iter().map(|p| self.ring.format(p)).collect();
        format!("[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn division_examples() {
        let r = PolyRing::standard(&Field::prime(2).unwrap(), &["x", "y"]).unwrap();
        let m = FreeModule::ideal(&r);
        let v = |s: &str| m.from_components(&[r.parse(s).unwrap()]);
        let (q, rem) = m.divide(&v("x^2"), &[v("x^2")]).unwrap();
        assert_eq!(q, vec![r.one()]);
        assert!(rem.is_zero());
        let (q, rem) = m.divide(&v("x^2*y + y^3"), &[v("x^2"), v("y^2")]).unwrap();
        assert_eq!(q, vec![r.parse("y").unwrap(), r.parse("y").unwrap()]);
        assert!(rem.is_zero());
        let (q, rem) = m.divide(&v("x*y"), &[v("x^2"), v("y^2")]).unwrap();
        assert!(q.iter().all(|p| p.is_zero()));
        assert_eq!(rem, v("x*y"));
    }

    #[test]
    fn block_order_puts_first_block_on_top() {
        let r = PolyRing::standard(&Field::prime(2).unwrap(), &["x", "y"]).unwrap();
        let f = FreeModule::new(&r, vec![0, 5]).with_blocks(vec![0, 1]);
        let v = f.from_components(&[r.parse("x").unwrap(), r.parse("y^3").unwrap()]);
        assert_eq!(v.leading().unwrap().0, 0);
    }
}
