//! Buchberger's algorithm for submodules of graded free modules, and the ideal
//! operations built on it: membership, syzygies, colon, saturation, radical
//! membership, Krull dimension, and containment of closed subsets of Proj.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Result;
use crate::field::{Elem, Field};
use crate::poly::{Monomial, Poly, PolyRing};
use crate::vector::{FreeModule, PolyVec};

/// A Gröbner basis of a submodule of a free module.
#[derive(Clone, Debug)]
pub struct GBasis {
    module: FreeModule,
    elems: Vec<PolyVec>,
    reduced: bool,
}

impl GBasis {
    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn elems(&self) -> &[PolyVec] {
        &self.elems
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn reduce(&self, v: &PolyVec) -> PolyVec {
        self.module.reduce(v, &self.elems)
    }

    pub fn contains(&self, v: &PolyVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// True when the basis generates the whole free module.
    pub fn is_everything(&self) -> bool {
        (0..self.module.rank()).all(|i| self.contains(&self.module.unit(i)))
    }

    /// The basis elements of a rank one module, as polynomials.
    pub fn polys(&self) -> Vec<Poly> {
        assert_eq!(self.module.rank(), 1);
        self.elems.iter().map(|v| self.module.to_components(v).remove(0)).collect()
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: i64,
}

struct Builder<'a> {
    module: &'a FreeModule,
    basis: Vec<PolyVec>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    ideal_like: bool,
}

impl Builder<'_> {
    fn lead(&self, i: usize) -> (u32, &Monomial) {
        let t = self.basis[i].leading().unwrap();
        (t.0, &t.1)
    }

    fn active_basis(&self) -> Vec<&PolyVec> {
        self.basis.iter().zip(&self.active).filter(|(_, a)| **a).map(|(b, _)| b).collect()
    }

    /// Gebauer-Möller update after appending a new element.
    fn insert(&mut self, h: PolyVec) {
        let ring = self.module.ring().clone();
        let h = self.module.monic(&h);
        let n = self.basis.len();
        let (hc, hm) = {
            let t = h.leading().unwrap();
            (t.0, t.1.clone())
        };
        self.basis.push(h);
        self.active.push(true);

        let mut candidates: Vec<Pair> = (0..n)
            .filter(|&i| self.active[i] && self.lead(i).0 == hc)
            .map(|i| {
                let lcm = ring.lcm(self.lead(i).1, &hm);
                let degree = self.module.term_degree(hc, &lcm);
                Pair { i, j: n, lcm, degree }
            })
            .collect();
        let ideal_like = self.ideal_like;
        let coprime = |p: &Pair, b: &Builder| ideal_like && b.lead(p.i).1.is_coprime(&hm);

        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = (!candidates.is_empty()).then(|| candidates.remove(0)) {
            let dominated = candidates.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime(&p, self) || !dominated {
                kept.push(p);
            }
        }
        kept.retain(|p| !coprime(p, self));

        let old = std::mem::take(&mut self.pairs);
        for p in old {
            let same_comp = self.lead(p.i).0 == hc;
            let remove = same_comp && hm.divides(&p.lcm) && {
                let li = ring.lcm(self.lead(p.i).1, &hm);
                let lj = ring.lcm(self.lead(p.j).1, &hm);
                li != p.lcm && lj != p.lcm
            };
            if !remove {
                self.pairs.push(p);
            }
        }
        self.pairs.extend(kept);

        for i in 0..n {
            if self.active[i] {
                let (c, m) = self.lead(i);
                if c == hc && hm.divides(m) {
                    self.active[i] = false;
                }
            }
        }
    }

    fn s_vector(&self, p: &Pair) -> PolyVec {
        let (ti, ci) = {
            let t = self.basis[p.i].leading().unwrap();
            (t.1.quotient_of(&p.lcm).unwrap(), t.2)
        };
        let (tj, cj) = {
            let t = self.basis[p.j].leading().unwrap();
            (t.1.quotient_of(&p.lcm).unwrap(), t.2)
        };
        let k = self.module.ring().field();
        let a = self.module.mul_term(&self.basis[p.i], &ti, cj);
        self.module.add_scaled(&a, k.neg(ci), &tj, &self.basis[p.j])
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
///
/// Pairs are selected by the normal strategy (smallest lcm degree first,
/// ties by index) and pruned with the Gebauer-Möller criteria; for ideals
/// Buchberger's coprime criterion is applied as well.
pub fn buchberger(module: &FreeModule, gens: &[PolyVec]) -> GBasis {
    let ideal_like = module.rank() == 1;
    let mut b = Builder { module, basis: Vec::new(), active: Vec::new(), pairs: Vec::new(), ideal_like };

    let mut inputs: Vec<(i64, usize)> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(i, g)| (module.max_degree(g).unwrap(), i))
        .collect();
    inputs.sort();
    let mut next_input = 0;

    loop {
        let best_pair = b
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, x), (_, y)| (x.degree, x.i, x.j).cmp(&(y.degree, y.i, y.j)))
            .map(|(idx, p)| (idx, p.degree));
        let take_input = match (inputs.get(next_input), best_pair) {
            (Some(&(d, _)), Some((_, pd))) => d <= pd,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        let candidate = if take_input {
            let g = &gens[inputs[next_input].1];
            next_input += 1;
            g.clone()
        } else {
            let p = b.pairs.swap_remove(best_pair.unwrap().0);
            b.s_vector(&p)
        };
        let divisors = b.active_basis();
        let h = module.reduce(&candidate, &divisors);
        if !h.is_zero() {
            b.insert(h);
        }
    }

    let mut elems: Vec<PolyVec> = b.active_basis().into_iter().cloned().collect();
    interreduce(module, &mut elems);
    GBasis { module: module.clone(), elems, reduced: true }
}

fn interreduce(module: &FreeModule, elems: &mut Vec<PolyVec>) {
    // drop elements whose leading term is divisible by another's
    let mut keep: Vec<PolyVec> = Vec::new();
    for (i, e) in elems.iter().enumerate() {
        let (c, m, _) = e.leading().unwrap();
        let redundant = elems.iter().enumerate().any(|(j, o)| {
            let (oc, om, _) = o.leading().unwrap();
            j != i && *oc == *c && om.divides(m) && (om != m || j < i)
        });
        if !redundant {
            keep.push(e.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<&PolyVec> = keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, o)| o).collect();
        let r = module.reduce(&keep[i], &others);
        out.push(module.monic(&r));
    }
    out.sort_by(|a, b| {
        let (ac, am, _) = a.leading().unwrap();
        let (bc, bm, _) = b.leading().unwrap();
        module.cmp_terms(*ac, am, *bc, bm)
    });
    *elems = out;
}

/// Syzygies of `gens`: generators of `{a : Σ a_i gens_i = 0}` inside the free
/// module whose `i`-th generator has the degree of `gens_i`.
///
/// Computed from a Gröbner basis of the graph module `{(Σ a_i g_i, a)}` under a
/// block order that eliminates the first block.
pub fn syzygies(module: &FreeModule, gens: &[PolyVec]) -> (FreeModule, Vec<PolyVec>) {
    let degs: Vec<i64> = gens.iter().map(|g| module.max_degree(g).unwrap_or(0)).collect();
    syzygies_with_degrees(module, gens, degs)
}

/// As [`syzygies`], with the degrees of the generators given explicitly (so
/// that zero generators keep their declared degree).
pub fn syzygies_with_degrees(module: &FreeModule, gens: &[PolyVec], degs: Vec<i64>) -> (FreeModule, Vec<PolyVec>) {
    assert_eq!(gens.len(), degs.len());
    let r = module.rank();
    let s = gens.len();
    let target = FreeModule::new(module.ring(), degs.clone());
    let mut shifts = module.shifts().to_vec();
    shifts.extend_from_slice(&degs);
    let mut blocks = vec![0; r];
    blocks.extend(std::iter::repeat_n(1, s));
    let aug = FreeModule::new(module.ring(), shifts).with_blocks(blocks);
    let aug_gens: Vec<PolyVec> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut terms: Vec<_> = g.terms().to_vec();
            terms.push(((r + i) as u32, module.ring().one_monomial(), 1));
            aug.from_terms(terms)
        })
        .collect();
    let gb = buchberger(&aug, &aug_gens);
    let syz = gb
        .elems()
        .iter()
        .filter(|e| e.leading().is_some_and(|t| t.0 as usize >= r))
        .map(|e| aug.project(e, r..r + s, &target))
        .collect();
    (target, syz)
}

/// Expresses elements of an ideal as combinations of its original generators.
#[derive(Clone, Debug)]
pub struct TransformBasis {
    aug: FreeModule,
    gb: GBasis,
    ngens: usize,
}

impl TransformBasis {
    pub fn new(ring: &PolyRing, gens: &[Poly]) -> Self {
        let ngens = gens.len();
        let mut shifts = vec![0i64];
        shifts.extend(gens.iter().map(|g| g.degree().unwrap_or(0) as i64));
        let mut blocks = vec![0];
        blocks.extend(std::iter::repeat_n(1, ngens));
        let aug = FreeModule::new(ring, shifts).with_blocks(blocks);
        let aug_gens: Vec<PolyVec> = gens
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let mut comps = vec![g.clone()];
                comps.extend((0..ngens).map(|j| if i == j { ring.one() } else { ring.zero() }));
                aug.from_components(&comps)
            })
            .collect();
        let gb = buchberger(&aug, &aug_gens);
        TransformBasis { aug, gb, ngens }
    }

    /// Coefficients `c` with `h = Σ c_j gens_j`, or `None` if `h` is not in the ideal.
    pub fn express(&self, h: &Poly) -> Option<Vec<Poly>> {
        let ring = self.aug.ring();
        let mut comps = vec![h.clone()];
        comps.extend((0..self.ngens).map(|_| ring.zero()));
        let v = self.aug.from_components(&comps);
        let r = self.gb.reduce(&v);
        if r.terms().iter().any(|t| t.0 == 0) {
            return None;
        }
        let parts = self.aug.to_components(&r);
        Some(parts[1..].iter().map(|p| ring.neg(p)).collect())
    }
}

// ---------------------------------------------------------------------------
// Ideals

fn as_vecs(module: &FreeModule, gens: &[Poly]) -> Vec<PolyVec> {
    gens.iter().map(|g| module.from_components(std::slice::from_ref(g))).collect()
}

/// Reduced Gröbner basis of an ideal.
pub fn ideal_basis(ring: &PolyRing, gens: &[Poly]) -> GBasis {
    let m = FreeModule::ideal(ring);
    buchberger(&m, &as_vecs(&m, gens))
}

pub fn ideal_member(g: &Poly, basis: &GBasis) -> bool {
    let v = basis.module().from_components(std::slice::from_ref(g));
    basis.contains(&v)
}

/// Remainder of `g` on division by the basis.
pub fn normal_form(g: &Poly, basis: &GBasis) -> Poly {
    let v = basis.module().from_components(std::slice::from_ref(g));
    basis.module().to_components(&basis.reduce(&v)).remove(0)
}

pub fn is_unit_ideal(basis: &GBasis) -> bool {
    basis.elems().iter().any(|e| e.leading().is_some_and(|t| t.1.is_one()))
}

pub fn ideals_equal(ring: &PolyRing, a: &[Poly], b: &[Poly]) -> bool {
    ideal_basis(ring, a).polys() == ideal_basis(ring, b).polys()
}

/// `g ∈ rad(I)`, decided by `1 ∈ I + (1 - t g)` in the ring with an extra variable `t`.
pub fn radical_member(ring: &PolyRing, g: &Poly, ideal: &[Poly]) -> Result<bool> {
    if g.is_zero() {
        return Ok(true);
    }
    let ext = ring.extended(&["rabinowitsch_t"], &[1])?;
    let lift = |p: &Poly| -> Poly {
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e.push(0);
                (ext.monomial(&e), *c)
            })
            .collect();
        ext.from_terms(terms)
    };
    let mut gens: Vec<Poly> = ideal.iter().map(lift).collect();
    let t = ext.var(ring.nvars());
    gens.push(ext.sub(&ext.one(), &ext.mul(&t, &lift(g))));
    Ok(is_unit_ideal(&ideal_basis(&ext, &gens)))
}

/// `(I : g) = {a : a g ∈ I}`.
pub fn colon_element(ring: &PolyRing, ideal: &[Poly], g: &Poly) -> Vec<Poly> {
    if g.is_zero() {
        return vec![ring.one()];
    }
    let m = FreeModule::ideal(ring);
    let mut gens = vec![m.from_components(std::slice::from_ref(g))];
    gens.extend(as_vecs(&m, ideal));
    let (s, syz) = syzygies(&m, &gens);
    let firsts: Vec<Poly> = syz.iter().map(|v| s.to_components(v).remove(0)).collect();
    ideal_basis(ring, &firsts).polys()
}

pub fn intersect(ring: &PolyRing, a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let m = FreeModule::new(ring, vec![0, 0]);
    let mut gens = vec![m.from_components(&[ring.one(), ring.one()])];
    gens.extend(a.iter().map(|x| m.from_components(&[x.clone(), ring.zero()])));
    gens.extend(b.iter().map(|x| m.from_components(&[ring.zero(), x.clone()])));
    let (s, syz) = syzygies(&m, &gens);
    let firsts: Vec<Poly> = syz.iter().map(|v| s.to_components(v).remove(0)).collect();
    ideal_basis(ring, &firsts).polys()
}

/// `(I : J)`.
pub fn colon(ring: &PolyRing, ideal: &[Poly], by: &[Poly]) -> Vec<Poly> {
    let mut acc: Option<Vec<Poly>> = None;
    for g in by {
        let c = colon_element(ring, ideal, g);
        acc = Some(match acc {
            None => c,
            Some(a) => intersect(ring, &a, &c),
        });
    }
    acc.unwrap_or_else(|| vec![ring.one()])
}

/// `(I : J^∞)` by iterated colon, stopping when two consecutive iterates
/// agree. Returns the reduced basis and the number of colon steps taken.
pub fn saturate(ring: &PolyRing, ideal: &[Poly], by: &[Poly]) -> (Vec<Poly>, usize) {
    let mut cur = ideal_basis(ring, ideal).polys();
    let mut steps = 0;
    loop {
        let next = colon(ring, &cur, by);
        steps += 1;
        if next == cur {
            return (cur, steps);
        }
        cur = next;
    }
}

/// The irrelevant ideal generated by all variables.
pub fn irrelevant_ideal(ring: &PolyRing) -> Vec<Poly> {
    (0..ring.nvars()).map(|i| ring.var(i)).collect()
}

/// Dimension of `V(I)` as an affine cone, from maximal independent sets of
/// the leading-term ideal; `-1` for the unit ideal.
pub fn krull_dimension(ring: &PolyRing, ideal: &[Poly]) -> i64 {
    let gb = ideal_basis(ring, ideal);
    if is_unit_ideal(&gb) {
        return -1;
    }
    let n = ring.nvars();
    let supports: Vec<u64> = gb
        .elems()
        .iter()
        .map(|e| {
            let m = &e.leading().unwrap().1;
            m.exponents().iter().enumerate().filter(|(_, &x)| x > 0).fold(0u64, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    let mut best = 0;
    for set in 0u64..(1 << n) {
        let size = set.count_ones() as i64;
        if size > best && supports.iter().all(|&s| s & !set != 0) {
            best = size;
        }
    }
    best
}

// ---------------------------------------------------------------------------
// Cones

/// A homogeneous ideal of the operator ring, standing for the closed cone it
/// defines (and the closed subset of Proj).
#[derive(Clone, PartialEq, Eq)]
pub struct ConeIdeal {
    ring: PolyRing,
    gens: Vec<Poly>,
    saturated: bool,
}

impl fmt::Debug for ConeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.format_gens().join(", "))?;
        if self.saturated {
            write!(f, " saturated")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProjRelation {
    Equal,
    /// The first closed set is strictly contained in the second.
    Subset,
    /// The second closed set is strictly contained in the first.
    Superset,
    Incomparable,
}

impl ProjRelation {
    pub fn name(&self) -> &'static str {
        match self {
            ProjRelation::Equal => "equal",
            ProjRelation::Subset => "subset",
            ProjRelation::Superset => "superset",
            ProjRelation::Incomparable => "incomparable",
        }
    }
}

impl ConeIdeal {
    /// The ideal generated by `gens` (stored as its reduced Gröbner basis).
    pub fn new(ring: &PolyRing, gens: &[Poly]) -> Self {
        ConeIdeal { ring: ring.clone(), gens: ideal_basis(ring, gens).polys(), saturated: false }
    }

    pub fn parse(ring: &PolyRing, gens: &[&str]) -> Result<Self> {
        let polys = gens.iter().map(|g| ring.parse(g)).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(ring, &polys))
    }

    pub fn whole(ring: &PolyRing) -> Self {
        Self::new(ring, &[])
    }

    pub fn unit(ring: &PolyRing) -> Self {
        ConeIdeal { ring: ring.clone(), gens: vec![ring.one()], saturated: true }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.as_constant().is_some_and(|c| c != 0))
    }

    /// Saturation with respect to the irrelevant ideal.
    pub fn saturate(&self) -> ConeIdeal {
        if self.saturated {
            return self.clone();
        }
        let (gens, _) = saturate(&self.ring, &self.gens, &irrelevant_ideal(&self.ring));
        ConeIdeal { ring: self.ring.clone(), gens, saturated: true }
    }

    /// `V(I) = ∅` in Proj.
    pub fn is_empty_in_proj(&self) -> bool {
        self.saturate().is_unit()
    }

    /// Ideal sum; the closed set is the intersection.
    pub fn sum(&self, other: &ConeIdeal) -> ConeIdeal {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        ConeIdeal::new(&self.ring, &g)
    }

    /// Ideal intersection; the closed set is the union.
    pub fn intersection(&self, other: &ConeIdeal) -> ConeIdeal {
        ConeIdeal::new(&self.ring, &intersect(&self.ring, &self.gens, &other.gens))
    }

    pub fn contains_poly(&self, g: &Poly) -> bool {
        ideal_member(g, &ideal_basis(&self.ring, &self.gens))
    }

    /// Whether the point (coordinates in an extension `field`) lies on the cone.
    pub fn vanishes_at(&self, field: &Field, point: &[Elem]) -> bool {
        self.gens.iter().all(|g| self.ring.eval_in(g, field, point) == 0)
    }

    pub fn format_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.ring.format(g)).collect()
    }

    /// `V(self) ⊆ V(other)` in Proj.
    pub fn proj_subset_of(&self, other: &ConeIdeal) -> Result<bool> {
        let mine = self.saturate();
        let theirs = other.saturate();
        for g in &theirs.gens {
            if !radical_member(&self.ring, g, &mine.gens)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Compares the closed subsets of Proj defined by two cone ideals.
pub fn proj_compare(x: &ConeIdeal, y: &ConeIdeal) -> Result<ProjRelation> {
    let xy = x.proj_subset_of(y)?;
    let yx = y.proj_subset_of(x)?;
    Ok(match (xy, yx) {
        (true, true) => ProjRelation::Equal,
        (true, false) => ProjRelation::Subset,
        (false, true) => ProjRelation::Superset,
        (false, false) => ProjRelation::Incomparable,
    })
}

/// Rational points of `P^{n-1}` over `field`, normalized so the first nonzero
/// coordinate is one, in increasing code order.
pub fn projective_points(field: &Field, n: usize) -> Vec<Vec<Elem>> {
    let q = field.order() as u64;
    let mut out = BTreeSet::new();
    for lead in 0..n {
        let free = n - lead - 1;
        for code in 0..q.pow(free as u32) {
            let mut p = vec![0; n];
            p[lead] = 1;
            let mut c = code;
            for slot in p.iter_mut().skip(lead + 1) {
                *slot = (c % q) as Elem;
                c /= q;
            }
            out.insert(p);
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;

    fn f2xy() -> PolyRing {
        PolyRing::standard(&Field::prime(2).unwrap(), &["x", "y"]).unwrap()
    }

    fn chi() -> PolyRing {
        PolyRing::new(&Field::prime(2).unwrap(), &["x1", "x2"], &[2, 2], MonomialOrder::Grevlex).unwrap()
    }

    fn ps(r: &PolyRing, s: &[&str]) -> Vec<Poly> {
        s.iter().map(|x| r.parse(x).unwrap()).collect()
    }

    fn fmt(r: &PolyRing, v: &[Poly]) -> Vec<String> {
        v.iter().map(|p| r.format(p)).collect()
    }

    #[test]
    fn buchberger_examples() {
        let c = chi();
        assert_eq!(fmt(&c, &ideal_basis(&c, &ps(&c, &["x1^2", "x1*x2"])).polys()), vec!["x1*x2", "x1^2"]);
        let r = f2xy();
        assert_eq!(fmt(&r, &ideal_basis(&r, &ps(&r, &["x^2", "y^2", "x^2+y^2"])).polys()), vec!["y^2", "x^2"]);
        let gb = ideal_basis(&r, &ps(&r, &["x*y + y^2", "y^2"]));
        assert_eq!(fmt(&r, &gb.polys()), vec!["y^2", "x*y"]);
        for g in ps(&r, &["x*y + y^2", "y^2"]) {
            assert!(ideal_member(&g, &gb));
        }
    }

    #[test]
    fn membership_examples() {
        let r = f2xy();
        let gb = ideal_basis(&r, &ps(&r, &["x^2", "y^2"]));
        assert!(ideal_member(&r.parse("x^2+y^2").unwrap(), &gb));
        assert!(!ideal_member(&r.parse("x*y").unwrap(), &gb));
        assert!(ideal_member(&r.zero(), &gb));
    }

    #[test]
    fn radical_examples() {
        let c = chi();
        assert!(radical_member(&c, &c.parse("x1").unwrap(), &ps(&c, &["x1^2"])).unwrap());
        assert!(!radical_member(&c, &c.parse("x2").unwrap(), &ps(&c, &["x1"])).unwrap());
        let i = ps(&c, &["(x1+x2)^3", "x1*x2*(x1+x2)"]);
        assert!(radical_member(&c, &c.parse("x1+x2").unwrap(), &i).unwrap());
    }

    #[test]
    fn saturation_examples() {
        let c = chi();
        let irr = irrelevant_ideal(&c);
        let (s, steps) = saturate(&c, &ps(&c, &["x1*x2"]), &irr);
        assert_eq!(fmt(&c, &s), vec!["x1*x2"]);
        assert_eq!(steps, 1);
        let (s, _) = saturate(&c, &ps(&c, &["x1^2", "x1*x2"]), &irr);
        assert_eq!(fmt(&c, &s), vec!["x1"]);
        let (s, _) = saturate(&c, &[c.one()], &irr);
        assert_eq!(fmt(&c, &s), vec!["1"]);
    }

    #[test]
    fn syzygy_examples() {
        let r = f2xy();
        let m = FreeModule::ideal(&r);
        let gens = as_vecs(&m, &ps(&r, &["x", "y"]));
        let (s, syz) = syzygies(&m, &gens);
        assert_eq!(syz.len(), 1);
        assert_eq!(fmt(&r, &s.to_components(&syz[0])), vec!["y", "x"]);
        let gens = as_vecs(&m, &ps(&r, &["x^2", "y^2"]));
        let (s, syz) = syzygies(&m, &gens);
        assert_eq!(syz.len(), 1);
        assert_eq!(fmt(&r, &s.to_components(&syz[0])), vec!["y^2", "x^2"]);
        let gens = as_vecs(&m, &ps(&r, &["x", "x"]));
        let (s, syz) = syzygies(&m, &gens);
        assert!(syz.iter().any(|v| fmt(&r, &s.to_components(v)) == vec!["1", "1"]));
    }

    #[test]
    fn krull_examples() {
        let r = f2xy();
        assert_eq!(krull_dimension(&r, &ps(&r, &["x^2", "y^2"])), 0);
        let r3 = PolyRing::standard(&Field::prime(2).unwrap(), &["x", "y", "z"]).unwrap();
        assert_eq!(krull_dimension(&r3, &ps(&r3, &["x^2", "y^2"])), 1);
        let c = chi();
        assert_eq!(krull_dimension(&c, &[]), 2);
        assert_eq!(krull_dimension(&c, &[c.one()]), -1);
    }

    #[test]
    fn proj_compare_examples() {
        let c = chi();
        let cone = |s: &[&str]| ConeIdeal::parse(&c, s).unwrap();
        assert_eq!(proj_compare(&cone(&["x2"]), &cone(&["x2^2", "x1*x2"])).unwrap(), ProjRelation::Equal);
        assert_eq!(proj_compare(&cone(&["x1", "x2"]), &cone(&[])).unwrap(), ProjRelation::Subset);
        assert_eq!(proj_compare(&cone(&["x1"]), &cone(&["x2"])).unwrap(), ProjRelation::Incomparable);
        assert!(cone(&["x1", "x2"]).is_empty_in_proj());
    }

    #[test]
    fn transform_basis_expresses_members() {
        let r = f2xy();
        let f = ps(&r, &["x^2", "x*y + y^2"]);
        let t = TransformBasis::new(&r, &f);
        let h = r.parse("x^3 + x*y^2 + y^3").unwrap();
        let coeffs = t.express(&h).expect("member");
        let back = r.add(&r.mul(&coeffs[0], &f[0]), &r.mul(&coeffs[1], &f[1]));
        assert_eq!(back, h);
        assert!(t.express(&r.parse("x").unwrap()).is_none());
    }

    #[test]
    fn projective_line_points() {
        let f4 = Field::extension(2, 2).unwrap();
        assert_eq!(projective_points(&Field::prime(2).unwrap(), 2).len(), 3);
        assert_eq!(projective_points(&f4, 2).len(), 5);
        assert_eq!(projective_points(&f4, 3).len(), 21);
    }
}
