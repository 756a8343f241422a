//! Bounded-below complexes of graded free `R`-modules: presentations,
//! minimization, minimal free resolutions, mapping cones, homology and
//! syzygy modules.
//!
//! All matrices are homogeneous of degree zero: the entry in row `r` and
//! column `c` has degree `source[c] - target[r]` (or is zero). Entries are kept
//! as normal forms modulo `(f)` unless stated otherwise.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Elem;
use crate::groebner::syzygies_with_degrees;
use crate::linalg::{FMatrix, Subspace};
use crate::poly::Poly;
use crate::ring::{DegreeBasis, RingSetup};
use crate::vector::FreeModule;

/// A graded free module `⊕ R(-d_i)`, recorded by its generator degrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GradedFree {
    degrees: Vec<i64>,
}

impl GradedFree {
    pub fn new(degrees: Vec<i64>) -> Self {
        GradedFree { degrees }
    }

    pub fn zero() -> Self {
        GradedFree::default()
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn twist(&self, s: i64) -> GradedFree {
        GradedFree { degrees: self.degrees.iter().map(|d| d + s).collect() }
    }

    pub fn direct_sum(&self, other: &GradedFree) -> GradedFree {
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(&other.degrees);
        GradedFree { degrees }
    }
}

/// A homogeneous map between graded free modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    target: Vec<i64>,
    source: Vec<i64>,
    data: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zero(target: &[i64], source: &[i64]) -> Self {
        PolyMatrix { target: target.to_vec(), source: source.to_vec(), data: vec![Poly::default(); target.len() * source.len()] }
    }

    pub fn identity(ring: &RingSetup, degrees: &[i64]) -> Self {
        let mut m = Self::zero(degrees, degrees);
        for i in 0..degrees.len() {
            m.set(i, i, ring.q().one());
        }
        m
    }

    pub fn from_columns(target: &[i64], source: &[i64], columns: &[Vec<Poly>]) -> Self {
        assert_eq!(columns.len(), source.len());
        let mut m = Self::zero(target, source);
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), target.len());
            for (r, p) in col.iter().enumerate() {
                m.set(r, c, p.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.target.len()
    }

    pub fn cols(&self) -> usize {
        self.source.len()
    }

    pub fn target(&self) -> &[i64] {
        &self.target
    }

    pub fn source(&self) -> &[i64] {
        &self.source
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.data[r * self.source.len() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Poly) {
        let n = self.source.len();
        self.data[r * n + c] = p;
    }

    pub fn column(&self, c: usize) -> Vec<Poly> {
        (0..self.rows()).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Poly>> {
        (0..self.cols()).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    pub fn entries(&self) -> &[Poly] {
        &self.data
    }

    /// The `R`-dual `Hom(-, R)`: transposed, with negated degrees.
    pub fn dual(&self) -> PolyMatrix {
        let target: Vec<i64> = self.source.iter().map(|d| -d).collect();
        let source: Vec<i64> = self.target.iter().map(|d| -d).collect();
        let mut m = Self::zero(&target, &source);
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                m.set(c, r, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn map_entries(&self, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        PolyMatrix { target: self.target.clone(), source: self.source.clone(), data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, ring: &RingSetup, c: Elem) -> PolyMatrix {
        self.map_entries(|p| ring.q().scale(p, c))
    }

    pub fn twist(&self, s: i64) -> PolyMatrix {
        PolyMatrix {
            target: self.target.iter().map(|d| d + s).collect(),
            source: self.source.iter().map(|d| d + s).collect(),
            data: self.data.clone(),
        }
    }

    /// Reduction modulo the maximal ideal: constant terms.
    pub fn constant_part(&self, ring: &RingSetup) -> FMatrix {
        let mut m = FMatrix::zeros(ring.field(), self.rows(), self.cols());
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                m.set(r, c, self.get(r, c).constant_term());
            }
        }
        m
    }

    /// Whether every entry lies in the irrelevant maximal ideal.
    pub fn is_minimal(&self) -> bool {
        self.data.iter().all(|p| p.constant_term() == 0)
    }

    pub fn check_homogeneous(&self) -> Result<()> {
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                let p = self.get(r, c);
                if p.is_zero() {
                    continue;
                }
                let want = self.source[c] - self.target[r];
                if !p.is_homogeneous() || p.degree().unwrap() as i64 != want {
                    return Err(Error::NonHomogeneous(format!(
                        "matrix entry ({r}, {c}) should have degree {want}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.target, other.target);
        let mut source = self.source.clone();
        source.extend_from_slice(&other.source);
        let mut cols = self.columns();
        cols.extend(other.columns());
        PolyMatrix::from_columns(&self.target, &source, &cols)
    }

    /// `[[a, b], [c, d]]`, with target `a.target ⊕ c.target` and source `a.source ⊕ b.source`.
    pub fn block(a: &PolyMatrix, b: &PolyMatrix, c: &PolyMatrix, d: &PolyMatrix) -> PolyMatrix {
        assert_eq!(a.target, b.target);
        assert_eq!(c.target, d.target);
        assert_eq!(a.source, c.source);
        assert_eq!(b.source, d.source);
        let mut target = a.target.clone();
        target.extend_from_slice(&c.target);
        let mut source = a.source.clone();
        source.extend_from_slice(&b.source);
        let mut m = PolyMatrix::zero(&target, &source);
        let (ra, ca) = (a.rows(), a.cols());
        for (blk, r0, c0) in [(a, 0, 0), (b, 0, ca), (c, ra, 0), (d, ra, ca)] {
            for r in 0..blk.rows() {
                for cc in 0..blk.cols() {
                    m.set(r0 + r, c0 + cc, blk.get(r, cc).clone());
                }
            }
        }
        m
    }

    pub fn select_rows(&self, rows: std::ops::Range<usize>) -> PolyMatrix {
        let target = self.target[rows.clone()].to_vec();
        let cols: Vec<Vec<Poly>> = self.columns().into_iter().map(|c| c[rows.clone()].to_vec()).collect();
        PolyMatrix::from_columns(&target, &self.source, &cols)
    }

    pub fn format(&self, ring: &RingSetup) -> Vec<Vec<String>> {
        self.columns().iter().map(|c| c.iter().map(|p| ring.q().format(p)).collect()).collect()
    }
}

/// Matrix product over `Q`; reduced modulo `(f)` when `reduce` is set.
pub fn mat_mul(ring: &RingSetup, a: &PolyMatrix, b: &PolyMatrix, reduce: bool) -> PolyMatrix {
    assert_eq!(a.cols(), b.rows(), "inner dimensions differ");
    let q = ring.q();
    let mut out = PolyMatrix::zero(&a.target, &b.source);
    for r in 0..a.rows() {
        for c in 0..b.cols() {
            let mut acc = q.zero();
            for m in 0..a.cols() {
                let x = a.get(r, m);
                let y = b.get(m, c);
                if !x.is_zero() && !y.is_zero() {
                    acc = q.add(&acc, &q.mul(x, y));
                }
            }
            out.set(r, c, if reduce { ring.nf(&acc) } else { acc });
        }
    }
    out
}

pub fn mat_add(ring: &RingSetup, a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()));
    let q = ring.q();
    let data = a.data.iter().zip(&b.data).map(|(x, y)| q.add(x, y)).collect();
    PolyMatrix { target: a.target.clone(), source: a.source.clone(), data }
}

pub fn mat_nf(ring: &RingSetup, a: &PolyMatrix) -> PolyMatrix {
    a.map_entries(|p| ring.nf(p))
}

fn column_degree(col: &[Poly], target: &[i64]) -> Option<i64> {
    col.iter().zip(target).find(|(p, _)| !p.is_zero()).map(|(p, d)| p.degree().unwrap() as i64 + d)
}

/// A minimal generating subset of the `R`-submodule spanned by `candidates`
/// inside the graded free module with the given generator degrees. Candidates
/// are visited by ascending degree, ties in input order.
pub fn minimal_generators(ring: &RingSetup, degrees: &[i64], candidates: Vec<Vec<Poly>>) -> Vec<(i64, Vec<Poly>)> {
    let q = ring.q();
    let mut cands: Vec<(i64, usize, Vec<Poly>)> = candidates
        .into_iter()
        .enumerate()
        .filter_map(|(i, v)| {
            let v: Vec<Poly> = v.iter().map(|p| ring.nf(p)).collect();
            column_degree(&v, degrees).map(|d| (d, i, v))
        })
        .collect();
    cands.sort_by_key(|(d, i, _)| (*d, *i));
    let mut kept: Vec<(i64, Vec<Poly>)> = Vec::new();
    let mut idx = 0;
    while idx < cands.len() {
        let t = cands[idx].0;
        let basis = DegreeBasis::new(ring, degrees, t);
        let mut space = Subspace::new(ring.field(), basis.len());
        for (dk, k) in &kept {
            for m in ring.std_monomials(t - dk).iter() {
                let v: Vec<Poly> = k.iter().map(|p| ring.nf(&q.mul_term(p, m, 1))).collect();
                space.insert(&basis.coords(&v));
            }
        }
        while idx < cands.len() && cands[idx].0 == t {
            let (_, _, v) = &cands[idx];
            if space.insert(&basis.coords(v)) {
                kept.push((t, v.clone()));
            }
            idx += 1;
        }
    }
    kept
}

/// Generators of `ker(A)` over `R` as the columns of a matrix into `A`'s source.
///
/// Computed over `Q` as the syzygies of the columns of `A` together with the
/// columns `f_j e_r`, projected to the first block, reduced and minimized.
pub fn kernel_over_r(ring: &RingSetup, a: &PolyMatrix) -> PolyMatrix {
    let a = mat_nf(ring, a);
    if a.cols() == 0 {
        return PolyMatrix::zero(&a.source, &[]);
    }
    if a.is_zero() {
        return PolyMatrix::identity(ring, &a.source);
    }
    let q = ring.q();
    let module = FreeModule::new(q, a.target.clone());
    let mut gens = Vec::new();
    let mut degs = Vec::new();
    for c in 0..a.cols() {
        gens.push(module.from_components(&a.column(c)));
        degs.push(a.source[c]);
    }
    for (fj, dj) in ring.f().iter().zip(ring.f_degrees()) {
        for r in 0..a.rows() {
            let mut comps = vec![q.zero(); a.rows()];
            comps[r] = fj.clone();
            gens.push(module.from_components(&comps));
            degs.push(a.target[r] + dj as i64);
        }
    }
    let (s, syz) = syzygies_with_degrees(&module, &gens, degs);
    let ncols = a.cols();
    let cands: Vec<Vec<Poly>> = syz.iter().map(|v| s.to_components(v)[..ncols].to_vec()).collect();
    let kept = minimal_generators(ring, &a.source, cands);
    let source: Vec<i64> = kept.iter().map(|(d, _)| *d).collect();
    let cols: Vec<Vec<Poly>> = kept.into_iter().map(|(_, v)| v).collect();
    PolyMatrix::from_columns(&a.source, &source, &cols)
}

/// Solves `A x = rhs` over `R` for a homogeneous right-hand side of degree `t`.
pub fn solve_graded(ring: &RingSetup, a: &PolyMatrix, rhs: &[Poly], t: i64) -> Option<Vec<Poly>> {
    let q = ring.q();
    let src = DegreeBasis::new(ring, &a.source, t);
    let tgt = DegreeBasis::new(ring, &a.target, t);
    let columns: Vec<Vec<Elem>> = src
        .entries()
        .iter()
        .map(|(c, m)| {
            let v: Vec<Poly> = (0..a.rows()).map(|r| ring.nf(&q.mul_term(a.get(r, *c), m, 1))).collect();
            tgt.coords(&v)
        })
        .collect();
    let mat = FMatrix::from_columns(ring.field(), tgt.len(), &columns);
    let b: Vec<Poly> = rhs.iter().map(|p| ring.nf(p)).collect();
    let x = mat.solve(&tgt.coords(&b)).expect("dimensions agree")?;
    Some(src.vector(ring, a.cols(), &x))
}

// ---------------------------------------------------------------------------
// Module presentations

/// A finite graded `R`-module `coker(relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    relations: PolyMatrix,
}

impl ModulePresentation {
    pub fn new(gens: Vec<i64>, relations: PolyMatrix) -> Result<Self> {
        if relations.target() != gens.as_slice() {
            return Err(Error::DimensionMismatch { expected: gens.len(), got: relations.rows() });
        }
        relations.check_homogeneous()?;
        Ok(ModulePresentation { relations })
    }

    /// Builds a presentation from relation columns, inferring column degrees.
    pub fn from_columns(ring: &RingSetup, gens: Vec<i64>, columns: Vec<Vec<Poly>>) -> Result<Self> {
        let mut source = Vec::new();
        let mut kept = Vec::new();
        for col in columns {
            if col.len() != gens.len() {
                return Err(Error::DimensionMismatch { expected: gens.len(), got: col.len() });
            }
            let col: Vec<Poly> = col.iter().map(|p| ring.nf(p)).collect();
            if let Some(d) = column_degree(&col, &gens) {
                source.push(d);
                kept.push(col);
            }
        }
        Self::new(gens.clone(), PolyMatrix::from_columns(&gens, &source, &kept))
    }

    pub fn parse(ring: &RingSetup, gens: Vec<i64>, columns: &[Vec<&str>]) -> Result<Self> {
        let cols = columns
            .iter()
            .map(|c| c.iter().map(|s| ring.q().parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_columns(ring, gens, cols)
    }

    pub fn free(degrees: Vec<i64>) -> Self {
        ModulePresentation { relations: PolyMatrix::zero(&degrees, &[]) }
    }

    pub fn zero() -> Self {
        Self::free(Vec::new())
    }

    /// The residue field `k = R/𝔪`.
    pub fn residue_field(ring: &RingSetup) -> Self {
        let q = ring.q();
        let cols: Vec<Vec<Poly>> = (0..q.nvars()).map(|i| vec![q.var(i)]).collect();
        Self::from_columns(ring, vec![0], cols).expect("variables are homogeneous")
    }

    /// `R / (gens)`.
    pub fn cyclic(ring: &RingSetup, ideal: &[Poly]) -> Result<Self> {
        Self::from_columns(ring, vec![0], ideal.iter().map(|p| vec![p.clone()]).collect())
    }

    pub fn gens(&self) -> &[i64] {
        self.relations.target()
    }

    pub fn num_gens(&self) -> usize {
        self.relations.rows()
    }

    pub fn relations(&self) -> &PolyMatrix {
        &self.relations
    }

    pub fn is_zero_presentation(&self) -> bool {
        self.num_gens() == 0
    }

    pub fn twist(&self, s: i64) -> Self {
        ModulePresentation { relations: self.relations.twist(s) }
    }

    pub fn direct_sum(&self, other: &ModulePresentation) -> Self {
        let a = &self.relations;
        let b = &other.relations;
        let relations = PolyMatrix::block(
            a,
            &PolyMatrix::zero(a.target(), b.source()),
            &PolyMatrix::zero(b.target(), a.source()),
            b,
        );
        ModulePresentation { relations }
    }

    /// Whether the presentation is minimal (no unit entries).
    pub fn is_minimal(&self) -> bool {
        self.relations.is_minimal()
    }
}

/// Graded Nakayama: eliminates unit entries of the relation matrix, then
/// prunes the relation columns to a minimal generating set.
pub fn minimize(ring: &RingSetup, m: &ModulePresentation) -> ModulePresentation {
    let q = ring.q();
    let k = ring.field();
    let mut gens: Vec<i64> = m.gens().to_vec();
    let mut cols: Vec<(i64, Vec<Poly>)> = m
        .relations
        .columns()
        .into_iter()
        .zip(m.relations.source().iter().copied())
        .map(|(c, d)| (d, c.iter().map(|p| ring.nf(p)).collect::<Vec<Poly>>()))
        .filter(|(_, c)| c.iter().any(|p| !p.is_zero()))
        .collect();
    loop {
        let pivot = cols.iter().enumerate().find_map(|(j, (_, c))| {
            c.iter().position(|p| p.as_constant().is_some_and(|x| x != 0)).map(|i| (i, j))
        });
        let Some((i, j)) = pivot else { break };
        let (_, pcol) = cols.remove(j);
        let inv = k.inv(pcol[i].as_constant().unwrap());
        for (_, col) in cols.iter_mut() {
            if col[i].is_zero() {
                continue;
            }
            let factor = q.scale(&col[i], k.neg(inv));
            for (r, p) in pcol.iter().enumerate() {
                if !p.is_zero() {
                    col[r] = ring.nf(&q.add(&col[r], &q.mul(&factor, p)));
                }
            }
        }
        gens.remove(i);
        for (_, col) in cols.iter_mut() {
            col.remove(i);
        }
        cols.retain(|(_, c)| c.iter().any(|p| !p.is_zero()));
    }
    let kept = minimal_generators(ring, &gens, cols.into_iter().map(|(_, c)| c).collect());
    let source: Vec<i64> = kept.iter().map(|(d, _)| *d).collect();
    let columns: Vec<Vec<Poly>> = kept.into_iter().map(|(_, c)| c).collect();
    ModulePresentation { relations: PolyMatrix::from_columns(&gens, &source, &columns) }
}

// ---------------------------------------------------------------------------
// Complexes

/// A complex `C_low <- C_{low+1} <- ... <- C_high` of graded free modules.
///
/// When `bounded` is set the complex is zero above `high`; otherwise the terms
/// above `high` are unknown (a truncated infinite resolution, say).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeComplex {
    low: i64,
    terms: Vec<GradedFree>,
    /// `diffs[k]` maps `terms[k + 1]` to `terms[k]`.
    diffs: Vec<PolyMatrix>,
    bounded: bool,
}

impl FreeComplex {
    pub fn new(low: i64, terms: Vec<GradedFree>, diffs: Vec<PolyMatrix>, bounded: bool) -> Result<Self> {
        if terms.is_empty() {
            return Ok(Self::zero());
        }
        if diffs.len() + 1 != terms.len() {
            return Err(Error::DimensionMismatch { expected: terms.len() - 1, got: diffs.len() });
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.source() != terms[k + 1].degrees() || d.target() != terms[k].degrees() {
                return Err(Error::Input(format!("differential at index {} has wrong shape", low + k as i64 + 1)));
            }
        }
        Ok(FreeComplex { low, terms, diffs, bounded })
    }

    pub fn zero() -> Self {
        FreeComplex { low: 0, terms: Vec::new(), diffs: Vec::new(), bounded: true }
    }

    /// A single free module in homological degree `at`.
    pub fn concentrated(module: GradedFree, at: i64) -> Self {
        FreeComplex { low: at, terms: vec![module], diffs: Vec::new(), bounded: true }
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.terms.len() as i64 - 1
    }

    pub fn is_bounded(&self) -> bool {
        self.bounded
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.rank() == 0)
    }

    /// Largest index whose term is known.
    pub fn known_to(&self) -> i64 {
        if self.bounded {
            i64::MAX
        } else {
            self.high()
        }
    }

    pub fn term(&self, i: i64) -> GradedFree {
        if i < self.low || i > self.high() {
            return GradedFree::zero();
        }
        self.terms[(i - self.low) as usize].clone()
    }

    /// The differential `C_i -> C_{i-1}`, when known.
    pub fn diff(&self, i: i64) -> Option<PolyMatrix> {
        if i > self.known_to() {
            return None;
        }
        if i <= self.low || i > self.high() {
            return Some(PolyMatrix::zero(self.term(i - 1).degrees(), self.term(i).degrees()));
        }
        Some(self.diffs[(i - self.low - 1) as usize].clone())
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.rank()).collect()
    }

    /// `d_{i-1} d_i = 0` modulo `(f)` at every stored index.
    pub fn check_d_squared(&self, ring: &RingSetup) -> Result<()> {
        for w in self.diffs.windows(2) {
            if !mat_mul(ring, &w[0], &w[1], true).is_zero() {
                return Err(Error::Input("d^2 != 0".into()));
            }
        }
        Ok(())
    }

    /// `(Σ^d C)(s)`: indices raised by `d`, generator degrees raised by `s`,
    /// differentials multiplied by `(-1)^d`.
    pub fn shift(&self, ring: &RingSetup, d: i64, s: i64) -> FreeComplex {
        let sign = if d % 2 == 0 { 1 } else { ring.field().neg(1) };
        FreeComplex {
            low: self.low + d,
            terms: self.terms.iter().map(|t| t.twist(s)).collect(),
            diffs: self.diffs.iter().map(|m| m.twist(s).scale(ring, sign)).collect(),
            bounded: self.bounded,
        }
    }

    pub fn direct_sum(&self, other: &FreeComplex) -> FreeComplex {
        let low = self.low.min(other.low);
        let high = match (self.bounded, other.bounded) {
            (true, true) => self.high().max(other.high()),
            _ => self.known_to().min(other.known_to()),
        };
        let terms: Vec<GradedFree> = (low..=high).map(|i| self.term(i).direct_sum(&other.term(i))).collect();
        let diffs = (low + 1..=high)
            .map(|i| {
                let a = self.diff(i).unwrap();
                let b = other.diff(i).unwrap();
                PolyMatrix::block(
                    &a,
                    &PolyMatrix::zero(a.target(), b.source()),
                    &PolyMatrix::zero(b.target(), a.source()),
                    &b,
                )
            })
            .collect();
        FreeComplex { low, terms, diffs, bounded: self.bounded && other.bounded }
    }
}

/// A degree-zero chain map `source -> target`; `maps[n]` sends `source_n` to
/// `target_n`. Maps into a shifted complex `Σ^d P` are expressed by passing
/// the shifted complex as `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: FreeComplex,
    target: FreeComplex,
    maps: BTreeMap<i64, PolyMatrix>,
}

impl ChainMap {
    pub fn new(source: FreeComplex, target: FreeComplex, maps: BTreeMap<i64, PolyMatrix>) -> Self {
        ChainMap { source, target, maps }
    }

    pub fn identity(ring: &RingSetup, c: &FreeComplex) -> Self {
        let maps = (c.low()..=c.high()).map(|i| (i, PolyMatrix::identity(ring, c.term(i).degrees()))).collect();
        ChainMap { source: c.clone(), target: c.clone(), maps }
    }

    /// The zero map, defined on every index where `source` is known.
    pub fn zero(source: &FreeComplex, target: &FreeComplex) -> Self {
        let hi = source.high().min(target.known_to());
        let maps = (source.low()..=hi)
            .map(|i| (i, PolyMatrix::zero(target.term(i).degrees(), source.term(i).degrees())))
            .collect();
        ChainMap { source: source.clone(), target: target.clone(), maps }
    }

    pub fn source(&self) -> &FreeComplex {
        &self.source
    }

    pub fn target(&self) -> &FreeComplex {
        &self.target
    }

    pub fn maps(&self) -> &BTreeMap<i64, PolyMatrix> {
        &self.maps
    }

    /// The component at index `n`; zero where the source vanishes.
    pub fn at(&self, n: i64) -> Option<PolyMatrix> {
        if let Some(m) = self.maps.get(&n) {
            return Some(m.clone());
        }
        let src = self.source.term(n);
        if src.rank() == 0 && n <= self.source.known_to() {
            return Some(PolyMatrix::zero(self.target.term(n).degrees(), &[]));
        }
        if n < self.source.low() {
            return Some(PolyMatrix::zero(self.target.term(n).degrees(), &[]));
        }
        None
    }

    /// Checks `d_T u_n = u_{n-1} d_S` over `R` wherever both sides are known.
    pub fn verify(&self, ring: &RingSetup) -> Result<()> {
        for (&n, u) in &self.maps {
            if u.source() != self.source.term(n).degrees() || u.target() != self.target.term(n).degrees() {
                return Err(Error::NotAChainMap(format!("component {n} has the wrong shape")));
            }
            u.check_homogeneous().map_err(|e| Error::NotAChainMap(e.to_string()))?;
            let (Some(dt), Some(ds), Some(prev)) = (self.target.diff(n), self.source.diff(n), self.at(n - 1)) else {
                continue;
            };
            let lhs = mat_mul(ring, &dt, u, true);
            let rhs = mat_mul(ring, &prev, &ds, true);
            if lhs != rhs {
                return Err(Error::NotAChainMap(format!("square at index {n} does not commute")));
            }
        }
        Ok(())
    }
}

/// The mapping cone: `cone_n = T_n ⊕ S_{n-1}` with differential
/// `[[d_T, u], [0, -d_S]]`.
pub fn cone(ring: &RingSetup, u: &ChainMap) -> Result<FreeComplex> {
    u.verify(ring)?;
    let s = &u.source;
    let t = &u.target;
    if s.is_zero() && t.is_zero() {
        return Ok(FreeComplex::zero());
    }
    let low = t.low().min(s.low() + 1);
    let high = match (t.bounded, s.bounded) {
        (true, true) => t.high().max(s.high() + 1),
        _ => t.known_to().min(s.known_to().saturating_add(1)),
    };
    let minus_one = ring.field().neg(1);
    let mut terms = Vec::new();
    let mut diffs = Vec::new();
    for n in low..=high {
        terms.push(t.term(n).direct_sum(&s.term(n - 1)));
        if n > low {
            let dt = t.diff(n).expect("known range");
            let ds = s.diff(n - 1).expect("known range");
            let un = u.at(n - 1).ok_or(Error::InsufficientDepth { need: (n - 1).max(0) as usize, have: u.maps.keys().last().copied().unwrap_or(0).max(0) as usize })?;
            let zero = PolyMatrix::zero(s.term(n - 2).degrees(), t.term(n).degrees());
            diffs.push(PolyMatrix::block(&dt, &un, &zero, &ds.scale(ring, minus_one)));
        }
    }
    FreeComplex::new(low, terms, diffs, t.bounded && s.bounded)
}

// ---------------------------------------------------------------------------
// Resolutions

/// A free resolution `F_0 <- F_1 <- ... <- F_D` of a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    complex: FreeComplex,
    module: ModulePresentation,
    minimal: bool,
    computed_to: usize,
}

impl Resolution {
    pub fn from_parts(complex: FreeComplex, module: ModulePresentation, minimal: bool, computed_to: usize) -> Self {
        Resolution { complex, module, minimal, computed_to }
    }

    pub fn complex(&self) -> &FreeComplex {
        &self.complex
    }

    pub fn module(&self) -> &ModulePresentation {
        &self.module
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn computed_to(&self) -> usize {
        self.computed_to
    }

    /// Projective dimension, if the resolution terminated within the computed range.
    pub fn projective_dimension(&self) -> Option<usize> {
        if self.complex.is_bounded() {
            let r = self.complex.ranks();
            Some(r.iter().rposition(|&x| x > 0).unwrap_or(0))
        } else {
            None
        }
    }

    pub fn terminated(&self) -> bool {
        self.complex.is_bounded()
    }

    /// `b_0, ..., b_D` (zeros past termination).
    pub fn betti(&self) -> Vec<usize> {
        (0..=self.computed_to as i64).map(|i| self.complex.term(i).rank()).collect()
    }

    /// Generator degrees of `F_i`.
    pub fn graded_betti(&self) -> Vec<Vec<i64>> {
        (0..=self.computed_to as i64).map(|i| self.complex.term(i).degrees().to_vec()).collect()
    }

    pub fn term(&self, i: usize) -> GradedFree {
        self.complex.term(i as i64)
    }

    /// `d_i : F_i -> F_{i-1}`.
    pub fn diff(&self, i: usize) -> PolyMatrix {
        self.complex.diff(i as i64).expect("within computed range")
    }
}

/// Minimal graded free resolution through homological degree `depth`.
pub fn minimal_resolution(ring: &RingSetup, m: &ModulePresentation, depth: usize) -> Resolution {
    let module = minimize(ring, m);
    let mut terms = vec![GradedFree::new(module.gens().to_vec())];
    let mut diffs: Vec<PolyMatrix> = Vec::new();
    let mut bounded = false;
    if module.num_gens() == 0 {
        return Resolution { complex: FreeComplex::zero(), module, minimal: true, computed_to: depth };
    }
    if depth >= 1 {
        let d1 = module.relations().clone();
        if d1.cols() == 0 {
            bounded = true;
        } else {
            terms.push(GradedFree::new(d1.source().to_vec()));
            diffs.push(d1);
        }
    }
    let mut i = 1;
    while !bounded && i < depth {
        let k = kernel_over_r(ring, diffs.last().unwrap());
        if k.cols() == 0 {
            bounded = true;
            break;
        }
        terms.push(GradedFree::new(k.source().to_vec()));
        diffs.push(k);
        i += 1;
    }
    if !bounded && depth >= 1 {
        // terminated exactly at the top?
        let top = diffs.last().unwrap();
        if top.cols() > 0 && kernel_over_r(ring, top).cols() == 0 {
            bounded = true;
        }
    }
    if depth == 0 && module.relations().cols() == 0 {
        bounded = true;
    }
    let complex = FreeComplex::new(0, terms, diffs, bounded).expect("consistent shapes");
    Resolution { complex, module, minimal: true, computed_to: depth }
}

/// `H_i(C)` as a minimized presentation.
pub fn homology(ring: &RingSetup, c: &FreeComplex, i: i64) -> Result<ModulePresentation> {
    let out_of_range = || Error::WindowOutOfRange { index: i, low: c.low(), high: c.known_to().saturating_sub(1) };
    let d_next = c.diff(i + 1).ok_or_else(out_of_range)?;
    let d_here = c.diff(i).ok_or_else(out_of_range)?;
    if c.term(i).rank() == 0 {
        return Ok(ModulePresentation::zero());
    }
    let kernel = kernel_over_r(ring, &d_here);
    if kernel.cols() == 0 {
        return Ok(ModulePresentation::zero());
    }
    let stacked = kernel.hstack(&d_next);
    let rel = kernel_over_r(ring, &stacked).select_rows(0..kernel.cols());
    let pres = ModulePresentation::from_columns(ring, kernel.source().to_vec(), rel.columns())?;
    Ok(minimize(ring, &pres))
}

/// Largest index in `window` with nonzero homology (`None` stands for -∞).
pub fn homology_bound(ring: &RingSetup, c: &FreeComplex, window: std::ops::RangeInclusive<i64>) -> Result<Option<i64>> {
    for i in window.rev() {
        if !homology(ring, c, i)?.is_zero_presentation() {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// `coker(d_{n+1} : C_{n+1} -> C_n)`, the `n`-th syzygy module of a complex
/// whose homology vanishes above `n`. Homology is checked on the two indices
/// above `n` that lie in the known range.
pub fn syzygy_module(ring: &RingSetup, c: &FreeComplex, n: i64) -> Result<ModulePresentation> {
    let top = c.known_to().saturating_sub(1).min(n + 2);
    if top > n {
        if let Some(bound) = homology_bound(ring, c, n + 1..=top)? {
            return Err(Error::BoundTooLow { n, bound });
        }
    }
    syzygy_module_unchecked(ring, c, n)
}

pub fn syzygy_module_unchecked(ring: &RingSetup, c: &FreeComplex, n: i64) -> Result<ModulePresentation> {
    let d = c.diff(n + 1).ok_or(Error::WindowOutOfRange { index: n + 1, low: c.low(), high: c.known_to() })?;
    let pres = ModulePresentation::new(c.term(n).degrees().to_vec(), d)?;
    Ok(minimize(ring, &pres))
}

/// `Ω^n M`, from a minimal resolution.
pub fn syzygy_of_module(ring: &RingSetup, m: &ModulePresentation, n: usize) -> ModulePresentation {
    let res = minimal_resolution(ring, m, n + 1);
    syzygy_module_unchecked(ring, res.complex(), n as i64).expect("resolution computed to n + 1")
}

/// Lifts a map of modules, given on generators by `u0 : S_0 -> T_0`, to a
/// chain map between the resolutions (comparison theorem), through index `upto`.
pub fn lift_chain_map(
    ring: &RingSetup,
    source: &FreeComplex,
    target: &FreeComplex,
    u0: PolyMatrix,
    upto: i64,
) -> Result<ChainMap> {
    let mut maps = BTreeMap::new();
    maps.insert(0, u0);
    for n in 1..=upto.min(source.known_to()).min(target.known_to()) {
        let ds = source.diff(n).unwrap();
        let dt = target.diff(n).unwrap();
        let rhs = mat_mul(ring, &maps[&(n - 1)], &ds, true);
        let mut cols = Vec::new();
        for c in 0..rhs.cols() {
            let x = solve_graded(ring, &dt, &rhs.column(c), ds.source()[c])
                .ok_or_else(|| Error::NotAChainMap(format!("cannot lift at index {n}")))?;
            cols.push(x);
        }
        maps.insert(n, PolyMatrix::from_columns(target.term(n).degrees(), source.term(n).degrees(), &cols));
    }
    Ok(ChainMap::new(source.clone(), target.clone(), maps))
}

/// `M ⊗ K(z)` realized on the minimal resolution of `M` as iterated cones of
/// multiplication by the `z_i`.
pub fn central_koszul(ring: &RingSetup, m: &ModulePresentation, z: &[Poly], depth: usize) -> Result<FreeComplex> {
    let res = minimal_resolution(ring, m, depth);
    let mut c = res.complex().clone();
    for zi in z {
        let zi = ring.nf(zi);
        if !zi.is_homogeneous() {
            return Err(Error::NonHomogeneous(ring.q().format(&zi)));
        }
        let s = zi.degree().unwrap_or(0) as i64;
        let src = c.shift(ring, 0, s);
        let maps = (src.low()..=src.high())
            .map(|i| {
                let degs = src.term(i).degrees().to_vec();
                let tdegs = c.term(i).degrees().to_vec();
                let mut mm = PolyMatrix::zero(&tdegs, &degs);
                for r in 0..degs.len() {
                    mm.set(r, r, zi.clone());
                }
                (i, mm)
            })
            .collect();
        c = cone(ring, &ChainMap::new(src, c.clone(), maps))?;
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(r: &RingSetup, m: &ModulePresentation) -> (Vec<i64>, Vec<Vec<String>>) {
        let mut cols = m.relations().format(r);
        cols.sort();
        (m.gens().to_vec(), cols)
    }

    fn flagship() -> RingSetup {
        RingSetup::flagship()
    }

    #[test]
    fn resolution_of_k_has_betti_numbers_i_plus_one() {
        let r = flagship();
        let k = ModulePresentation::residue_field(&r);
        let res = minimal_resolution(&r, &k, 6);
        assert_eq!(res.betti(), vec![1, 2, 3, 4, 5, 6, 7]);
        res.complex().check_d_squared(&r).unwrap();
        for i in 1..=6 {
            assert!(res.diff(i).is_minimal());
        }
    }

    #[test]
    fn resolution_of_cyclic_is_periodic() {
        let r = flagship();
        let x = r.q().parse("x").unwrap();
        let m = ModulePresentation::cyclic(&r, std::slice::from_ref(&x)).unwrap();
        let res = minimal_resolution(&r, &m, 6);
        assert_eq!(res.betti(), vec![1; 7]);
        for i in 1..=6 {
            assert_eq!(res.diff(i).get(0, 0), &x);
        }
    }

    #[test]
    fn free_module_resolution_terminates() {
        let r = flagship();
        let res = minimal_resolution(&r, &ModulePresentation::free(vec![0]), 4);
        assert_eq!(res.betti(), vec![1, 0, 0, 0, 0]);
        assert_eq!(res.projective_dimension(), Some(0));
    }

    #[test]
    fn minimize_examples() {
        let r = flagship();
        let unit = ModulePresentation::parse(&r, vec![0], &[vec!["1"]]).unwrap();
        assert!(minimize(&r, &unit).is_zero_presentation());

        let k = ModulePresentation::parse(&r, vec![0], &[vec!["x"], vec!["y"], vec!["x+y"]]).unwrap();
        let km = minimize(&r, &k);
        assert_eq!(km.relations().format(&r), vec![vec!["x"], vec!["y"]]);

        // k ⊕ R with a redundant generator: relations (x, 0), (y, 0), (0, 1) on three gens
        let m = ModulePresentation::parse(
            &r,
            vec![0, 0, 0],
            &[vec!["x", "0", "0"], vec!["y", "0", "0"], vec!["0", "0", "1"]],
        )
        .unwrap();
        let mm = minimize(&r, &m);
        assert_eq!(mm.num_gens(), 2);
        assert_eq!(mm.relations().cols(), 2);
        assert!(mm.relations().column(0)[1].is_zero() && mm.relations().column(1)[1].is_zero());
    }

    #[test]
    fn homology_of_resolution() {
        let r = flagship();
        let k = ModulePresentation::residue_field(&r);
        let res = minimal_resolution(&r, &k, 5);
        let h0 = homology(&r, res.complex(), 0).unwrap();
        assert_eq!(shape(&r, &h0), shape(&r, &minimize(&r, &k)));
        for i in 1..=3 {
            assert!(homology(&r, res.complex(), i).unwrap().is_zero_presentation());
        }
        assert!(homology(&r, res.complex(), 5).is_err());
        assert_eq!(homology_bound(&r, &FreeComplex::zero(), 0..=3).unwrap(), None);
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let r = flagship();
        let res = minimal_resolution(&r, &ModulePresentation::residue_field(&r), 5);
        let c = cone(&r, &ChainMap::identity(&r, res.complex())).unwrap();
        c.check_d_squared(&r).unwrap();
        for i in 0..=3 {
            assert!(homology(&r, &c, i).unwrap().is_zero_presentation(), "H_{i}");
        }
    }

    #[test]
    fn omega_one_of_k_is_the_maximal_ideal() {
        let r = flagship();
        let res = minimal_resolution(&r, &ModulePresentation::residue_field(&r), 3);
        let om = syzygy_module(&r, res.complex(), 1).unwrap();
        assert_eq!(om.gens(), &[1, 1]);
        assert_eq!(om.relations().cols(), 3);
        let zeroth = syzygy_module(&r, res.complex(), 0).unwrap();
        assert_eq!(shape(&r, &zeroth), shape(&r, &ModulePresentation::residue_field(&r)));
    }

    #[test]
    fn koszul_on_x_over_r() {
        let r = flagship();
        let x = r.q().parse("x").unwrap();
        let c = central_koszul(&r, &ModulePresentation::free(vec![0]), std::slice::from_ref(&x), 3).unwrap();
        let h0 = homology(&r, &c, 0).unwrap();
        assert_eq!(shape(&r, &h0), shape(&r, &ModulePresentation::cyclic(&r, std::slice::from_ref(&x)).unwrap()));
        let h1 = homology(&r, &c, 1).unwrap();
        // ker(x on R(-1)) is generated by x, in degree 2
        assert_eq!(h1.gens(), &[2]);
        assert_eq!(h1.relations().format(&r), vec![vec!["x"]]);
    }

    #[test]
    fn koszul_on_regular_element_over_line_ring() {
        let r3 = RingSetup::flagship_with_line();
        let q = r3.q();
        let m = ModulePresentation::cyclic(&r3, &[q.parse("x").unwrap()]).unwrap();
        let c = central_koszul(&r3, &m, &[q.parse("z").unwrap()], 4).unwrap();
        assert!(homology(&r3, &c, 1).unwrap().is_zero_presentation());
        let h0 = homology(&r3, &c, 0).unwrap();
        let expected = ModulePresentation::cyclic(&r3, &[q.parse("x").unwrap(), q.parse("z").unwrap()]).unwrap();
        assert_eq!(shape(&r3, &h0), shape(&r3, &minimize(&r3, &expected)));
    }

    #[test]
    fn solve_graded_lifts_through_surjection() {
        let r = flagship();
        let q = r.q();
        let a = PolyMatrix::from_columns(&[0], &[1, 1], &[vec![q.parse("x").unwrap()], vec![q.parse("y").unwrap()]]);
        let sol = solve_graded(&r, &a, &[q.parse("x*y").unwrap()], 2).unwrap();
        let back = mat_mul(&r, &a, &PolyMatrix::from_columns(&[1, 1], &[2], &[sol]), true);
        assert_eq!(q.format(back.get(0, 0)), "x*y");
        assert!(solve_graded(&r, &a, &[q.one()], 0).is_none());
    }
}
