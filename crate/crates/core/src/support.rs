//! `Ext_R(M, N)` as a graded `k[χ]`-module, its annihilator, the support
//! cone, and the pointwise hypersurface test.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::complexes::{minimal_resolution, minimize, ModulePresentation, PolyMatrix, Resolution};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::groebner::{intersect, projective_points, syzygies, ConeIdeal};
use crate::linalg::{FMatrix, Subspace};
use crate::operators::{eisenbud_operators, lift_resolution, OperatorFamily};
use crate::poly::{Monomial, Poly};
use crate::ring::{DegreeBasis, RingSetup};
use crate::vector::{FreeModule, PolyVec};

/// Default horizon, window and extension bound.
pub const DEFAULT_HORIZON: usize = 12;
pub const DEFAULT_WINDOW: usize = 2;
pub const DEFAULT_EXTENSION: u32 = 2;

/// A graded `R`-module of finite length, as a `k`-vector space with the
/// action of each variable.
#[derive(Clone, Debug)]
pub struct FiniteModule {
    field: Field,
    degrees: Vec<i64>,
    vars: Vec<FMatrix>,
}

impl FiniteModule {
    pub fn residue_field(ring: &RingSetup) -> Self {
        let k = ring.field();
        FiniteModule { field: k.clone(), degrees: vec![0], vars: vec![FMatrix::zeros(k, 1, 1); ring.nvars()] }
    }

    /// Builds the module from a presentation; fails when it is not of finite
    /// length within `max_span` degrees above its generators.
    pub fn from_presentation(ring: &RingSetup, m: &ModulePresentation, max_span: i64) -> Result<Self> {
        let m = minimize(ring, m);
        let k = ring.field();
        let gens = m.gens().to_vec();
        if gens.is_empty() {
            return Ok(FiniteModule { field: k.clone(), degrees: Vec::new(), vars: vec![FMatrix::zeros(k, 0, 0); ring.nvars()] });
        }
        let lo = *gens.iter().min().unwrap();
        let hi = *gens.iter().max().unwrap();
        let wmax = *ring.q().weights().iter().max().unwrap() as i64;
        let rel = m.relations();
        struct Piece {
            basis: DegreeBasis,
            image: Subspace,
            free: Vec<usize>,
            offset: usize,
        }
        let mut pieces: Vec<Piece> = Vec::new();
        let mut offset = 0;
        let mut zeros = 0;
        let mut t = lo;
        loop {
            let basis = DegreeBasis::new(ring, &gens, t);
            let mut image = Subspace::new(k, basis.len());
            for c in 0..rel.cols() {
                let s = rel.source()[c];
                for mono in ring.std_monomials(t - s).iter() {
                    let v: Vec<Poly> = rel.column(c).iter().map(|p| ring.nf(&ring.q().mul_term(p, mono, 1))).collect();
                    image.insert(&basis.coords(&v));
                }
            }
            let pivots = image.pivots();
            let free: Vec<usize> = (0..basis.len()).filter(|i| !pivots.contains(i)).collect();
            let n = free.len();
            pieces.push(Piece { basis, image, free, offset });
            offset += n;
            zeros = if n == 0 { zeros + 1 } else { 0 };
            if t > hi && zeros >= wmax {
                break;
            }
            if t > hi + max_span {
                return Err(Error::NotFiniteLength);
            }
            t += 1;
        }
        let dim = offset;
        let mut degrees = Vec::with_capacity(dim);
        for (i, p) in pieces.iter().enumerate() {
            degrees.extend(std::iter::repeat_n(lo + i as i64, p.free.len()));
        }
        let q = ring.q();
        let mut vars = Vec::new();
        for v in 0..ring.nvars() {
            let w = q.weights()[v] as usize;
            let xv = q.var_monomial(v);
            let mut mat = FMatrix::zeros(k, dim, dim);
            for (i, p) in pieces.iter().enumerate() {
                let Some(tp) = pieces.get(i + w) else { continue };
                for (slot, &coord) in p.free.iter().enumerate() {
                    let mut unit = vec![0; p.basis.len()];
                    unit[coord] = 1;
                    let vec = p.basis.vector(ring, gens.len(), &unit);
                    let moved: Vec<Poly> = vec.iter().map(|x| ring.nf(&q.mul_term(x, &xv, 1))).collect();
                    let mut c = tp.basis.coords(&moved);
                    tp.image.reduce(&mut c);
                    for (tslot, &tc) in tp.free.iter().enumerate() {
                        if c[tc] != 0 {
                            mat.set(tp.offset + tslot, p.offset + slot, c[tc]);
                        }
                    }
                }
            }
            vars.push(mat);
        }
        Ok(FiniteModule { field: k.clone(), degrees, vars })
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn var_action(&self, v: usize) -> &FMatrix {
        &self.vars[v]
    }

    fn monomial_action(&self, m: &Monomial, cache: &mut HashMap<Monomial, FMatrix>) -> FMatrix {
        if let Some(x) = cache.get(m) {
            return x.clone();
        }
        let mut acc = FMatrix::identity(&self.field, self.dim());
        for (v, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                acc = self.vars[v].mul(&acc).expect("square");
            }
        }
        cache.insert(m.clone(), acc.clone());
        acc
    }

    /// The matrix of multiplication by `p`.
    pub fn poly_action(&self, p: &Poly, cache: &mut HashMap<Monomial, FMatrix>) -> FMatrix {
        let k = &self.field;
        let n = self.dim();
        let mut acc = FMatrix::zeros(k, n, n);
        for (m, c) in p.terms() {
            let a = self.monomial_action(m, cache);
            for r in 0..n {
                for col in 0..n {
                    let x = a.get(r, col);
                    if x != 0 {
                        acc.set(r, col, k.add(acc.get(r, col), k.mul(*c, x)));
                    }
                }
            }
        }
        acc
    }

    /// `Hom(P, N) -> Hom(S, N)`, `ψ ↦ ψ ∘ A` for `A : S -> P`.
    fn precompose(&self, a: &PolyMatrix, cache: &mut HashMap<Monomial, FMatrix>) -> FMatrix {
        let n = self.dim();
        let mut out = FMatrix::zeros(&self.field, a.cols() * n, a.rows() * n);
        for g in 0..a.rows() {
            for h in 0..a.cols() {
                let p = a.get(g, h);
                if p.is_zero() {
                    continue;
                }
                let blk = self.poly_action(p, cache);
                for r in 0..n {
                    for c in 0..n {
                        let x = blk.get(r, c);
                        if x != 0 {
                            out.set(h * n + r, g * n + c, x);
                        }
                    }
                }
            }
        }
        out
    }
}

/// `Ext^i_R(M, N)` for `0 <= i <= D` with the action of each `χ_j`.
#[derive(Clone, Debug)]
pub struct ExtTable {
    field: Field,
    codim: usize,
    dims: Vec<usize>,
    /// `actions[j][i] : Ext^i -> Ext^{i+2}`, for `i + 2 <= D`.
    actions: Vec<Vec<FMatrix>>,
}

impl ExtTable {
    pub fn new(field: &Field, dims: Vec<usize>, actions: Vec<Vec<FMatrix>>) -> Self {
        ExtTable { field: field.clone(), codim: actions.len(), dims, actions }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn horizon(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims.get(i).copied().unwrap_or(0)
    }

    pub fn action(&self, j: usize, i: usize) -> &FMatrix {
        &self.actions[j][i]
    }

    /// The table restricted to degrees `0..=d`.
    pub fn truncate(&self, d: usize) -> ExtTable {
        let d = d.min(self.horizon());
        ExtTable {
            field: self.field.clone(),
            codim: self.codim,
            dims: self.dims[..=d].to_vec(),
            actions: self.actions.iter().map(|a| a[..(d + 1).saturating_sub(2).min(a.len())].to_vec()).collect(),
        }
    }

    /// `χ_j χ_l = χ_l χ_j` wherever both composites are in range.
    pub fn actions_commute(&self) -> bool {
        for i in 0..self.dims.len().saturating_sub(4) {
            for j in 0..self.codim {
                for l in j + 1..self.codim {
                    let a = self.actions[l][i + 2].mul(&self.actions[j][i]).unwrap();
                    let b = self.actions[j][i + 2].mul(&self.actions[l][i]).unwrap();
                    if a != b {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Applies `χ^a` to `v ∈ Ext^i`, variables in ascending order.
    pub fn apply_monomial(&self, exps: &[u16], i: usize, v: &[Elem]) -> Option<Vec<Elem>> {
        let mut cur = v.to_vec();
        let mut deg = i;
        for (j, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                let a = self.actions[j].get(deg)?;
                cur = a.mul_vec(&cur).ok()?;
                deg += 2;
            }
        }
        Some(cur)
    }

    /// Ext is zero from some degree on within the horizon (checked on two
    /// consecutive top degrees).
    pub fn is_eventually_zero(&self) -> bool {
        let d = self.horizon();
        d >= 1 && self.dims[d] == 0 && self.dims[d - 1] == 0
    }
}

fn is_residue_field(ring: &RingSetup, n: &ModulePresentation) -> bool {
    let n = minimize(ring, n);
    n.gens() == [0] && {
        let k = minimize(ring, &ModulePresentation::residue_field(ring));
        let mut a = n.relations().format(ring);
        let mut b = k.relations().format(ring);
        a.sort();
        b.sort();
        a == b
    }
}

/// The resolution data needed for Ext through degree `d`.
pub fn operators_through(ring: &RingSetup, m: &ModulePresentation, d: usize) -> Result<OperatorFamily> {
    let res = minimal_resolution(ring, m, d + 1);
    eisenbud_operators(ring, &lift_resolution(&res))
}

/// As [`ext_table`], from a resolution computed through at least `d + 1`.
pub fn ext_table_from_resolution(
    ring: &RingSetup,
    res: &Resolution,
    n: &ModulePresentation,
    d: usize,
) -> Result<ExtTable> {
    if res.computed_to() < d + 1 {
        return Err(Error::InsufficientDepth { need: d + 1, have: res.computed_to() });
    }
    let fam = eisenbud_operators(ring, &lift_resolution(res))?;
    if is_residue_field(ring, n) {
        return Ok(ext_table_residue(ring, &fam, d));
    }
    let fm = FiniteModule::from_presentation(ring, n, 256)?;
    ext_table_general(ring, &fam, &fm, d)
}

/// `Ext_R(M, N)` through degree `d`, with `N` of finite length.
pub fn ext_table(ring: &RingSetup, m: &ModulePresentation, n: &ModulePresentation, d: usize) -> Result<ExtTable> {
    let fam = operators_through(ring, m, d)?;
    if is_residue_field(ring, n) {
        return Ok(ext_table_residue(ring, &fam, d));
    }
    let fm = FiniteModule::from_presentation(ring, n, 256)?;
    ext_table_general(ring, &fam, &fm, d)
}

/// For `N = k`: `Ext^i` is dual to the generators of `F_i` and `χ_j` acts by
/// the transpose of `t_j` modulo the maximal ideal.
pub fn ext_table_residue(ring: &RingSetup, fam: &OperatorFamily, d: usize) -> ExtTable {
    let k = ring.field();
    let res = fam.resolution();
    let dims: Vec<usize> = (0..=d).map(|i| res.term(i).rank()).collect();
    let mut actions = Vec::new();
    for j in 0..ring.codim() {
        let mut per = Vec::new();
        for i in 0..=d.saturating_sub(2) {
            if i + 2 > d {
                break;
            }
            let m = match fam.operator(j, i + 2) {
                Some(t) => t.constant_part(ring).transpose(),
                None => FMatrix::zeros(k, dims[i + 2], dims[i]),
            };
            per.push(m);
        }
        actions.push(per);
    }
    ExtTable::new(k, dims, actions)
}

/// Cohomology of `Hom_R(F, N)`, with `χ_j` acting by precomposition with `t_j`.
pub fn ext_table_general(ring: &RingSetup, fam: &OperatorFamily, n: &FiniteModule, d: usize) -> Result<ExtTable> {
    let k = ring.field();
    let res = fam.resolution();
    let mut cache = HashMap::new();
    // δ_i : Hom(F_i, N) -> Hom(F_{i+1}, N)
    let delta: Vec<FMatrix> = (0..=d).map(|i| n.precompose(&res.diff(i + 1), &mut cache)).collect();
    struct Coh {
        reps: Vec<Vec<Elem>>,
        solver: FMatrix,
    }
    let mut coh: Vec<Coh> = Vec::new();
    for i in 0..=d {
        let total = res.term(i).rank() * n.dim();
        let cycles = delta[i].kernel();
        let mut space = Subspace::new(k, total);
        let mut boundaries = Vec::new();
        if i > 0 {
            for b in delta[i - 1].columns() {
                if space.insert(&b) {
                    boundaries.push(b);
                }
            }
        }
        let mut reps = Vec::new();
        for z in cycles.columns() {
            if space.insert(&z) {
                reps.push(z);
            }
        }
        let mut cols = reps.clone();
        cols.extend(boundaries);
        let solver = FMatrix::from_columns(k, total, &cols);
        coh.push(Coh { reps, solver });
    }
    let dims: Vec<usize> = coh.iter().map(|c| c.reps.len()).collect();
    let mut actions = Vec::new();
    for j in 0..ring.codim() {
        let mut per = Vec::new();
        for i in 0..=d {
            if i + 2 > d {
                break;
            }
            let t = fam.operator(j, i + 2).expect("operators computed through the horizon");
            let pre = n.precompose(t, &mut cache);
            let mut mat = FMatrix::zeros(k, dims[i + 2], dims[i]);
            for (c, z) in coh[i].reps.iter().enumerate() {
                let img = pre.mul_vec(z)?;
                let x = coh[i + 2]
                    .solver
                    .solve(&img)?
                    .ok_or_else(|| Error::Input("χ-action does not preserve cocycles".into()))?;
                for r in 0..dims[i + 2] {
                    mat.set(r, c, x[r]);
                }
            }
            per.push(mat);
        }
        actions.push(per);
    }
    Ok(ExtTable::new(k, dims, actions))
}

// ---------------------------------------------------------------------------
// Presentations over k[χ]

/// Outcome of the two stabilization checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stabilization {
    pub window: usize,
    pub n0: usize,
    pub horizon: usize,
    /// Generators in the window span every degree up to the horizon.
    pub spans: bool,
    /// The annihilator is unchanged when the horizon is lowered by two.
    pub annihilator_stable: bool,
}

impl Stabilization {
    pub fn stabilized(&self) -> bool {
        self.spans && self.annihilator_stable
    }
}

/// A presentation of `Ext^{≥ n0}` over `k[χ]`, valid through the horizon.
#[derive(Clone, Debug)]
pub struct ChiPresentation {
    module: FreeModule,
    /// Generators as vectors in `Ext^{deg}`.
    gens: Vec<(usize, Vec<Elem>)>,
    relations: Vec<PolyVec>,
    annihilator: Vec<Poly>,
    stabilization: Stabilization,
}

impl ChiPresentation {
    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn generator_degrees(&self) -> Vec<usize> {
        self.gens.iter().map(|g| g.0).collect()
    }

    pub fn relations(&self) -> &[PolyVec] {
        &self.relations
    }

    /// Generators of the annihilator ideal (not saturated).
    pub fn annihilator(&self) -> &[Poly] {
        &self.annihilator
    }

    pub fn stabilization(&self) -> &Stabilization {
        &self.stabilization
    }

    /// `dim_k` of the presented module in cohomological degree `t`.
    pub fn hilbert(&self, ring: &RingSetup, t: usize) -> usize {
        let chi = ring.chi_ring();
        let basis = free_basis(ring, &self.gens, t);
        let mut space = Subspace::new(chi.field(), basis.len());
        let index: HashMap<(usize, Monomial), usize> = basis.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        for r in &self.relations {
            let dr = self.module.degree(r).unwrap() as usize;
            if dr > t {
                continue;
            }
            for b in chi.monomials_of_degree((t - dr) as u32) {
                let v = self.module.mul_term(r, &b, 1);
                space.insert(&vec_coords(&v, &index, basis.len()));
            }
        }
        basis.len() - space.dim()
    }
}

fn free_basis(ring: &RingSetup, gens: &[(usize, Vec<Elem>)], t: usize) -> Vec<(usize, Monomial)> {
    let chi = ring.chi_ring();
    let mut out = Vec::new();
    for (g, (dg, _)) in gens.iter().enumerate() {
        if *dg <= t {
            for m in chi.monomials_of_degree((t - dg) as u32) {
                out.push((g, m));
            }
        }
    }
    out
}

fn vec_coords(v: &PolyVec, index: &HashMap<(usize, Monomial), usize>, len: usize) -> Vec<Elem> {
    let mut out = vec![0; len];
    for (c, m, x) in v.terms() {
        out[index[&(*c as usize, m.clone())]] = *x;
    }
    out
}

/// Image of `χ·Ext^{t-2}` (together with `extra`) inside `Ext^t`.
fn chi_image(table: &ExtTable, t: usize) -> Subspace {
    let mut s = Subspace::new(&table.field, table.dim(t));
    if t >= 2 {
        for j in 0..table.codim {
            for col in table.actions[j][t - 2].columns() {
                s.insert(&col);
            }
        }
    }
    s
}

fn spans_from(table: &ExtTable, n0: usize, w: usize) -> bool {
    (n0 + w + 1..=table.horizon()).all(|t| t < n0 + 2 || chi_image(table, t).dim() == table.dim(t))
}

/// Presents `Ext^{≥ n0}` over `k[χ]` with generators in `[n0, n0 + w]`.
pub fn chi_presentation(ring: &RingSetup, table: &ExtTable, w: usize) -> Result<ChiPresentation> {
    let d = table.horizon();
    if w == 0 || d < 2 * w + 2 {
        return Err(Error::Input(format!("horizon {d} is too small for window {w}")));
    }
    let max_n0 = d - 2 * w - 2;
    let found = (0..=max_n0).find(|&n0| spans_from(table, n0, w));
    let spans = found.is_some();
    let n0 = found.unwrap_or(max_n0);
    let mut pres = present_from(ring, table, n0, w, d)?;
    let lower = present_from(ring, &table.truncate(d - 2), n0, w, d - 2)?;
    let a = ConeIdeal::new(ring.chi_ring(), &pres.annihilator).saturate();
    let b = ConeIdeal::new(ring.chi_ring(), &lower.annihilator).saturate();
    pres.stabilization = Stabilization { window: w, n0, horizon: d, spans, annihilator_stable: a.gens() == b.gens() };
    Ok(pres)
}

fn present_from(ring: &RingSetup, table: &ExtTable, n0: usize, w: usize, d: usize) -> Result<ChiPresentation> {
    let k = ring.field();
    let chi = ring.chi_ring();
    let mut gens: Vec<(usize, Vec<Elem>)> = Vec::new();
    for t in n0..=(n0 + w).min(d) {
        let mut s = if t >= n0 + 2 { chi_image(table, t) } else { Subspace::new(k, table.dim(t)) };
        for i in 0..table.dim(t) {
            let mut e = vec![0; table.dim(t)];
            e[i] = 1;
            if s.insert(&e) {
                gens.push((t, e));
            }
        }
    }
    let module = FreeModule::new(chi, gens.iter().map(|g| g.0 as i64).collect());
    let mut relations: Vec<PolyVec> = Vec::new();
    for t in n0..=d {
        let basis = free_basis(ring, &gens, t);
        if basis.is_empty() {
            continue;
        }
        let index: HashMap<(usize, Monomial), usize> = basis.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let cols: Vec<Vec<Elem>> = basis
            .iter()
            .map(|(g, m)| table.apply_monomial(m.exponents(), gens[*g].0, &gens[*g].1).expect("within horizon"))
            .collect();
        let eval = FMatrix::from_columns(k, table.dim(t), &cols);
        let mut space = Subspace::new(k, basis.len());
        for r in &relations {
            let dr = module.degree(r).unwrap() as usize;
            for b in chi.monomials_of_degree((t - dr) as u32) {
                space.insert(&vec_coords(&module.mul_term(r, &b, 1), &index, basis.len()));
            }
        }
        for z in eval.kernel().columns() {
            if space.insert(&z) {
                let terms = z
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| **x != 0)
                    .map(|(i, x)| (basis[i].0 as u32, basis[i].1.clone(), *x))
                    .collect();
                relations.push(module.from_terms(terms));
            }
        }
    }
    let annihilator = module_annihilator(&module, &relations);
    let stabilization = Stabilization { window: w, n0, horizon: d, spans: true, annihilator_stable: true };
    Ok(ChiPresentation { module, gens, relations, annihilator, stabilization })
}

/// `ann(F / U) = ∩_g (U : e_g)`.
pub fn module_annihilator(module: &FreeModule, relations: &[PolyVec]) -> Vec<Poly> {
    let chi = module.ring();
    let mut acc: Option<Vec<Poly>> = None;
    for g in 0..module.rank() {
        let mut gens = vec![module.unit(g)];
        gens.extend(relations.iter().cloned());
        let (s, syz) = syzygies(module, &gens);
        let colon: Vec<Poly> =
            syz.iter().map(|v| s.to_components(v)[0].clone()).filter(|p| !p.is_zero()).collect();
        acc = Some(match acc {
            None => colon,
            Some(a) => intersect(chi, &a, &colon),
        });
    }
    acc.unwrap_or_else(|| vec![chi.one()])
}

/// A computed support, with the data that produced it.
#[derive(Clone, Debug)]
pub struct SupportResult {
    pub cone: ConeIdeal,
    pub stabilization: Stabilization,
    pub dims: Vec<usize>,
}

impl SupportResult {
    pub fn stabilized(&self) -> bool {
        self.stabilization.stabilized()
    }
}

/// `V(ann)` of the presented module, as a saturated ideal.
pub fn support_cone(ring: &RingSetup, pres: &ChiPresentation) -> ConeIdeal {
    ConeIdeal::new(ring.chi_ring(), pres.annihilator()).saturate()
}

/// `Supp_R(M, N)` with `N` of finite length.
pub fn support_pair(
    ring: &RingSetup,
    m: &ModulePresentation,
    n: &ModulePresentation,
    d: usize,
    w: usize,
) -> Result<SupportResult> {
    let table = ext_table(ring, m, n, d)?;
    support_from_table(ring, &table, w)
}

pub fn support_from_table(ring: &RingSetup, table: &ExtTable, w: usize) -> Result<SupportResult> {
    let pres = chi_presentation(ring, table, w)?;
    Ok(SupportResult { cone: support_cone(ring, &pres), stabilization: pres.stabilization.clone(), dims: table.dims.clone() })
}

/// `Supp_R(M, k)` with default parameters.
pub fn support_of(ring: &RingSetup, m: &ModulePresentation) -> Result<SupportResult> {
    support_pair(ring, m, &ModulePresentation::residue_field(ring), DEFAULT_HORIZON, DEFAULT_WINDOW)
}

// ---------------------------------------------------------------------------
// Pointwise test

/// Whether `α ∈ P^{c-1}(F_{p^e})` lies in `Supp(M, k)`: `M` has infinite
/// projective dimension over `Q/(Σ α_j f_j)`.
pub fn hypersurface_oracle(ring: &RingSetup, m: &ModulePresentation, field: &Field, alpha: &[Elem]) -> Result<bool> {
    let ha = ring.hypersurface(field, alpha)?;
    let qe = ha.q();
    let m = minimize(ring, m);
    let gens = m.gens().to_vec();
    let lift = |p: &Poly| qe.from_terms(p.terms().to_vec());
    let mut cols: Vec<Vec<Poly>> = m.relations().columns().iter().map(|c| c.iter().map(lift).collect()).collect();
    for fj in ring.f() {
        for a in 0..gens.len() {
            let mut col = vec![qe.zero(); gens.len()];
            col[a] = lift(fj);
            cols.push(col);
        }
    }
    let ma = ModulePresentation::from_columns(&ha, gens, cols)?;
    let res = minimal_resolution(&ha, &ma, ring.nvars() + 2);
    Ok(!res.terminated())
}

/// Points of `P^{c-1}` over `F_{p^e}` at which the oracle applies (`f_α`
/// homogeneous).
pub fn oracle_points(ring: &RingSetup, e: u32) -> Result<(Field, Vec<Vec<Elem>>)> {
    let field = Field::extension(ring.field().characteristic() as u64, e)?;
    let degs = ring.f_degrees();
    let pts = projective_points(&field, ring.codim())
        .into_iter()
        .filter(|a| {
            let s: Vec<u32> = (0..a.len()).filter(|&j| a[j] != 0).map(|j| degs[j]).collect();
            s.windows(2).all(|w| w[0] == w[1])
        })
        .collect();
    Ok((field, pts))
}

/// One pointwise comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub extension_degree: u32,
    pub point: Vec<String>,
    pub ideal_vanishes: bool,
    pub oracle: bool,
}

impl OracleCheck {
    pub fn agrees(&self) -> bool {
        self.ideal_vanishes == self.oracle
    }
}

/// Compares the support ideal with the oracle at every admissible point over
/// `F_{p^e}` for `e = 1..=max_e`.
pub fn oracle_compare(ring: &RingSetup, m: &ModulePresentation, cone: &ConeIdeal, max_e: u32) -> Result<Vec<OracleCheck>> {
    let mut out = Vec::new();
    for e in 1..=max_e {
        let (field, pts) = oracle_points(ring, e)?;
        let checks: Result<Vec<OracleCheck>> = pts
            .par_iter()
            .map(|a| {
                let oracle = hypersurface_oracle(ring, m, &field, a)?;
                Ok(OracleCheck {
                    extension_degree: e,
                    point: a.iter().map(|x| field.format(*x)).collect(),
                    ideal_vanishes: cone.vanishes_at(&field, a),
                    oracle,
                })
            })
            .collect();
        out.extend(checks?);
    }
    Ok(out)
}

/// Rational points of `V(cone)` over `F_{p^e}`.
pub fn support_points(ring: &RingSetup, cone: &ConeIdeal, e: u32) -> Result<Vec<Vec<String>>> {
    let field = Field::extension(ring.field().characteristic() as u64, e)?;
    Ok(projective_points(&field, ring.codim())
        .into_iter()
        .filter(|a| cone.vanishes_at(&field, a))
        .map(|a| a.iter().map(|x| field.format(*x)).collect())
        .collect())
}

/// Perfection over `R`: the minimal resolution terminates within `d` steps.
/// Cross-checked against emptiness of `Supp(M, k)`.
pub fn is_perfect(ring: &RingSetup, m: &ModulePresentation, d: usize) -> Result<bool> {
    let res = minimal_resolution(ring, m, d);
    let s = support_pair(ring, m, &ModulePresentation::residue_field(ring), d.max(2 * DEFAULT_WINDOW + 2), DEFAULT_WINDOW)?;
    let empty = s.cone.is_empty_in_proj();
    match (res.terminated(), empty) {
        (true, true) => Ok(true),
        (false, false) if s.stabilized() => Ok(false),
        (true, false) => Err(Error::Inconclusive("resolution terminated but the support is nonempty".into())),
        _ => Err(Error::Inconclusive(format!("no conclusion within {d} steps"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(r: &RingSetup, s: &str) -> ModulePresentation {
        ModulePresentation::cyclic(r, &[r.q().parse(s).unwrap()]).unwrap()
    }

    #[test]
    fn ext_of_residue_field() {
        let r = RingSetup::flagship();
        let k = ModulePresentation::residue_field(&r);
        let t = ext_table(&r, &k, &k, 8).unwrap();
        assert_eq!(t.dims(), &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert!(t.actions_commute());
        // the exterior class in Ext^2 is not a χ-multiple of Ext^0
        for i in 1..=6 {
            let mut s = Subspace::new(r.field(), t.dim(i + 2));
            for j in 0..2 {
                for c in t.action(j, i).columns() {
                    s.insert(&c);
                }
            }
            assert_eq!(s.dim(), t.dim(i + 2));
        }
    }

    #[test]
    fn ext_of_cyclic_module() {
        let r = RingSetup::flagship();
        let k = ModulePresentation::residue_field(&r);
        let t = ext_table(&r, &cyc(&r, "x"), &k, 8).unwrap();
        assert_eq!(t.dims(), &[1; 9]);
        for i in 0..=6 {
            assert_eq!(t.action(0, i), &FMatrix::identity(r.field(), 1));
            assert!(t.action(1, i).is_zero());
        }
        let free = ext_table(&r, &ModulePresentation::free(vec![0]), &k, 6).unwrap();
        assert_eq!(free.dims(), &[1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn general_route_matches_shortcut_for_k() {
        let r = RingSetup::flagship();
        let fam = operators_through(&r, &ModulePresentation::residue_field(&r), 6).unwrap();
        let a = ext_table_residue(&r, &fam, 6);
        let b = ext_table_general(&r, &fam, &FiniteModule::residue_field(&r), 6).unwrap();
        assert_eq!(a.dims(), b.dims());
        for j in 0..2 {
            for i in 0..=4 {
                assert_eq!(a.action(j, i), b.action(j, i));
            }
        }
    }

    #[test]
    fn finite_module_of_cyclic() {
        let r = RingSetup::flagship();
        let n = FiniteModule::from_presentation(&r, &cyc(&r, "x"), 64).unwrap();
        // R/(x) has basis 1, y
        assert_eq!(n.degrees(), &[0, 1]);
        assert!(n.var_action(0).is_zero());
        assert_eq!(n.var_action(1).get(1, 0), 1);
        let r3 = RingSetup::flagship_with_line();
        assert!(matches!(
            FiniteModule::from_presentation(&r3, &cyc(&r3, "x"), 16),
            Err(Error::NotFiniteLength)
        ));
    }

    #[test]
    fn supports_of_basic_modules() {
        let r = RingSetup::flagship();
        let chi = r.chi_ring();
        let s = support_of(&r, &cyc(&r, "x")).unwrap();
        assert!(s.stabilized());
        assert_eq!(s.cone.format_gens(), vec!["x2"]);
        let sk = support_of(&r, &ModulePresentation::residue_field(&r)).unwrap();
        assert!(sk.cone.gens().is_empty() || sk.cone.gens().iter().all(|g| g.is_zero()));
        let sr = support_of(&r, &ModulePresentation::free(vec![0])).unwrap();
        assert!(sr.cone.is_empty_in_proj());
        let _ = chi;
    }

    #[test]
    fn presentation_reproduces_dimensions() {
        let r = RingSetup::flagship();
        let k = ModulePresentation::residue_field(&r);
        let t = ext_table(&r, &k, &k, 10).unwrap();
        let p = chi_presentation(&r, &t, 2).unwrap();
        let n0 = p.stabilization().n0;
        for d in n0..=10 {
            assert_eq!(p.hilbert(&r, d), t.dim(d), "degree {d}");
        }
    }

    #[test]
    fn oracle_examples() {
        let r = RingSetup::flagship();
        let f2 = Field::prime(2).unwrap();
        let m = cyc(&r, "x");
        assert!(hypersurface_oracle(&r, &m, &f2, &[1, 0]).unwrap());
        assert!(!hypersurface_oracle(&r, &m, &f2, &[0, 1]).unwrap());
        assert!(!hypersurface_oracle(&r, &ModulePresentation::free(vec![0]), &f2, &[1, 1]).unwrap());
    }

    #[test]
    fn pairs_with_finite_length_second_argument() {
        let r = RingSetup::flagship();
        let m = cyc(&r, "x");
        let s = support_pair(&r, &m, &m, 10, 2).unwrap();
        assert_eq!(s.cone.format_gens(), vec!["x2"]);
        let s = support_pair(&r, &ModulePresentation::residue_field(&r), &m, 10, 2).unwrap();
        assert_eq!(s.cone.format_gens(), vec!["x2"]);
    }

    #[test]
    fn perfection() {
        let r = RingSetup::flagship();
        assert!(is_perfect(&r, &ModulePresentation::free(vec![0, 1]), 6).unwrap());
        assert!(!is_perfect(&r, &ModulePresentation::residue_field(&r), 6).unwrap());
        assert!(!is_perfect(&r, &cyc(&r, "x"), 6).unwrap());
    }
}
