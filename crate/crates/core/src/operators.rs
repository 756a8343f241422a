//! Eisenbud operators on minimal resolutions and the Koszul objects `K(φ|M)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complexes::{
    cone, mat_mul, minimal_resolution, minimize, syzygy_module, ChainMap, FreeComplex, ModulePresentation,
    PolyMatrix, Resolution,
};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::RingSetup;

/// The differentials of a resolution read as matrices over `Q`.
#[derive(Clone, Debug)]
pub struct Lift {
    resolution: Resolution,
    /// `dt[i]` lifts `d_i`; index 0 is unused.
    dt: Vec<PolyMatrix>,
}

impl Lift {
    pub fn resolution(&self) -> &Resolution {
        &self.resolution
    }

    /// `d̃_i`, for `1 <= i <= computed_to`.
    pub fn diff(&self, i: usize) -> &PolyMatrix {
        &self.dt[i]
    }

    pub fn len(&self) -> usize {
        self.dt.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dt.len() <= 1
    }
}

/// Normal forms are already canonical representatives over `Q`.
pub fn lift_resolution(res: &Resolution) -> Lift {
    let mut dt = vec![PolyMatrix::zero(&[], &[])];
    for i in 1..=res.computed_to() {
        dt.push(res.diff(i));
    }
    Lift { resolution: res.clone(), dt }
}

/// Operator matrices `t̃_j^{(i)} : F_i -> F_{i-2}` with `d̃ d̃ = Σ f_j t̃_j`.
#[derive(Clone, Debug)]
pub struct OperatorFamily {
    lift: Lift,
    /// `ops[i][j]`; empty for `i < 2`.
    ops: Vec<Vec<PolyMatrix>>,
}

impl OperatorFamily {
    pub fn codim(&self) -> usize {
        self.ops.iter().map(|v| v.len()).max().unwrap_or(0)
    }

    pub fn computed_to(&self) -> usize {
        self.ops.len().saturating_sub(1)
    }

    pub fn resolution(&self) -> &Resolution {
        &self.lift.resolution
    }

    pub fn lift(&self) -> &Lift {
        &self.lift
    }

    /// `t̃_j` at homological index `i`.
    pub fn operator(&self, j: usize, i: usize) -> Option<&PolyMatrix> {
        self.ops.get(i).and_then(|v| v.get(j))
    }
}

pub fn eisenbud_operators(ring: &RingSetup, lift: &Lift) -> Result<OperatorFamily> {
    let q = ring.q();
    let c = ring.codim();
    let fdeg = ring.f_degrees();
    let res = &lift.resolution;
    let mut ops: Vec<Vec<PolyMatrix>> = vec![Vec::new(), Vec::new()];
    for i in 2..lift.len() {
        let src = res.term(i);
        let tgt = res.term(i - 2);
        let sq = mat_mul(ring, lift.diff(i - 1), lift.diff(i), false);
        let mut mats: Vec<PolyMatrix> = (0..c)
            .map(|j| PolyMatrix::zero(tgt.twist(fdeg[j] as i64).degrees(), src.degrees()))
            .collect();
        for r in 0..sq.rows() {
            for col in 0..sq.cols() {
                let h = sq.get(r, col);
                if h.is_zero() {
                    continue;
                }
                let t = ring
                    .express_in_f(h)
                    .ok_or_else(|| Error::DecompositionFailed(format!("entry ({r}, {col}) of d^2 at index {i}")))?;
                let want = src.degrees()[col] - tgt.degrees()[r];
                for j in 0..c {
                    let d = want - fdeg[j] as i64;
                    let tj = if d < 0 { q.zero() } else { q.homogeneous_component(&t[j], d as u32) };
                    mats[j].set(r, col, tj);
                }
                // exact identity over Q, using the homogeneous parts
                let mut acc = q.zero();
                for (j, fj) in ring.f().iter().enumerate() {
                    acc = q.add(&acc, &q.mul(fj, mats[j].get(r, col)));
                }
                if &acc != h {
                    return Err(Error::DecompositionFailed(format!("entry ({r}, {col}) of d^2 at index {i}")));
                }
            }
        }
        ops.push(mats);
    }
    let family = OperatorFamily { lift: lift.clone(), ops };
    for j in 0..c {
        operator_j_chain_map(ring, &family, j)?.verify(ring)?;
    }
    Ok(family)
}

/// `t_j` as a degree-zero chain map `F -> Σ^2 F(deg f_j)`, reduced modulo `(f)`.
pub fn operator_j_chain_map(ring: &RingSetup, fam: &OperatorFamily, j: usize) -> Result<ChainMap> {
    let mut a = vec![0u16; ring.codim()];
    a[j] = 1;
    monomial_chain_map(ring, fam, &a, ring.field().one())
}

fn twist_of(ring: &RingSetup, a: &[u16]) -> i64 {
    ring.f_degrees().iter().zip(a).map(|(d, e)| *d as i64 * *e as i64).sum()
}

fn composite_at(ring: &RingSetup, fam: &OperatorFamily, a: &[u16], n: usize) -> Option<PolyMatrix> {
    let res = fam.resolution();
    let mut cur: Option<PolyMatrix> = None;
    let mut idx = n;
    let mut shift = 0i64;
    for (j, &e) in a.iter().enumerate() {
        for _ in 0..e {
            if idx < 2 {
                return Some(PolyMatrix::zero(&[], res.term(n).degrees()));
            }
            let t = fam.operator(j, idx)?;
            let t = t.twist(shift);
            cur = Some(match cur {
                None => t,
                Some(m) => mat_mul(ring, &t, &m, true),
            });
            shift += ring.f_degrees()[j] as i64;
            idx -= 2;
        }
    }
    cur.map(|m| crate::complexes::mat_nf(ring, &m))
}

fn monomial_chain_map(ring: &RingSetup, fam: &OperatorFamily, a: &[u16], coeff: u32) -> Result<ChainMap> {
    let e: usize = a.iter().map(|&x| x as usize).sum();
    let tw = twist_of(ring, a);
    build_chain_map(ring, fam, 2 * e as i64, tw, &[(a.to_vec(), coeff)])
}

fn build_chain_map(
    ring: &RingSetup,
    fam: &OperatorFamily,
    d: i64,
    tw: i64,
    terms: &[(Vec<u16>, u32)],
) -> Result<ChainMap> {
    let res = fam.resolution();
    let src = res.complex().clone();
    let target = src.shift(ring, d, tw);
    let top = if src.is_bounded() { src.high().max(0) } else { res.computed_to() as i64 };
    let mut maps = BTreeMap::new();
    for n in src.low()..=top {
        let tdeg = target.term(n).degrees().to_vec();
        let sdeg = src.term(n).degrees().to_vec();
        let mut acc = PolyMatrix::zero(&tdeg, &sdeg);
        if n - d >= 0 && !sdeg.is_empty() && !tdeg.is_empty() {
            for (a, c) in terms {
                let m = if d == 0 {
                    PolyMatrix::identity(ring, &sdeg)
                } else {
                    composite_at(ring, fam, a, n as usize)
                        .ok_or(Error::InsufficientDepth { need: n as usize, have: fam.computed_to() })?
                };
                let m = m.scale(ring, *c);
                acc = crate::complexes::mat_add(ring, &acc, &PolyMatrix::from_columns(&tdeg, &sdeg, &m.columns()));
            }
        }
        maps.insert(n, acc);
    }
    let cm = ChainMap::new(src, target, maps);
    Ok(cm)
}

/// Cohomological degree and internal twist of a homogeneous `φ ∈ k[χ]`.
pub fn phi_bidegree(ring: &RingSetup, phi: &Poly) -> Result<(i64, i64)> {
    let chi = ring.chi_ring();
    if phi.is_zero() {
        return Err(Error::Input("φ must be nonzero".into()));
    }
    if !phi.is_homogeneous() {
        return Err(Error::NonHomogeneous(chi.format(phi)));
    }
    let d = phi.degree().unwrap() as i64;
    let mut twists = phi.terms().iter().map(|(m, _)| twist_of(ring, m.exponents()));
    let tw = twists.next().unwrap();
    if twists.any(|t| t != tw) {
        return Err(Error::NonHomogeneous(format!(
            "{} mixes operators of different internal degrees",
            chi.format(phi)
        )));
    }
    Ok((d, tw))
}

/// The chain map `φ(t_1, ..., t_c) : F -> Σ^{2e} F(twist)`, verified over `R`.
pub fn operator_chain_map(ring: &RingSetup, fam: &OperatorFamily, phi: &Poly) -> Result<ChainMap> {
    let (d, tw) = phi_bidegree(ring, phi)?;
    let terms: Vec<(Vec<u16>, u32)> = phi.terms().iter().map(|(m, c)| (m.exponents().to_vec(), *c)).collect();
    let cm = build_chain_map(ring, fam, d, tw, &terms)?;
    cm.verify(ring)?;
    Ok(cm)
}

/// Resolution plus operators through index `depth`.
pub fn operators_for(ring: &RingSetup, m: &ModulePresentation, depth: usize) -> Result<OperatorFamily> {
    let res = minimal_resolution(ring, m, depth);
    eisenbud_operators(ring, &lift_resolution(&res))
}

/// One step of the thick-subcategory witness for `K(φ|M)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum CertificateStep {
    Cone { phi: String },
    Syzygy { n: i64 },
}

/// `K(φ|M)` for a single homogeneous `φ`: the cone of `φ(t)` followed by the
/// syzygy at the cohomological degree of `φ`.
pub fn koszul_cone_step(ring: &RingSetup, m: &ModulePresentation, phi: &Poly) -> Result<ModulePresentation> {
    let m = minimize(ring, m);
    if m.is_zero_presentation() {
        return Ok(m);
    }
    let (d, _) = phi_bidegree(ring, phi)?;
    let depth = d as usize + 2;
    let fam = operators_for(ring, &m, depth)?;
    let u = operator_chain_map(ring, &fam, phi)?;
    let c: FreeComplex = cone(ring, &u)?;
    syzygy_module(ring, &c, d)
}

/// Iterated Koszul cones, with the certificate of every step.
pub fn koszul_cone(
    ring: &RingSetup,
    m: &ModulePresentation,
    phis: &[Poly],
) -> Result<(ModulePresentation, Vec<CertificateStep>)> {
    let mut cur = minimize(ring, m);
    let mut cert = Vec::new();
    for phi in phis {
        let (d, _) = phi_bidegree(ring, phi)?;
        cur = koszul_cone_step(ring, &cur, phi)?;
        cert.push(CertificateStep::Cone { phi: ring.chi_ring().format(phi) });
        cert.push(CertificateStep::Syzygy { n: d });
    }
    Ok((cur, cert))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(r: &RingSetup, s: &str) -> Poly {
        r.chi_ring().parse(s).unwrap()
    }

    #[test]
    fn operators_of_cyclic_module() {
        let r = RingSetup::flagship();
        let m = ModulePresentation::cyclic(&r, &[r.q().parse("x").unwrap()]).unwrap();
        let fam = operators_for(&r, &m, 5).unwrap();
        for i in 2..=5 {
            assert_eq!(r.q().format(fam.operator(0, i).unwrap().get(0, 0)), "1");
            assert!(fam.operator(1, i).unwrap().is_zero());
        }
        let z = operator_chain_map(&r, &fam, &chi(&r, "x2")).unwrap();
        assert!(z.maps().values().all(|m| m.is_zero()));
    }

    #[test]
    fn operators_of_residue_field_satisfy_identity() {
        let r = RingSetup::flagship();
        let fam = operators_for(&r, &ModulePresentation::residue_field(&r), 6).unwrap();
        let q = r.q();
        for i in 2..=6 {
            let sq = mat_mul(&r, fam.lift().diff(i - 1), fam.lift().diff(i), false);
            for row in 0..sq.rows() {
                for col in 0..sq.cols() {
                    let mut acc = q.zero();
                    for j in 0..2 {
                        acc = q.add(&acc, &q.mul(&r.f()[j], fam.operator(j, i).unwrap().get(row, col)));
                    }
                    assert_eq!(&acc, sq.get(row, col));
                }
            }
        }
        let s = operator_chain_map(&r, &fam, &chi(&r, "x1+x2")).unwrap();
        assert!(s.verify(&r).is_ok());
    }

    #[test]
    fn free_module_has_no_operators() {
        let r = RingSetup::flagship();
        let fam = operators_for(&r, &ModulePresentation::free(vec![0]), 4).unwrap();
        assert!(fam.operator(0, 2).unwrap().cols() == 0);
        let id = operator_chain_map(&r, &fam, &chi(&r, "1")).unwrap();
        assert_eq!(id.at(0).unwrap(), PolyMatrix::identity(&r, &[0]));
    }

    #[test]
    fn cone_on_constant_kills_module() {
        let r = RingSetup::flagship();
        let (m, cert) = koszul_cone(&r, &ModulePresentation::residue_field(&r), &[chi(&r, "1")]).unwrap();
        assert!(m.is_zero_presentation());
        assert_eq!(cert.len(), 2);
        let json = serde_json::to_string(&cert).unwrap();
        assert_eq!(json, r#"[{"op":"cone","phi":"1"},{"op":"syzygy","n":0}]"#);
    }

    #[test]
    fn mixed_internal_degrees_are_rejected() {
        let r = RingSetup::parse(2, &[("x", 1), ("y", 1)], &["x^2", "y^3"]).unwrap();
        assert!(matches!(phi_bidegree(&r, &chi(&r, "x1+x2")), Err(Error::NonHomogeneous(_))));
        assert_eq!(phi_bidegree(&r, &chi(&r, "x1*x2")).unwrap(), (4, 5));
    }
}
