//! Realizing closed cones as supports of finite modules.

use rayon::prelude::*;
use serde::Serialize;

use crate::complexes::{homology, minimal_resolution, syzygy_of_module, FreeComplex, GradedFree, ModulePresentation};
use crate::error::{Error, Result};
use crate::groebner::{proj_compare, ConeIdeal, ProjRelation};
use crate::operators::{koszul_cone, CertificateStep};
use crate::poly::Poly;
use crate::ring::RingSetup;
use crate::support::{oracle_compare, support_pair, OracleCheck, SupportResult, DEFAULT_EXTENSION, DEFAULT_HORIZON, DEFAULT_WINDOW};

/// Horizon, window and oracle extension bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub horizon: usize,
    pub window: usize,
    pub extension: u32,
}

impl Default for Params {
    fn default() -> Self {
        Params { horizon: DEFAULT_HORIZON, window: DEFAULT_WINDOW, extension: DEFAULT_EXTENSION }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Unverified,
}

/// Everything produced by one realization.
#[derive(Clone, Debug)]
pub struct RealizationReport {
    pub target: ConeIdeal,
    pub base_support: ConeIdeal,
    pub effective_target: ConeIdeal,
    pub clipped: bool,
    pub phis: Vec<Poly>,
    pub certificate: Vec<CertificateStep>,
    pub module: ModulePresentation,
    pub support: SupportResult,
    pub relation: ProjRelation,
    pub oracle: Vec<OracleCheck>,
    pub params: Params,
    pub warnings: Vec<String>,
}

impl RealizationReport {
    pub fn verdict(&self) -> Verdict {
        let ok = self.relation == ProjRelation::Equal
            && self.support.stabilized()
            && self.oracle.iter().all(|c| c.agrees());
        if ok {
            Verdict::Verified
        } else {
            Verdict::Unverified
        }
    }

    pub fn oracle_agrees(&self) -> bool {
        self.oracle.iter().all(|c| c.agrees())
    }
}

/// The operators used to cut down to `X`: the reduced Gröbner basis of the
/// saturation of `X`, ascending. When the saturation is the unit ideal but `X`
/// is not, the generators of `X` are used, so that the output is perfect but
/// nonzero.
pub fn phi_list(x: &ConeIdeal) -> Vec<Poly> {
    let sat = x.saturate();
    if sat.is_unit() && !x.is_unit() {
        return x.gens().to_vec();
    }
    sat.gens().to_vec()
}

fn check_target(ring: &RingSetup, x: &ConeIdeal) -> Result<()> {
    if !x.is_homogeneous() {
        return Err(Error::NonHomogeneous(x.format_gens().join(", ")));
    }
    if x.ring().nvars() != ring.codim() || x.ring().names() != ring.chi_ring().names() {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// `M_X` with `Supp(M_X, k) = X ∩ Supp(M, k)`.
pub fn realize(ring: &RingSetup, x: &ConeIdeal, m: &ModulePresentation, params: Params) -> Result<RealizationReport> {
    check_target(ring, x)?;
    let k = ModulePresentation::residue_field(ring);
    let base = support_pair(ring, m, &k, params.horizon, params.window)?;
    let effective = x.sum(&base.cone).saturate();
    let clipped = !x.proj_subset_of(&base.cone)?;
    let phis = phi_list(x);
    let (mx, certificate) = koszul_cone(ring, m, &phis)?;
    let support = support_pair(ring, &mx, &k, params.horizon, params.window)?;
    let relation = proj_compare(&support.cone, &effective)?;
    let oracle = oracle_compare(ring, &mx, &support.cone, params.extension)?;
    let mut warnings = Vec::new();
    if clipped {
        warnings.push("ClippedTarget: the target is not contained in the support of the base module".to_string());
    }
    if !base.stabilized() {
        warnings.push("StabilizationNotReached: base module".to_string());
    }
    if !support.stabilized() {
        warnings.push("StabilizationNotReached: output module".to_string());
    }
    warnings.push("the output module may decompose".to_string());
    Ok(RealizationReport {
        target: x.clone(),
        base_support: base.cone,
        effective_target: effective,
        clipped,
        phis,
        certificate,
        module: mx,
        support,
        relation,
        oracle,
        params,
        warnings,
    })
}

/// Realizes every target in parallel; results in input order.
pub fn realize_batch(
    ring: &RingSetup,
    targets: &[ConeIdeal],
    m: &ModulePresentation,
    params: Params,
) -> Vec<Result<RealizationReport>> {
    targets.par_iter().map(|x| realize(ring, x, m, params)).collect()
}

/// Output of [`realize_pair`].
#[derive(Clone, Debug)]
pub struct PairReport {
    pub target: ConeIdeal,
    pub effective_target: ConeIdeal,
    pub clipped: bool,
    pub m_x: ModulePresentation,
    pub n_x: ModulePresentation,
    pub same_module: bool,
    pub supp_mx_n: ConeIdeal,
    pub supp_m_nx: ConeIdeal,
    pub supp_mx_nx: ConeIdeal,
    pub certificate_m: Vec<CertificateStep>,
    pub certificate_n: Vec<CertificateStep>,
    pub stabilized: bool,
    pub all_equal: bool,
    pub vanishing: VanishingCertificate,
}

impl PairReport {
    pub fn verdict(&self) -> Verdict {
        if self.all_equal && self.stabilized {
            Verdict::Verified
        } else {
            Verdict::Unverified
        }
    }
}

/// `M_X` and `N_X` with `Supp(M_X, N) = Supp(M, N_X) = Supp(M_X, N_X) = X ∩ Supp(M, N)`.
pub fn realize_pair(
    ring: &RingSetup,
    x: &ConeIdeal,
    m: &ModulePresentation,
    n: &ModulePresentation,
    params: Params,
) -> Result<PairReport> {
    check_target(ring, x)?;
    let (d, w) = (params.horizon, params.window);
    let base = support_pair(ring, m, n, d, w)?;
    let effective = x.sum(&base.cone).saturate();
    let clipped = !x.proj_subset_of(&base.cone)?;
    let phis = phi_list(x);
    let same_module = m == n;
    let (m_x, certificate_m) = koszul_cone(ring, m, &phis)?;
    let (n_x, certificate_n) = if same_module { (m_x.clone(), certificate_m.clone()) } else { koszul_cone(ring, n, &phis)? };
    let a: SupportResult = support_pair(ring, &m_x, n, d, w)?;
    let b = support_pair(ring, m, &n_x, d, w)?;
    let c = support_pair(ring, &m_x, &n_x, d, w)?;
    let mut all_equal = true;
    for s in [&a, &b, &c] {
        all_equal &= proj_compare(&s.cone, &effective)? == ProjRelation::Equal;
    }
    let stabilized = base.stabilized() && a.stabilized() && b.stabilized() && c.stabilized();
    let vanishing = gorenstein_vanishing_check(ring, &m_x, d)?;
    Ok(PairReport {
        target: x.clone(),
        effective_target: effective,
        clipped,
        m_x,
        n_x,
        same_module,
        supp_mx_n: a.cone,
        supp_m_nx: b.cone,
        supp_mx_nx: c.cone,
        certificate_m,
        certificate_n,
        stabilized,
        all_equal,
        vanishing,
    })
}

/// `Ext^i(M, R) = 0` for `dim R < i <= D`, checked on the dual of the
/// minimal resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingCertificate {
    pub checked: Vec<usize>,
    pub justification: String,
}

/// The dual `Hom_R(F, R)` of a resolution through `F_{top}`, indexed so that
/// `Ext^i` is the homology in homological degree `-i`.
pub fn dual_complex(ring: &RingSetup, m: &ModulePresentation, top: usize) -> Result<FreeComplex> {
    let res = minimal_resolution(ring, m, top);
    let terms: Vec<GradedFree> = (0..=top)
        .rev()
        .map(|i| GradedFree::new(res.term(i).degrees().iter().map(|d| -d).collect()))
        .collect();
    let diffs = (0..top).map(|k| res.diff(top - k).dual()).collect();
    FreeComplex::new(-(top as i64), terms, diffs, true)
}

pub fn gorenstein_vanishing_check(ring: &RingSetup, m: &ModulePresentation, d: usize) -> Result<VanishingCertificate> {
    let dual = dual_complex(ring, m, d + 1)?;
    let mut checked = Vec::new();
    for i in ring.dim() + 1..=d {
        let h = homology(ring, &dual, -(i as i64))?;
        if !h.is_zero_presentation() {
            return Err(Error::VanishingFailed { degree: i });
        }
        checked.push(i);
    }
    Ok(VanishingCertificate {
        checked,
        justification: "R is a complete intersection, hence Gorenstein of injective dimension dim R".into(),
    })
}

/// `Supp(Ω^n M, k)` for `n = 1..=upto`.
pub fn syzygy_supports(ring: &RingSetup, m: &ModulePresentation, upto: usize, params: Params) -> Result<Vec<ConeIdeal>> {
    let k = ModulePresentation::residue_field(ring);
    (1..=upto)
        .map(|n| {
            let om = syzygy_of_module(ring, m, n);
            Ok(support_pair(ring, &om, &k, params.horizon, params.window)?.cone)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(r: &RingSetup, gens: &[&str]) -> ConeIdeal {
        ConeIdeal::parse(r.chi_ring(), gens).unwrap()
    }

    fn quick() -> Params {
        Params { horizon: 8, window: 2, extension: 2 }
    }

    #[test]
    fn realize_line() {
        let r = RingSetup::flagship();
        let x = cone(&r, &["x1+x2"]);
        let rep = realize(&r, &x, &ModulePresentation::residue_field(&r), quick()).unwrap();
        assert_eq!(rep.relation, ProjRelation::Equal);
        assert!(rep.oracle_agrees());
        assert_eq!(rep.verdict(), Verdict::Verified);
        assert_eq!(rep.oracle.len(), 8);
        let on = rep.oracle.iter().find(|c| c.extension_degree == 1 && c.point == ["1", "1"]).unwrap();
        assert!(on.oracle);
        let off = rep.oracle.iter().find(|c| c.extension_degree == 1 && c.point == ["1", "0"]).unwrap();
        assert!(!off.oracle);
    }

    #[test]
    fn realize_trivial_targets() {
        let r = RingSetup::flagship();
        let k = ModulePresentation::residue_field(&r);
        let whole = realize(&r, &ConeIdeal::whole(r.chi_ring()), &k, quick()).unwrap();
        assert!(whole.phis.is_empty());
        assert_eq!(whole.verdict(), Verdict::Verified);
        let empty = realize(&r, &cone(&r, &["x1", "x2"]), &k, quick()).unwrap();
        assert!(empty.support.cone.is_empty_in_proj());
        assert_eq!(empty.verdict(), Verdict::Verified);
    }

    #[test]
    fn vanishing_examples() {
        let r = RingSetup::flagship();
        let c = gorenstein_vanishing_check(&r, &ModulePresentation::residue_field(&r), 4).unwrap();
        assert_eq!(c.checked, vec![1, 2, 3, 4]);
        gorenstein_vanishing_check(&r, &ModulePresentation::free(vec![0]), 4).unwrap();
        let r3 = RingSetup::flagship_with_line();
        let m = ModulePresentation::cyclic(&r3, &[r3.q().parse("x").unwrap()]).unwrap();
        let c = gorenstein_vanishing_check(&r3, &m, 4).unwrap();
        assert_eq!(c.checked, vec![2, 3, 4]);
    }
}
