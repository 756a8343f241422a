//! Structural properties of supports: twists, sums, syzygies, regular
//! elements, intersections, and the realization identities.

use support_forge::complexes::{syzygy_of_module, ModulePresentation};
use support_forge::groebner::{proj_compare, ConeIdeal, ProjRelation};
use support_forge::operators::koszul_cone;
use support_forge::realize::{realize_pair, syzygy_supports, Params, Verdict};
use support_forge::ring::RingSetup;
use support_forge::support::{ext_table, support_pair, SupportResult};

const D: usize = 10;
const W: usize = 2;

fn cyc(r: &RingSetup, gens: &[&str]) -> ModulePresentation {
    let g: Vec<_> = gens.iter().map(|s| r.q().parse(s).unwrap()).collect();
    ModulePresentation::cyclic(r, &g).unwrap()
}

fn cone(r: &RingSetup, gens: &[&str]) -> ConeIdeal {
    ConeIdeal::parse(r.chi_ring(), gens).unwrap()
}

fn supp(r: &RingSetup, m: &ModulePresentation) -> SupportResult {
    let s = support_pair(r, m, &ModulePresentation::residue_field(r), D, W).unwrap();
    assert!(s.stabilized());
    s
}

fn same(a: &ConeIdeal, b: &ConeIdeal) {
    assert_eq!(proj_compare(a, b).unwrap(), ProjRelation::Equal, "{:?} vs {:?}", a, b);
}

fn modules(r: &RingSetup) -> Vec<ModulePresentation> {
    vec![
        ModulePresentation::residue_field(r),
        cyc(r, &["x"]),
        cyc(r, &["y"]),
        cyc(r, &["x+y"]),
        cyc(r, &["x*y"]),
        ModulePresentation::free(vec![0]),
    ]
}

#[test]
fn known_supports() {
    let r = RingSetup::flagship();
    let expect: [&[&str]; 6] = [&[], &["x2"], &["x1"], &["x1+x2"], &[], &["x1", "x2"]];
    for (m, e) in modules(&r).iter().zip(expect) {
        same(&supp(&r, m).cone, &cone(&r, e));
    }
}

#[test]
fn twist_invariance() {
    let r = RingSetup::flagship();
    for m in modules(&r) {
        let a = supp(&r, &m).cone;
        for s in [-2, 1, 3] {
            same(&supp(&r, &m.twist(s)).cone, &a);
        }
    }
}

#[test]
fn direct_sum_is_union() {
    let r = RingSetup::flagship();
    let ms = modules(&r);
    for (i, a) in ms.iter().enumerate() {
        for b in &ms[i + 1..] {
            let union = supp(&r, a).cone.intersection(&supp(&r, b).cone);
            same(&supp(&r, &a.direct_sum(b)).cone, &union);
        }
    }
}

#[test]
fn syzygy_invariance() {
    let r = RingSetup::flagship();
    let p = Params { horizon: D, window: W, extension: 1 };
    for m in modules(&r).iter().take(4) {
        let base = supp(&r, m).cone;
        for s in syzygy_supports(&r, m, 3, p).unwrap() {
            same(&s, &base);
        }
    }
}

#[test]
fn syzygies_of_small_modules() {
    let r = RingSetup::flagship();
    let free = ModulePresentation::free(vec![0, 1]);
    let om = syzygy_of_module(&r, &free, 1);
    assert_eq!(om.num_gens(), 0);
    // R/(xy) has the maximal ideal as a syzygy, so its support is everything.
    assert_eq!(supp(&r, &cyc(&r, &["x*y"])).cone.saturate().gens().len(), 0);
}

#[test]
fn regular_element_invariance() {
    let r = RingSetup::flagship_with_line();
    for gens in [&["x"][..], &["y"], &["x+y"]] {
        let m = cyc(&r, gens);
        let mut with_z: Vec<&str> = gens.to_vec();
        with_z.push("z");
        let mz = cyc(&r, &with_z);
        same(&supp(&r, &m).cone, &supp(&r, &mz).cone);
    }
}

#[test]
fn pair_support_is_intersection() {
    let r = RingSetup::flagship();
    let ms = modules(&r);
    for m in &ms[..4] {
        for n in &ms[..4] {
            let both = supp(&r, m).cone.sum(&supp(&r, n).cone);
            let pair = support_pair(&r, m, n, D, W).unwrap();
            assert!(pair.stabilized());
            same(&pair.cone, &both);
        }
    }
}

#[test]
fn operators_commute_on_ext() {
    let r = RingSetup::flagship();
    let k = ModulePresentation::residue_field(&r);
    for m in modules(&r).iter().take(4) {
        let t = ext_table(&r, m, &k, 8).unwrap();
        assert!(t.actions_commute());
        let n = cyc(&r, &["x"]);
        assert!(ext_table(&r, m, &n, 6).unwrap().actions_commute());
    }
}

#[test]
fn koszul_cone_cuts_support() {
    let r = RingSetup::flagship();
    let k = ModulePresentation::residue_field(&r);
    for phi in ["x1", "x2", "x1+x2", "x1^2+x1*x2+x2^2"] {
        let p = r.chi_ring().parse(phi).unwrap();
        let (m, cert) = koszul_cone(&r, &k, std::slice::from_ref(&p)).unwrap();
        assert_eq!(cert.len(), 2);
        same(&supp(&r, &m).cone, &ConeIdeal::new(r.chi_ring(), &[p]));
    }
}

#[test]
fn pair_realization_identities() {
    let r = RingSetup::flagship();
    let k = ModulePresentation::residue_field(&r);
    let p = Params { horizon: D, window: W, extension: 1 };
    for x in [&["x1+x2"][..], &["x1"], &[]] {
        let x = cone(&r, x);
        let rep = realize_pair(&r, &x, &k, &k, p).unwrap();
        assert!(rep.same_module);
        assert_eq!(rep.verdict(), Verdict::Verified);
        same(&rep.supp_mx_n, &x);
        assert!(rep.vanishing.checked.iter().all(|&i| i > r.dim()));
    }
    let rx = cyc(&r, &["x"]);
    let rep = realize_pair(&r, &cone(&r, &["x1+x2"]), &k, &rx, p).unwrap();
    assert!(!rep.same_module);
    // V(x1 + x2) meets Supp(k, R/(x)) = V(x2) only in the empty set.
    assert!(rep.effective_target.is_empty_in_proj());
    assert_eq!(rep.verdict(), Verdict::Verified);
}
