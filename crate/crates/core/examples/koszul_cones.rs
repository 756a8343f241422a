//! Cutting supports down with cones on operators: Supp(K(φ|M)) = Supp(M) ∩ V(φ).

use support_forge::complexes::ModulePresentation;
use support_forge::groebner::proj_compare;
use support_forge::operators::koszul_cone;
use support_forge::ring::RingSetup;
use support_forge::support::support_of;

fn main() -> support_forge::Result<()> {
    let r = RingSetup::flagship();
    let chi = r.chi_ring();
    let bases = [
        ("k", ModulePresentation::residue_field(&r)),
        ("R/(x)", ModulePresentation::cyclic(&r, &[r.q().parse("x")?])?),
    ];
    for (name, m) in &bases {
        let before = support_of(&r, m)?.cone;
        for phi in ["x1", "x2", "x1 + x2", "x1*x2"] {
            let p = chi.parse(phi)?;
            let (out, cert) = koszul_cone(&r, m, std::slice::from_ref(&p))?;
            let after = support_of(&r, &out)?.cone;
            let expected = before.sum(&support_forge::groebner::ConeIdeal::new(chi, &[p])).saturate();
            println!(
                "K({phi} | {name}): {} gens, support V{:?}, expected {}, steps {}",
                out.num_gens(),
                after.format_gens(),
                proj_compare(&after, &expected)?.name(),
                serde_json::to_string(&cert).unwrap()
            );
        }
    }
    Ok(())
}
