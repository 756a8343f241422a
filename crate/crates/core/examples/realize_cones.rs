//! Every closed cone of P^1 over F_2 from a short list, realized as the support of a module.

use support_forge::complexes::ModulePresentation;
use support_forge::groebner::ConeIdeal;
use support_forge::realize::{realize_batch, Params};
use support_forge::ring::RingSetup;

fn main() -> support_forge::Result<()> {
    let r = RingSetup::flagship();
    let chi = r.chi_ring();
    let targets: Vec<Vec<&str>> = vec![
        vec![],
        vec!["x1"],
        vec!["x2"],
        vec!["x1 + x2"],
        vec!["x1*x2"],
        vec!["x1^2 + x1*x2 + x2^2"],
        vec!["x1", "x2"],
    ];
    let cones = targets.iter().map(|t| ConeIdeal::parse(chi, t)).collect::<Result<Vec<_>, _>>()?;
    let k = ModulePresentation::residue_field(&r);
    for (x, rep) in cones.iter().zip(realize_batch(&r, &cones, &k, Params::default())) {
        let rep = rep?;
        println!(
            "X = V{:?}: module with {} generators / {} relations, support V{:?}, {} oracle points, verdict {:?}",
            x.format_gens(),
            rep.module.num_gens(),
            rep.module.relations().cols(),
            rep.support.cone.format_gens(),
            rep.oracle.len(),
            rep.verdict()
        );
    }
    Ok(())
}
