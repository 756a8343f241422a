//! Support cones of several modules, checked pointwise by the hypersurface oracle.

use support_forge::complexes::ModulePresentation;
use support_forge::ring::RingSetup;
use support_forge::support::{oracle_compare, support_of, support_pair, support_points};

fn main() -> support_forge::Result<()> {
    let r = RingSetup::flagship();
    let q = r.q();
    let modules = [
        ("k", ModulePresentation::residue_field(&r)),
        ("R", ModulePresentation::free(vec![0])),
        ("R/(x)", ModulePresentation::cyclic(&r, &[q.parse("x")?])?),
        ("R/(x+y)", ModulePresentation::cyclic(&r, &[q.parse("x + y")?])?),
    ];
    for (name, m) in &modules {
        let s = support_of(&r, m)?;
        let checks = oracle_compare(&r, m, &s.cone, 2)?;
        let agree = checks.iter().all(|c| c.agrees());
        println!(
            "Supp({name}) = V{:?}  stabilized={}  F_2 points={:?}  oracle agrees at {} points: {agree}",
            s.cone.format_gens(),
            s.stabilized(),
            support_points(&r, &s.cone, 1)?,
            checks.len()
        );
    }
    let m = &modules[2].1;
    let s = support_pair(&r, m, m, 10, 2)?;
    println!("Supp(R/(x), R/(x)) = V{:?}", s.cone.format_gens());
    Ok(())
}
