//! Minimal free resolutions over F_2[x,y]/(x^2, y^2).

use support_forge::complexes::{minimal_resolution, syzygy_of_module, ModulePresentation};
use support_forge::ring::RingSetup;

fn main() {
    let r = RingSetup::flagship();
    let k = ModulePresentation::residue_field(&r);
    let res = minimal_resolution(&r, &k, 7);
    println!("Betti numbers of k: {:?}", res.betti());
    println!("graded: {:?}", res.graded_betti());
    for i in 1..=3 {
        println!("d_{i} = {:?}", res.diff(i).format(&r));
    }

    let x = r.q().parse("x").unwrap();
    let m = ModulePresentation::cyclic(&r, &[x]).unwrap();
    println!("Betti numbers of R/(x): {:?}", minimal_resolution(&r, &m, 6).betti());

    let om = syzygy_of_module(&r, &k, 1);
    println!("Ω^1(k): generators in degrees {:?}, {} relations", om.gens(), om.relations().cols());

    let free = ModulePresentation::free(vec![0, 1]);
    let res = minimal_resolution(&r, &free, 4);
    println!("R ⊕ R(-1): projective dimension {:?}", res.projective_dimension());
}
