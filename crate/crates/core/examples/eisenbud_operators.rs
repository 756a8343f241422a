//! Operators t_j with d̃² = Σ f_j t̃_j, and their action on Ext(M, k).

use support_forge::complexes::{mat_mul, ModulePresentation};
use support_forge::operators::{operator_chain_map, operators_for};
use support_forge::ring::RingSetup;
use support_forge::support::ext_table;

fn main() -> support_forge::Result<()> {
    let r = RingSetup::flagship();
    let k = ModulePresentation::residue_field(&r);
    let fam = operators_for(&r, &k, 5)?;
    for i in 2..=4 {
        let sq = mat_mul(&r, fam.lift().diff(i - 1), fam.lift().diff(i), false);
        println!("index {i}: d̃² = {:?}", sq.format(&r));
        for j in 0..r.codim() {
            println!("  t{} = {:?}", j + 1, fam.operator(j, i).unwrap().format(&r));
        }
    }
    let phi = r.chi_ring().parse("x1 + x2")?;
    let map = operator_chain_map(&r, &fam, &phi)?;
    println!("x1 + x2 is a chain map on {} indices", map.maps().len());

    let table = ext_table(&r, &k, &k, 6)?;
    println!("dim Ext^i(k, k): {:?}", table.dims());
    println!("actions commute: {}", table.actions_commute());
    Ok(())
}
