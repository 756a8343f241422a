//! Over F_2[x,y,z]/(x^2, y^2): z is regular on R/(x), and the support survives
//! passing to R/(x, z). Also Ext(M, R) vanishing above dim R.

use support_forge::complexes::{central_koszul, homology, ModulePresentation};
use support_forge::realize::gorenstein_vanishing_check;
use support_forge::ring::RingSetup;
use support_forge::support::support_of;

fn main() -> support_forge::Result<()> {
    let r = RingSetup::flagship_with_line();
    let q = r.q();
    let m = ModulePresentation::cyclic(&r, &[q.parse("x")?])?;
    let mz = ModulePresentation::cyclic(&r, &[q.parse("x")?, q.parse("z")?])?;
    let kz = central_koszul(&r, &m, &[q.parse("z")?], 4)?;
    println!("H_1(M ⊗ K(z)) = 0: {}", homology(&r, &kz, 1)?.is_zero_presentation());
    println!("Supp(R/(x))   = V{:?}", support_of(&r, &m)?.cone.format_gens());
    println!("Supp(R/(x,z)) = V{:?}", support_of(&r, &mz)?.cone.format_gens());
    let cert = gorenstein_vanishing_check(&r, &m, 5)?;
    println!("Ext^i(R/(x), R) = 0 for i in {:?}", cert.checked);
    Ok(())
}
