//! Gröbner bases, ideal membership, radical membership and saturation over F_2.

use support_forge::field::Field;
use support_forge::groebner::{ideal_basis, ideal_member, radical_member, saturate, irrelevant_ideal, proj_compare, ConeIdeal};
use support_forge::poly::PolyRing;

fn main() -> support_forge::Result<()> {
    let k = Field::prime(2)?;
    let q = PolyRing::standard(&k, &["x", "y", "z"])?;
    let p = |s: &str| q.parse(s).unwrap();

    let ideal = vec![p("x^2 + y*z"), p("x*y")];
    let gb = ideal_basis(&q, &ideal);
    println!("reduced Gröbner basis of (x^2 + y*z, x*y):");
    for g in gb.polys() {
        println!("  {}", q.format(&g));
    }
    println!("y^2*z in ideal: {}", ideal_member(&p("y^2*z"), &gb));
    println!("x^3 in radical: {}", radical_member(&q, &p("x^3"), &ideal)?);

    let (sat, steps) = saturate(&q, &[p("x^2*y"), p("x*y^2")], &irrelevant_ideal(&q));
    let sat: Vec<String> = sat.iter().map(|g| q.format(g)).collect();
    println!("saturation of (x^2*y, x*y^2): {:?} after {steps} step(s)", sat);

    let chi = PolyRing::standard(&k, &["x1", "x2"])?;
    let a = ConeIdeal::parse(&chi, &["x1^2"])?;
    let b = ConeIdeal::parse(&chi, &["x1"])?;
    println!("V(x1^2) vs V(x1): {}", proj_compare(&a, &b)?.name());
    Ok(())
}
