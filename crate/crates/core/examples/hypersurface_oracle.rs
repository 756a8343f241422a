//! The pointwise test: α is in the support iff M has infinite projective
//! dimension over Q/(α_1 f_1 + α_2 f_2).

use support_forge::complexes::ModulePresentation;
use support_forge::groebner::projective_points;
use support_forge::field::Field;
use support_forge::ring::RingSetup;
use support_forge::support::hypersurface_oracle;

fn main() -> support_forge::Result<()> {
    let r = RingSetup::flagship();
    let m = ModulePresentation::cyclic(&r, &[r.q().parse("x")?])?;
    for e in 1..=2 {
        let field = Field::extension(2, e)?;
        for a in projective_points(&field, 2) {
            let inside = hypersurface_oracle(&r, &m, &field, &a)?;
            let pt: Vec<String> = a.iter().map(|x| field.format(*x)).collect();
            println!("F_{}: ({}) -> {}", field.order(), pt.join(" : "), if inside { "in support" } else { "outside" });
        }
    }
    Ok(())
}
