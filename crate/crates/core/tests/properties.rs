use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use support_forge::field::{Elem, Field};
use support_forge::groebner::{ideal_basis, ideal_member, normal_form, proj_compare, ConeIdeal, ProjRelation};
use support_forge::linalg::{FMatrix, Subspace};
use support_forge::poly::{MonomialOrder, Poly, PolyRing};
use support_forge::vector::FreeModule;

fn field_of(code: u8) -> Field {
    match code % 5 {
        0 => Field::prime(2).unwrap(),
        1 => Field::prime(3).unwrap(),
        2 => Field::prime(7).unwrap(),
        3 => Field::extension(2, 2).unwrap(),
        _ => Field::extension(3, 2).unwrap(),
    }
}

fn random_homogeneous(q: &PolyRing, rng: &mut ChaCha8Rng, deg: u32, density: f64) -> Poly {
    let k = q.field();
    let mut terms = Vec::new();
    for m in q.monomials_of_degree(deg) {
        if rng.gen_bool(density) {
            terms.push((m, rng.gen_range(0..k.order())));
        }
    }
    q.from_terms(terms)
}

/// Is `g` (homogeneous of degree `t`) in the span of `m * f` over monomials `m`?
fn brute_force_member(q: &PolyRing, gens: &[Poly], g: &Poly, t: u32) -> bool {
    let monos = q.monomials_of_degree(t);
    let coords = |p: &Poly| -> Vec<Elem> {
        let mut v = vec![0; monos.len()];
        for (m, c) in p.terms() {
            v[monos.iter().position(|x| x == m).unwrap()] = *c;
        }
        v
    };
    let mut span = Subspace::new(q.field(), monos.len());
    for f in gens {
        let Some(d) = f.degree() else { continue };
        if d > t {
            continue;
        }
        for m in q.monomials_of_degree(t - d) {
            span.insert(&coords(&q.mul_term(f, &m, q.field().one())));
        }
    }
    span.contains(&coords(g))
}

fn random_ring(rng: &mut ChaCha8Rng, field: &Field) -> PolyRing {
    let n = rng.gen_range(2..=3);
    let names = ["a", "b", "c"];
    let weights: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
    let order = if rng.gen_bool(0.5) { MonomialOrder::Grevlex } else { MonomialOrder::Lex };
    PolyRing::new(field, &names[..n], &weights, order).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(code in 0u8..5, a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
        let k = field_of(code);
        let (a, b, c) = (a % k.order(), b % k.order(), c % k.order());
        prop_assert_eq!(k.add(a, b), k.add(b, a));
        prop_assert_eq!(k.mul(a, b), k.mul(b, a));
        prop_assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
        prop_assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
        prop_assert_eq!(k.add(a, k.neg(a)), k.zero());
        if a != 0 {
            prop_assert_eq!(k.mul(a, k.inv(a)), k.one());
            prop_assert_eq!(k.pow(a, k.order() as u64 - 1), k.one());
        }
        prop_assert_eq!(k.parse(&k.format(a)).unwrap(), a);
    }

    #[test]
    fn rank_nullity(code in 0u8..5, rows in 1usize..7, cols in 1usize..7, seed in any::<u64>()) {
        let k = field_of(code);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let data: Vec<Vec<Elem>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..k.order())).collect()).collect();
        let m = FMatrix::from_rows(&k, &data);
        let ker = m.kernel();
        prop_assert_eq!(m.rank() + ker.cols(), cols);
        prop_assert!(m.mul(&ker).unwrap().is_zero());
        prop_assert_eq!(m.transpose().rank(), m.rank());
        // Solutions returned by `solve` are solutions.
        let x: Vec<Elem> = (0..cols).map(|_| rng.gen_range(0..k.order())).collect();
        let b = m.mul_vec(&x).unwrap();
        let y = m.solve(&b).unwrap().unwrap();
        prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn division_identity(code in 0u8..5, seed in any::<u64>()) {
        let k = field_of(code);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_ring(&mut rng, &k);
        let module = FreeModule::ideal(&q);
        let divisors: Vec<_> = (0..rng.gen_range(1..4))
            .map(|_| { let t = rng.gen_range(1..4); random_homogeneous(&q, &mut rng, t, 0.6) })
            .filter(|p| !p.is_zero())
            .map(|p| module.from_components(&[p]))
            .collect();
        let g = { let t = rng.gen_range(2..6); random_homogeneous(&q, &mut rng, t, 0.7) };
        let gv = module.from_components(std::slice::from_ref(&g));
        let (quots, rem) = module.divide(&gv, &divisors).unwrap();
        let mut total = module.to_components(&rem)[0].clone();
        for (qi, d) in quots.iter().zip(&divisors) {
            total = q.add(&total, &q.mul(qi, &module.to_components(d)[0]));
        }
        prop_assert_eq!(total, g);
        // No term of the remainder is divisible by a leading term.
        for (_, m, _) in rem.terms() {
            for d in &divisors {
                prop_assert!(!d.leading().unwrap().1.divides(m));
            }
        }
    }

    #[test]
    fn membership_matches_linear_algebra(code in 0u8..5, seed in any::<u64>()) {
        let k = field_of(code);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_ring(&mut rng, &k);
        let gens: Vec<Poly> = (0..rng.gen_range(1..4))
            .map(|_| { let t = rng.gen_range(1..4); random_homogeneous(&q, &mut rng, t, 0.5) })
            .collect();
        let basis = ideal_basis(&q, &gens);
        for t in 0..=6 {
            // A random combination, which is a member, and a random polynomial.
            let mut member = q.zero();
            for f in &gens {
                if let Some(d) = f.degree() {
                    if d <= t {
                        member = q.add(&member, &q.mul(&random_homogeneous(&q, &mut rng, t - d, 0.5), f));
                    }
                }
            }
            prop_assert!(ideal_member(&member, &basis));
            let g = random_homogeneous(&q, &mut rng, t, 0.5);
            prop_assert_eq!(ideal_member(&g, &basis), brute_force_member(&q, &gens, &g, t));
            // Normal forms are canonical on cosets.
            prop_assert_eq!(normal_form(&q.add(&g, &member), &basis), normal_form(&g, &basis));
        }
    }

    #[test]
    fn cone_ideal_laws(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = Field::prime(2).unwrap();
        let chi = PolyRing::new(&k, &["x1", "x2", "x3"], &[2, 2, 2], MonomialOrder::Grevlex).unwrap();
        let make = |rng: &mut ChaCha8Rng| {
            let gens: Vec<Poly> = (0..rng.gen_range(1..3))
                .map(|_| { let t = 2 * rng.gen_range(1..3); random_homogeneous(&chi, rng, t, 0.5) })
                .collect();
            ConeIdeal::new(&chi, &gens)
        };
        let x = make(&mut rng);
        let y = make(&mut rng);
        let sx = x.saturate();
        prop_assert!(sx.is_saturated());
        let ssx = sx.saturate();
        prop_assert_eq!(ssx.gens(), sx.gens());
        prop_assert_eq!(proj_compare(&x, &x).unwrap(), ProjRelation::Equal);
        prop_assert_eq!(proj_compare(&x, &sx).unwrap(), ProjRelation::Equal);
        let xy = proj_compare(&x, &y).unwrap();
        let yx = proj_compare(&y, &x).unwrap();
        match xy {
            ProjRelation::Equal => prop_assert_eq!(yx, ProjRelation::Equal),
            ProjRelation::Subset => prop_assert_eq!(yx, ProjRelation::Superset),
            ProjRelation::Superset => prop_assert_eq!(yx, ProjRelation::Subset),
            ProjRelation::Incomparable => prop_assert_eq!(yx, ProjRelation::Incomparable),
        }
        // V(X + Y) is inside both.
        let s = x.sum(&y);
        prop_assert!(s.proj_subset_of(&x).unwrap());
        prop_assert!(s.proj_subset_of(&y).unwrap());
        prop_assert!(x.proj_subset_of(&x.intersection(&y)).unwrap());
    }
}
