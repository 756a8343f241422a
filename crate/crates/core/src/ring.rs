//! Graded complete intersections `R = Q/(f)` and their operator rings `k[χ]`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::groebner::{ideal_basis, krull_dimension, normal_form, GBasis, TransformBasis};
use crate::poly::{Monomial, MonomialOrder, Poly, PolyRing};

/// The ambient data `(Q, f, R, k[χ])`.
pub struct RingSetup {
    q: PolyRing,
    f: Vec<Poly>,
    gb_f: GBasis,
    lead_monomials: Vec<Monomial>,
    transform: TransformBasis,
    chi: PolyRing,
    std_cache: Mutex<HashMap<i64, Arc<Vec<Monomial>>>>,
}

impl fmt::Debug for RingSetup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fs: Vec<String> = self.f.iter().map(|p| self.q.format(p)).collect();
        write!(f, "{:?}/({})", self.q, fs.join(", "))
    }
}

impl RingSetup {
    /// Validates `f` as a homogeneous regular sequence inside the square of the
    /// irrelevant ideal and builds the quotient.
    pub fn build_ci(q: &PolyRing, f: Vec<Poly>) -> Result<RingSetup> {
        let n = q.nvars();
        let c = f.len();
        if c == 0 {
            return Err(Error::Input("the sequence f must be nonempty".into()));
        }
        if c > n {
            return Err(Error::Input(format!("c = {c} exceeds the number of variables n = {n}")));
        }
        for p in &f {
            if p.is_zero() {
                return Err(Error::NotRegularSequence { dim: n as i64, expected: (n - c) as i64 });
            }
            if !p.is_homogeneous() {
                return Err(Error::NonHomogeneous(q.format(p)));
            }
            if p.terms().iter().any(|(m, _)| m.total_exponent() < 2) {
                return Err(Error::NotInSquareOfMaximalIdeal(q.format(p)));
            }
        }
        let dim = krull_dimension(q, &f);
        if dim != (n - c) as i64 {
            return Err(Error::NotRegularSequence { dim, expected: (n - c) as i64 });
        }
        let gb_f = ideal_basis(q, &f);
        let lead_monomials = gb_f.elems().iter().map(|e| e.leading().unwrap().1.clone()).collect();
        let transform = TransformBasis::new(q, &f);
        let names: Vec<String> = (1..=c).map(|j| format!("x{j}")).collect();
        let chi = PolyRing::from_owned(q.field(), names, vec![2; c], MonomialOrder::Grevlex)?;
        Ok(RingSetup { q: q.clone(), f, gb_f, lead_monomials, transform, chi, std_cache: Mutex::new(HashMap::new()) })
    }

    /// Convenience constructor from text: `vars` pairs names with degrees.
    pub fn parse(p: u64, vars: &[(&str, u32)], f: &[&str]) -> Result<RingSetup> {
        let field = Field::prime(p)?;
        let names: Vec<&str> = vars.iter().map(|v| v.0).collect();
        let weights: Vec<u32> = vars.iter().map(|v| v.1).collect();
        let q = PolyRing::new(&field, &names, &weights, MonomialOrder::Grevlex)?;
        let f = f.iter().map(|s| q.parse(s)).collect::<Result<Vec<_>>>()?;
        Self::build_ci(&q, f)
    }

    /// `F_2[x,y]/(x^2, y^2)`.
    pub fn flagship() -> RingSetup {
        Self::parse(2, &[("x", 1), ("y", 1)], &["x^2", "y^2"]).expect("valid ring")
    }

    /// `F_2[x,y,z]/(x^2, y^2)`, of Krull dimension one.
    pub fn flagship_with_line() -> RingSetup {
        Self::parse(2, &[("x", 1), ("y", 1), ("z", 1)], &["x^2", "y^2"]).expect("valid ring")
    }

    pub fn q(&self) -> &PolyRing {
        &self.q
    }

    pub fn field(&self) -> &Field {
        self.q.field()
    }

    pub fn f(&self) -> &[Poly] {
        &self.f
    }

    pub fn gb_f(&self) -> &GBasis {
        &self.gb_f
    }

    pub fn chi_ring(&self) -> &PolyRing {
        &self.chi
    }

    pub fn codim(&self) -> usize {
        self.f.len()
    }

    pub fn nvars(&self) -> usize {
        self.q.nvars()
    }

    /// Krull dimension of `R`.
    pub fn dim(&self) -> usize {
        self.nvars() - self.codim()
    }

    pub fn is_artinian(&self) -> bool {
        self.dim() == 0
    }

    pub fn f_degrees(&self) -> Vec<u32> {
        self.f.iter().map(|p| p.degree().unwrap()).collect()
    }

    /// Canonical representative modulo `(f)`.
    pub fn nf(&self, p: &Poly) -> Poly {
        if p.is_zero() {
            return p.clone();
        }
        normal_form(p, &self.gb_f)
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.nf(&self.q.mul(a, b))
    }

    /// Coefficients `t` with `h = Σ t_j f_j` over `Q`.
    pub fn express_in_f(&self, h: &Poly) -> Option<Vec<Poly>> {
        self.transform.express(h)
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.lead_monomials.iter().any(|l| l.divides(m))
    }

    /// Monomials of degree `deg` not in the leading ideal of `(f)`: a basis of `R_deg`.
    pub fn std_monomials(&self, deg: i64) -> Arc<Vec<Monomial>> {
        if deg < 0 {
            return Arc::new(Vec::new());
        }
        if let Some(v) = self.std_cache.lock().unwrap().get(&deg) {
            return v.clone();
        }
        let v: Vec<Monomial> =
            self.q.monomials_of_degree(deg as u32).into_iter().filter(|m| self.is_standard(m)).collect();
        let v = Arc::new(v);
        self.std_cache.lock().unwrap().insert(deg, v.clone());
        v
    }

    /// `dim_k R`, when `R` is artinian.
    pub fn vector_space_dim(&self) -> Option<usize> {
        if !self.is_artinian() {
            return None;
        }
        let wmax = *self.q.weights().iter().max().unwrap() as i64;
        let mut total = 0;
        let mut zeros = 0;
        let mut d = 0;
        while zeros < wmax {
            let c = self.std_monomials(d).len();
            total += c;
            zeros = if c == 0 { zeros + 1 } else { 0 };
            d += 1;
        }
        Some(total)
    }

    /// The same complete intersection data over an extension field, with a
    /// different sequence (used for the hypersurfaces `Q/(f_α)`).
    pub fn hypersurface(&self, field: &Field, alpha: &[Elem]) -> Result<RingSetup> {
        if alpha.len() != self.codim() {
            return Err(Error::DimensionMismatch { expected: self.codim(), got: alpha.len() });
        }
        let degs = self.f_degrees();
        let support: Vec<usize> = (0..alpha.len()).filter(|&j| alpha[j] != 0).collect();
        if support.is_empty() {
            return Err(Error::Input("the zero point does not lie in projective space".into()));
        }
        if support.iter().any(|&j| degs[j] != degs[support[0]]) {
            return Err(Error::Input("f_α is not homogeneous: the point mixes f_j of different degrees".into()));
        }
        let qe = self.q.with_field(field);
        let mut fa = qe.zero();
        for (j, fj) in self.f.iter().enumerate() {
            let lifted = qe.from_terms(fj.terms().to_vec());
            fa = qe.add(&fa, &qe.scale(&lifted, alpha[j]));
        }
        Self::build_ci(&qe, vec![fa])
    }
}

/// Coordinates for the degree-`t` part of a graded free `R`-module.
///
/// The basis is `(component a, standard monomial m)` with
/// `deg m + degrees[a] = t`, components in order and monomials descending.
#[derive(Clone, Debug)]
pub struct DegreeBasis {
    degree: i64,
    entries: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
}

impl DegreeBasis {
    pub fn new(ring: &RingSetup, degrees: &[i64], t: i64) -> Self {
        let mut entries = Vec::new();
        for (a, &g) in degrees.iter().enumerate() {
            for m in ring.std_monomials(t - g).iter() {
                entries.push((a, m.clone()));
            }
        }
        let index = entries.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        DegreeBasis { degree: t, entries, index }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Monomial)] {
        &self.entries
    }

    /// Coordinates of a vector of normal forms, homogeneous of degree `t`.
    pub fn coords(&self, v: &[Poly]) -> Vec<Elem> {
        let mut out = vec![0; self.entries.len()];
        for (a, p) in v.iter().enumerate() {
            for (m, c) in p.terms() {
                let i = self.index.get(&(a, m.clone())).unwrap_or_else(|| {
                    panic!("term of degree {} outside the degree-{} basis", m.degree(), self.degree)
                });
                out[*i] = *c;
            }
        }
        out
    }

    pub fn vector(&self, ring: &RingSetup, rank: usize, coords: &[Elem]) -> Vec<Poly> {
        let q = ring.q();
        let mut buckets: Vec<Vec<(Monomial, Elem)>> = vec![Vec::new(); rank];
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                let (a, m) = &self.entries[i];
                buckets[*a].push((m.clone(), c));
            }
        }
        buckets.into_iter().map(|t| q.from_terms(t)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_examples() {
        let r = RingSetup::flagship();
        assert_eq!((r.codim(), r.nvars(), r.dim()), (2, 2, 0));
        let r3 = RingSetup::flagship_with_line();
        assert_eq!(r3.dim(), 1);
        let bad = RingSetup::parse(2, &[("x", 1), ("y", 1)], &["x^2", "x*y"]);
        assert!(matches!(bad, Err(Error::NotRegularSequence { dim: 1, expected: 0 })));
        let linear = RingSetup::parse(2, &[("x", 1), ("y", 1)], &["x", "y^2"]);
        assert!(matches!(linear, Err(Error::NotInSquareOfMaximalIdeal(_))));
        let inhom = RingSetup::parse(2, &[("x", 1), ("y", 1)], &["x^2 + y^3"]);
        assert!(matches!(inhom, Err(Error::NonHomogeneous(_))));
    }

    #[test]
    fn normal_forms() {
        let r = RingSetup::flagship();
        let q = r.q();
        assert!(r.nf(&q.parse("x^2").unwrap()).is_zero());
        assert_eq!(q.format(&r.nf(&q.parse("x^2+x*y").unwrap())), "x*y");
        assert_eq!(q.format(&r.nf(&q.parse("x*y").unwrap())), "x*y");
    }

    #[test]
    fn power_sequence_dimension_is_product_of_exponents() {
        let r = RingSetup::parse(3, &[("a", 1), ("b", 1), ("c", 1)], &["a^2", "b^3", "c^4"]).unwrap();
        assert_eq!(r.vector_space_dim(), Some(24));
        assert_eq!(RingSetup::flagship().vector_space_dim(), Some(4));
    }
}
