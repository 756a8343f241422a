//! Finite fields: prime fields `F_p` and small extensions `F_{p^e}`.
//!
//! Elements are plain `u32` codes. For a prime field the code is the residue in
//! `[0, p)`. For an extension the code is the base-`p` digit expansion of the
//! coefficient vector of the element written in the power basis of a fixed
//! generator `a`, lowest digit first, so the prime subfield embeds as the codes
//! `0..p`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A field element code.
pub type Elem = u32;

#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    /// Monic irreducible defining polynomial, coefficients low to high (length `e + 1`).
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.inner.p == other.inner.p && self.inner.e == other.inner.e
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.e == 1 {
            write!(f, "F_{}", self.inner.p)
        } else {
            write!(f, "F_{}^{}", self.inner.p, self.inner.e)
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest extension order for which log tables are built.
const MAX_EXTENSION_ORDER: u64 = 1 << 16;

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::NotPrime(p));
        }
        Ok(Field {
            inner: Arc::new(Inner {
                p: p as u32,
                e: 1,
                q: p as u32,
                modulus: vec![0, 1],
                exp: Vec::new(),
                log: Vec::new(),
            }),
        })
    }

    /// The field with `p^e` elements, built from the smallest monic irreducible
    /// polynomial of degree `e` (ordered by code).
    pub fn extension(p: u64, e: u32) -> Result<Field> {
        if e == 0 {
            return Err(Error::Input("extension degree must be positive".into()));
        }
        if e == 1 {
            return Field::prime(p);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q = (p as u128).pow(e);
        if q > MAX_EXTENSION_ORDER as u128 {
            return Err(Error::Input(format!("extension field of order {q} is too large")));
        }
        let p = p as u32;
        let q = q as u32;
        let modulus = smallest_irreducible(p, e);
        let mut inner = Inner { p, e, q, modulus, exp: Vec::new(), log: Vec::new() };
        let (exp, log) = build_log_tables(&inner);
        inner.exp = exp;
        inner.log = log;
        Ok(Field { inner: Arc::new(inner) })
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.e
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    /// Coefficients (low to high) of the defining polynomial of the extension.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.e == 1
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.inner.q
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        0
    }

    #[inline]
    pub fn one(&self) -> Elem {
        1
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.inner.p as i64) as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.inner.p;
        if self.inner.e == 1 {
            let s = a as u64 + b as u64;
            return (s % p as u64) as Elem;
        }
        if p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.inner.p;
        if self.inner.e == 1 {
            return if a == 0 { 0 } else { p - a };
        }
        if p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        while a > 0 {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if self.inner.e == 1 {
            return ((a as u64 * b as u64) % self.inner.p as u64) as Elem;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.inner.q - 1;
        let s = (self.inner.log[a as usize] + self.inner.log[b as usize]) % n;
        self.inner.exp[s as usize]
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(a != 0, "inverse of zero");
        if self.inner.e == 1 {
            // Fermat
            return self.pow(a, self.inner.p as u64 - 2);
        }
        let n = self.inner.q - 1;
        let l = self.inner.log[a as usize];
        self.inner.exp[((n - l) % n) as usize]
    }

    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    /// Text form: integers for prime fields, polynomials in `a` otherwise.
    pub fn format(&self, x: Elem) -> String {
        if self.inner.e == 1 {
            return x.to_string();
        }
        let p = self.inner.p;
        let mut digits = Vec::new();
        let mut v = x;
        while v > 0 {
            digits.push(v % p);
            v /= p;
        }
        let mut parts = Vec::new();
        for (k, &d) in digits.iter().enumerate().rev() {
            if d == 0 {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{k}"),
            };
            parts.push(match (d, var.is_empty()) {
                (_, true) => d.to_string(),
                (1, false) => var,
                (_, false) => format!("{d}*{var}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    /// Inverse of [`Field::format`]; also accepts plain integers.
    pub fn parse(&self, s: &str) -> Result<Elem> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty field element".into()));
        }
        let bad = || Error::Parse(format!("bad field element `{s}` for {self:?}"));
        let p = self.inner.p;
        let mut acc = self.zero();
        for term in s.split('+') {
            let (coef, var) = match term.split_once('*') {
                Some((c, v)) => (c.parse::<i64>().map_err(|_| bad())?, Some(v)),
                None if term.starts_with('a') => (1, Some(term)),
                None => (term.parse::<i64>().map_err(|_| bad())?, None),
            };
            let k = match var {
                None => 0,
                Some("a") => 1,
                Some(v) => v.strip_prefix("a^").and_then(|e| e.parse::<u32>().ok()).ok_or_else(bad)?,
            };
            if k >= self.inner.e {
                return Err(bad());
            }
            let digit = coef.rem_euclid(p as i64) as u32;
            acc = self.add(acc, digit * p.pow(k));
        }
        Ok(acc)
    }
}

fn digits_of(x: u32, p: u32, len: usize) -> Vec<u32> {
    let mut v = x;
    (0..len)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn code_of(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of `a` modulo the monic polynomial `m` over `F_p` (coefficients low to high).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (k, &c) in m.iter().enumerate() {
                let sub = (lead as u64 * c as u64 % p as u64) as u32;
                r[shift + k] = (r[shift + k] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

fn smallest_irreducible(p: u32, e: u32) -> Vec<u32> {
    let count = p.pow(e);
    'candidates: for code in 0..count {
        let mut cand = digits_of(code, p, e as usize);
        cand.push(1);
        if cand[0] == 0 {
            continue;
        }
        for d in 1..=e / 2 {
            for dcode in 0..p.pow(d) {
                let mut div = digits_of(dcode, p, d as usize);
                div.push(1);
                if poly_rem(&cand, &div, p).iter().all(|&c| c == 0) {
                    continue 'candidates;
                }
            }
        }
        return cand;
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn mul_mod(a: u32, b: u32, inner: &Inner) -> u32 {
    let e = inner.e as usize;
    let p = inner.p;
    let da = digits_of(a, p, e);
    let db = digits_of(b, p, e);
    let mut prod = vec![0u32; 2 * e - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    let r = poly_rem(&prod, &inner.modulus, p);
    let mut r = r;
    r.resize(e, 0);
    code_of(&r, p)
}

fn build_log_tables(inner: &Inner) -> (Vec<u32>, Vec<u32>) {
    let q = inner.q;
    let n = q - 1;
    for g in 2..q {
        let mut exp = vec![0u32; n as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        let mut ok = true;
        for k in 0..n {
            if k > 0 && x == 1 {
                ok = false;
                break;
            }
            exp[k as usize] = x;
            log[x as usize] = k;
            x = mul_mod(x, g, inner);
        }
        if ok && x == 1 {
            return (exp, log);
        }
    }
    // q = 2 never reaches here since e >= 2; q = 3.. always has a generator.
    unreachable!("multiplicative group of a finite field is cyclic")
}
