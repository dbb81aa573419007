use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::basis::Basis;
use crate::field::embed::Embedding;
use crate::field::gf::{Elem, Gf};
use crate::util::{checked_pow, divisors, is_prime};

/// Default cap on the size of the top field, in elements.
pub const DEFAULT_SIZE_CAP: u64 = 1 << 24;

/// Identifies a tower up to equality of its defining data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TowerId {
    pub p: u32,
    pub r: u32,
    pub m: u32,
    pub modulus: u64,
}

/// The chain GF(p) ⊂ GF(q) ⊂ GF(q^m) with q = p^r.
///
/// Elements of GF(q^m) live in `top()`. The base field GF(q) also exists as a
/// standalone field `base()`, used for every matrix whose entries are
/// F_q-valued (Gram matrices, operator matrices, coordinates); `to_base` and
/// `from_base` move between the standalone copy and the copy inside GF(q^m).
#[derive(Clone, Debug)]
pub struct FieldTower {
    p: u32,
    r: u32,
    m: u32,
    q: u64,
    top: Gf,
    base: Gf,
    prime: Gf,
    base_embedding: Embedding,
    id: TowerId,
    poly_basis: Option<Basis>,
}

/// The copy of GF(q^s) inside GF(q^m) for a divisor `s` of `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Subfield {
    pub s: u32,
    pub order: u64,
    /// Generator of the multiplicative group of the subfield.
    pub generator: Elem,
}

impl Subfield {
    /// Zero followed by the powers of the generator.
    pub fn elements<'a>(&self, tower: &'a FieldTower) -> impl Iterator<Item = Elem> + 'a {
        let g = self.generator;
        let top = tower.top();
        std::iter::once(Elem::ZERO).chain((0..self.order - 1).map(move |i| top.pow(g, i)))
    }
}

impl FieldTower {
    pub fn build(p: u32, r: u32, m: u32) -> Result<Self> {
        Self::build_with_cap(p, r, m, DEFAULT_SIZE_CAP)
    }

    pub fn build_with_cap(p: u32, r: u32, m: u32, cap: u64) -> Result<Self> {
        Self::validate(p, r, m, cap)?;
        let top = Gf::new(p, r * m)?;
        Self::assemble(p, r, m, top)
    }

    /// Same as [`FieldTower::build_with_cap`] with an explicit primitive
    /// modulus of degree `r*m` for the top field (coefficients low to high).
    pub fn with_modulus(p: u32, r: u32, m: u32, modulus: &[u32], cap: u64) -> Result<Self> {
        Self::validate(p, r, m, cap)?;
        if modulus.len() != (r * m + 1) as usize {
            return Err(Error::NotPrimitive { p, degree: r * m });
        }
        let top = Gf::with_modulus(p, modulus)?;
        Self::assemble(p, r, m, top)
    }

    fn validate(p: u32, r: u32, m: u32, cap: u64) -> Result<()> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if r == 0 || m == 0 {
            return Err(Error::InvalidConfig("r and m must be positive".into()));
        }
        let size = checked_pow(p as u64, r.saturating_mul(m)).unwrap_or(u128::MAX);
        if size > cap as u128 {
            return Err(Error::SizeCapExceeded { size, cap });
        }
        Ok(())
    }

    fn assemble(p: u32, r: u32, m: u32, top: Gf) -> Result<Self> {
        let prime = Gf::new(p, 1)?;
        let base = if m == 1 { top.clone() } else { Gf::new(p, r)? };
        let base_embedding = Embedding::new(&base, &top, &prime)?;
        let id = TowerId { p, r, m, modulus: top.modulus_packed() };
        let mut tower =
            FieldTower { p, r, m, q: (p as u64).pow(r), top, base, prime, base_embedding, id, poly_basis: None };
        tower.poly_basis = Some(Basis::polynomial(&tower));
        Ok(tower)
    }

    pub fn id(&self) -> TowerId {
        self.id
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// GF(q^m).
    pub fn top(&self) -> &Gf {
        &self.top
    }

    /// Standalone GF(q).
    pub fn base(&self) -> &Gf {
        &self.base
    }

    pub fn prime(&self) -> &Gf {
        &self.prime
    }

    pub fn generator(&self) -> Elem {
        self.top.generator()
    }

    /// The basis `{1, a, ..., a^{m-1}}`, built once with the tower.
    pub fn polynomial_basis(&self) -> &Basis {
        self.poly_basis.as_ref().expect("set during construction")
    }

    /// Coordinates over the base field in [`FieldTower::polynomial_basis`].
    pub fn coords(&self, x: Elem) -> Vec<Elem> {
        self.polynomial_basis().coords(self, x)
    }

    pub fn from_base(&self, c: Elem) -> Elem {
        self.base_embedding.forward(&self.base, &self.top, c)
    }

    pub fn to_base(&self, y: Elem) -> Option<Elem> {
        self.base_embedding.back(&self.base, &self.top, &self.prime, y)
    }

    /// `x^(q^(e mod m))`.
    pub fn frobenius_pow(&self, x: Elem, e: i64) -> Elem {
        let e = e.rem_euclid(self.m as i64) as u32;
        self.top.pow(x, self.q.pow(e))
    }

    /// Relative trace from GF(q^m) down to GF(q^s), as an element of GF(q^m).
    pub fn trace_rel(&self, x: Elem, s: u32) -> Result<Elem> {
        if s == 0 || self.m % s != 0 {
            return Err(Error::NotADivisor { s, m: self.m });
        }
        Ok(self.top.sum((0..self.m / s).map(|i| self.frobenius_pow(x, (s * i) as i64))))
    }

    /// `Tr_{q^m/q}(x)` as an element of the standalone base field.
    pub fn trace(&self, x: Elem) -> Elem {
        let t = self.trace_rel(x, 1).expect("1 divides m");
        self.to_base(t).expect("absolute trace lies in the base field")
    }

    pub fn is_in_subfield(&self, x: Elem, s: u32) -> Result<bool> {
        if s == 0 || self.m % s != 0 {
            return Err(Error::NotADivisor { s, m: self.m });
        }
        Ok(self.frobenius_pow(x, s as i64) == x)
    }

    pub fn subfield(&self, s: u32) -> Result<Subfield> {
        if s == 0 || self.m % s != 0 {
            return Err(Error::NotADivisor { s, m: self.m });
        }
        let order = self.q.pow(s);
        let step = (self.top.order() - 1) / (order - 1);
        Ok(Subfield { s, order, generator: self.top.pow(self.generator(), step) })
    }

    /// One entry per divisor of `m`, in increasing order.
    pub fn subfields(&self) -> Vec<Subfield> {
        divisors(self.m).into_iter().map(|s| self.subfield(s).unwrap()).collect()
    }

    pub fn render(&self, x: Elem) -> String {
        self.top.render(x, "a")
    }

    pub fn render_base(&self, c: Elem) -> String {
        if self.r == 1 {
            c.0.to_string()
        } else {
            self.base.render(c, "z")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf64_tower() {
        let t = FieldTower::build(2, 2, 3).unwrap();
        assert_eq!(t.q(), 4);
        assert_eq!(t.top().order(), 64);
        assert_eq!(t.top().mult_order(t.generator()), Some(63));
    }

    #[test]
    fn trivial_tower() {
        let t = FieldTower::build(2, 1, 1).unwrap();
        assert_eq!(t.top().order(), 2);
        assert_eq!(t.generator(), Elem::ONE);
        assert_eq!(t.trace(Elem::ONE), Elem::ONE);
    }

    #[test]
    fn gf9_base_field_is_frobenius_fixed() {
        let t = FieldTower::build(3, 1, 2).unwrap();
        let fixed: Vec<Elem> = t.top().elements().filter(|&x| t.frobenius_pow(x, 1) == x).collect();
        assert_eq!(fixed, vec![Elem(0), Elem(1), Elem(2)]);
        let mut sub: Vec<Elem> = t.subfield(1).unwrap().elements(&t).collect();
        sub.sort();
        assert_eq!(sub, fixed);
    }

    #[test]
    fn errors() {
        assert_eq!(FieldTower::build(6, 1, 2).unwrap_err(), Error::NotPrime(6));
        assert!(matches!(
            FieldTower::build_with_cap(2, 5, 5, 1 << 24),
            Err(Error::SizeCapExceeded { .. })
        ));
        let t = FieldTower::build(2, 1, 4).unwrap();
        assert_eq!(t.trace_rel(Elem::ONE, 3).unwrap_err(), Error::NotADivisor { s: 3, m: 4 });
    }

    #[test]
    fn gf4_traces() {
        // GF(4) = GF(2)(a), a^2 + a + 1 = 0.
        let t = FieldTower::build(2, 1, 2).unwrap();
        let a = t.generator();
        assert_eq!(t.trace(Elem::ONE), Elem::ZERO);
        assert_eq!(t.trace(a), Elem::ONE);
        assert_eq!(t.trace(t.top().mul(a, a)), Elem::ONE);
    }
}
