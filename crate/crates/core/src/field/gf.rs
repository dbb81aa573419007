//! Prime-power fields GF(p^n) in a polynomial basis over GF(p).
//!
//! An element is the residue class of `c_0 + c_1 x + ... + c_{n-1} x^{n-1}`
//! modulo a primitive polynomial, packed into one integer as the base-`p`
//! number `sum c_i p^i`. Packed order is the element enumeration order used
//! everywhere in the crate. The class of `x` is always a primitive element.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::util::{checked_pow, factorize, is_prime};

/// Fields up to this size get exp/log tables.
pub const TABLE_CAP: u64 = 1 << 20;

/// A packed field element. Only meaningful together with the [`Gf`] it came from.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Debug)]
struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct Gf {
    p: u32,
    n: u32,
    order: u64,
    /// Monic modulus, coefficients low to high, length `n + 1`.
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

impl Gf {
    /// GF(p^n) defined by the lexicographically smallest primitive modulus.
    ///
    /// Candidates `x^n + c_{n-1} x^{n-1} + ... + c_0` are tried in increasing
    /// order of the packed value `sum c_i p^i`, i.e. comparing `c_{n-1}` first.
    pub fn new(p: u32, n: u32) -> Result<Self> {
        Self::check_size(p, n)?;
        let lower = checked_pow(p as u64, n).unwrap() as u64;
        for packed in 0..lower {
            let mut coeffs = unpack(packed, p, n as usize);
            if coeffs[0] == 0 {
                continue;
            }
            coeffs.push(1);
            if is_primitive(&coeffs, p) {
                return Ok(Self::from_modulus_unchecked(p, coeffs));
            }
        }
        unreachable!("primitive polynomials exist in every degree")
    }

    /// GF(p^n) with an explicit monic modulus (coefficients low to high).
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::InvalidConfig("modulus must have degree >= 1".into()));
        }
        let n = (modulus.len() - 1) as u32;
        Self::check_size(p, n)?;
        let coeffs: Vec<u32> = modulus.iter().map(|c| c % p).collect();
        if *coeffs.last().unwrap() != 1 || !is_primitive(&coeffs, p) {
            return Err(Error::NotPrimitive { p, degree: n });
        }
        Ok(Self::from_modulus_unchecked(p, coeffs))
    }

    fn check_size(p: u32, n: u32) -> Result<()> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if n == 0 {
            return Err(Error::InvalidConfig("field degree must be >= 1".into()));
        }
        match checked_pow(p as u64, n) {
            Some(size) if size < (1u128 << 31) => Ok(()),
            Some(size) => Err(Error::SizeCapExceeded { size, cap: 1 << 31 }),
            None => Err(Error::SizeCapExceeded { size: u128::MAX, cap: 1 << 31 }),
        }
    }

    fn from_modulus_unchecked(p: u32, modulus: Vec<u32>) -> Self {
        let n = (modulus.len() - 1) as u32;
        let order = checked_pow(p as u64, n).unwrap() as u64;
        let mut gf = Gf { p, n, order, modulus, tables: None };
        if order <= TABLE_CAP {
            gf.tables = Some(gf.build_tables());
        }
        gf
    }

    fn build_tables(&self) -> Tables {
        let group = (self.order - 1) as usize;
        let mut exp = Vec::with_capacity(group);
        let mut log = vec![0u32; self.order as usize];
        let x = self.generator();
        let mut cur = Elem::ONE;
        for i in 0..group {
            exp.push(cur.0);
            log[cur.0 as usize] = i as u32;
            cur = self.mul_slow(cur, x);
        }
        debug_assert_eq!(cur, Elem::ONE);
        Tables { exp, log }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// Number of elements.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Modulus packed as `sum c_i p^i` including the leading coefficient.
    pub fn modulus_packed(&self) -> u64 {
        self.modulus.iter().rev().fold(0u64, |acc, &c| acc * self.p as u64 + c as u64)
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The class of `x`, a primitive element.
    pub fn generator(&self) -> Elem {
        if self.n == 1 {
            Elem((self.p - self.modulus[0]) % self.p)
        } else {
            Elem(self.p)
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order as u32).map(Elem)
    }

    /// Embeds an integer into the prime subfield.
    pub fn from_int(&self, v: i64) -> Elem {
        Elem(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn digits(&self, a: Elem) -> Vec<u32> {
        unpack(a.0 as u64, self.p, self.n as usize)
    }

    pub fn from_digits(&self, digits: &[u32]) -> Elem {
        debug_assert!(digits.len() <= self.n as usize);
        Elem(digits.iter().rev().fold(0u32, |acc, &d| acc * self.p + d % self.p))
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if self.n == 1 {
            return Elem(((a.0 as u64 + b.0 as u64) % self.p as u64) as u32);
        }
        let p = self.p;
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut place) = (0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let mut x = a.0;
        let (mut out, mut place) = (0u32, 1u32);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        if self.n == 1 {
            return Elem(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        match &self.tables {
            Some(t) => {
                let group = self.order as u32 - 1;
                let mut s = t.log[a.0 as usize] + t.log[b.0 as usize];
                if s >= group {
                    s -= group;
                }
                Elem(t.exp[s as usize])
            }
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        let p = self.p as u64;
        let n = self.n as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        let reduced = reduce(&prod, &self.modulus, self.p);
        self.from_digits(&reduced)
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a.is_zero() {
            return None;
        }
        match &self.tables {
            Some(t) => {
                let group = self.order as u32 - 1;
                let l = t.log[a.0 as usize];
                Some(Elem(t.exp[((group - l) % group) as usize]))
            }
            None => Some(self.pow(a, self.order - 2)),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let group = self.order - 1;
        if let Some(t) = &self.tables {
            let l = t.log[a.0 as usize] as u64;
            let idx = ((l as u128 * (e % group) as u128) % group as u128) as usize;
            return Elem(t.exp[idx]);
        }
        let mut e = e % group;
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Discrete logarithm to the base [`Gf::generator`], when tables exist.
    pub fn log(&self, a: Elem) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        self.tables.as_ref().map(|t| t.log[a.0 as usize] as u64)
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Elem) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let mut ord = self.order - 1;
        for (prime, _) in factorize(self.order - 1) {
            while ord % prime == 0 && self.pow(a, ord / prime) == Elem::ONE {
                ord /= prime;
            }
        }
        Some(ord)
    }

    pub fn sum<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(Elem::ZERO, |acc, x| self.add(acc, x))
    }

    /// Renders `a` as a polynomial in `symbol`, highest power first: `a^5+a^4+a^2+1`.
    pub fn render(&self, a: Elem, symbol: &str) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let digits = self.digits(a);
        let mut terms = Vec::new();
        for (i, &c) in digits.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => symbol.to_string(),
                _ => format!("{symbol}^{i}"),
            };
            terms.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        terms.join("+")
    }
}

fn unpack(mut v: u64, p: u32, n: usize) -> Vec<u32> {
    let mut out = vec![0u32; n];
    for d in out.iter_mut() {
        *d = (v % p as u64) as u32;
        v /= p as u64;
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `f`, padded to `deg f` coefficients.
fn reduce(a: &[u64], f: &[u32], p: u32) -> Vec<u32> {
    let p = p as u64;
    let n = f.len() - 1;
    let mut r: Vec<u64> = a.to_vec();
    for i in (n..r.len()).rev() {
        let c = r[i] % p;
        if c == 0 {
            continue;
        }
        for (j, &fj) in f.iter().enumerate() {
            let idx = i - n + j;
            r[idx] = (r[idx] + (p - c) * fj as u64) % p;
        }
    }
    let mut out: Vec<u32> = r.iter().take(n).map(|&v| (v % p) as u32).collect();
    out.resize(n, 0);
    out
}

fn mulmod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    reduce(&prod, f, p)
}

fn x_pow_mod(mut e: u64, f: &[u32], p: u32) -> Vec<u32> {
    let n = f.len() - 1;
    let mut base = reduce(&[0, 1], f, p);
    let mut acc = vec![0u32; n];
    acc[0] = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &base, f, p);
        }
        base = mulmod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

/// `f` is primitive iff `x` has multiplicative order exactly `p^n - 1` modulo `f`.
/// A reducible `f` has fewer than `p^n - 1` units, so this also certifies irreducibility.
fn is_primitive(f: &[u32], p: u32) -> bool {
    if f[0] == 0 {
        return false;
    }
    let n = (f.len() - 1) as u32;
    let group = checked_pow(p as u64, n).unwrap() as u64 - 1;
    let mut one = vec![0u32; n as usize];
    one[0] = 1;
    if x_pow_mod(group, f, p) != one {
        return false;
    }
    factorize(group)
        .into_iter()
        .all(|(q, _)| x_pow_mod(group / q, f, p) != one)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_primitive_moduli() {
        assert_eq!(Gf::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Gf::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(Gf::new(2, 6).unwrap().modulus(), &[1, 1, 0, 0, 0, 0, 1]);
        // x^2 + 1 is irreducible over GF(3) but x has order 4, so it is skipped.
        assert_eq!(Gf::new(3, 2).unwrap().modulus(), &[2, 1, 1]);
        assert_eq!(Gf::new(2, 1).unwrap().modulus(), &[1, 1]);
        // x + 1 has root 4 of order 2; x + 2 is the first primitive candidate.
        assert_eq!(Gf::new(5, 1).unwrap().generator(), Elem(3));
    }

    #[test]
    fn generator_has_full_order() {
        for (p, n) in [(2, 1), (2, 4), (3, 3), (5, 2), (7, 1), (2, 6)] {
            let f = Gf::new(p, n).unwrap();
            assert_eq!(f.mult_order(f.generator()), Some(f.order() - 1), "GF({p}^{n})");
        }
    }

    #[test]
    fn reject_non_primitive_and_non_prime() {
        assert_eq!(Gf::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(Gf::with_modulus(3, &[1, 0, 1]), Err(Error::NotPrimitive { .. })));
        assert!(Gf::with_modulus(2, &[1, 1, 0, 1, 1, 0, 1]).is_ok());
    }

    #[test]
    fn table_and_slow_paths_agree() {
        let f = Gf::new(3, 4).unwrap();
        for a in f.elements().step_by(7) {
            for b in f.elements().step_by(5) {
                assert_eq!(f.mul(a, b), if a.is_zero() || b.is_zero() { Elem::ZERO } else { f.mul_slow(a, b) });
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, n) in [(2, 3), (3, 2), (5, 1)] {
            let f = Gf::new(p, n).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
                }
                assert_eq!(f.pow(a, f.order()), a);
                for b in f.elements() {
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn large_field_without_tables() {
        // 3^13 > TABLE_CAP
        let f = Gf::new(3, 13).unwrap();
        assert!(f.tables.is_none());
        let g = f.generator();
        let a = f.pow(g, 12345);
        assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
        assert_eq!(f.pow(a, f.order()), a);
    }

    #[test]
    fn rendering() {
        let f = Gf::new(2, 2).unwrap();
        assert_eq!(f.render(Elem(3), "a"), "a+1");
        let g = Gf::new(3, 2).unwrap();
        assert_eq!(g.render(Elem(5), "a"), "a+2");
        assert_eq!(g.render(Elem(7), "a"), "2*a+1");
    }
}
