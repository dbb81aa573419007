//! The Frobenius family `phi = lambda X + mu X^{q^k}`.
//!
//! Kernel dimensions come in closed form from `d = gcd(k, m)` and
//! `N = (q^m - 1)/(q^d - 1)`; hulls are always computed as
//! `dim(im phi ∩ ker phi†)` and then checked against the case table.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Basis, Elem, FieldTower};
use crate::gram::hull_dim;
use crate::linalg::Matrix;
use crate::linops::QPoly;
use crate::oracle::{intersect, SubspaceFq};
use crate::pencil::build_pencil;
use crate::util::gcd;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobFamily {
    pub k: u32,
    pub m: u32,
    pub d: u32,
    /// `(q^m - 1)/(q^d - 1)`.
    pub n: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobHullReport {
    pub lambda: Elem,
    pub mu: Elem,
    pub eps1: bool,
    pub eps2: bool,
    pub dim_code: usize,
    pub hull_dim: usize,
    /// Kernel generator of `phi†` and the isotropy verdict on its line, when `(eps1, eps2) = (1, 1)`.
    pub x0: Option<Elem>,
    pub isotropic: Option<bool>,
}

impl FrobHullReport {
    pub fn case(&self) -> (u8, u8) {
        (self.eps1 as u8, self.eps2 as u8)
    }
}

impl FrobFamily {
    pub fn new(tower: &FieldTower, k: u32) -> Result<Self> {
        let m = tower.m();
        if k == 0 || k >= m {
            return Err(Error::InvalidConfig(format!("twist exponent k = {k} must satisfy 1 <= k <= m - 1 = {}", m - 1)));
        }
        let d = gcd(k as u64, m as u64) as u32;
        let n = (tower.top().order() - 1) / (tower.q().pow(d) - 1);
        Ok(FrobFamily { k, m, d, n })
    }

    pub fn phi(&self, tower: &FieldTower, lambda: Elem, mu: Elem) -> QPoly {
        QPoly::binomial(tower, lambda, mu, self.k)
    }

    /// `lambda y + mu^{q^{m-k}} y^{q^{m-k}}`.
    pub fn adjoint(&self, tower: &FieldTower, lambda: Elem, mu: Elem) -> QPoly {
        let j = self.m - self.k;
        QPoly::binomial(tower, lambda, tower.frobenius_pow(mu, j as i64), j)
    }

    fn nonzero(lambda: Elem, mu: Elem) -> Result<()> {
        if lambda.is_zero() && mu.is_zero() {
            Err(Error::DegenerateInput("(lambda, mu) = (0, 0)".into()))
        } else {
            Ok(())
        }
    }

    /// `d` when `phi` has a kernel (a single GF(q^d)-line), otherwise 0.
    pub fn kernel_dim(&self, tower: &FieldTower, lambda: Elem, mu: Elem) -> Result<usize> {
        Ok(if self.eps(tower, lambda, mu)?.0 { self.d as usize } else { 0 })
    }

    /// `eps1 = [(-rho)^N = 1]`, `eps2 = [(-mu^{q^{m-k}-1} rho)^N = 1]`, `rho = lambda/mu`.
    pub fn eps(&self, tower: &FieldTower, lambda: Elem, mu: Elem) -> Result<(bool, bool)> {
        Self::nonzero(lambda, mu)?;
        if mu.is_zero() {
            return Ok((false, false));
        }
        let top = tower.top();
        let neg_rho = top.neg(top.div(lambda, mu).unwrap());
        let eps1 = top.pow(neg_rho, self.n) == Elem::ONE;
        let twist = top.pow(mu, tower.q().pow(self.m - self.k) - 1);
        let eps2 = top.pow(top.mul(twist, neg_rho), self.n) == Elem::ONE;
        Ok((eps1, eps2))
    }

    pub fn hull(&self, tower: &FieldTower, lambda: Elem, mu: Elem) -> Result<FrobHullReport> {
        let (eps1, eps2) = self.eps(tower, lambda, mu)?;
        let phi = self.phi(tower, lambda, mu);
        let adj = self.adjoint(tower, lambda, mu);
        let image = phi.image_basis(tower);
        let adj_kernel = adj.kernel_basis(tower);
        let d = self.d as usize;
        let m = self.m as usize;

        let inconsistent = |what: String| Err(Error::Inconsistency(format!("lambda={}, mu={}: {what}", lambda.0, mu.0)));
        if image.len() != m - if eps1 { d } else { 0 } {
            return inconsistent(format!("rank {} but eps1 = {eps1}", image.len()));
        }
        if adj_kernel.len() != if eps2 { d } else { 0 } {
            return inconsistent(format!("adjoint nullity {} but eps2 = {eps2}", adj_kernel.len()));
        }
        let hull = intersect(tower, &SubspaceFq::span(tower, &image), &SubspaceFq::span(tower, &adj_kernel))?.dim();
        let ok = match (eps1, eps2) {
            (false, false) | (true, false) => hull == 0,
            (false, true) => hull == d,
            (true, true) => hull <= d,
        };
        if !ok {
            return inconsistent(format!("hull {hull} contradicts case ({}, {})", eps1 as u8, eps2 as u8));
        }
        let (x0, isotropic) = if eps1 && eps2 {
            let x0 = adj_kernel[0];
            let iso = isotropy_check(tower, x0, self.d)?;
            if iso != (hull == d) {
                return inconsistent(format!("isotropy {iso} but hull {hull} with d = {d}"));
            }
            (Some(x0), Some(iso))
        } else {
            (None, None)
        };
        Ok(FrobHullReport { lambda, mu, eps1, eps2, dim_code: image.len(), hull_dim: hull, x0, isotropic })
    }

    /// Hull at `rho_0 in F_q` when `phi_{rho_0,1}` is bijective and `Delta(rho_0) = 0`.
    ///
    /// Returns the frequency multiplicity, after checking it against the
    /// nullity of `G~(rho_0)` and the rank-difference hull.
    pub fn stratum_hull_at_root(&self, tower: &FieldTower, rho0: Elem) -> Result<usize> {
        self.require_coprime(tower)?;
        let basis = Basis::normal(tower);
        let pencil = build_pencil(tower, &QPoly::frobenius(tower, self.k), &basis)?;
        if !pencil.delta.eval(tower.base(), rho0).is_zero() {
            return Err(Error::PreconditionFailed(format!("Delta({}) != 0", tower.render_base(rho0))));
        }
        let lambda = tower.from_base(rho0);
        if self.eps(tower, lambda, Elem::ONE)?.0 {
            return Err(Error::PreconditionFailed(format!(
                "phi is not bijective at rho = {}",
                tower.render_base(rho0)
            )));
        }
        let nu = self.nu(tower, rho0)?;
        let nullity = self.m as usize - pencil.monic_at(tower, rho0).rank(tower.base());
        let hull = hull_dim(tower, &self.phi(tower, lambda, Elem::ONE), &basis)?.hull_dim;
        if nu != nullity || nu != hull {
            return Err(Error::Inconsistency(format!("nu = {nu}, nullity = {nullity}, hull = {hull}")));
        }
        Ok(nu)
    }

    /// Frequency multiplicity at `rho_0 in F_q`: the number of frequencies `t`
    /// with `xi^{kt} = -rho_0` or `xi^{-kt} = -rho_0` for a primitive `m`-th root `xi`.
    /// Depends only on the multiplicative order of `-rho_0`.
    pub fn nu(&self, tower: &FieldTower, rho0: Elem) -> Result<usize> {
        self.require_coprime(tower)?;
        let f = tower.base();
        let Some(o) = f.mult_order(f.neg(rho0)) else {
            return Ok(0);
        };
        if self.m as u64 % o != 0 {
            return Ok(0);
        }
        Ok(frequency_multiplicity(self.k, self.m, (self.m as u64 / o) as u32))
    }

    /// `dim ker G~(rho_0)` over the base field.
    pub fn pencil_nullity(&self, tower: &FieldTower, rho0: Elem) -> Result<usize> {
        let pencil = build_pencil(tower, &QPoly::frobenius(tower, self.k), &Basis::normal(tower))?;
        Ok(self.m as usize - pencil.monic_at(tower, rho0).rank(tower.base()))
    }

    fn require_coprime(&self, tower: &FieldTower) -> Result<()> {
        if self.m % tower.p() == 0 {
            Err(Error::NotApplicable(format!("gcd(m, p) != 1 for m = {}, p = {}", self.m, tower.p())))
        } else {
            Ok(())
        }
    }
}

/// Whether the GF(q^d)-line through `x0` is totally isotropic for the trace form.
pub fn isotropy_check(tower: &FieldTower, x0: Elem, d: u32) -> Result<bool> {
    if x0.is_zero() {
        return Err(Error::DegenerateInput("x0 = 0".into()));
    }
    Ok(tower.trace_rel(tower.top().mul(x0, x0), d)?.is_zero())
}

/// `#{t in 0..m : kt = j or kt = -j (mod m)}`.
pub fn frequency_multiplicity(k: u32, m: u32, j: u32) -> usize {
    let (k, m, j) = (k as u64, m as u64, j as u64 % m as u64);
    (0..m).filter(|t| (k * t) % m == j || (k * t + j) % m == 0).count()
}

/// `#{rho in F_q : (-rho)^m = 1}`.
pub fn unit_root_count(tower: &FieldTower) -> usize {
    let f = tower.base();
    f.elements().filter(|&r| f.pow(f.neg(r), tower.m() as u64) == Elem::ONE).count()
}

/// Circulant form of the structure matrices in a normal basis.
#[derive(Clone, Debug, Serialize)]
pub struct Circulant {
    /// `omega_j = Tr(beta^{1 + q^j})`.
    pub omega: Vec<Elem>,
    pub g0: Matrix,
    pub g1: Matrix,
    pub g2: Matrix,
}

pub fn circulant_structure(tower: &FieldTower, k: u32, basis: &Basis) -> Result<Circulant> {
    let beta = basis.normal_element().ok_or(Error::NotNormalBasis)?;
    basis.check(tower)?;
    let (top, f) = (tower.top(), tower.base());
    let m = tower.m() as usize;
    let k = k as usize % m;
    let omega: Vec<Elem> = (0..m)
        .map(|j| tower.trace(top.mul(beta, tower.frobenius_pow(beta, j as i64))))
        .collect();
    let w = |i: usize| omega[i % m];
    let g0 = Matrix::from_fn(m, m, |i, j| w(j + m - i));
    let g1 = Matrix::from_fn(m, m, |i, j| f.add(w(j + k + m - i), w(j + 2 * m - i - k)));
    let pencil = build_pencil(tower, &QPoly::frobenius(tower, k as u32), basis)?;
    if pencil.g0 != g0 || pencil.g1 != g1 {
        return Err(Error::Inconsistency("circulant form disagrees with the direct structure matrices".into()));
    }
    if pencil.g2 != g0 {
        return Err(Error::Inconsistency("G2 != G0 for a Frobenius twist".into()));
    }
    Ok(Circulant { omega, g2: g0.clone(), g0, g1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf64_non_bijective_count() {
        let t = FieldTower::build(2, 2, 3).unwrap();
        let fam = FrobFamily::new(&t, 1).unwrap();
        assert_eq!(fam.n, 21);
        let count = t
            .top()
            .elements()
            .filter(|&rho| fam.kernel_dim(&t, rho, Elem::ONE).unwrap() > 0)
            .count();
        assert_eq!(count, 21);
        assert_eq!(fam.kernel_dim(&t, Elem::ONE, Elem::ZERO).unwrap(), 0);
        assert!(fam.kernel_dim(&t, Elem::ZERO, Elem::ZERO).is_err());
    }

    #[test]
    fn adjoint_matches_generic_formula() {
        let t = FieldTower::build(2, 1, 4).unwrap();
        let fam = FrobFamily::new(&t, 1).unwrap();
        for (l, m) in [(3, 5), (0, 1), (7, 0), (9, 14)] {
            let (l, m) = (Elem(l), Elem(m));
            assert_eq!(fam.adjoint(&t, l, m), fam.phi(&t, l, m).adjoint(&t));
        }
    }

    #[test]
    fn frobenius_alone_is_bijective() {
        let t = FieldTower::build(3, 1, 4).unwrap();
        let fam = FrobFamily::new(&t, 2).unwrap();
        assert_eq!(fam.eps(&t, Elem::ZERO, Elem::ONE).unwrap(), (false, false));
    }

    #[test]
    fn multiplicities() {
        assert_eq!(frequency_multiplicity(2, 4, 0), 2);
        assert_eq!(frequency_multiplicity(1, 4, 2), 1);
        assert_eq!(frequency_multiplicity(2, 5, 1), 2);
        assert_eq!(frequency_multiplicity(2, 4, 2), 2);
    }

    #[test]
    fn gf64_circulant() {
        let t = FieldTower::build(2, 2, 3).unwrap();
        let c = circulant_structure(&t, 1, &Basis::normal(&t)).unwrap();
        assert_eq!(c.g2, c.g0);
        assert!(!c.g1.is_zero());
        assert_eq!(
            circulant_structure(&t, 1, &Basis::polynomial(&t)).unwrap_err(),
            Error::NotNormalBasis
        );
    }

    #[test]
    fn isotropy_zero_rejected() {
        let t = FieldTower::build(2, 1, 4).unwrap();
        assert!(isotropy_check(&t, Elem::ZERO, 2).is_err());
    }
}
