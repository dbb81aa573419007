//! q-polynomials `sum a_i X^{q^i}` modulo `X^{q^m} - X`, as F_q-linear maps of GF(q^m).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Basis, Elem, FieldTower, TowerId};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QPoly {
    tower: TowerId,
    /// `coeffs[i]` multiplies `X^{q^i}`; always length `m`.
    coeffs: Vec<Elem>,
}

impl QPoly {
    /// Folds indices modulo `m` (`X^{q^m} = X`) and pads to length `m`.
    pub fn new(tower: &FieldTower, coeffs: &[Elem]) -> Self {
        let m = tower.m() as usize;
        let mut c = vec![Elem::ZERO; m];
        for (i, &a) in coeffs.iter().enumerate() {
            c[i % m] = tower.top().add(c[i % m], a);
        }
        QPoly { tower: tower.id(), coeffs: c }
    }

    pub fn zero(tower: &FieldTower) -> Self {
        Self::new(tower, &[])
    }

    pub fn identity(tower: &FieldTower) -> Self {
        Self::new(tower, &[Elem::ONE])
    }

    /// `X^{q^k}`.
    pub fn frobenius(tower: &FieldTower, k: u32) -> Self {
        let mut c = vec![Elem::ZERO; tower.m() as usize];
        c[(k % tower.m()) as usize] = Elem::ONE;
        QPoly { tower: tower.id(), coeffs: c }
    }

    /// `lambda X + mu X^{q^k}`.
    pub fn binomial(tower: &FieldTower, lambda: Elem, mu: Elem, k: u32) -> Self {
        let mut c = vec![Elem::ZERO; tower.m() as usize];
        c[0] = lambda;
        let i = (k % tower.m()) as usize;
        c[i] = tower.top().add(c[i], mu);
        QPoly { tower: tower.id(), coeffs: c }
    }

    pub fn tower_id(&self) -> TowerId {
        self.tower
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check(&self, tower: &FieldTower) -> Result<()> {
        if self.tower == tower.id() {
            Ok(())
        } else {
            Err(Error::TowerMismatch)
        }
    }

    pub fn eval(&self, tower: &FieldTower, x: Elem) -> Elem {
        let top = tower.top();
        let mut acc = Elem::ZERO;
        let mut conj = x;
        for &a in &self.coeffs {
            if !a.is_zero() {
                acc = top.add(acc, top.mul(a, conj));
            }
            conj = top.pow(conj, tower.q());
        }
        acc
    }

    pub fn add(&self, tower: &FieldTower, other: &QPoly) -> Result<QPoly> {
        self.check(tower)?;
        other.check(tower)?;
        let top = tower.top();
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| top.add(a, b)).collect();
        Ok(QPoly { tower: self.tower, coeffs })
    }

    pub fn scale(&self, tower: &FieldTower, c: Elem) -> QPoly {
        QPoly { tower: self.tower, coeffs: self.coeffs.iter().map(|&a| tower.top().mul(c, a)).collect() }
    }

    /// `self ∘ other`: the coefficient at `i + j` collects `a_i b_j^{q^i}`.
    pub fn compose(&self, tower: &FieldTower, other: &QPoly) -> Result<QPoly> {
        self.check(tower)?;
        other.check(tower)?;
        let top = tower.top();
        let m = self.coeffs.len();
        let mut c = vec![Elem::ZERO; m];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = top.mul(a, tower.frobenius_pow(b, i as i64));
                c[(i + j) % m] = top.add(c[(i + j) % m], t);
            }
        }
        Ok(QPoly { tower: self.tower, coeffs: c })
    }

    /// Adjoint for the trace form: `a_i X^{q^i}` becomes `a_i^{q^{m-i}} X^{q^{m-i}}`.
    pub fn adjoint(&self, tower: &FieldTower) -> QPoly {
        let m = self.coeffs.len();
        let mut c = vec![Elem::ZERO; m];
        for (i, &a) in self.coeffs.iter().enumerate() {
            c[(m - i) % m] = tower.frobenius_pow(a, (m - i) as i64);
        }
        QPoly { tower: self.tower, coeffs: c }
    }

    pub fn is_self_adjoint(&self, tower: &FieldTower) -> bool {
        self.adjoint(tower) == *self
    }

    /// Column `j` holds the coordinates of `L(e_j)`.
    pub fn op_matrix(&self, tower: &FieldTower, basis: &Basis) -> Result<Matrix> {
        self.check(tower)?;
        basis.check(tower)?;
        let images: Vec<Elem> = basis.elems().iter().map(|&e| self.eval(tower, e)).collect();
        if cfg!(debug_assertions) && images.len() >= 2 {
            let (e0, e1) = (basis.elems()[0], basis.elems()[1]);
            let c = tower.from_base(tower.base().generator());
            let lhs = self.eval(tower, tower.top().add(tower.top().mul(c, e0), e1));
            let rhs = tower.top().add(tower.top().mul(c, images[0]), images[1]);
            debug_assert_eq!(lhs, rhs, "q-polynomial evaluation is not F_q-linear");
        }
        let cols: Vec<Vec<Elem>> = images.iter().map(|&y| basis.coords(tower, y)).collect();
        Ok(Matrix::from_cols(&cols, tower.m() as usize))
    }

    pub fn rank(&self, tower: &FieldTower) -> usize {
        self.op_matrix(tower, tower.polynomial_basis())
            .expect("same tower")
            .rank(tower.base())
    }

    /// F_q-basis of the kernel, leftmost-pivot order in the polynomial basis.
    pub fn kernel_basis(&self, tower: &FieldTower) -> Vec<Elem> {
        let basis = tower.polynomial_basis();
        let a = self.op_matrix(tower, basis).expect("same tower");
        a.kernel(tower.base()).iter().map(|v| basis.combine(tower, v)).collect()
    }

    /// F_q-basis of the image: `L(e_j)` over the pivot columns `j`.
    pub fn image_basis(&self, tower: &FieldTower) -> Vec<Elem> {
        let basis = tower.polynomial_basis();
        let a = self.op_matrix(tower, basis).expect("same tower");
        let (_, pivots) = a.rref(tower.base());
        pivots.iter().map(|&j| self.eval(tower, basis.elems()[j])).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldTower {
        FieldTower::build(2, 1, 2).unwrap()
    }

    #[test]
    fn frobenius_on_gf4() {
        let t = f4();
        let a = t.generator();
        let l = QPoly::frobenius(&t, 1);
        assert_eq!(l.eval(&t, a), Elem(3)); // a^2 = a + 1
        assert_eq!(QPoly::identity(&t).eval(&t, a), a);
    }

    #[test]
    fn x_plus_x_squared_over_gf4() {
        let t = f4();
        let l = QPoly::binomial(&t, Elem::ONE, Elem::ONE, 1);
        assert_eq!(l.rank(&t), 1);
        assert_eq!(l.kernel_basis(&t), vec![Elem::ONE]);
        assert_eq!(l.image_basis(&t).len(), 1);
    }

    #[test]
    fn index_folding_and_twist_addition() {
        let t = FieldTower::build(3, 1, 3).unwrap();
        let x4 = QPoly::new(&t, &[Elem::ZERO, Elem::ZERO, Elem::ZERO, Elem::ONE]);
        assert_eq!(x4, QPoly::identity(&t));
        for a in 0..3 {
            for b in 0..3 {
                let c = QPoly::frobenius(&t, a).compose(&t, &QPoly::frobenius(&t, b)).unwrap();
                assert_eq!(c, QPoly::frobenius(&t, (a + b) % 3));
            }
        }
    }

    #[test]
    fn identity_and_zero_matrices() {
        let t = FieldTower::build(2, 2, 3).unwrap();
        let b = Basis::normal(&t);
        assert_eq!(QPoly::identity(&t).op_matrix(&t, &b).unwrap(), Matrix::identity(3));
        assert!(QPoly::zero(&t).op_matrix(&t, &b).unwrap().is_zero());
        assert_eq!(QPoly::identity(&t).rank(&t), 3);
        assert!(QPoly::identity(&t).kernel_basis(&t).is_empty());
    }

    #[test]
    fn binomial_adjoint() {
        let t = FieldTower::build(2, 2, 3).unwrap();
        let (lam, mu) = (Elem(9), Elem(37));
        let adj = QPoly::binomial(&t, lam, mu, 1).adjoint(&t);
        let expected = QPoly::binomial(&t, lam, t.frobenius_pow(mu, 2), 2);
        assert_eq!(adj, expected);
    }

    #[test]
    fn tower_mismatch() {
        let t1 = f4();
        let t2 = FieldTower::build(3, 1, 2).unwrap();
        let err = QPoly::identity(&t1).compose(&t1, &QPoly::identity(&t2)).unwrap_err();
        assert_eq!(err, Error::TowerMismatch);
    }
}
