//! Rank-distance codes `<X, F_1, ..., F_k>` over GF(q^m) with the
//! coefficientwise pairing `<f, g> = sum_l f_l g_l`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldTower, TowerId};
use crate::linalg::Matrix;
use crate::linops::QPoly;

pub fn delsarte_pair(tower: &FieldTower, f: &QPoly, g: &QPoly) -> Result<Elem> {
    if f.tower_id() != tower.id() || g.tower_id() != tower.id() {
        return Err(Error::TowerMismatch);
    }
    let top = tower.top();
    Ok(top.sum(f.coeffs().iter().zip(g.coeffs()).map(|(&a, &b)| top.mul(a, b))))
}

/// The code spanned over GF(q^m) by `X` and generators without constant term.
#[derive(Clone, Debug)]
pub struct RdCode {
    tower: TowerId,
    gens: Vec<QPoly>,
    independent: bool,
}

impl RdCode {
    pub fn new(tower: &FieldTower, gens: Vec<QPoly>) -> Result<Self> {
        for (j, g) in gens.iter().enumerate() {
            if g.tower_id() != tower.id() {
                return Err(Error::TowerMismatch);
            }
            if !g.coeffs()[0].is_zero() {
                return Err(Error::NonzeroConstantTerm { index: j + 1 });
            }
        }
        let all = Self::with_identity(tower, &gens);
        let rank = Matrix::from_rows(all.iter().map(|g| g.coeffs().to_vec()).collect()).rank(tower.top());
        Ok(RdCode { tower: tower.id(), independent: rank == gens.len() + 1, gens })
    }

    fn with_identity(tower: &FieldTower, gens: &[QPoly]) -> Vec<QPoly> {
        std::iter::once(QPoly::identity(tower)).chain(gens.iter().cloned()).collect()
    }

    pub fn k(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[QPoly] {
        &self.gens
    }

    /// `X, F_1, ..., F_k`.
    pub fn all_generators(&self, tower: &FieldTower) -> Vec<QPoly> {
        Self::with_identity(tower, &self.gens)
    }

    pub fn is_independent(&self) -> bool {
        self.independent
    }

    fn check(&self, tower: &FieldTower) -> Result<()> {
        if self.tower != tower.id() {
            return Err(Error::TowerMismatch);
        }
        if !self.independent {
            return Err(Error::DependentGenerators);
        }
        Ok(())
    }

    /// The code always contains `X`, whose kernel is trivial.
    pub fn is_degenerate(&self, tower: &FieldTower) -> bool {
        !common_kernel(tower, &self.all_generators(tower)).is_empty()
    }
}

/// `M[j][j'] = sum_{l >= 1} (F_j)_l (F_j')_l`, over GF(q^m).
pub fn generator_gram(tower: &FieldTower, code: &RdCode) -> Result<Matrix> {
    code.check(tower)?;
    let k = code.k();
    let mut m = Matrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            m[(i, j)] = delsarte_pair(tower, &code.gens[i], &code.gens[j])?;
        }
    }
    Ok(m)
}

#[derive(Clone, Debug, Serialize)]
pub struct RdHullReport {
    pub k: usize,
    pub gram: Matrix,
    pub rank_gram: usize,
    pub hull_dim: usize,
    pub is_lcd: bool,
    /// `M = 0`: the generators `F_1, ..., F_k` span a self-orthogonal subcode.
    pub generators_self_orthogonal: bool,
    pub hull_basis: Vec<QPoly>,
    /// Set when the hull is the whole span of `F_1..F_k`: calling that span
    /// self-dual needs a separate check of the ambient dimension.
    pub ambient_dimension_caveat: bool,
}

pub fn rd_hull(tower: &FieldTower, code: &RdCode) -> Result<RdHullReport> {
    let gram = generator_gram(tower, code)?;
    let top = tower.top();
    let k = code.k();
    let rank_gram = gram.rank(top);
    let hull_basis: Vec<QPoly> = gram
        .kernel(top)
        .into_iter()
        .map(|v| {
            let lead = *v.iter().find(|c| !c.is_zero()).expect("kernel vectors are nonzero");
            let inv = top.inv(lead).unwrap();
            code.gens
                .iter()
                .zip(&v)
                .fold(QPoly::zero(tower), |acc, (g, &c)| {
                    acc.add(tower, &g.scale(tower, top.mul(c, inv))).unwrap()
                })
        })
        .collect();
    let generators_self_orthogonal = gram.is_zero();
    Ok(RdHullReport {
        k,
        rank_gram,
        hull_dim: k - rank_gram,
        is_lcd: rank_gram == k,
        generators_self_orthogonal,
        ambient_dimension_caveat: generators_self_orthogonal && k > 0,
        hull_basis,
        gram,
    })
}

/// `∩ ker h` over the given operators, as an F_q-basis of elements.
pub fn common_kernel(tower: &FieldTower, gens: &[QPoly]) -> Vec<Elem> {
    let basis = tower.polynomial_basis();
    let m = tower.m() as usize;
    let stacked = gens.iter().fold(Matrix::zeros(0, m), |acc, g| {
        acc.vstack(&g.op_matrix(tower, basis).expect("same tower"))
    });
    stacked.kernel(tower.base()).iter().map(|v| basis.combine(tower, v)).collect()
}

/// Whether every element of the span of `gens` vanishes on a common nonzero subspace.
pub fn is_degenerate(tower: &FieldTower, gens: &[QPoly]) -> (bool, Vec<Elem>) {
    let k = common_kernel(tower, gens);
    (!k.is_empty(), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::rd_hull_by_system;

    fn poly(t: &FieldTower, c: &[u32]) -> QPoly {
        QPoly::new(t, &c.iter().map(|&v| Elem(v)).collect::<Vec<_>>())
    }

    #[test]
    fn pairing_basics() {
        let t = FieldTower::build(3, 1, 3).unwrap();
        let x = QPoly::identity(&t);
        assert_eq!(delsarte_pair(&t, &x, &x).unwrap(), Elem::ONE);
        let f = poly(&t, &[0, 5, 7]);
        assert_eq!(delsarte_pair(&t, &x, &f).unwrap(), Elem::ZERO);
    }

    #[test]
    fn constant_term_rejected() {
        let t = FieldTower::build(2, 2, 2).unwrap();
        let err = RdCode::new(&t, vec![poly(&t, &[1, 1])]).unwrap_err();
        assert_eq!(err, Error::NonzeroConstantTerm { index: 1 });
    }

    #[test]
    fn dependent_generators() {
        let t = FieldTower::build(2, 2, 3).unwrap();
        let f = poly(&t, &[0, 3, 5]);
        let code = RdCode::new(&t, vec![f.clone(), f.scale(&t, Elem(7))]).unwrap();
        assert!(!code.is_independent());
        assert_eq!(rd_hull(&t, &code).unwrap_err(), Error::DependentGenerators);
    }

    #[test]
    fn disjoint_supports_give_diagonal_gram() {
        let t = FieldTower::build(2, 2, 4).unwrap();
        let code = RdCode::new(&t, vec![poly(&t, &[0, 3]), poly(&t, &[0, 0, 0, 9])]).unwrap();
        let m = generator_gram(&t, &code).unwrap();
        assert!(m[(0, 1)].is_zero() && m[(1, 0)].is_zero());
        assert!(!code.is_degenerate(&t));
    }

    #[test]
    fn hull_matches_system_oracle() {
        let t = FieldTower::build(2, 2, 4).unwrap();
        let code = RdCode::new(&t, vec![poly(&t, &[0, 1, 1]), poly(&t, &[0, 0, 1, 0])]).unwrap();
        let r = rd_hull(&t, &code).unwrap();
        assert_eq!(r.hull_dim, rd_hull_by_system(&t, &code.all_generators(&t)));
        for h in &r.hull_basis {
            assert!(crate::oracle::in_rd_dual(&t, &code.all_generators(&t), h));
        }
    }

    #[test]
    fn frobenius_difference_is_degenerate_on_gf4() {
        // x^2 - x vanishes on GF(2).
        let t = FieldTower::build(2, 1, 2).unwrap();
        let (deg, kernel) = is_degenerate(&t, &[QPoly::binomial(&t, Elem::ONE, Elem::ONE, 1)]);
        assert!(deg);
        assert_eq!(kernel, vec![Elem::ONE]);
        assert!(!is_degenerate(&t, &[QPoly::identity(&t)]).0);
    }
}
