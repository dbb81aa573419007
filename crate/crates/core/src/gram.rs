//! Gram matrices of operators, hull dimension from ranks, structure matrices
//! of a generator family and their common null space.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Basis, Elem, FieldTower};
use crate::linalg::Matrix;
use crate::linops::QPoly;
use crate::oracle::{intersect, SubspaceFq};

/// `G[s][t] = Tr(phi(e_s) phi(e_t))`, entries in the standalone base field.
pub fn gram_of_operator(tower: &FieldTower, phi: &QPoly, basis: &Basis) -> Result<Matrix> {
    if phi.tower_id() != tower.id() {
        return Err(Error::TowerMismatch);
    }
    basis.check(tower)?;
    let images: Vec<Elem> = basis.elems().iter().map(|&e| phi.eval(tower, e)).collect();
    Ok(pairwise_traces(tower, &images, &images))
}

/// `M[s][t] = Tr(u_s v_t)`.
pub fn pairwise_traces(tower: &FieldTower, u: &[Elem], v: &[Elem]) -> Matrix {
    let top = tower.top();
    Matrix::from_fn(u.len(), v.len(), |s, t| tower.trace(top.mul(u[s], v[t])))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Lcd,
    SelfOrthogonal,
    Intermediate,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Lcd => "LCD",
            Classification::SelfOrthogonal => "self-orthogonal",
            Classification::Intermediate => "intermediate",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullReport {
    pub rank_operator: usize,
    pub rank_gram: usize,
    pub hull_dim: usize,
    pub classification: Classification,
    /// Entanglement cost of the associated quantum code, equal to the hull dimension.
    pub ebits: usize,
}

impl HullReport {
    pub fn from_ranks(rank_operator: usize, rank_gram: usize) -> Result<Self> {
        if rank_operator == 0 {
            return Err(Error::DegenerateInput("the zero operator has no code to classify".into()));
        }
        if rank_gram > rank_operator {
            return Err(Error::Inconsistency(format!(
                "Gram rank {rank_gram} exceeds operator rank {rank_operator}"
            )));
        }
        let hull_dim = rank_operator - rank_gram;
        let classification = if hull_dim == 0 {
            Classification::Lcd
        } else if rank_gram == 0 {
            Classification::SelfOrthogonal
        } else {
            Classification::Intermediate
        };
        Ok(HullReport { rank_operator, rank_gram, hull_dim, classification, ebits: hull_dim })
    }
}

/// Hull dimension of `C = im(phi)` as `rank(phi) - rank(G)`.
pub fn hull_dim(tower: &FieldTower, phi: &QPoly, basis: &Basis) -> Result<HullReport> {
    let a = phi.op_matrix(tower, basis)?;
    let g = gram_of_operator(tower, phi, basis)?;
    HullReport::from_ranks(a.rank(tower.base()), g.rank(tower.base()))
}

/// Hull dimension as `dim(im phi ∩ ker phi†)`, valid for any coefficients.
pub fn hull_by_adjoint(tower: &FieldTower, phi: &QPoly) -> Result<usize> {
    if phi.tower_id() != tower.id() {
        return Err(Error::TowerMismatch);
    }
    let image = SubspaceFq::span(tower, &phi.image_basis(tower));
    let kernel = SubspaceFq::span(tower, &phi.adjoint(tower).kernel_basis(tower));
    Ok(intersect(tower, &image, &kernel)?.dim())
}

/// `Gamma[i][j][s][t] = Tr(F_i(e_s) F_j(e_t))` for a generator family `F_0, ..., F_k`.
#[derive(Clone, Debug)]
pub struct StructureMatrices {
    gamma: Vec<Vec<Matrix>>,
}

impl StructureMatrices {
    pub fn new(tower: &FieldTower, gens: &[QPoly], basis: &Basis) -> Result<Self> {
        basis.check(tower)?;
        if gens.iter().any(|g| g.tower_id() != tower.id()) {
            return Err(Error::TowerMismatch);
        }
        let images: Vec<Vec<Elem>> = gens
            .iter()
            .map(|g| basis.elems().iter().map(|&e| g.eval(tower, e)).collect())
            .collect();
        let gamma = images
            .iter()
            .map(|u| images.iter().map(|v| pairwise_traces(tower, u, v)).collect())
            .collect();
        Ok(StructureMatrices { gamma })
    }

    pub fn len(&self) -> usize {
        self.gamma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gamma.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> &Matrix {
        &self.gamma[i][j]
    }

    /// `sum alpha_i alpha_j Gamma_ij` for `alpha` over the base field.
    pub fn combine(&self, tower: &FieldTower, alpha: &[Elem]) -> Matrix {
        let f = tower.base();
        let n = self.gamma.first().map_or(tower.m() as usize, |row| row[0].rows());
        let mut acc = Matrix::zeros(n, n);
        for (i, &ai) in alpha.iter().enumerate() {
            for (j, &aj) in alpha.iter().enumerate() {
                let c = f.mul(ai, aj);
                if !c.is_zero() {
                    acc = acc.add(f, &self.gamma[i][j].scale(f, c));
                }
            }
        }
        acc
    }

    /// `V* = ∩ ker Gamma_ij`, as coordinate vectors in the basis used to build `self`.
    pub fn universal_null_space(&self, tower: &FieldTower) -> Vec<Vec<Elem>> {
        let n = self.gamma.first().map_or(tower.m() as usize, |row| row[0].cols());
        let stacked = self
            .gamma
            .iter()
            .flatten()
            .fold(Matrix::zeros(0, n), |acc, g| acc.vstack(g));
        stacked.kernel(tower.base())
    }
}

/// Canonical representative of the F_q^*-orbit of a nonzero `alpha` over GF(q^m):
/// the scaling whose first nonzero entry has the lexicographically smallest
/// coordinate vector in the polynomial basis.
pub fn canonical_representative(tower: &FieldTower, alpha: &[Elem]) -> Result<Vec<Elem>> {
    let lead = *alpha
        .iter()
        .find(|a| !a.is_zero())
        .ok_or_else(|| Error::DegenerateInput("zero parameter vector".into()))?;
    let top = tower.top();
    let t = tower
        .base()
        .elements()
        .skip(1)
        .map(|t| tower.from_base(t))
        .min_by_key(|&t| tower.coords(top.mul(t, lead)))
        .expect("F_q^* is nonempty");
    Ok(alpha.iter().map(|&a| top.mul(t, a)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_identity_gram_in_polynomial_basis() {
        let t = FieldTower::build(2, 1, 2).unwrap();
        let b = Basis::polynomial(&t);
        let g = gram_of_operator(&t, &QPoly::identity(&t), &b).unwrap();
        assert_eq!(g, Matrix::from_ints(t.base(), &[&[0, 1], &[1, 1]]));
        // In the normal basis {a, a^2} the same form is the identity.
        let n = Basis::normal(&t);
        assert_eq!(gram_of_operator(&t, &QPoly::identity(&t), &n).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn gf4_binomial_hulls() {
        let t = FieldTower::build(2, 1, 2).unwrap();
        let b = Basis::polynomial(&t);
        let r = hull_dim(&t, &QPoly::binomial(&t, Elem::ONE, Elem::ONE, 1), &b).unwrap();
        assert_eq!((r.rank_operator, r.rank_gram, r.hull_dim), (1, 0, 1));
        assert_eq!(r.classification, Classification::SelfOrthogonal);
        let r = hull_dim(&t, &QPoly::binomial(&t, Elem::ONE, Elem::ZERO, 1), &b).unwrap();
        assert_eq!(r.classification, Classification::Lcd);
        assert!(matches!(hull_dim(&t, &QPoly::zero(&t), &b), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn structure_matrices_of_identity_and_frobenius() {
        let t = FieldTower::build(3, 1, 3).unwrap();
        let b = Basis::normal(&t);
        let gens = [QPoly::identity(&t), QPoly::frobenius(&t, 1)];
        let s = StructureMatrices::new(&t, &gens, &b).unwrap();
        assert_eq!(s.get(0, 1), &s.get(1, 0).transpose());
        assert_eq!(s.get(0, 0), &gram_of_operator(&t, &gens[0], &b).unwrap());
        assert!(s.universal_null_space(&t).is_empty());
        let zero = StructureMatrices::new(&t, &[QPoly::zero(&t)], &b).unwrap();
        assert_eq!(zero.universal_null_space(&t).len(), 3);
    }

    #[test]
    fn canonical_representative_is_orbit_invariant() {
        let t = FieldTower::build(3, 1, 2).unwrap();
        let alpha = [Elem::ZERO, Elem(5), Elem(7)];
        let c = canonical_representative(&t, &alpha).unwrap();
        let scaled: Vec<Elem> = alpha.iter().map(|&a| t.top().mul(Elem(2), a)).collect();
        assert_eq!(canonical_representative(&t, &scaled).unwrap(), c);
        assert!(canonical_representative(&t, &[Elem::ZERO]).is_err());
    }
}
