//! The family `lambda X + mu L` over base-field parameters: structure matrices,
//! the quadratic Gram pencil and its discriminant polynomial.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Basis, Elem, Embedding, FieldTower, Gf};
use crate::gram::pairwise_traces;
use crate::linalg::Matrix;
use crate::linops::QPoly;
use crate::poly::Poly;

#[derive(Clone, Debug, Serialize)]
pub struct PencilData {
    #[serde(skip)]
    pub l: QPoly,
    pub g0: Matrix,
    pub g1: Matrix,
    pub g2: Matrix,
    /// `det(rho^2 G0 + rho G1 + G2)` over the base field, not normalized.
    pub delta: Poly,
    /// Roots of `delta` in the base field, in packed order.
    pub roots: Vec<Elem>,
    /// Degree of the extension supplying interpolation nodes (1 when the base field sufficed).
    pub node_extension_degree: u32,
}

pub fn build_pencil(tower: &FieldTower, l: &QPoly, basis: &Basis) -> Result<PencilData> {
    if l.tower_id() != tower.id() {
        return Err(Error::TowerMismatch);
    }
    basis.check(tower)?;
    let f = tower.base();
    let e = basis.elems();
    let le: Vec<Elem> = e.iter().map(|&x| l.eval(tower, x)).collect();
    let g0 = pairwise_traces(tower, e, e);
    let g1 = pairwise_traces(tower, e, &le).add(f, &pairwise_traces(tower, &le, e));
    let g2 = pairwise_traces(tower, &le, &le);
    let (delta, node_extension_degree) = discriminant(tower, &g0, &g1, &g2)?;
    let roots = f.elements().filter(|&x| delta.eval(f, x).is_zero()).collect();
    Ok(PencilData { l: l.clone(), g0, g1, g2, delta, roots, node_extension_degree })
}

/// Interpolates `det(rho^2 G0 + rho G1 + G2)` from `2m + 1` values.
///
/// When the base field has at most `2m` elements the nodes come from the
/// smallest extension GF(q^e) with `q^e > 2m`, and every coefficient is
/// checked to lie in the base field.
fn discriminant(tower: &FieldTower, g0: &Matrix, g1: &Matrix, g2: &Matrix) -> Result<(Poly, u32)> {
    let base = tower.base();
    let nodes = 2 * g0.rows() + 1;
    let mut e = 1u32;
    while tower.q().checked_pow(e).is_some_and(|s| s < nodes as u64) {
        e += 1;
    }
    if e == 1 {
        let pts: Vec<(Elem, Elem)> = base
            .elements()
            .take(nodes)
            .map(|x| (x, pencil_matrix(base, g0, g1, g2, x).det(base)))
            .collect();
        return Ok((Poly::interpolate(base, &pts), 1));
    }
    let ext = Gf::new(tower.p(), tower.r() * e)?;
    let emb = Embedding::new(base, &ext, tower.prime())?;
    let lift = |m: &Matrix| m.map(|c| emb.forward(base, &ext, c));
    let (h0, h1, h2) = (lift(g0), lift(g1), lift(g2));
    let pts: Vec<(Elem, Elem)> = ext
        .elements()
        .take(nodes)
        .map(|x| (x, pencil_matrix(&ext, &h0, &h1, &h2, x).det(&ext)))
        .collect();
    let lifted = Poly::interpolate(&ext, &pts);
    let coeffs = lifted
        .coeffs()
        .iter()
        .map(|&c| emb.back(base, &ext, tower.prime(), c))
        .collect::<Option<Vec<Elem>>>()
        .ok_or_else(|| Error::Inconsistency("discriminant coefficient outside the base field".into()))?;
    Ok((Poly::new(coeffs), e))
}

/// `rho^2 G0 + rho G1 + G2`.
pub fn pencil_matrix(f: &Gf, g0: &Matrix, g1: &Matrix, g2: &Matrix, rho: Elem) -> Matrix {
    g0.scale(f, f.mul(rho, rho)).add(f, &g1.scale(f, rho)).add(f, g2)
}

impl PencilData {
    /// `lambda^2 G0 + lambda mu G1 + mu^2 G2`.
    pub fn gram_at(&self, tower: &FieldTower, lambda: Elem, mu: Elem) -> Result<Matrix> {
        if lambda.is_zero() && mu.is_zero() {
            return Err(Error::DegenerateInput("(lambda, mu) = (0, 0)".into()));
        }
        let f = tower.base();
        Ok(self
            .g0
            .scale(f, f.mul(lambda, lambda))
            .add(f, &self.g1.scale(f, f.mul(lambda, mu)))
            .add(f, &self.g2.scale(f, f.mul(mu, mu))))
    }

    /// `G~(rho) = rho^2 G0 + rho G1 + G2`.
    pub fn monic_at(&self, tower: &FieldTower, rho: Elem) -> Matrix {
        pencil_matrix(tower.base(), &self.g0, &self.g1, &self.g2, rho)
    }

    pub fn delta_monic(&self, tower: &FieldTower) -> Poly {
        self.delta.monic(tower.base())
    }
}

pub fn is_self_adjoint(tower: &FieldTower, l: &QPoly) -> bool {
    l.is_self_adjoint(tower)
}

/// Characteristic 2 with self-adjoint `L`: `G1` vanishes and everything
/// depends on `(lambda^2, mu^2)` only.
#[derive(Clone, Debug, Serialize)]
pub struct Char2Pencil {
    pub g0: Matrix,
    pub g2: Matrix,
    /// `delta(rho) = D(rho^2)`; these are the coefficients of `D`.
    pub delta_in_rho_squared: Poly,
}

pub fn char2_reduction(tower: &FieldTower, pencil: &PencilData) -> Result<Char2Pencil> {
    if tower.p() != 2 {
        return Err(Error::NotApplicable("odd characteristic".into()));
    }
    if !pencil.l.is_self_adjoint(tower) {
        return Err(Error::NotApplicable("L is not self-adjoint".into()));
    }
    if !pencil.g1.is_zero() {
        return Err(Error::Inconsistency("G1 != 0 for a self-adjoint L in characteristic 2".into()));
    }
    let c = pencil.delta.coeffs();
    if c.iter().skip(1).step_by(2).any(|x| !x.is_zero()) {
        return Err(Error::Inconsistency("discriminant has an odd-degree term".into()));
    }
    Ok(Char2Pencil {
        g0: pencil.g0.clone(),
        g2: pencil.g2.clone(),
        delta_in_rho_squared: Poly::new(c.iter().step_by(2).copied().collect()),
    })
}
