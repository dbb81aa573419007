//! Deliberately naive ground truth: F_q-subspaces of GF(q^m), trace duals,
//! intersections and hulls straight from the definitions.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldTower, TowerId};
use crate::linalg::Matrix;
use crate::linops::QPoly;

/// Largest field for the linear-solve oracle.
pub const ORACLE_CAP: u64 = 1 << 12;
/// Largest field for the set-enumeration oracle.
pub const ENUMERATION_CAP: u64 = 1 << 8;

/// An F_q-subspace of GF(q^m) with an independent spanning set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceFq {
    tower: TowerId,
    basis: Vec<Elem>,
}

impl SubspaceFq {
    /// Span of arbitrary elements; dependent ones are dropped.
    pub fn span(tower: &FieldTower, elems: &[Elem]) -> Self {
        let mut kept: Vec<Elem> = Vec::new();
        let mut rows: Vec<Vec<Elem>> = Vec::new();
        for &x in elems {
            if x.is_zero() {
                continue;
            }
            rows.push(tower.coords(x));
            if Matrix::from_rows(rows.clone()).rank(tower.base()) > kept.len() {
                kept.push(x);
            } else {
                rows.pop();
            }
        }
        SubspaceFq { tower: tower.id(), basis: kept }
    }

    pub fn zero(tower: &FieldTower) -> Self {
        SubspaceFq { tower: tower.id(), basis: Vec::new() }
    }

    pub fn full(tower: &FieldTower) -> Self {
        SubspaceFq { tower: tower.id(), basis: tower.polynomial_basis().elems().to_vec() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Elem] {
        &self.basis
    }

    fn check(&self, tower: &FieldTower) -> Result<()> {
        if self.tower == tower.id() {
            Ok(())
        } else {
            Err(Error::TowerMismatch)
        }
    }

    pub fn contains(&self, tower: &FieldTower, x: Elem) -> bool {
        let mut rows: Vec<Vec<Elem>> = self.basis.iter().map(|&b| tower.coords(b)).collect();
        rows.push(tower.coords(x));
        Matrix::from_rows(rows).rank(tower.base()) == self.dim()
    }

    /// Same subspace, possibly different bases.
    pub fn same_as(&self, tower: &FieldTower, other: &SubspaceFq) -> bool {
        self.dim() == other.dim() && other.basis.iter().all(|&x| self.contains(tower, x))
    }

    /// Every element, by enumerating F_q-combinations of the basis.
    pub fn elements(&self, tower: &FieldTower) -> Vec<Elem> {
        let top = tower.top();
        let mut out = vec![Elem::ZERO];
        for &b in &self.basis {
            let multiples: Vec<Elem> =
                tower.base().elements().map(|c| top.mul(tower.from_base(c), b)).collect();
            out = out.iter().flat_map(|&x| multiples.iter().map(move |&y| top.add(x, y))).collect();
        }
        out
    }
}

fn check_cap(tower: &FieldTower, cap: u64) -> Result<()> {
    let size = tower.top().order();
    if size > cap {
        return Err(Error::SizeCapExceeded { size: size as u128, cap });
    }
    Ok(())
}

/// `{y : Tr(x y) = 0 for all x in S}` by a linear solve over F_q.
pub fn trace_dual(tower: &FieldTower, s: &SubspaceFq) -> Result<SubspaceFq> {
    s.check(tower)?;
    check_cap(tower, ORACLE_CAP)?;
    let basis = tower.polynomial_basis();
    let top = tower.top();
    let m = tower.m() as usize;
    let a = Matrix::from_fn(s.dim(), m, |i, j| tower.trace(top.mul(s.basis[i], basis.elems()[j])));
    let kernel: Vec<Elem> = a.kernel(tower.base()).iter().map(|v| basis.combine(tower, v)).collect();
    Ok(SubspaceFq { tower: tower.id(), basis: kernel })
}

/// Trace dual by testing every element of the field against every element of `S`.
pub fn trace_dual_enumerated(tower: &FieldTower, s: &SubspaceFq) -> Result<SubspaceFq> {
    s.check(tower)?;
    check_cap(tower, ENUMERATION_CAP)?;
    let top = tower.top();
    let members = s.elements(tower);
    let dual: Vec<Elem> = top
        .elements()
        .filter(|&y| members.iter().all(|&x| tower.trace(top.mul(x, y)).is_zero()))
        .collect();
    Ok(SubspaceFq::span(tower, &dual))
}

/// `S1 ∩ S2` from the kernel of `[B1 | -B2]` on coordinates.
pub fn intersect(tower: &FieldTower, s1: &SubspaceFq, s2: &SubspaceFq) -> Result<SubspaceFq> {
    s1.check(tower)?;
    s2.check(tower)?;
    let f = tower.base();
    let m = tower.m() as usize;
    let mut cols: Vec<Vec<Elem>> = s1.basis.iter().map(|&x| tower.coords(x)).collect();
    cols.extend(s2.basis.iter().map(|&x| tower.coords(x).iter().map(|&c| f.neg(c)).collect::<Vec<_>>()));
    let joint = Matrix::from_cols(&cols, m);
    let top = tower.top();
    let elems: Vec<Elem> = joint
        .kernel(f)
        .iter()
        .map(|v| {
            top.sum(s1.basis.iter().zip(v).map(|(&b, &c)| top.mul(tower.from_base(c), b)))
        })
        .collect();
    Ok(SubspaceFq::span(tower, &elems))
}

pub fn hull_by_definition(tower: &FieldTower, s: &SubspaceFq) -> Result<usize> {
    let dual = trace_dual(tower, s)?;
    Ok(intersect(tower, s, &dual)?.dim())
}

/// `phi(GF(q^m))`, by evaluating at every element.
pub fn image_by_enumeration(tower: &FieldTower, phi: &QPoly) -> Result<SubspaceFq> {
    check_cap(tower, ORACLE_CAP)?;
    let values: BTreeSet<Elem> = tower.top().elements().map(|x| phi.eval(tower, x)).collect();
    let values: Vec<Elem> = values.into_iter().collect();
    Ok(SubspaceFq::span(tower, &values))
}

/// `{x : phi(x) = 0}`, by evaluating at every element.
pub fn kernel_by_enumeration(tower: &FieldTower, phi: &QPoly) -> Result<SubspaceFq> {
    check_cap(tower, ORACLE_CAP)?;
    let zeros: Vec<Elem> = tower.top().elements().filter(|&x| phi.eval(tower, x).is_zero()).collect();
    Ok(SubspaceFq::span(tower, &zeros))
}

/// Whether `Tr(u v) = 0` for all `u, v` in the GF(q^d)-line through `x0`.
pub fn line_is_isotropic(tower: &FieldTower, x0: Elem, d: u32) -> Result<bool> {
    let sub = tower.subfield(d)?;
    let top = tower.top();
    let line: Vec<Elem> = sub.elements(tower).map(|c| top.mul(c, x0)).collect();
    Ok(line.iter().all(|&u| line.iter().all(|&v| tower.trace(top.mul(u, v)).is_zero())))
}

/// Hull of the F_{q^m}-span of `gens` under the coefficientwise pairing,
/// from the dual code computed as a kernel over GF(q^m).
///
/// `dim(C ∩ C^⊥) = dim C + dim C^⊥ - rank [C; C^⊥]`.
pub fn rd_hull_by_system(tower: &FieldTower, gens: &[QPoly]) -> usize {
    let top = tower.top();
    let g = Matrix::from_rows(gens.iter().map(|p| p.coeffs().to_vec()).collect());
    let dim_c = g.rank(top);
    let dual = g.kernel(top);
    if dual.is_empty() {
        return 0;
    }
    let dim_dual = dual.len();
    let stacked = g.vstack(&Matrix::from_rows(dual));
    dim_c + dim_dual - stacked.rank(top)
}

/// Whether `x` is coefficientwise orthogonal to every generator.
pub fn in_rd_dual(tower: &FieldTower, gens: &[QPoly], x: &QPoly) -> bool {
    let top = tower.top();
    gens.iter()
        .all(|g| top.sum(g.coeffs().iter().zip(x.coeffs()).map(|(&a, &b)| top.mul(a, b))).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_duals() {
        let t = FieldTower::build(2, 1, 3).unwrap();
        assert_eq!(trace_dual(&t, &SubspaceFq::zero(&t)).unwrap().dim(), 3);
        assert_eq!(trace_dual(&t, &SubspaceFq::full(&t)).unwrap().dim(), 0);
    }

    #[test]
    fn linear_and_enumerated_duals_agree() {
        let t = FieldTower::build(3, 1, 3).unwrap();
        let a = t.generator();
        for gens in [vec![Elem::ONE], vec![a, Elem(5)], vec![Elem(7), Elem(11), Elem(19)]] {
            let s = SubspaceFq::span(&t, &gens);
            let d1 = trace_dual(&t, &s).unwrap();
            let d2 = trace_dual_enumerated(&t, &s).unwrap();
            assert!(d1.same_as(&t, &d2));
            assert_eq!(s.dim() + d1.dim(), 3);
            assert!(trace_dual(&t, &d1).unwrap().same_as(&t, &s));
        }
    }

    #[test]
    fn intersections() {
        let t = FieldTower::build(2, 1, 4).unwrap();
        let b = t.polynomial_basis().elems().to_vec();
        let s1 = SubspaceFq::span(&t, &b[..2]);
        let s2 = SubspaceFq::span(&t, &b[2..]);
        assert_eq!(intersect(&t, &s1, &s2).unwrap().dim(), 0);
        assert!(intersect(&t, &s1, &s1).unwrap().same_as(&t, &s1));
    }

    #[test]
    fn gf4_hulls() {
        let t = FieldTower::build(2, 1, 2).unwrap();
        let so = image_by_enumeration(&t, &QPoly::binomial(&t, Elem::ONE, Elem::ONE, 1)).unwrap();
        assert_eq!(hull_by_definition(&t, &so).unwrap(), 1);
        let lcd = image_by_enumeration(&t, &QPoly::identity(&t)).unwrap();
        assert_eq!(hull_by_definition(&t, &lcd).unwrap(), 0);
        assert_eq!(hull_by_definition(&t, &SubspaceFq::zero(&t)).unwrap(), 0);
    }

    #[test]
    fn cap_enforced() {
        let t = FieldTower::build(2, 1, 13).unwrap();
        assert!(matches!(trace_dual(&t, &SubspaceFq::zero(&t)), Err(Error::SizeCapExceeded { .. })));
    }
}
