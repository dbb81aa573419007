use crate::error::{Error, Result};
use crate::field::gf::Elem;
use crate::field::tower::{FieldTower, TowerId};
use crate::linalg::Matrix;

/// An F_q-basis `e_0, ..., e_{m-1}` of GF(q^m).
#[derive(Clone, Debug)]
pub struct Basis {
    tower: TowerId,
    elems: Vec<Elem>,
    normal: Option<Elem>,
    /// Inverse over GF(p) of the (rm x rm) matrix whose column `i*r + s`
    /// holds the GF(p)-digits of `z^s * e_i`, `z` the embedded base generator.
    solve: Matrix,
}

impl Basis {
    pub fn from_elements(tower: &FieldTower, elems: Vec<Elem>) -> Result<Self> {
        let solve = coordinate_solver(tower, &elems).ok_or(Error::NotABasis)?;
        Ok(Basis { tower: tower.id(), elems, normal: None, solve })
    }

    /// `{1, a, ..., a^{m-1}}` for the generator `a`.
    pub fn polynomial(tower: &FieldTower) -> Self {
        let a = tower.generator();
        let elems = (0..tower.m() as u64).map(|i| tower.top().pow(a, i)).collect();
        Self::from_elements(tower, elems).expect("powers of a primitive element below degree m")
    }

    /// Normal basis on the smallest normal element in packed order.
    pub fn normal(tower: &FieldTower) -> Self {
        tower
            .top()
            .elements()
            .skip(1)
            .find_map(|b| Self::normal_from(tower, b).ok())
            .expect("normal elements exist")
    }

    pub fn normal_from(tower: &FieldTower, beta: Elem) -> Result<Self> {
        let elems: Vec<Elem> = (0..tower.m()).map(|i| tower.frobenius_pow(beta, i as i64)).collect();
        let solve = coordinate_solver(tower, &elems).ok_or(Error::NotNormalBasis)?;
        Ok(Basis { tower: tower.id(), elems, normal: Some(beta), solve })
    }

    pub fn tower_id(&self) -> TowerId {
        self.tower
    }

    pub fn check(&self, tower: &FieldTower) -> Result<()> {
        if self.tower == tower.id() {
            Ok(())
        } else {
            Err(Error::TowerMismatch)
        }
    }

    pub fn elems(&self) -> &[Elem] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn is_normal(&self) -> bool {
        self.normal.is_some()
    }

    pub fn normal_element(&self) -> Option<Elem> {
        self.normal
    }

    /// Coordinates of `x` over the standalone base field.
    pub fn coords(&self, tower: &FieldTower, x: Elem) -> Vec<Elem> {
        let (r, m) = (tower.r() as usize, tower.m() as usize);
        let digits: Vec<Elem> = tower.top().digits(x).into_iter().map(Elem).collect();
        let c = self.solve.mul_vec(tower.prime(), &digits);
        (0..m)
            .map(|i| tower.base().from_digits(&c[i * r..(i + 1) * r].iter().map(|e| e.0).collect::<Vec<_>>()))
            .collect()
    }

    /// `sum c_i e_i`.
    pub fn combine(&self, tower: &FieldTower, coords: &[Elem]) -> Elem {
        let top = tower.top();
        top.sum(
            coords
                .iter()
                .zip(&self.elems)
                .map(|(&c, &e)| top.mul(tower.from_base(c), e)),
        )
    }
}

fn coordinate_solver(tower: &FieldTower, elems: &[Elem]) -> Option<Matrix> {
    let (r, m) = (tower.r() as usize, tower.m() as usize);
    if elems.len() != m {
        return None;
    }
    let top = tower.top();
    let z = tower.from_base(tower.base().generator());
    let n = r * m;
    let mut b = Matrix::zeros(n, n);
    for (i, &e) in elems.iter().enumerate() {
        let mut cur = e;
        for s in 0..r {
            for (row, d) in top.digits(cur).into_iter().enumerate() {
                b[(row, i * r + s)] = Elem(d);
            }
            cur = top.mul(cur, z);
        }
    }
    b.inverse(tower.prime())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coords_round_trip() {
        for (p, r, m) in [(2, 2, 3), (3, 1, 3), (2, 1, 4), (3, 2, 2), (5, 1, 2)] {
            let t = FieldTower::build(p, r, m).unwrap();
            for basis in [Basis::polynomial(&t), Basis::normal(&t)] {
                for (j, &e) in basis.elems().iter().enumerate() {
                    let c = basis.coords(&t, e);
                    let unit: Vec<Elem> = (0..m as usize).map(|i| Elem((i == j) as u32)).collect();
                    assert_eq!(c, unit);
                }
                for x in t.top().elements() {
                    assert_eq!(basis.combine(&t, &basis.coords(&t, x)), x);
                }
                assert_eq!(basis.coords(&t, Elem::ZERO), vec![Elem::ZERO; m as usize]);
            }
        }
    }

    #[test]
    fn gf4_normal_element_is_alpha() {
        let t = FieldTower::build(2, 1, 2).unwrap();
        let b = Basis::normal(&t);
        assert_eq!(b.normal_element(), Some(t.generator()));
        assert_eq!(b.elems(), &[Elem(2), Elem(3)]);
        assert!(Basis::normal_from(&t, Elem::ONE).is_err());
    }

    #[test]
    fn degree_one_normal_element_is_one() {
        let t = FieldTower::build(5, 1, 1).unwrap();
        assert_eq!(Basis::normal(&t).normal_element(), Some(Elem::ONE));
    }

    #[test]
    fn dependent_elements_rejected() {
        let t = FieldTower::build(2, 2, 2).unwrap();
        let one = Elem::ONE;
        let c = t.from_base(t.base().generator());
        assert_eq!(Basis::from_elements(&t, vec![one, c]).unwrap_err(), Error::NotABasis);
    }
}
