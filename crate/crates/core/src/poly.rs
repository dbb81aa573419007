//! Dense univariate polynomials over a [`Gf`], lowest degree first.

use serde::{Deserialize, Serialize};

use crate::field::{Elem, Gf};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly(Vec<Elem>);

impl Poly {
    pub fn new(mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.0.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Elem {
        self.0.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn eval(&self, f: &Gf, x: Elem) -> Elem {
        self.0.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn mul(&self, f: &Gf, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Elem::ZERO; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, f: &Gf, c: Elem) -> Poly {
        Poly::new(self.0.iter().map(|&a| f.mul(c, a)).collect())
    }

    pub fn add(&self, f: &Gf, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::new((0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn monic(&self, f: &Gf) -> Poly {
        match f.inv(self.leading()) {
            Some(inv) => self.scale(f, inv),
            None => Poly::zero(),
        }
    }

    /// The unique polynomial of degree `< points.len()` through `points`.
    /// Panics on repeated nodes.
    pub fn interpolate(f: &Gf, points: &[(Elem, Elem)]) -> Poly {
        let mut acc = Poly::zero();
        for (i, &(xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Poly(vec![Elem::ONE]);
            let mut denom = Elem::ONE;
            for (j, &(xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul(f, &Poly(vec![f.neg(xj), Elem::ONE]));
                denom = f.mul(denom, f.sub(xi, xj));
            }
            let c = f.div(yi, denom).expect("interpolation nodes are distinct");
            acc = acc.add(f, &basis.scale(f, c));
        }
        acc
    }

    /// Highest power first, e.g. `x^4+1`; coefficients rendered by `coeff`.
    pub fn render(&self, var: &str, coeff: impl Fn(Elem) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let cs = coeff(c);
            terms.push(match (i, c == Elem::ONE) {
                (0, _) => cs,
                (_, true) => mono,
                _ if cs.contains('+') => format!("({cs})*{mono}"),
                _ => format!("{cs}*{mono}"),
            });
        }
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = Gf::new(7, 1).unwrap();
        let p = Poly::new(vec![Elem(3), Elem(0), Elem(5), Elem(1)]);
        let pts: Vec<(Elem, Elem)> = (0..4).map(|x| (Elem(x), p.eval(&f, Elem(x)))).collect();
        assert_eq!(Poly::interpolate(&f, &pts), p);
    }

    #[test]
    fn binomial_fourth_power_in_char_2() {
        let f = Gf::new(2, 1).unwrap();
        let x1 = Poly::new(vec![Elem::ONE, Elem::ONE]);
        let p4 = x1.mul(&f, &x1).mul(&f, &x1).mul(&f, &x1);
        assert_eq!(p4.coeffs(), &[Elem(1), Elem(0), Elem(0), Elem(0), Elem(1)]);
        assert_eq!(p4.render("x", |c| c.0.to_string()), "x^4+1");
    }

    #[test]
    fn trimming_and_degree() {
        assert_eq!(Poly::new(vec![Elem(1), Elem(0)]).degree(), Some(0));
        assert_eq!(Poly::new(vec![Elem(0)]).degree(), None);
    }
}
