use crate::error::{Error, Result};
use crate::field::gf::{Elem, Gf};
use crate::linalg::Matrix;

/// A field embedding GF(p^r) -> GF(p^n), r | n.
///
/// The generator of the small field is sent to the first root of its own
/// modulus among the powers of `g^((p^n - 1) / (p^r - 1))`, `g` the generator
/// of the big field. Both directions are GF(p)-linear maps on packed digits.
#[derive(Clone, Debug)]
pub struct Embedding {
    /// Images of `1, x, ..., x^{r-1}` of the small field.
    images: Vec<Elem>,
    pivot_rows: Vec<usize>,
    /// Inverse of the r x r block of the image matrix on `pivot_rows`, over GF(p).
    inv: Matrix,
}

impl Embedding {
    pub fn new(small: &Gf, big: &Gf, prime: &Gf) -> Result<Self> {
        let (r, n) = (small.degree(), big.degree());
        if small.characteristic() != big.characteristic() || n % r != 0 {
            return Err(Error::NotADivisor { s: r, m: n });
        }
        let step = (big.order() - 1) / (small.order() - 1);
        let gamma = big.pow(big.generator(), step);
        let modulus = small.modulus();
        let theta = (1..small.order().max(2))
            .map(|j| big.pow(gamma, j))
            .find(|&t| {
                let val = modulus
                    .iter()
                    .rev()
                    .fold(Elem::ZERO, |acc, &c| big.add(big.mul(acc, t), Elem(c)));
                val.is_zero()
            })
            .expect("a primitive polynomial of degree r splits in GF(p^n) when r | n");

        let images: Vec<Elem> = (0..r as u64).map(|s| big.pow(theta, s)).collect();
        // Rows of `b` index GF(p)-digits of the big field, columns index s.
        let b = Matrix::from_fn(n as usize, r as usize, |i, s| Elem(big.digits(images[s])[i]));
        let (_, pivot_rows) = b.transpose().rref(prime);
        debug_assert_eq!(pivot_rows.len(), r as usize);
        let block = Matrix::from_fn(r as usize, r as usize, |i, j| b[(pivot_rows[i], j)]);
        let inv = block.inverse(prime).expect("pivot block is invertible");
        Ok(Embedding { images, pivot_rows, inv })
    }

    pub fn forward(&self, small: &Gf, big: &Gf, c: Elem) -> Elem {
        let digits = small.digits(c);
        big.sum(
            digits
                .iter()
                .zip(&self.images)
                .filter(|(&d, _)| d != 0)
                .map(|(&d, &img)| big.mul(Elem(d), img)),
        )
    }

    /// Preimage of `y`, or `None` when `y` is outside the embedded copy.
    pub fn back(&self, small: &Gf, big: &Gf, prime: &Gf, y: Elem) -> Option<Elem> {
        let digits = big.digits(y);
        let v: Vec<Elem> = self.pivot_rows.iter().map(|&i| Elem(digits[i])).collect();
        let d = self.inv.mul_vec(prime, &v);
        let c = small.from_digits(&d.iter().map(|e| e.0).collect::<Vec<_>>());
        (self.forward(small, big, c) == y).then_some(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        for (p, r, n) in [(2, 2, 6), (3, 1, 3), (2, 3, 6), (5, 1, 2), (3, 2, 4)] {
            let small = Gf::new(p, r).unwrap();
            let big = Gf::new(p, n).unwrap();
            let prime = Gf::new(p, 1).unwrap();
            let e = Embedding::new(&small, &big, &prime).unwrap();
            for a in small.elements() {
                let ea = e.forward(&small, &big, a);
                assert_eq!(e.back(&small, &big, &prime, ea), Some(a));
                for b in small.elements() {
                    let eb = e.forward(&small, &big, b);
                    assert_eq!(e.forward(&small, &big, small.mul(a, b)), big.mul(ea, eb));
                    assert_eq!(e.forward(&small, &big, small.add(a, b)), big.add(ea, eb));
                }
            }
            let inside = big.elements().filter(|&y| e.back(&small, &big, &prime, y).is_some()).count();
            assert_eq!(inside as u64, small.order());
        }
    }
}
