//! Compare the fast hull routes with the brute-force oracle on random operators.

use qpoly_hull::field::{Elem, FieldTower};
use qpoly_hull::gram::{hull_by_adjoint, hull_dim};
use qpoly_hull::linops::QPoly;
use qpoly_hull::oracle::{hull_by_definition, image_by_enumeration};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> qpoly_hull::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let t = FieldTower::build(3, 1, 4)?;
    let n = t.top().order() as u32;
    let mut checked = 0;
    while checked < 200 {
        let c: Vec<Elem> = (0..4).map(|_| Elem(rng.gen_range(0..n))).collect();
        let phi = QPoly::new(&t, &c);
        if phi.is_zero() {
            continue;
        }
        let truth = hull_by_definition(&t, &image_by_enumeration(&t, &phi)?)?;
        assert_eq!(hull_dim(&t, &phi, t.polynomial_basis())?.hull_dim, truth);
        assert_eq!(hull_by_adjoint(&t, &phi)?, truth);
        checked += 1;
    }
    println!("{checked} random operators over GF(81): all routes agree");
    Ok(())
}
