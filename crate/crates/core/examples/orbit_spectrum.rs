//! Hull spectrum over nonzero parameter vectors, one per F_q^* orbit, and the
//! affine count for the Frobenius family over the base field.

use qpoly_hull::field::FieldTower;
use qpoly_hull::linops::QPoly;
use qpoly_hull::sweep::{spectrum_affine, sweep_orbits, Family, ParamField};

fn main() -> qpoly_hull::Result<()> {
    let t = FieldTower::build(3, 1, 2)?;
    let gens = [QPoly::identity(&t), QPoly::frobenius(&t, 1)];
    println!("orbits over GF(9)^2: {:?}", sweep_orbits(&t, &gens, 1 << 16)?);

    let t = FieldTower::build(5, 1, 2)?;
    let family = Family::frobenius(&t, 1)?;
    println!("affine spectrum over GF(5)^2: {:?}", spectrum_affine(&t, &family, ParamField::Base, 1 << 16)?);
    Ok(())
}
