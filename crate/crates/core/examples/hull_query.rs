//! Hull of one code im(lambda X + mu X^q), computed three ways.

use qpoly_hull::field::FieldTower;
use qpoly_hull::frob::FrobFamily;
use qpoly_hull::gram::{hull_by_adjoint, hull_dim};
use qpoly_hull::oracle::{hull_by_definition, image_by_enumeration};
use qpoly_hull::render::parse_elem;

fn main() -> qpoly_hull::Result<()> {
    let t = FieldTower::build(2, 2, 3)?;
    let fam = FrobFamily::new(&t, 1)?;
    let lambda = parse_elem(t.top(), "a^3+a^2+a", 'a')?;
    let mu = t.top().one();

    let phi = fam.phi(&t, lambda, mu);
    let report = hull_dim(&t, &phi, t.polynomial_basis())?;
    println!("rank(phi) = {}, rank(G) = {}, hull = {} ({})", report.rank_operator, report.rank_gram, report.hull_dim, report.classification);
    println!("adjoint route: {}", hull_by_adjoint(&t, &phi)?);
    println!("definition: {}", hull_by_definition(&t, &image_by_enumeration(&t, &phi)?)?);

    let f = fam.hull(&t, lambda, mu)?;
    println!("(eps1, eps2) = {:?}, isotropic line: {:?}", f.case(), f.isotropic);
    Ok(())
}
