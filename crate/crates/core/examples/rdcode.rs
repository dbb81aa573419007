//! Hulls of rank-distance codes <X, F_1, ..., F_k> under the coefficientwise pairing.

use qpoly_hull::field::{Elem, FieldTower};
use qpoly_hull::linops::QPoly;
use qpoly_hull::oracle::rd_hull_by_system;
use qpoly_hull::rdhull::{rd_hull, RdCode};

fn main() -> qpoly_hull::Result<()> {
    let t = FieldTower::build(2, 1, 5)?;
    let poly = |c: &[u32]| QPoly::new(&t, &c.iter().map(|&v| Elem(v)).collect::<Vec<_>>());

    let cases = [
        ("rank 2", vec![poly(&[0, 1, 0, 0, 0]), poly(&[0, 0, 1, 0, 0])]),
        ("rank 1", vec![poly(&[0, 1, 0, 0, 0]), poly(&[0, 0, 1, 1, 0])]),
        ("rank 0", vec![poly(&[0, 1, 1, 0, 0]), poly(&[0, 0, 0, 1, 1])]),
    ];
    for (name, gens) in cases {
        let code = RdCode::new(&t, gens)?;
        let r = rd_hull(&t, &code)?;
        let check = rd_hull_by_system(&t, &code.all_generators(&t));
        println!("{name}: hull {} (system {check}), LCD {}, caveat {}", r.hull_dim, r.is_lcd, r.ambient_dimension_caveat);
        for h in &r.hull_basis {
            println!("  {:?}", h.coeffs().iter().map(|&c| t.render(c)).collect::<Vec<_>>());
        }
    }
    Ok(())
}
