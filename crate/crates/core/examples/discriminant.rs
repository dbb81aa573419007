//! Structure matrices G0, G1, G2 and the discriminant for a few towers.

use qpoly_hull::field::{Basis, FieldTower};
use qpoly_hull::linops::QPoly;
use qpoly_hull::pencil::{build_pencil, char2_reduction};

fn main() -> qpoly_hull::Result<()> {
    for (p, r, m, k) in [(2, 1, 2, 1), (2, 2, 3, 1), (5, 1, 4, 2), (2, 1, 4, 2)] {
        let t = FieldTower::build(p, r, m)?;
        let pencil = build_pencil(&t, &QPoly::frobenius(&t, k), &Basis::normal(&t))?;
        let rb = |c| t.render_base(c);
        println!("q = {}, m = {m}, k = {k}", t.q());
        println!("  Delta(rho) = {}", pencil.delta.render("rho", rb));
        println!("  roots: {:?}", pencil.roots.iter().map(|&c| rb(c)).collect::<Vec<_>>());
        if let Ok(c2) = char2_reduction(&t, &pencil) {
            println!("  G1 = 0, Delta = D(rho^2), D(s) = {}", c2.delta_in_rho_squared.render("s", rb));
        }
    }
    Ok(())
}
