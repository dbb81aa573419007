//! (eps1, eps2) case counts and the frequency multiplicity at roots of Delta.

use std::collections::BTreeMap;

use qpoly_hull::field::{Basis, Elem, FieldTower};
use qpoly_hull::frob::{unit_root_count, FrobFamily};
use qpoly_hull::linops::QPoly;
use qpoly_hull::pencil::build_pencil;

fn main() -> qpoly_hull::Result<()> {
    for (p, r, m, k) in [(3, 1, 3, 1), (5, 1, 4, 2), (2, 2, 3, 1)] {
        let t = FieldTower::build(p, r, m)?;
        let fam = FrobFamily::new(&t, k)?;
        let mut cases: BTreeMap<((u8, u8), usize), usize> = BTreeMap::new();
        for lambda in t.top().elements() {
            let h = fam.hull(&t, lambda, Elem::ONE)?;
            *cases.entry((h.case(), h.hull_dim)).or_default() += 1;
        }
        println!("q = {}, m = {m}, k = {k}, d = {}: {cases:?}", t.q(), fam.d);
        println!("  #{{rho : (-rho)^m = 1}} = {}", unit_root_count(&t));

        if m % p != 0 {
            let pencil = build_pencil(&t, &QPoly::frobenius(&t, k), &Basis::normal(&t))?;
            for &rho in &pencil.roots {
                println!("  root {}: nu = {}, nullity = {}", t.render_base(rho), fam.nu(&t, rho)?, fam.pencil_nullity(&t, rho)?);
            }
        }
    }
    Ok(())
}
