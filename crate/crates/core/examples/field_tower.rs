//! Build GF(64) over GF(4) and look around: subfields, traces, bases.

use qpoly_hull::field::{Basis, FieldTower};
use qpoly_hull::util::format_factorization;

fn main() -> qpoly_hull::Result<()> {
    let t = FieldTower::build(2, 2, 3)?;
    let units = t.top().order() - 1;
    println!("GF({}) over GF({}), |F*| = {} = {}", t.top().order(), t.q(), units, format_factorization(units));

    for s in t.subfields() {
        println!("subfield GF({}) at s = {}", s.order, s.s);
    }

    let a = t.generator();
    for i in 0..4 {
        let x = t.top().pow(a, i);
        println!("Tr(a^{i}) = {}", t.render_base(t.trace(x)));
    }

    let n = Basis::normal(&t);
    println!("normal element: {}", t.render(n.normal_element().unwrap()));
    let x = t.top().pow(a, 11);
    let c = n.coords(&t, x);
    assert_eq!(n.combine(&t, &c), x);
    println!("a^11 in the normal basis: {:?}", c.iter().map(|&v| t.render_base(v)).collect::<Vec<_>>());
    Ok(())
}
