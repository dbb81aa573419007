//! Strata of P^1(GF(64)) for lambda X + mu X^4, plus ebit costs.

use qpoly_hull::field::{FieldTower, DEFAULT_SIZE_CAP};
use qpoly_hull::sweep::{ebit_report, sweep_p1, Family, ParamField};

fn main() -> qpoly_hull::Result<()> {
    let t = FieldTower::build(2, 2, 3)?;
    let family = Family::frobenius(&t, 1)?;
    let table = sweep_p1(&t, &family, ParamField::Top, DEFAULT_SIZE_CAP, true)?;

    for (h, n) in &table.counts {
        println!("S_{h}: {n}");
    }
    println!("LCD density {:.4}, non-bijective {}", table.lcd_density, table.non_bijective().unwrap());
    for r in table.records.iter().flatten().filter(|r| r.hull_dim > 0) {
        println!("  rho = {:<16} hull {}", r.key, r.hull_dim);
    }
    for row in ebit_report(&table).rows {
        println!("{} codes at {} ebits", row.codes, row.ebits);
    }
    Ok(())
}
