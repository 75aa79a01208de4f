//! Dimensions and quadratic Casimir values of small irreps, and the matrix
//! Casimir Σ X_i X_i in the 7, 14 and 27.

use g2kit::casimir::{c2, casimir_matrix, dim};
use g2kit::model::Model;

fn main() -> g2kit::error::Result<()> {
    println!("{:>3} {:>3} {:>6} {:>8}", "λ", "μ", "dim", "c2");
    for l in 0..3 {
        for m in 0..4 {
            println!("{l:>3} {m:>3} {:>6} {:>8}", dim(l, m).to_string(), c2(l, m).to_string());
        }
    }

    let model = Model::build()?;
    for (name, family) in [
        ("x (7)", &model.catalog.x),
        ("ad (14)", &model.derived.ad),
        ("Φ (27)", &model.derived.phi),
    ] {
        let sum = casimir_matrix(family);
        match sum.as_scalar_multiple() {
            Some(k) => println!("Σ X X on {name} = {}·I", k.render_compact()),
            None => println!("Σ X X on {name} is not scalar"),
        }
    }
    Ok(())
}
