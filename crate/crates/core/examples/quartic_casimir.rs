//! The quartic Casimir is not primitive: tr over the 7 of (Σ x_i ⊗ D_i)⁴
//! equals c₂² + 28/3·c₂ on each representation D.

use g2kit::casimir::{quartic_casimir, QuarticRep};
use g2kit::model::Model;
use g2kit::verify::render_scalar;

fn main() -> g2kit::error::Result<()> {
    let model = Model::build()?;
    for rep in QuarticRep::ALL {
        let got = quartic_casimir(&model, rep)?;
        println!(
            "rep {:>2}: partial trace {} (c2² + 28/3·c2 = {})",
            rep.dim(),
            render_scalar(&got),
            rep.expected()
        );
    }
    Ok(())
}
