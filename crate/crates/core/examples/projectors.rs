//! Projectors onto the irreducible pieces of 7⊗7 and 14⊗14, and the
//! eigenvalues of Λ_{rs,ij} = −c_pri c_psj on each piece.

use g2kit::casimir::{ProjectorSet, Space};
use g2kit::model::Model;
use g2kit::verify::render_scalar;

fn main() -> g2kit::error::Result<()> {
    let model = Model::build()?;
    for space in [Space::Seven, Space::Fourteen] {
        let set = ProjectorSet::build(space, &model.sparse);
        println!("{n}⊗{n}:", n = space.n());
        for p in &set.projectors {
            let sector = if p.symmetric { "sym" } else { "anti" };
            let trace = ProjectorSet::pair_trace(&p.matrix);
            print!("  P({:<3}) {sector:<4} pair-trace {}", p.label, render_scalar(&trace));
            if let Some(lambda) = &set.lambda {
                let lp = lambda * &p.matrix;
                match eigenvalue(&lp, &p.matrix) {
                    Some(k) => print!("  Λ eigenvalue {}", render_scalar(&k)),
                    None => print!("  not an eigenspace"),
                }
            }
            println!();
        }
        println!(
            "  axioms: {}",
            if set.check_axioms().status.is_pass() {
                "hold"
            } else {
                "fail"
            }
        );
    }
    Ok(())
}

/// `k` with `ΛP = kP`, read off at the first nonzero entry of `P`.
fn eigenvalue(lp: &g2kit::casimir::PairMatrix, p: &g2kit::casimir::PairMatrix) -> Option<g2kit::scalar::ExactScalar> {
    let (r, c, v) = p.nonzeros().next()?;
    let k = lp.get(r, c) * &v.invert().ok()?;
    (p.scale(&k) == *lp).then_some(k)
}
