//! Quantities built from a full 14-component adjoint vector: B_α, D_α, the
//! quintic C_i, and the scalar relations among them, at seeded random
//! rational vectors.

use g2kit::casimir::{random_vectors, AdjointVectorBundle, SAMPLE_SEED};
use g2kit::model::Model;
use g2kit::rational::q;
use g2kit::scalar::ExactScalar;

fn main() -> g2kit::error::Result<()> {
    let model = Model::build()?;
    let six_sevenths = ExactScalar::from_rational(q(6, 7));
    for (n, v) in random_vectors(5, SAMPLE_SEED).into_iter().enumerate() {
        let a: Vec<ExactScalar> = v.into_iter().map(ExactScalar::from_rational).collect();
        let bundle = AdjointVectorBundle::new(a, &model.sparse);
        let bb_ok = bundle.bb == &six_sevenths * &(&bundle.c2 * &bundle.c2);
        println!(
            "sample {n}: A·A = {}  A·C = {}  B·B = 6/7 (A·A)²: {bb_ok}  B·D = A·C: {}",
            bundle.c2,
            bundle.c6,
            bundle.bd == bundle.c6
        );
    }
    Ok(())
}
