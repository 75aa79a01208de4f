//! Dimensions and Casimir eigenvalues, projector algebra on 7⊗7 and 14⊗14,
//! the Λ operator, the quartic Casimir, adjoint-vector invariants and the
//! Cartan slice.

pub mod adjoint;
pub mod dims;
mod invariants;
mod lambda;
pub mod projectors;
pub mod quartic;
pub mod slice;

use crate::error::Result;
use crate::linalg::RepMatrix;
use crate::model::Model;
use crate::rational::Rational;
use crate::scalar::{ComplexScalar, ExactScalar};
use crate::verify::{compare_families, expect_true, run_cases, Check, IdentityCase, VerificationReport, Witness};

pub use adjoint::AdjointVectorBundle;
pub use dims::{c2, dim};
pub use invariants::{
    invariant_relation_cases, random_vectors, six_tensor_cases, InvariantData, SAMPLE_COUNT, SAMPLE_SEED,
};
pub use lambda::{lambda_cases, projector_cases};
pub use projectors::{PairMatrix, Projector, ProjectorSet, Space};
pub use quartic::{quartic_casimir, QuarticRep};
pub use slice::{slice_char_poly, slice_matrix, slice_value, Slice, SliceQuantity};

/// `Σ_i M_i M_i`.
pub fn casimir_matrix(family: &[RepMatrix]) -> RepMatrix {
    let mut acc = RepMatrix::zeros(family[0].n());
    for m in family {
        acc = &acc + &(m * m);
    }
    acc
}

fn casimir_is(family: &[RepMatrix], k: &Rational) -> Check {
    let lhs = casimir_matrix(family);
    let want = RepMatrix::identity(lhs.n()).scale(&ComplexScalar::from_rational(k.clone()));
    compare_families(&[lhs], &[want])
}

fn matrix_casimir(
    id: &'static str,
    description: &'static str,
    families: fn(&Model) -> Vec<&[RepMatrix]>,
    k: (i64, i64),
) -> IdentityCase {
    IdentityCase::new(id, description, "summed over the family", move |m| {
        let k = Rational::new(k.0, k.1)?;
        let mut check = Check::pass();
        for f in families(m) {
            check = check.and(casimir_is(f, &k));
        }
        Ok(check.detail(format!("constant={k}")))
    })
}

pub fn casimir_cases() -> Vec<IdentityCase> {
    let mut v = vec![
        IdentityCase::new("25.1", "dimension formula on the small irreps", "(λ,μ) table", |_| {
            let table = [
                (0, 0, 1u64),
                (0, 1, 7),
                (1, 0, 14),
                (0, 2, 27),
                (1, 1, 64),
                (2, 0, 77),
                (0, 3, 77),
            ];
            let mut check = Check::pass();
            for (n, &(l, mu, want)) in table.iter().enumerate() {
                let got = dim(l, mu);
                check = check.and(expect_true(got == want.into(), || {
                    Witness::new(&[n], got.to_string(), want.to_string())
                }));
            }
            Ok(check)
        }),
        IdentityCase::new(
            "25.3",
            "quadratic Casimir eigenvalues 0, 4, 8, 28/3",
            "(λ,μ) table",
            |_| {
                let table = [(0, 0, 0, 1), (0, 1, 4, 1), (1, 0, 8, 1), (0, 2, 28, 3)];
                let mut check = Check::pass();
                for (n, &(l, mu, a, b)) in table.iter().enumerate() {
                    let got = c2(l, mu);
                    let want = Rational::new(a, b)?;
                    check = check.and(expect_true(got == want, || {
                        Witness::new(&[n], got.to_string(), want.to_string())
                    }));
                }
                Ok(check.note(
                    "the eigenvalue formula as stated gives 2, 4, 14/3 for 7, 14, 27; it is doubled to match \
                 the normalization tr(x_i x_j) = 2δ_ij, giving 4, 8, 28/3",
                ))
            },
        ),
        matrix_casimir("20.30", "ad_i ad_i = 8·I₁₄", |m| vec![&m.derived.ad], (8, 1)),
        matrix_casimir(
            "20.31",
            "H_i H_i = x_i x_i = 4·I₇",
            |m| vec![&m.derived.h, &m.catalog.x],
            (4, 1),
        ),
        matrix_casimir(
            "20.32",
            "C_a C_a = z_a z_a = 2·I₇",
            |m| vec![&m.derived.c, &m.catalog.z],
            (2, 1),
        ),
        matrix_casimir("20.33", "Φ_i Φ_i = 28/3·I₂₇", |m| vec![&m.derived.phi], (28, 3)),
        matrix_casimir(
            "20.34",
            "Y_α Y_α = y_α y_α = 54/7·I₇",
            |m| vec![&m.derived.y, &m.catalog.y],
            (54, 7),
        ),
    ];
    for (rep, id) in QuarticRep::ALL.into_iter().zip(["29.4:7", "29.4:14", "29.4:27"]) {
        v.push(IdentityCase::new(
            id,
            "tr_V X⁴ = (c₂² + 28/3·c₂)·I for X = Σ x_i ⊗ D_i",
            "partial trace over the defining factor",
            move |m| {
                let got = quartic_casimir(m, rep)?;
                let want = ExactScalar::from_rational(rep.expected());
                Ok(expect_true(got == want, || Witness::real(&[], &got, &want))
                    .detail(format!("value={}", crate::verify::render_scalar(&got))))
            },
        ));
    }
    v
}

pub fn invariant_cases() -> Vec<IdentityCase> {
    let mut v = six_tensor_cases();
    v.extend(invariant_relation_cases());
    v
}

/// Λ eigen-relations and the characteristic equations on 14⊗14.
pub fn lambda_checks(model: &Model, workers: usize) -> Result<VerificationReport> {
    run_cases("lambda", &lambda_cases(), model, workers)
}

/// The traced six-tensor and the sixth-order trace relation.
pub fn six_tensor_checks(model: &Model, workers: usize) -> Result<VerificationReport> {
    run_cases("six-tensor", &six_tensor_cases(), model, workers)
}

/// Slice polynomial identities with random full-vector spot checks.
pub fn invariant_relations(model: &Model, workers: usize) -> Result<VerificationReport> {
    run_cases("invariant-relations", &invariant_relation_cases(), model, workers)
}
