use crate::linalg::RepMatrix;
use crate::rep::{build_b3_cartan_weyl, build_g2_cartan_weyl, check_embedding, check_g2_extra_brackets};
use crate::scalar::ComplexScalar;

use super::super::{compare_families, Check, IdentityCase, Witness};
use super::gram_witness;

fn hermitian_traceless(family: &[RepMatrix]) -> Check {
    for (k, m) in family.iter().enumerate() {
        if !m.is_hermitian() {
            return Check::fail(Some(Witness::new(&[k], "not_hermitian", "hermitian")));
        }
        let t = m.trace();
        if !t.is_zero() {
            return Check::fail(Some(Witness::new(&[k], t.render_compact(), "0")));
        }
    }
    Check::pass()
}

fn gram(a: &[RepMatrix], b: &[RepMatrix], same: bool) -> Check {
    Check::from_counterexample(gram_witness(a, b, same, 2))
}

/// `m_kᵀ = sign·M m_k M⁻¹` with `M⁻¹ = M`.
fn conjugation(family: &[RepMatrix], mm: &RepMatrix, sign: i64) -> Check {
    let lhs: Vec<RepMatrix> = family.iter().map(RepMatrix::transpose).collect();
    let s = ComplexScalar::from_integer(sign);
    let rhs: Vec<RepMatrix> = family.iter().map(|x| (&(mm * x) * mm).scale(&s)).collect();
    compare_families(&lhs, &rhs)
}

fn consistency(r: crate::error::Result<()>) -> Check {
    match r {
        Ok(()) => Check::pass(),
        Err(e) => Check::fail(None).detail(format!("error={}", e.to_string().replace(' ', "_"))),
    }
}

pub fn cases() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(
            "1.2",
            "b3 and g2 defining matrices are hermitian, traceless, tr(x_A x_B) = 2δ_AB",
            "A,B ∈ 1..21 (b3), 1..14 (g2)",
            |m| {
                Ok(hermitian_traceless(&m.catalog.b3)
                    .and(gram(&m.catalog.b3, &m.catalog.b3, true))
                    .and(hermitian_traceless(&m.catalog.x))
                    .and(gram(&m.catalog.x, &m.catalog.x, true)))
            },
        ),
        IdentityCase::new(
            "2.1",
            "Cartan–Weyl relations [h, e−R] = −R·h e−R and [eR, e−R] = R·h for b3 and g2",
            "positive roots",
            |_| {
                Ok(consistency(build_b3_cartan_weyl().check_cartan_weyl())
                    .and(consistency(build_g2_cartan_weyl().check_cartan_weyl())))
            },
        ),
        IdentityCase::new("2.35", "b3: x_μᵀ = −M x_μ M⁻¹", "μ ∈ 1..21", |m| {
            Ok(conjugation(&m.catalog.b3, &m.catalog.m, -1))
        }),
        IdentityCase::new(
            "3.3",
            "the g2 brackets beyond the generic Cartan–Weyl relations",
            "5 brackets",
            |_| {
                Ok(consistency(check_g2_extra_brackets(&build_g2_cartan_weyl())).note(
                    "third bracket is stated as [E_1, E_122] = E_1112; only E_112 is root-compatible and is what holds",
                ))
            },
        ),
        IdentityCase::new(
            "3.100",
            "g2 generators as combinations of b3 generators",
            "h1, h2, 6 lowering",
            |_| {
                Ok(
                    consistency(check_embedding(&build_g2_cartan_weyl(), &build_b3_cartan_weyl()))
                        .note("H1 coefficient stated as √(1/3); √(1/6) is forced by the root normalization and holds"),
                )
            },
        ),
        IdentityCase::new(
            "4.5",
            "tr z_a = 0, tr(z_a z_b) = 2δ_ab, tr(z_a x_i) = 0, z_aᵀ = −M z_a M⁻¹",
            "a,b ∈ 1..7, i ∈ 1..14",
            |m| {
                Ok(hermitian_traceless(&m.catalog.z)
                    .and(gram(&m.catalog.z, &m.catalog.z, true))
                    .and(gram(&m.catalog.z, &m.catalog.x, false))
                    .and(conjugation(&m.catalog.z, &m.catalog.m, -1))
                    .note("stated normalization tr(z_a z_b) = δ_ab; the z-z product law forces 2δ_ab, which holds"))
            },
        ),
        IdentityCase::new(
            "5.1",
            "y_α hermitian, traceless, y_αᵀ = +M y_α M⁻¹",
            "α ∈ 1..27",
            |m| Ok(hermitian_traceless(&m.catalog.y).and(conjugation(&m.catalog.y, &m.catalog.m, 1))),
        ),
        IdentityCase::new(
            "5.2",
            "tr(y_α y_β) = 2δ_αβ, tr(x_i y_α) = 0, tr(z_a y_α) = 0",
            "α,β ∈ 1..27",
            |m| {
                Ok(gram(&m.catalog.y, &m.catalog.y, true)
                    .and(gram(&m.catalog.x, &m.catalog.y, false))
                    .and(gram(&m.catalog.z, &m.catalog.y, false)))
            },
        ),
        IdentityCase::new(
            "10.1",
            "x_iᵀ = −M x_i M⁻¹, z_aᵀ = −M z_a M⁻¹, y_αᵀ = M y_α M⁻¹",
            "all 48",
            |m| {
                let c = &m.catalog;
                Ok(conjugation(&c.x, &c.m, -1)
                    .and(conjugation(&c.z, &c.m, -1))
                    .and(conjugation(&c.y, &c.m, 1)))
            },
        ),
        IdentityCase::new(
            "13.1",
            "the 48 matrices (x, z, y) and (H, C, Y) are hermitian, traceless and independent",
            "A ∈ 1..48",
            |m| {
                let xzy: Vec<RepMatrix> = m.catalog.all48().into_iter().cloned().collect();
                let d = &m.derived;
                let hcy: Vec<RepMatrix> = d.h.iter().chain(&d.c).chain(&d.y).cloned().collect();
                // A gram matrix of 2·I rules out any linear relation.
                Ok(hermitian_traceless(&xzy)
                    .and(gram(&xzy, &xzy, true))
                    .and(hermitian_traceless(&hcy)))
            },
        ),
        IdentityCase::new(
            "13.2",
            "tr(λ_A λ_B) = 2δ_AB for λ = (H, C, Y)",
            "A,B ∈ 1..48",
            |m| {
                let d = &m.derived;
                let hcy: Vec<RepMatrix> = d.h.iter().chain(&d.c).chain(&d.y).cloned().collect();
                Ok(gram(&hcy, &hcy, true))
            },
        ),
        IdentityCase::new("13.3", "H_i, C_a antisymmetric; Y_α symmetric", "all 48", |m| {
            let d = &m.derived;
            let bad = |fam: &[RepMatrix], anti: bool| {
                fam.iter()
                    .position(|x| if anti { !x.is_antisymmetric() } else { !x.is_symmetric() })
                    .map(|k| Witness::new(&[k], "violated", if anti { "antisymmetric" } else { "symmetric" }))
            };
            Ok(Check::from_counterexample(
                bad(&d.h, true).or_else(|| bad(&d.c, true)).or_else(|| bad(&d.y, false)),
            ))
        }),
    ]
}
