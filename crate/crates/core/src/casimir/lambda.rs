use crate::error::{Error, Result};
use crate::model::Model;
use crate::scalar::{rat, ExactScalar};
use crate::verify::{render_scalar, Check, IdentityCase, Witness};

use super::projectors::{PairMatrix, ProjectorSet, Space};

/// Entrywise comparison; the witness tuple is `(a, b, c, d)`.
pub(crate) fn compare_pair(lhs: &PairMatrix, rhs: &PairMatrix, n: usize) -> Check {
    if lhs == rhs {
        return Check::pass();
    }
    for r in 0..lhs.n() {
        for c in 0..lhs.n() {
            let (x, y) = (lhs.get(r, c), rhs.get(r, c));
            if x != y {
                return Check::fail(Some(Witness::real(&[r / n, r % n, c / n, c % n], x, y)));
            }
        }
    }
    Check::pass()
}

fn combo(terms: &[(ExactScalar, &PairMatrix)]) -> PairMatrix {
    let mut out = PairMatrix::zeros(terms[0].1.n());
    for (k, m) in terms {
        out.add_scaled(k, m);
    }
    out
}

fn fourteen(m: &Model) -> Result<(ProjectorSet, PairMatrix)> {
    let set = ProjectorSet::build(Space::Fourteen, &m.sparse);
    let lambda = set
        .lambda
        .clone()
        .ok_or_else(|| Error::consistency("14⊗14 projector set without Λ"))?;
    Ok((set, lambda))
}

fn vanishes(lhs: &PairMatrix) -> Check {
    compare_pair(lhs, &PairMatrix::zeros(lhs.n()), 14)
}

pub fn projector_cases() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(
            "26.7",
            "7⊗7 projectors: idempotent, orthogonal, summing to I_S and I_A, pair-traces 1, 27, 7, 14",
            "a,b,c,d ∈ 1..7",
            |m| Ok(ProjectorSet::build(Space::Seven, &m.sparse).check_axioms()),
        ),
        IdentityCase::new(
            "26.13",
            "14⊗14 projectors: idempotent, orthogonal, summing to I_S and I_A, pair-traces 1, 27, 77, 14, 77",
            "i,j,k,l ∈ 1..14",
            |m| Ok(ProjectorSet::build(Space::Fourteen, &m.sparse).check_axioms()),
        ),
    ]
}

fn eigen(id: &'static str, label: &'static str, k: (i64, i64)) -> IdentityCase {
    IdentityCase::new(
        id,
        "Λ·P = λ·P on one irreducible piece of 14⊗14",
        "i,j,k,l ∈ 1..14",
        move |m| {
            let (set, lambda) = fourteen(m)?;
            let p = set.get(label);
            let k = rat(k.0, k.1);
            Ok(compare_pair(&(&lambda * p), &p.scale(&k), 14).detail(format!("eigenvalue={}", render_scalar(&k))))
        },
    )
}

fn relation(
    id: &'static str,
    description: &'static str,
    build: fn(&ProjectorSet, &PairMatrix) -> PairMatrix,
) -> IdentityCase {
    IdentityCase::new(id, description, "i,j,k,l ∈ 1..14", move |m| {
        let (set, lambda) = fourteen(m)?;
        Ok(vanishes(&build(&set, &lambda)))
    })
}

pub fn lambda_cases() -> Vec<IdentityCase> {
    vec![
        eigen("27.6:1", "1", (-8, 1)),
        eigen("27.6:27", "27", (-10, 3)),
        eigen("27.6:77", "77", (2, 1)),
        eigen("27.6:14", "14", (-4, 1)),
        eigen("27.6:77'", "77'", (0, 1)),
        relation("27.10a", "Λ I_S + 8P₁ + 10/3 P₂₇ − 2P₇₇ = 0", |s, l| {
            let lis = l * &s.is;
            combo(&[
                (rat(1, 1), &lis),
                (rat(8, 1), s.get("1")),
                (rat(10, 3), s.get("27")),
                (rat(-2, 1), s.get("77")),
            ])
        }),
        relation("27.10b", "Λ I_S + 10P₁ + 16/3 P₂₇ − 2I_S = 0", |s, l| {
            let lis = l * &s.is;
            combo(&[
                (rat(1, 1), &lis),
                (rat(10, 1), s.get("1")),
                (rat(16, 3), s.get("27")),
                (rat(-2, 1), &s.is),
            ])
        }),
        relation(
            "27.15",
            "Λ² I_S + 4/3 Λ I_S − 140/3 P₁ − 20/3 I_S = 0",
            |s, l| {
                let lis = l * &s.is;
                let l2is = l * &lis;
                combo(&[
                    (rat(1, 1), &l2is),
                    (rat(4, 3), &lis),
                    (rat(-140, 3), s.get("1")),
                    (rat(-20, 3), &s.is),
                ])
            },
        ),
        relation("27.16", "Λ² I_A + 4Λ I_A = 0", |s, l| {
            let lia = l * &s.ia;
            let l2ia = l * &lia;
            combo(&[(rat(1, 1), &l2ia), (rat(4, 1), &lia)])
        }),
        relation("27.17", "(Λ + 4) I_A P₁₄ = 0", |s, l| {
            let iap = &s.ia * s.get("14");
            let liap = l * &iap;
            combo(&[(rat(1, 1), &liap), (rat(4, 1), &iap)])
        }),
        relation("27.18", "Λ I_A + 4P₁₄ = 0", |s, l| {
            let lia = l * &s.ia;
            combo(&[(rat(1, 1), &lia), (rat(4, 1), s.get("14"))])
        }),
    ]
}
