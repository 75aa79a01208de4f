use crate::linalg::RepMatrix;
use crate::model::Model;
use crate::scalar::ComplexScalar;

use super::super::{compare_families, family_sum, render_scalar, Check, IdentityCase, Witness};
use super::r;

#[derive(Clone, Copy)]
enum Fam {
    H,
    C,
    Y,
}

fn fam(m: &Model, f: Fam) -> &[RepMatrix] {
    match f {
        Fam::H => &m.derived.h,
        Fam::C => &m.derived.c,
        Fam::Y => &m.derived.y,
    }
}

fn scaled(family: &[RepMatrix], k: (i64, i64)) -> Vec<RepMatrix> {
    let k = ComplexScalar::real(r(k.0, k.1));
    family.iter().map(|x| x.scale(&k)).collect()
}

/// `A_i B_j A_i = k·B_j` for every `j`.
fn sandwich(id: &'static str, description: &'static str, a: Fam, b: Fam, k: (i64, i64)) -> IdentityCase {
    IdentityCase::new(id, description, "summed over the outer family", move |m| {
        let lhs = family_sum(fam(m, a), fam(m, b));
        Ok(compare_families(&lhs, &scaled(fam(m, b), k)).detail(format!("constant={}", render_scalar(&r(k.0, k.1)))))
    })
}

/// `H_i X H_i + C_e X C_e = k·X`.
fn completeness_pair(
    id: &'static str,
    description: &'static str,
    x: Fam,
    k: i64,
    note: Option<&'static str>,
) -> IdentityCase {
    IdentityCase::new(id, description, "summed over i and e", move |m| {
        let hh = family_sum(&m.derived.h, fam(m, x));
        let cc = family_sum(&m.derived.c, fam(m, x));
        let lhs: Vec<RepMatrix> = hh.iter().zip(&cc).map(|(p, q)| p + q).collect();
        let check = compare_families(&lhs, &scaled(fam(m, x), (k, 1)));
        Ok(match note {
            Some(n) => check.note(n),
            None => check,
        })
    })
}

/// `(C_e X C_e)_cd = tr(C_d C_c X) = k·X_cd`.
fn rearrangement(m: &Model, x: Fam, k: (i64, i64)) -> Check {
    let c = &m.derived.c;
    let lhs = family_sum(c, fam(m, x));
    let mid: Vec<RepMatrix> = fam(m, x)
        .iter()
        .map(|xm| RepMatrix::from_fn(7, |cc, d| (&c[d] * &c[cc]).trace_product(xm)))
        .collect();
    compare_families(&lhs, &mid).and(compare_families(&mid, &scaled(fam(m, x), k)))
}

pub fn cases() -> Vec<IdentityCase> {
    vec![
        sandwich("21.1", "H_i H_j H_i = 0", Fam::H, Fam::H, (0, 1)),
        sandwich("21.2", "H_i C_a H_i = 2C_a", Fam::H, Fam::C, (2, 1)),
        sandwich("21.3", "H_i Y_α H_i = −2/3 Y_α", Fam::H, Fam::Y, (-2, 3)),
        sandwich("21.4", "C_a H_i C_a = H_i", Fam::C, Fam::H, (1, 1)),
        sandwich("21.5", "C_a C_b C_a = −C_b", Fam::C, Fam::C, (-1, 1)),
        sandwich("21.6", "C_a Y_α C_a = −1/3 Y_α", Fam::C, Fam::Y, (-1, 3)),
        sandwich("21.7", "Y_α Y_β Y_α = 5/7 Y_β", Fam::Y, Fam::Y, (5, 7)),
        sandwich("21.8", "Y_α H_i Y_α = −9/7 H_i", Fam::Y, Fam::H, (-9, 7)),
        sandwich("21.9", "Y_α C_b Y_α = −9/7 C_b", Fam::Y, Fam::C, (-9, 7)),
        completeness_pair("21.21", "H_i H_k H_i + C_e H_k C_e = H_k", Fam::H, 1, None),
        completeness_pair("21.22", "H_i C_a H_i + C_e C_a C_e = C_a", Fam::C, 1, Some("right side is stated as −C_a; the lines H_i C_a H_i = 2C_a and C_e C_a C_e = −C_a sum to +C_a, which is checked")),
        completeness_pair("21.23", "H_i Y_α H_i + C_e Y_α C_e = −Y_α", Fam::Y, -1, None),
        IdentityCase::new(
            "21.24",
            "(C_e X C_e)_cd = tr(C_d C_c X) = k X_cd with k = 1, −1, −1/3 for X = H_k, C_a, Y_α",
            "c,d ∈ 1..7",
            |m| {
                let c = &m.derived.c;
                let mut check = rearrangement(m, Fam::H, (1, 1))
                    .and(rearrangement(m, Fam::C, (-1, 1)))
                    .and(rearrangement(m, Fam::Y, (-1, 3)));
                // The C line is stated with the middle trace written as tr(C_d C_a C_c).
                let stated: Vec<RepMatrix> = (0..7)
                    .map(|a| RepMatrix::from_fn(7, |cc, d| (&c[d] * &c[a]).trace_product(&c[cc])))
                    .collect();
                if compare_families(&stated, &scaled(c, (-1, 1))).status.is_pass() {
                    check = check.note("stated middle form tr(C_d C_a C_c) also holds");
                } else {
                    check = check.note(
                        "middle trace of the C line is stated as tr(C_d C_a C_c), which equals +(C_a)_cd; \
                         the rearrangement gives tr(C_d C_c C_a) = -(C_a)_cd, which is checked",
                    );
                }
                Ok(check)
            },
        ),
        IdentityCase::new(
            "22.2",
            "c_ijk c_ijl = −tr(H_iH_jH_k) tr(H_iH_jH_l) = −tr(H_jH_kH_jH_l − H_jH_kH_lH_j)",
            "k,l ∈ 1..14",
            |m| {
                let h = &m.derived.h;
                let c = &m.store.c_ijk;
                let pairs: Vec<Vec<RepMatrix>> = (0..14).map(|i| (0..14).map(|j| &h[i] * &h[j]).collect()).collect();
                let t3 = |i: usize, j: usize, k: usize| pairs[i][j].trace_product(&h[k]);
                for k in 0..14 {
                    for l in 0..14 {
                        let mut cc = ComplexScalar::zero();
                        let mut tt = ComplexScalar::zero();
                        let mut quartic = ComplexScalar::zero();
                        for i in 0..14 {
                            for j in 0..14 {
                                cc = &cc + &ComplexScalar::real(c.get(&[i, j, k]) * c.get(&[i, j, l]));
                                tt = &tt - &(&t3(i, j, k) * &t3(i, j, l));
                            }
                            let j = i;
                            quartic = &quartic - &(&pairs[j][k] * &h[j]).trace_product(&h[l])
                                + (&pairs[j][k] * &h[l]).trace_product(&h[j]);
                        }
                        for (lhs, rhs) in [(&cc, &tt), (&cc, &quartic)] {
                            if lhs != rhs {
                                return Ok(Check::fail(Some(Witness::new(
                                    &[k, l],
                                    lhs.render_compact(),
                                    rhs.render_compact(),
                                ))));
                            }
                        }
                    }
                }
                Ok(Check::pass().note(
                    "last form is stated as −tr(H_jH_kH_jH_l + H_jH_kH_lH_j); the completeness relation gives \
                     −tr(H_jH_kH_jH_l − H_jH_kH_lH_j), which is checked",
                ))
            },
        ),
    ]
}
