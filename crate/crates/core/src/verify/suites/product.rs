use rayon::prelude::*;

use crate::linalg::RepMatrix;
use crate::model::Model;
use crate::rational::q;
use crate::scalar::{ComplexScalar, ExactScalar};
use crate::tensors::{bracket_rhs, einsum, Sparse, Tensor};

use super::super::{compare_tensors, Check, IdentityCase, Witness};
use super::{combine, r};

/// Checks `lhs(i, j) = rhs(i, j)` entrywise over an `n1 × n2` grid; the
/// witness tuple is `(i, j, row, col)`.
fn pairwise(n1: usize, n2: usize, f: impl Fn(usize, usize) -> (RepMatrix, RepMatrix) + Sync) -> Check {
    let first = (0..n1 * n2).into_par_iter().find_map_first(|p| {
        let (i, j) = (p / n2, p % n2);
        let (lhs, rhs) = f(i, j);
        if lhs == rhs {
            return None;
        }
        (0..lhs.n())
            .flat_map(|a| (0..lhs.n()).map(move |b| (a, b)))
            .find_map(|(a, b)| {
                (lhs.get(a, b) != rhs.get(a, b)).then(|| {
                    Witness::new(
                        &[i, j, a, b],
                        lhs.get(a, b).render_compact(),
                        rhs.get(a, b).render_compact(),
                    )
                })
            })
    });
    Check::from_counterexample(first)
}

fn ihalf() -> ComplexScalar {
    ComplexScalar::imag(r(1, 2))
}

fn half() -> ComplexScalar {
    ComplexScalar::real(r(1, 2))
}

fn two_sevenths(on: bool) -> RepMatrix {
    if on {
        RepMatrix::identity(7).scale_rational(&q(2, 7))
    } else {
        RepMatrix::zeros(7)
    }
}

/// `Σ_k t[pre.., k, post..] · family_k` for a slot position in a rank-3 tensor.
fn slot(t: &Tensor, family: &[RepMatrix], phase: &ComplexScalar, idx: impl Fn(usize) -> [usize; 3]) -> RepMatrix {
    combine(family, phase, |k| t.get(&idx(k)).clone())
}

/// The commutator `[a_p, b_q]` decomposed against the 48 basis matrices:
/// `(x, z, y)` coefficient blocks and the residual.
fn split(m: &Model, c: &RepMatrix) -> (Vec<ComplexScalar>, Vec<ComplexScalar>, Vec<ComplexScalar>, RepMatrix) {
    let (coeffs, residual) = m.catalog.decompose(c);
    (
        coeffs[..14].to_vec(),
        coeffs[14..21].to_vec(),
        coeffs[21..].to_vec(),
        residual,
    )
}

fn traces_vanish(t: &Sparse, spec: &str) -> Check {
    let tr = einsum(spec, &[t]);
    let w = tr
        .entries()
        .next()
        .map(|(idx, v)| Witness::real(&idx, v, &ExactScalar::zero()));
    Check::from_counterexample(w)
}

/// Index-symmetry checks: `perm` applied to `t` must give `sign·t`.
fn symmetry(t: &Sparse, perm: &[usize], sign: i64) -> Check {
    compare_tensors(&t.permute(perm), &t.scale(&r(sign, 1)))
}

pub fn cases() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(
            "10.2",
            "x_i x_j = 2/7 δ_ij + i/2 c_ijk x_k + 1/2 d_ijα y_α",
            "i,j ∈ 1..14",
            |m| {
                let (c, s) = (&m.catalog, &m.store);
                Ok(pairwise(14, 14, |i, j| {
                    let rhs = &(&two_sevenths(i == j) + &slot(&s.c_ijk, &c.x, &ihalf(), |k| [i, j, k]))
                        + &slot(&s.d_ij_alpha, &c.y, &half(), |al| [i, j, al]);
                    (&c.x[i] * &c.x[j], rhs)
                }))
            },
        ),
        IdentityCase::new(
            "10.3",
            "z_a z_b = 2/7 δ_ab + i/2 c_abc z_c + i/2 h_iab x_i + 1/2 d_abγ y_γ",
            "a,b ∈ 1..7",
            |m| {
                let (c, s) = (&m.catalog, &m.store);
                Ok(pairwise(7, 7, |a, b| {
                    let rhs = &(&(&two_sevenths(a == b) + &slot(&s.c_abc, &c.z, &ihalf(), |k| [a, b, k]))
                        + &slot(&s.h_iab, &c.x, &ihalf(), |i| [i, a, b]))
                        + &slot(&s.d_ab_alpha, &c.y, &half(), |g| [a, b, g]);
                    (&c.z[a] * &c.z[b], rhs)
                }))
            },
        ),
        IdentityCase::new(
            "10.4",
            "y_α y_β = 2/7 δ_αβ + i/2 φ_kαβ x_k + i/2 t_aαβ z_a + 1/2 d_αβγ y_γ",
            "α,β ∈ 1..27",
            |m| {
                let (c, s) = (&m.catalog, &m.store);
                Ok(pairwise(27, 27, |al, be| {
                    let rhs = &(&(&two_sevenths(al == be)
                        + &slot(&s.phi_i_alpha_beta, &c.x, &ihalf(), |k| [k, al, be]))
                        + &slot(&s.t_a_alpha_beta, &c.z, &ihalf(), |a| [a, al, be]))
                        + &slot(&s.d_alpha_beta_gamma, &c.y, &half(), |g| [al, be, g]);
                    (&c.y[al] * &c.y[be], rhs)
                }))
            },
        ),
        IdentityCase::new(
            "10.5",
            "x_i z_a = i/2 h_iab z_b + 1/2 d_iaα y_α",
            "i ∈ 1..14, a ∈ 1..7",
            |m| {
                let (c, s) = (&m.catalog, &m.store);
                Ok(pairwise(14, 7, |i, a| {
                    let rhs = &slot(&s.h_iab, &c.z, &ihalf(), |b| [i, a, b])
                        + &slot(&s.d_ia_alpha, &c.y, &half(), |al| [i, a, al]);
                    (&c.x[i] * &c.z[a], rhs)
                }))
            },
        ),
        IdentityCase::new(
            "10.6",
            "x_i y_α = i/2 φ_iαβ y_β + 1/2 d_ikα x_k + 1/2 d_iaα z_a",
            "i ∈ 1..14, α ∈ 1..27",
            |m| {
                let (c, s) = (&m.catalog, &m.store);
                Ok(pairwise(14, 27, |i, al| {
                    let rhs = &(&slot(&s.phi_i_alpha_beta, &c.y, &ihalf(), |be| [i, al, be])
                        + &slot(&s.d_ij_alpha, &c.x, &half(), |k| [i, k, al]))
                        + &slot(&s.d_ia_alpha, &c.z, &half(), |a| [i, a, al]);
                    (&c.x[i] * &c.y[al], rhs)
                }))
            },
        ),
        IdentityCase::new(
            "10.7",
            "z_a y_α = i/2 t_aαβ y_β + 1/2 d_abα z_b + 1/2 d_kaα x_k",
            "a ∈ 1..7, α ∈ 1..27",
            |m| {
                let (c, s) = (&m.catalog, &m.store);
                Ok(pairwise(7, 27, |a, al| {
                    let rhs = &(&slot(&s.t_a_alpha_beta, &c.y, &ihalf(), |be| [a, al, be])
                        + &slot(&s.d_ab_alpha, &c.z, &half(), |b| [a, b, al]))
                        + &slot(&s.d_ia_alpha, &c.x, &half(), |k| [k, a, al]);
                    (&c.z[a] * &c.y[al], rhs)
                }))
            },
        ),
        IdentityCase::new("10.10", "c_abc = ψ_abc/√3", "a,b,c ∈ 1..7", |m| {
            Ok(compare_tensors(
                &m.sparse.c_abc,
                &m.sparse.psi.scale(&ExactScalar::sqrt_of(1, 3)),
            ))
        }),
        IdentityCase::new(
            "10.100",
            "d_iiα = 0, d_aaα = 0, d_ααγ = 0",
            "α,γ ∈ 1..27",
            |m| {
                let s = &m.sparse;
                Ok(traces_vanish(&s.d_ij, "iia->a")
                    .and(traces_vanish(&s.d_ab, "aal->l"))
                    .and(traces_vanish(&s.d_yyy, "aag->g"))
                    .note("middle relation is stated as d_abα = 0; read as the trace d_aaα = 0"))
            },
        ),
        IdentityCase::new(
            "tensor-symmetry",
            "reality and index symmetries of every extracted tensor",
            "all tensors",
            |m| {
                let s = &m.sparse;
                let mut c = Check::pass();
                for t in [&s.c_ijk, &s.c_abc, &s.psi] {
                    c = c.and(symmetry(t, &[1, 0, 2], -1)).and(symmetry(t, &[0, 2, 1], -1));
                }
                for t in [&s.h_iab, &s.phi, &s.t] {
                    c = c.and(symmetry(t, &[0, 2, 1], -1));
                }
                for t in [&s.d_ij, &s.d_ab] {
                    c = c.and(symmetry(t, &[1, 0, 2], 1));
                }
                c = c
                    .and(symmetry(&s.d_yyy, &[1, 0, 2], 1))
                    .and(symmetry(&s.d_yyy, &[0, 2, 1], 1));
                Ok(c.detail(format!("nnz_c_ijk={}", s.c_ijk.nnz())))
            },
        ),
        IdentityCase::new(
            "10.8",
            "[x_i, x_j] lies in the span of the x_k alone",
            "i,j ∈ 1..14",
            |m| {
                let bad = (0..14 * 14).into_par_iter().find_map_first(|p| {
                    let (i, j) = (p / 14, p % 14);
                    let (_, z, y, res) = split(m, &m.catalog.x[i].commutator(&m.catalog.x[j]));
                    let clean = z.iter().chain(&y).all(ComplexScalar::is_zero) && res.is_zero();
                    (!clean).then(|| Witness::new(&[i, j], "outside_x_span", "x_span"))
                });
                Ok(Check::from_counterexample(bad))
            },
        ),
        IdentityCase::new(
            "10.9A",
            "[z_a, z_b] lies in the x ⊕ z span with a nonzero z part for some pair",
            "a,b ∈ 1..7",
            |m| {
                let mut some_z = None;
                for a in 0..7 {
                    for b in 0..7 {
                        let (_, z, y, res) = split(m, &m.catalog.z[a].commutator(&m.catalog.z[b]));
                        if !(y.iter().all(ComplexScalar::is_zero) && res.is_zero()) {
                            return Ok(Check::fail(Some(Witness::new(&[a, b], "y_or_residual", "0"))));
                        }
                        if some_z.is_none() && z.iter().any(|v| !v.is_zero()) {
                            some_z = Some((a, b));
                        }
                    }
                }
                Ok(match some_z {
                    Some((a, b)) => Check::pass().detail(format!("z_part_at=({},{})", a + 1, b + 1)),
                    None => Check::fail(None).detail("z_part=absent"),
                })
            },
        ),
        IdentityCase::new(
            "10.9B",
            "[x_i, z_a] lies in the span of the z_b",
            "i ∈ 1..14, a ∈ 1..7",
            |m| {
                let bad = (0..14 * 7).into_par_iter().find_map_first(|p| {
                    let (i, a) = (p / 7, p % 7);
                    let (x, _, y, res) = split(m, &m.catalog.x[i].commutator(&m.catalog.z[a]));
                    let clean = x.iter().chain(&y).all(ComplexScalar::is_zero) && res.is_zero();
                    (!clean).then(|| Witness::new(&[i, a], "outside_z_span", "z_span"))
                });
                Ok(Check::from_counterexample(bad))
            },
        ),
        IdentityCase::new("11.2", "[H_i, H_k] = i c_ikl H_l", "i,k ∈ 1..14", |m| {
            let d = &m.derived;
            Ok(pairwise(14, 14, |i, k| {
                (d.h[i].commutator(&d.h[k]), bracket_rhs(&m.store.c_ijk, i, k, &d.h))
            })
            .detail(format!("h_sign={}", d.h_sign))
            .note(format!(
                "(H_i)_ab is stated both as +i h_iab and as -i h_iab; the bracket selects σ = {}",
                d.h_sign
            )))
        }),
        IdentityCase::new("11.5", "[H_i, C_a] = i h_iab C_b", "i ∈ 1..14, a ∈ 1..7", |m| {
            let d = &m.derived;
            Ok(pairwise(14, 7, |i, a| {
                let rhs = combine(&d.c, &ComplexScalar::i(), |b| m.store.h_iab.get(&[i, a, b]).clone());
                (d.h[i].commutator(&d.c[a]), rhs)
            }))
        }),
        IdentityCase::new("11.8", "[C_a, C_b] = i h_iab H_i + i c_abc C_c", "a,b ∈ 1..7", |m| {
            let d = &m.derived;
            Ok(pairwise(7, 7, |a, b| {
                let rhs = &combine(&d.h, &ComplexScalar::i(), |i| m.store.h_iab.get(&[i, a, b]).clone())
                    + &combine(&d.c, &ComplexScalar::i(), |c| m.store.c_abc.get(&[a, b, c]).clone());
                (d.c[a].commutator(&d.c[b]), rhs)
            }))
        }),
        IdentityCase::new("11.9", "tr(C_a C_b C_c) = i c_abc", "a,b,c ∈ 1..7", |m| {
            let d = &m.derived;
            for a in 0..7 {
                for b in 0..7 {
                    let ab = &d.c[a] * &d.c[b];
                    for c in 0..7 {
                        let lhs = ab.trace_product(&d.c[c]);
                        let rhs = ComplexScalar::imag(m.store.c_abc.get(&[a, b, c]).clone());
                        if lhs != rhs {
                            return Ok(Check::fail(Some(Witness::new(
                                &[a, b, c],
                                lhs.render_compact(),
                                rhs.render_compact(),
                            ))));
                        }
                    }
                }
            }
            Ok(Check::pass())
        }),
        IdentityCase::new(
            "12.2",
            "[H_i, Y_α] = i φ_iαβ Y_β",
            "i ∈ 1..14, α ∈ 1..27",
            |m| {
                let d = &m.derived;
                Ok(pairwise(14, 27, |i, al| {
                    let rhs = combine(&d.y, &ComplexScalar::i(), |be| {
                        m.store.phi_i_alpha_beta.get(&[i, al, be]).clone()
                    });
                    (d.h[i].commutator(&d.y[al]), rhs)
                }))
            },
        ),
        IdentityCase::new("12.5", "d_abα = tr(C_a C_b Y_α)", "a,b ∈ 1..7, α ∈ 1..27", |m| {
            let d = &m.derived;
            for a in 0..7 {
                for b in 0..7 {
                    let ab = &d.c[a] * &d.c[b];
                    for al in 0..27 {
                        let lhs = ComplexScalar::real(m.store.d_ab_alpha.get(&[a, b, al]).clone());
                        let rhs = ab.trace_product(&d.y[al]);
                        if lhs != rhs {
                            return Ok(Check::fail(Some(Witness::new(
                                &[a, b, al],
                                lhs.render_compact(),
                                rhs.render_compact(),
                            ))));
                        }
                    }
                }
            }
            Ok(Check::pass())
        }),
        IdentityCase::new("20.20", "[ad_i, ad_j] = i c_ijk ad_k", "i,j ∈ 1..14", |m| {
            let d = &m.derived;
            Ok(pairwise(14, 14, |i, j| {
                (d.ad[i].commutator(&d.ad[j]), bracket_rhs(&m.store.c_ijk, i, j, &d.ad))
            }))
        }),
        IdentityCase::new("20.23", "[Φ_i, Φ_j] = i c_ijk Φ_k", "i,j ∈ 1..14", |m| {
            let d = &m.derived;
            Ok(pairwise(14, 14, |i, j| {
                (
                    d.phi[i].commutator(&d.phi[j]),
                    bracket_rhs(&m.store.c_ijk, i, j, &d.phi),
                )
            }))
        }),
    ]
}
