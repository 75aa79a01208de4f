use crate::casimir::projector_cases;
use crate::model::Model;
use crate::scalar::ComplexScalar;
use crate::tensors::{einsum, Sparse};

use super::super::{compare_tensors, delta_product, Check, IdentityCase, Witness};
use super::{c_real, h_real, r, y_real};

fn dd(p: usize, q: usize, s: usize, t: usize) -> Sparse {
    delta_product(&[7; 4], &[(p, q), (s, t)])
}

/// `δ_ad δ_bc − δ_ac δ_bd` on `(a, b, c, d)`.
fn crossed_minus_direct() -> Sparse {
    dd(0, 3, 1, 2).sub(&dd(0, 2, 1, 3))
}

/// `½(δ_ac δ_bd − δ_ad δ_bc)`.
fn p_antisym() -> Sparse {
    crossed_minus_direct().scale(&r(-1, 2))
}

/// `½(δ_ac δ_bd + δ_ad δ_bc) − 1/7 δ_ab δ_cd`.
fn p27() -> Sparse {
    dd(0, 2, 1, 3)
        .add(&dd(0, 3, 1, 2))
        .scale(&r(1, 2))
        .add_scaled(&r(-1, 7), &dd(0, 1, 2, 3))
}

/// `½ c_abe c_cde`.
fn p7(m: &Model) -> Sparse {
    let c = &m.sparse.c_abc;
    einsum("abe,cde->abcd", &[c, c]).scale(&r(1, 2))
}

/// `Σ_n (F_n)_ab (F_n)_cd` for a real family tensor `F_nab`.
fn outer(f: &Sparse) -> Sparse {
    einsum("nab,ncd->abcd", &[f, f])
}

/// `(H_i)_ab (H_i)_cd = −Ht Ht` since `H = i·Ht`; likewise for `C`.
fn hh(m: &Model) -> crate::error::Result<Sparse> {
    Ok(outer(&h_real(m)?).scale(&r(-1, 1)))
}

fn cc(m: &Model) -> crate::error::Result<Sparse> {
    Ok(outer(&c_real(m)?).scale(&r(-1, 1)))
}

pub fn cases() -> Vec<IdentityCase> {
    let mut v = vec![
        IdentityCase::new(
            "13.4",
            "−Ht_iab Ht_icd − Ct_eab Ct_ecd = δ_ad δ_bc − δ_ac δ_bd",
            "a,b,c,d ∈ 1..7",
            |m| {
                let lhs = hh(m)?.add(&cc(m)?);
                Ok(compare_tensors(&lhs, &crossed_minus_direct()))
            },
        ),
        IdentityCase::new(
            "13.5",
            "(Y_α)_ab (Y_α)_cd = −2/7 δ_ab δ_cd + δ_ad δ_bc + δ_ac δ_bd",
            "a,b,c,d ∈ 1..7",
            |m| {
                let rhs = dd(0, 3, 1, 2)
                    .add(&dd(0, 2, 1, 3))
                    .add_scaled(&r(-2, 7), &dd(0, 1, 2, 3));
                Ok(compare_tensors(&outer(&y_real(m)?), &rhs))
            },
        ),
        IdentityCase::new(
            "13.6",
            "−Ht_iab Ht_icd = δ_ad δ_bc − δ_ac δ_bd + 1/3 ψ_eab ψ_ecd",
            "a,b,c,d ∈ 1..7",
            |m| {
                let psi = &m.sparse.psi;
                let rhs = crossed_minus_direct().add_scaled(&r(1, 3), &einsum("eab,ecd->abcd", &[psi, psi]));
                Ok(compare_tensors(&hh(m)?, &rhs))
            },
        ),
        IdentityCase::new(
            "13.7",
            "(x_i)_ab (x_i)_cd + (z_e)_ab (z_e)_cd = δ_ad δ_bc − M_ac M_bd",
            "a,b,c,d ∈ 1..7",
            |m| Ok(check_13_7(m)),
        ),
        IdentityCase::new(
            "26.8",
            "(Y_α)_ab (Y_α)_cd = 2P⁽²⁷⁾_ab,cd",
            "a,b,c,d ∈ 1..7",
            |m| Ok(compare_tensors(&outer(&y_real(m)?), &p27().scale(&r(2, 1)))),
        ),
        IdentityCase::new(
            "26.9",
            "(H_i)_ab (H_i)_cd + (C_e)_ab (C_e)_cd = −2P^A_ab,cd",
            "a,b,c,d ∈ 1..7",
            |m| {
                let lhs = hh(m)?.add(&cc(m)?);
                Ok(compare_tensors(&lhs, &p_antisym().scale(&r(-2, 1)))
                .note("right side is stated as +2P^A; the traced form of the completeness relation forces −2P^A, which is checked"))
            },
        ),
        IdentityCase::new(
            "26.10",
            "(C_e)_ab (C_e)_cd = −c_eab c_ecd = −2P⁽⁷⁾_ab,cd",
            "a,b,c,d ∈ 1..7",
            |m| {
                let c = &m.sparse.c_abc;
                let lhs = cc(m)?;
                let mid = einsum("eab,ecd->abcd", &[c, c]).scale(&r(-1, 1));
                Ok(compare_tensors(&lhs, &mid).and(compare_tensors(&mid, &p7(m).scale(&r(-2, 1)))))
            },
        ),
        IdentityCase::new(
            "26.11",
            "(H_i)_ab (H_i)_cd = −2P⁽¹⁴⁾_ab,cd",
            "a,b,c,d ∈ 1..7",
            |m| {
                let p14 = p_antisym().sub(&p7(m));
                Ok(compare_tensors(&hh(m)?, &p14.scale(&r(-2, 1)))
                .note("right side is stated as 2P⁽¹⁴⁾; with the sign of the C line this must be −2P⁽¹⁴⁾, which is checked"))
            },
        ),
    ];
    v.extend(projector_cases());
    v
}

fn check_13_7(m: &Model) -> Check {
    let (x, z, mm) = (&m.catalog.x, &m.catalog.z, &m.catalog.m);
    for a in 0..7 {
        for b in 0..7 {
            for c in 0..7 {
                for d in 0..7 {
                    let mut lhs = ComplexScalar::zero();
                    for g in x.iter().chain(z.iter()) {
                        lhs = &lhs + &(g.get(a, b) * g.get(c, d));
                    }
                    let mut rhs = &ComplexScalar::zero() - &(mm.get(a, c) * mm.get(b, d));
                    if a == d && b == c {
                        rhs = &rhs + &ComplexScalar::one();
                    }
                    if lhs != rhs {
                        return Check::fail(Some(Witness::new(
                            &[a, b, c, d],
                            lhs.render_compact(),
                            rhs.render_compact(),
                        )));
                    }
                }
            }
        }
    }
    Check::pass()
}
