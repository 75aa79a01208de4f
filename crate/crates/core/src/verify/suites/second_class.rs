use rayon::prelude::*;

use crate::casimir::adjoint::delta2_sym;
use crate::casimir::lambda_cases;
use crate::error::Result;
use crate::linalg::RepMatrix;
use crate::model::Model;
use crate::scalar::ComplexScalar;
use crate::tensors::sparse::pack;
use crate::tensors::{einsum, Sparse};

use super::super::{compare_tensors, delta_product, expect_constant, IdentityCase};
use super::r;

/// `tr(F_i F_j F_k F_l)` for a 14-member family, from the 196 pair products
/// `P_ij = F_i F_j` as `tr(P_ij P_kl)`. The traces must be real.
fn trace4(family: &[RepMatrix]) -> Result<Sparse> {
    let n = family.len();
    let pairs: Vec<RepMatrix> = (0..n * n)
        .into_par_iter()
        .map(|p| &family[p / n] * &family[p % n])
        .collect();
    let entries: Vec<(u64, ComplexScalar)> = (0..n * n * n * n)
        .into_par_iter()
        .filter_map(|t| {
            let (ij, kl) = (t / (n * n), t % (n * n));
            let v = pairs[ij].trace_product(&pairs[kl]);
            (!v.is_zero()).then(|| (pack(&[ij / n, ij % n, kl / n, kl % n]), v))
        })
        .collect();
    let real = entries
        .into_iter()
        .map(|(k, v)| Ok((k, v.into_real("four-fold trace")?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Sparse::from_entries(&[n; 4], real))
}

fn sym4(t: &Sparse) -> Sparse {
    t.symmetrize(&[0, 1, 2, 3])
}

fn symmetric_trace(
    id: &'static str,
    description: &'static str,
    family: fn(&Model) -> &[RepMatrix],
    k: i64,
) -> IdentityCase {
    IdentityCase::new(id, description, "i,j,k,l ∈ 1..14", move |m| {
        Ok(expect_constant(&sym4(&trace4(family(m))?), &delta2_sym(), &r(k, 1)))
    })
}

pub fn cases() -> Vec<IdentityCase> {
    let n = [14; 4];
    let mut v = vec![
        IdentityCase::new(
            "27.12",
            "3 d_rsα d_klα = c_prk c_psl + c_prl c_psk + 2(δ_rk δ_sl + δ_rl δ_sk) − 10/7 δ_rs δ_kl",
            "r,s,k,l ∈ 1..14",
            move |m| {
                let (c, d) = (&m.sparse.c_ijk, &m.sparse.d_ij);
                let lhs = einsum("rsa,kla->rskl", &[d, d]).scale(&r(3, 1));
                let rhs = einsum("prk,psl->rskl", &[c, c])
                    .add(&einsum("prl,psk->rskl", &[c, c]))
                    .add(&delta_product(&n, &[(0, 2), (1, 3)]).scale(&r(2, 1)))
                    .add(&delta_product(&n, &[(0, 3), (1, 2)]).scale(&r(2, 1)))
                    .add_scaled(&r(-10, 7), &delta_product(&n, &[(0, 1), (2, 3)]));
                Ok(compare_tensors(&lhs, &rhs))
            },
        ),
        IdentityCase::new(
            "27.13",
            "d_(ij^α d_k)lα = 6/7 δ_(ij δ_k)l",
            "i,j,k,l ∈ 1..14; l exempt",
            move |m| {
                let d = &m.sparse.d_ij;
                let lhs = einsum("ija,kla->ijkl", &[d, d]).symmetrize(&[0, 1, 2]);
                let basis = delta_product(&n, &[(0, 1), (2, 3)]).symmetrize(&[0, 1, 2]);
                Ok(expect_constant(&lhs, &basis, &r(6, 7)))
            },
        ),
        IdentityCase::new(
            "27.14",
            "c_pri c_psj d_ijα = 10/3 d_rsα",
            "r,s ∈ 1..14, α ∈ 1..27",
            |m| {
                let (c, d) = (&m.sparse.c_ijk, &m.sparse.d_ij);
                Ok(expect_constant(&einsum("pri,psj,ija->rsa", &[c, c, d]), d, &r(10, 3)))
            },
        ),
        IdentityCase::new(
            "27.20",
            "3 c_jmr c_knr c_mps c_nqs = 10(δ_jp δ_kq + δ_jq δ_kp + δ_jk δ_pq) + 8 c_jpr c_kqr − 4 c_jqr c_kpr",
            "j,k,p,q ∈ 1..14",
            move |m| {
                let c = &m.sparse.c_ijk;
                let x = einsum("jmr,mps->jrps", &[c, c]);
                let lhs = einsum("jrps,krqs->jkpq", &[&x, &x]).scale(&r(3, 1));
                let deltas = delta_product(&n, &[(0, 2), (1, 3)])
                    .add(&delta_product(&n, &[(0, 3), (1, 2)]))
                    .add(&delta_product(&n, &[(0, 1), (2, 3)]));
                let rhs = deltas
                    .scale(&r(10, 1))
                    .add_scaled(&r(8, 1), &einsum("jpr,kqr->jkpq", &[c, c]))
                    .add_scaled(&r(-4, 1), &einsum("jqr,kpr->jkpq", &[c, c]));
                Ok(compare_tensors(&lhs, &rhs))
            },
        ),
        symmetric_trace(
            "27.21",
            "tr ad_(j ad_k ad_p ad_q) = 10 δ_(jk δ_pq)",
            |m| &m.derived.ad,
            10,
        ),
        symmetric_trace("28.1", "tr x_(i x_j x_k x_l) = δ_(ij δ_kl)", |m| &m.catalog.x, 1),
        symmetric_trace("47.4", "tr H_(i H_j H_k H_l) = δ_(ij δ_kl)", |m| &m.derived.h, 1),
        IdentityCase::new(
            "29.3",
            "tr(x_i x_j x_k x_l) = tr(x_(i x_j x_k x_l)) − 1/3(c_klt c_ijt − c_ilt c_jkt)",
            "i,j,k,l ∈ 1..14",
            |m| {
                let c = &m.sparse.c_ijk;
                let t = trace4(&m.catalog.x)?;
                let rhs = sym4(&t).add_scaled(
                    &r(-1, 3),
                    &einsum("klt,ijt->ijkl", &[c, c]).sub(&einsum("ilt,jkt->ijkl", &[c, c])),
                );
                Ok(compare_tensors(&t, &rhs))
            },
        ),
    ];
    v.extend(lambda_cases());
    v
}
