use crate::model::Model;
use crate::tensors::{einsum, Sparse, SparseStore};

use super::super::{compare_tensors, delta_product, expect_constant, render_scalar, Check, IdentityCase, Witness};
use super::r;

/// `einsum(spec)` over three tensors equals `k·basis`.
fn triple(
    id: &'static str,
    description: &'static str,
    ranges: &'static str,
    spec: &'static str,
    pick: fn(&SparseStore) -> [&Sparse; 4],
    k: (i64, i64),
) -> IdentityCase {
    IdentityCase::new(id, description, ranges, move |m: &Model| {
        let [a, b, c, basis] = pick(&m.sparse);
        Ok(expect_constant(&einsum(spec, &[a, b, c]), basis, &r(k.0, k.1)))
    })
}

/// First tuple where `q ≠ k·d`, with `k` read off where `d ≠ 0`.
fn non_proportional(q: &Sparse, d: &Sparse) -> Check {
    let Some((idx, d0)) = d.entries().next() else {
        return Check::fail(None);
    };
    let k = &q.get(&idx) * &d0.invert().expect("nonzero entry");
    let scaled = d.scale(&k);
    let w = q.first_difference(&scaled).map(|(t, a, b)| Witness::real(&t, &a, &b));
    Check::from_violation(w).detail(format!("candidate={}", render_scalar(&k)))
}

pub fn cases() -> Vec<IdentityCase> {
    vec![
        triple(
            "35.1",
            "c_ijk = h_iab h_jbc h_kca",
            "i,j,k ∈ 1..14",
            "iab,jbc,kca->ijk",
            |s| [&s.h_iab, &s.h_iab, &s.h_iab, &s.c_ijk],
            (1, 1),
        ),
        triple(
            "35.2",
            "c_abc = c_eaf c_fbg c_gce",
            "a,b,c ∈ 1..7",
            "eaf,fbg,gce->abc",
            |s| [&s.c_abc, &s.c_abc, &s.c_abc, &s.c_abc],
            (1, 1),
        ),
        IdentityCase::new(
            "35.3",
            "d_αβγ = −27 d_abα d_bcβ d_caγ",
            "α,β,γ ∈ 1..27",
            |m| {
                let d = &m.sparse.d_ab;
                let lhs = einsum("abx,bcy,caz->xyz", &[d, d, d]);
                Ok(compare_tensors(&m.sparse.d_yyy, &lhs.scale(&r(-27, 1)))
                .detail("constant=-27")
                .note("no H matrix enters either side, so the constant −27 holds for either sign choice of the H family"))
            },
        ),
        triple(
            "35.4",
            "c_piq c_qjr c_rkp = −4 c_ijk",
            "i,j,k ∈ 1..14",
            "piq,qjr,rkp->ijk",
            |s| [&s.c_ijk, &s.c_ijk, &s.c_ijk, &s.c_ijk],
            (-4, 1),
        ),
        triple(
            "35.5",
            "d_jkα d_liα c_jlq = 20/7 c_kiq",
            "k,i,q ∈ 1..14",
            "jka,lia,jlq->kiq",
            |s| [&s.d_ij, &s.d_ij, &s.c_ijk, &s.c_ijk],
            (20, 7),
        ),
        triple(
            "35.6",
            "c_pri c_psj d_ijα = 10/3 d_rsα",
            "r,s ∈ 1..14, α ∈ 1..27",
            "pri,psj,ija->rsa",
            |s| [&s.c_ijk, &s.c_ijk, &s.d_ij, &s.d_ij],
            (10, 3),
        ),
        triple(
            "35.7",
            "d_ijα d_jkβ d_αβγ = 22/21 d_ikγ",
            "i,k ∈ 1..14, γ ∈ 1..27",
            "ija,jkb,abg->ikg",
            |s| [&s.d_ij, &s.d_ij, &s.d_yyy, &s.d_ij],
            (22, 21),
        ),
        triple(
            "35.8",
            "d_pqα d_piβ d_qjβ = −58/63 d_ijα",
            "i,j ∈ 1..14, α ∈ 1..27",
            "pqa,pib,qjb->ija",
            |s| [&s.d_ij, &s.d_ij, &s.d_ij, &s.d_ij],
            (-58, 63),
        ),
        IdentityCase::new(
            "35.9",
            "d_λμα d_μνβ d_νλγ = 53/7 d_αβγ",
            "α,β,γ ∈ 1..27",
            |m| {
                let d = &m.sparse.d_yyy;
                let half = einsum("lma,mnb->lanb", &[d, d]);
                let lhs = einsum("lanb,nlg->abg", &[&half, d]);
                Ok(expect_constant(&lhs, d, &r(53, 7)).note("summed indices λ,μ,ν are read as running over 1..27"))
            },
        ),
        IdentityCase::new(
            "35.12",
            "c_ijp c_klp = 8/7(δ_ik δ_jl − δ_jk δ_il) + d_ikα d_jlα − d_jkα d_ilα",
            "i,j,k,l ∈ 1..14",
            |m| {
                let (c, d) = (&m.sparse.c_ijk, &m.sparse.d_ij);
                let n = [14; 4];
                let lhs = einsum("ijp,klp->ijkl", &[c, c]);
                let deltas = delta_product(&n, &[(0, 2), (1, 3)]).sub(&delta_product(&n, &[(1, 2), (0, 3)]));
                let rhs = deltas
                    .scale(&r(8, 7))
                    .add(&einsum("ika,jla->ijkl", &[d, d]))
                    .sub(&einsum("jka,ila->ijkl", &[d, d]));
                Ok(compare_tensors(&lhs, &rhs))
            },
        ),
        IdentityCase::new(
            "35.51",
            "c_pri c_psj d_ijβ + d_pqβ d_prα d_qsα = 152/63 d_rsβ",
            "r,s ∈ 1..14, β ∈ 1..27",
            |m| {
                let (c, d) = (&m.sparse.c_ijk, &m.sparse.d_ij);
                let lhs = einsum("pri,psj,ijb->rsb", &[c, c, d]).add(&einsum("pqb,pra,qsa->rsb", &[d, d, d]));
                Ok(expect_constant(&lhs, d, &r(152, 63)))
            },
        ),
        IdentityCase::new(
            "35.14",
            "d_ijα d_jkβ d_kiγ is not a constant multiple of d_αβγ",
            "α,β,γ ∈ 1..27",
            |m| {
                let d = &m.sparse.d_ij;
                let q = einsum("ija,jkb,kig->abg", &[d, d, d]);
                Ok(non_proportional(&q, &m.sparse.d_yyy))
            },
        ),
    ]
}
