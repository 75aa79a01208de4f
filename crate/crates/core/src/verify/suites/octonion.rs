use crate::tensors::{einsum, epsilon7_sparse, Sparse};

use super::super::{compare_tensors, delta_product, expect_constant, Check, IdentityCase, Witness};
use super::{delta, r};

const D4: [usize; 4] = [7; 4];

/// `δ_pq δ_rs` on four 7-valued axes.
fn dd(p: usize, q: usize, s: usize, t: usize) -> Sparse {
    delta_product(&D4, &[(p, q), (s, t)])
}

pub fn cases() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new("A1.1", "ψ_abc ψ_abd = 6δ_cd", "c,d ∈ 1..7", |m| {
            let psi = &m.sparse.psi;
            Ok(expect_constant(
                &einsum("abc,abd->cd", &[psi, psi]),
                &delta(7),
                &r(6, 1),
            ))
        }),
        IdentityCase::new(
            "A1.2",
            "ψ_abc = −1/24 ε_abcdefg ψ_deh ψ_fgh",
            "a,b,c ∈ 1..7",
            |m| {
                let psi = &m.sparse.psi;
                let w = einsum("deh,fgh->defg", &[psi, psi]);
                let rhs = einsum("abcdefg,defg->abc", &[&epsilon7_sparse(), &w]).scale(&r(-1, 24));
                Ok(compare_tensors(psi, &rhs))
            },
        ),
        IdentityCase::new(
            "A1.3",
            "ψ_deh ψ_fgh = δ_df δ_eg − δ_dg δ_ef − 1/6 ε_defgabc ψ_abc",
            "d,e,f,g ∈ 1..7",
            |m| {
                let psi = &m.sparse.psi;
                let lhs = einsum("deh,fgh->defg", &[psi, psi]);
                let eps = einsum("defgabc,abc->defg", &[&epsilon7_sparse(), psi]);
                let rhs = dd(0, 2, 1, 3).sub(&dd(0, 3, 1, 2)).add_scaled(&r(-1, 6), &eps);
                Ok(compare_tensors(&lhs, &rhs))
            },
        ),
        IdentityCase::new("A1.4", "ψ_fag ψ_gbe ψ_ecf = 3ψ_abc", "a,b,c ∈ 1..7", |m| {
            let psi = &m.sparse.psi;
            Ok(expect_constant(
                &einsum("fag,gbe,ecf->abc", &[psi, psi, psi]),
                psi,
                &r(3, 1),
            ))
        }),
        IdentityCase::new(
            "A1.5",
            "ψ_h[de ψ_f]gh = −1/6 ε_abcdefg ψ_abc",
            "d,e,f,g ∈ 1..7",
            |m| {
                let psi = &m.sparse.psi;
                let lhs = einsum("hde,fgh->defg", &[psi, psi]).antisymmetrize(&[0, 1, 2]);
                let rhs = einsum("abcdefg,abc->defg", &[&epsilon7_sparse(), psi]).scale(&r(-1, 6));
                Ok(compare_tensors(&lhs, &rhs))
            },
        ),
        IdentityCase::new(
            "A1.6",
            "ψ_deh ψ_fgh + ψ_feh ψ_dgh = 2δ_df δ_eg − δ_dg δ_ef − δ_fg δ_ed",
            "d,e,f,g ∈ 1..7",
            |m| {
                let psi = &m.sparse.psi;
                let lhs = einsum("deh,fgh->defg", &[psi, psi]).add(&einsum("feh,dgh->defg", &[psi, psi]));
                let rhs = dd(0, 2, 1, 3).scale(&r(2, 1)).sub(&dd(0, 3, 1, 2)).sub(&dd(2, 3, 0, 1));
                Ok(compare_tensors(&lhs, &rhs))
            },
        ),
        IdentityCase::new(
            "A1.7",
            "ψ_abd ψ_deh ψ_hfg = 3δ_a[e ψ_fg]b − 3δ_b[e ψ_fg]a − δ_ef ψ_gab + δ_eg ψ_fab",
            "a,b,e,f,g ∈ 1..7",
            |m| {
                let psi = &m.sparse.psi;
                let d = delta(7);
                let lhs = einsum("abd,deh,hfg->abefg", &[psi, psi, psi]);
                let t1 = einsum("ae,fgb->abefg", &[&d, psi]).antisymmetrize(&[2, 3, 4]);
                let t2 = einsum("be,fga->abefg", &[&d, psi]).antisymmetrize(&[2, 3, 4]);
                let t3 = einsum("ef,gab->abefg", &[&d, psi]);
                let t4 = einsum("eg,fab->abefg", &[&d, psi]);
                let rhs = t1.scale(&r(3, 1)).add_scaled(&r(-3, 1), &t2).sub(&t3).add(&t4);
                Ok(compare_tensors(&lhs, &rhs))
            },
        ),
        IdentityCase::new(
            "3.1",
            "ψ alone violates the Jacobi identity: c_abe c_ecd + c_bce c_ead + c_cae c_ebd ≠ 0 for some tuple",
            "a,b,c,d ∈ 1..7",
            |m| {
                let psi = &m.sparse.psi;
                let j = einsum("abe,ecd->abcd", &[psi, psi])
                    .add(&einsum("bce,ead->abcd", &[psi, psi]))
                    .add(&einsum("cae,ebd->abcd", &[psi, psi]));
                let w = j.entries().next().map(|(idx, v)| Witness::real(&idx, v, &r(0, 1)));
                Ok(Check::from_violation(w))
            },
        ),
    ]
}
