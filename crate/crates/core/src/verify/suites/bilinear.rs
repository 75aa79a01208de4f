use crate::model::Model;
use crate::tensors::{einsum, Sparse, SparseStore};

use super::super::{expect_constant, IdentityCase};
use super::{delta, r};

/// `spec` contracts two copies of one tensor down to a rank-2 result that
/// must equal `k·δ`.
fn two_tensor(
    id: &'static str,
    description: &'static str,
    ranges: &'static str,
    spec: &'static str,
    pick: fn(&SparseStore) -> &Sparse,
    n: usize,
    k: (i64, i64),
) -> IdentityCase {
    IdentityCase::new(id, description, ranges, move |m: &Model| {
        let t = pick(&m.sparse);
        Ok(expect_constant(&einsum(spec, &[t, t]), &delta(n), &r(k.0, k.1)))
    })
}

pub fn cases() -> Vec<IdentityCase> {
    let mut v = vec![
        two_tensor(
            "20.1",
            "c_ijk c_ijl = 8δ_kl",
            "k,l ∈ 1..14",
            "ijk,ijl->kl",
            |s| &s.c_ijk,
            14,
            (8, 1),
        ),
        two_tensor(
            "20.2",
            "h_iab h_jab = 2δ_ij",
            "i,j ∈ 1..14",
            "iab,jab->ij",
            |s| &s.h_iab,
            14,
            (2, 1),
        ),
        two_tensor(
            "20.3",
            "h_iab h_iac = 4δ_bc",
            "b,c ∈ 1..7",
            "iab,iac->bc",
            |s| &s.h_iab,
            7,
            (4, 1),
        ),
        two_tensor(
            "20.4",
            "d_ijα d_ijβ = 32/9 δ_αβ",
            "α,β ∈ 1..27",
            "ija,ijb->ab",
            |s| &s.d_ij,
            27,
            (32, 9),
        ),
        two_tensor(
            "20.5",
            "d_ijα d_ikα = 48/7 δ_jk",
            "j,k ∈ 1..14",
            "ija,ika->jk",
            |s| &s.d_ij,
            14,
            (48, 7),
        ),
        two_tensor(
            "20.6",
            "c_abc c_abd = 2δ_cd",
            "c,d ∈ 1..7",
            "abc,abd->cd",
            |s| &s.c_abc,
            7,
            (2, 1),
        ),
        two_tensor(
            "20.7",
            "d_abα d_abβ = 2/9 δ_αβ",
            "α,β ∈ 1..27",
            "abx,aby->xy",
            |s| &s.d_ab,
            27,
            (2, 9),
        ),
        two_tensor(
            "20.8",
            "d_abα d_acα = 6/7 δ_bc",
            "b,c ∈ 1..7",
            "abx,acx->bc",
            |s| &s.d_ab,
            7,
            (6, 7),
        ),
        two_tensor(
            "20.9",
            "φ_iαβ φ_jαβ = 18δ_ij",
            "i,j ∈ 1..14",
            "ixy,jxy->ij",
            |s| &s.phi,
            14,
            (18, 1),
        ),
        two_tensor(
            "20.10",
            "φ_iαβ φ_iγβ = 28/3 δ_αγ",
            "α,γ ∈ 1..27",
            "ixy,izy->xz",
            |s| &s.phi,
            27,
            (28, 3),
        ),
        two_tensor(
            "20.11",
            "d_αβγ d_αβδ = 110/7 δ_γδ",
            "γ,δ ∈ 1..27",
            "xyz,xyw->zw",
            |s| &s.d_yyy,
            27,
            (110, 7),
        ),
        two_tensor(
            "20.12",
            "d_iaα d_iaβ = 28/9 δ_αβ",
            "α,β ∈ 1..27",
            "iax,iay->xy",
            |s| &s.d_ia,
            27,
            (28, 9),
        ),
        two_tensor(
            "20.12a",
            "d_iaα d_jaα = 6δ_ij",
            "i,j ∈ 1..14",
            "iax,jax->ij",
            |s| &s.d_ia,
            14,
            (6, 1),
        ),
        two_tensor(
            "20.12b",
            "d_iaα d_ibα = 12δ_ab",
            "a,b ∈ 1..7",
            "iax,ibx->ab",
            |s| &s.d_ia,
            7,
            (12, 1),
        ),
        two_tensor(
            "12.8",
            "d_abα d_abβ = 2/9 δ_αβ",
            "α,β ∈ 1..27",
            "abx,aby->xy",
            |s| &s.d_ab,
            27,
            (2, 9),
        ),
        two_tensor(
            "11.10",
            "c_aef c_bef = 2δ_ab",
            "a,b ∈ 1..7",
            "aef,bef->ab",
            |s| &s.c_abc,
            7,
            (2, 1),
        ),
    ];
    v.push(IdentityCase::new(
        "11.51",
        "h_iab h_jab = 2δ_ij",
        "i,j ∈ 1..14",
        |m: &Model| {
            let h = &m.sparse.h_iab;
            Ok(expect_constant(&einsum("iab,jab->ij", &[h, h]), &delta(14), &r(2, 1))
                .note("right side is stated as 2δ_ab; the free indices are i,j, so 2δ_ij is checked"))
        },
    ));
    v
}
