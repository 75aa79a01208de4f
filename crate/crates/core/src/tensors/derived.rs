use crate::error::{Error, Result};
use crate::linalg::RepMatrix;
use crate::scalar::{ComplexScalar, ExactScalar};

use super::{matrices_from_tensor, Tensor, TensorStore};

/// Matrix families rebuilt from the tensors.
#[derive(Clone, Debug)]
pub struct DerivedMatrices {
    /// `(H_i)_ab = σ·i·h_iab`
    pub h: Vec<RepMatrix>,
    /// `(C_a)_bc = i·c_abc`
    pub c: Vec<RepMatrix>,
    /// `(Y_α)_ab = −3·d_abα`
    pub y: Vec<RepMatrix>,
    /// `(ad_i)_jk = −i·c_ijk`
    pub ad: Vec<RepMatrix>,
    /// `(Φ_i)_αβ = −i·φ_iαβ`
    pub phi: Vec<RepMatrix>,
    /// The sign σ chosen by the bracket test.
    pub h_sign: i32,
}

/// `Σ_k i·c[i][j][k]·family[k]`, the right side of `[F_i, F_j] = i c_ijk F_k`.
pub fn bracket_rhs(c: &Tensor, i: usize, j: usize, family: &[RepMatrix]) -> RepMatrix {
    let mut out = RepMatrix::zeros(family[0].n());
    for (k, f) in family.iter().enumerate() {
        let coeff = c.get(&[i, j, k]);
        if !coeff.is_zero() {
            out.add_scaled(&ComplexScalar::imag(coeff.clone()), f);
        }
    }
    out
}

/// Whether `[F_i, F_j] = i·c_ijk·F_k` holds for every pair.
pub fn satisfies_brackets(c: &Tensor, family: &[RepMatrix]) -> bool {
    let n = family.len();
    (0..n).all(|i| (i + 1..n).all(|j| family[i].commutator(&family[j]) == bracket_rhs(c, i, j, family)))
}

impl DerivedMatrices {
    pub fn build(store: &TensorStore) -> Result<Self> {
        let i = ComplexScalar::i();
        let minus_i = -&i;
        let c = matrices_from_tensor(&store.c_abc, &i);
        let ad = matrices_from_tensor(&store.c_ijk, &minus_i);
        let phi = matrices_from_tensor(&store.phi_i_alpha_beta, &minus_i);
        let minus3 = ExactScalar::from_integer(-3);
        let y = (0..27)
            .map(|al| {
                RepMatrix::from_fn(7, |a, b| {
                    ComplexScalar::real(store.d_ab_alpha.get(&[a, b, al]) * &minus3)
                })
            })
            .collect();
        let mut chosen = None;
        for sign in [1, -1] {
            let phase = if sign == 1 { i.clone() } else { minus_i.clone() };
            let h = matrices_from_tensor(&store.h_iab, &phase);
            if satisfies_brackets(&store.c_ijk, &h) {
                chosen = Some((sign, h));
                break;
            }
        }
        let (h_sign, h) = chosen.ok_or_else(|| {
            Error::consistency("neither sign of (H_i)_ab = ±i h_iab satisfies [H_i, H_j] = i c_ijk H_k")
        })?;
        Ok(Self {
            h,
            c,
            y,
            ad,
            phi,
            h_sign,
        })
    }
}
