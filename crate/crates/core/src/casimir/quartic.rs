use crate::error::{Error, Result};
use crate::linalg::RepMatrix;
use crate::model::Model;
use crate::rational::{q, Rational};
use crate::scalar::ExactScalar;

use super::dims::c2;

/// The three representations the quartic Casimir is evaluated on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuarticRep {
    Seven,
    Fourteen,
    TwentySeven,
}

impl QuarticRep {
    pub const ALL: [QuarticRep; 3] = [QuarticRep::Seven, QuarticRep::Fourteen, QuarticRep::TwentySeven];

    pub fn dim(self) -> usize {
        match self {
            QuarticRep::Seven => 7,
            QuarticRep::Fourteen => 14,
            QuarticRep::TwentySeven => 27,
        }
    }

    /// Highest weight `(λ, μ)`.
    pub fn weight(self) -> (u64, u64) {
        match self {
            QuarticRep::Seven => (0, 1),
            QuarticRep::Fourteen => (1, 0),
            QuarticRep::TwentySeven => (0, 2),
        }
    }

    fn generators(self, m: &Model) -> &[RepMatrix] {
        match self {
            QuarticRep::Seven => &m.catalog.x,
            QuarticRep::Fourteen => &m.derived.ad,
            QuarticRep::TwentySeven => &m.derived.phi,
        }
    }

    /// `c₂² + 28/3·c₂`.
    pub fn expected(self) -> Rational {
        let (l, mu) = self.weight();
        let c = c2(l, mu);
        &(&c * &c) + &(&q(28, 3) * &c)
    }
}

/// `X = Σ x_i ⊗ D_i`; the partial trace of `X⁴` over the 7-dimensional
/// factor, which must be a multiple of the identity. Returns that scalar.
pub fn quartic_casimir(m: &Model, rep: QuarticRep) -> Result<ExactScalar> {
    let gens = rep.generators(m);
    let mut x = RepMatrix::zeros(7 * rep.dim());
    for (xi, di) in m.catalog.x.iter().zip(gens) {
        x = &x + &xi.kron(di);
    }
    let x2 = &x * &x;
    let reduced = x2.partial_trace_of_product(&x2, 7)?;
    let k = reduced
        .as_scalar_multiple()
        .ok_or_else(|| Error::consistency(format!("quartic Casimir on {} is not a scalar", rep.dim())))?;
    k.into_real("quartic Casimir")
}
