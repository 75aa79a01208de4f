//! The Cartan slice `A = a·h₁ + b·h₂` (components `(a, b, 0, …, 0)`), on
//! which every invariant polynomial becomes a polynomial in `a` and `b`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{char_poly, BivariatePoly, Matrix, RepMatrix, UniPoly};
use crate::model::Model;
use crate::rational::Rational;
use crate::scalar::{ComplexScalar, ExactScalar, Ring};

use super::adjoint::AdjointVectorBundle;

type PolyMatrix = Matrix<BivariatePoly>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SliceQuantity {
    /// `tr A^k` in the defining representation.
    TrA(u32),
    /// `tr B^k` with `B = a·ad₁ + b·ad₂`.
    TrB(u32),
    C2,
    C6,
    C6Tilde,
    /// `B_α`, 1-based.
    B(usize),
    /// `D_α`, 1-based.
    D(usize),
    /// `C_i`, 1-based.
    CVec(usize),
    BB,
    BD,
    CC,
    DD,
}

impl FromStr for SliceQuantity {
    type Err = Error;

    /// Names: `trA<k>`, `trB<k>`, `C2`, `C6`, `C6tilde`, `B<α>`, `D<α>`,
    /// `Cvec<i>`, `BB`, `BD`, `CC`, `DD`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownQuantity(s.to_string());
        let index = |rest: &str, max: usize| -> Result<usize> {
            rest.parse::<usize>()
                .ok()
                .filter(|&k| (1..=max).contains(&k))
                .ok_or_else(unknown)
        };
        let power = |rest: &str| -> Result<u32> {
            rest.parse::<u32>()
                .ok()
                .filter(|&k| (1..=64).contains(&k))
                .ok_or_else(unknown)
        };
        Ok(match s {
            "C2" => Self::C2,
            "C6" => Self::C6,
            "C6tilde" => Self::C6Tilde,
            "BB" => Self::BB,
            "BD" => Self::BD,
            "CC" => Self::CC,
            "DD" => Self::DD,
            _ => {
                if let Some(r) = s.strip_prefix("trA") {
                    Self::TrA(power(r)?)
                } else if let Some(r) = s.strip_prefix("trB") {
                    Self::TrB(power(r)?)
                } else if let Some(r) = s.strip_prefix("Cvec") {
                    Self::CVec(index(r, 14)?)
                } else if let Some(r) = s.strip_prefix('B') {
                    Self::B(index(r, 27)?)
                } else if let Some(r) = s.strip_prefix('D') {
                    Self::D(index(r, 27)?)
                } else {
                    return Err(unknown());
                }
            }
        })
    }
}

impl fmt::Display for SliceQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TrA(k) => write!(f, "trA{k}"),
            Self::TrB(k) => write!(f, "trB{k}"),
            Self::C2 => write!(f, "C2"),
            Self::C6 => write!(f, "C6"),
            Self::C6Tilde => write!(f, "C6tilde"),
            Self::B(k) => write!(f, "B{k}"),
            Self::D(k) => write!(f, "D{k}"),
            Self::CVec(k) => write!(f, "Cvec{k}"),
            Self::BB => write!(f, "BB"),
            Self::BD => write!(f, "BD"),
            Self::CC => write!(f, "CC"),
            Self::DD => write!(f, "DD"),
        }
    }
}

/// Slice data: the 7×7 matrix `A`, the real 14×14 matrix `K` with
/// `B = −i·K`, and the adjoint bundle, all over `ℚ(√2,√3,√7)[a, b]`.
#[derive(Clone, Debug)]
pub struct Slice {
    pub a_matrix: PolyMatrix,
    pub k_matrix: PolyMatrix,
    pub bundle: AdjointVectorBundle<BivariatePoly>,
}

fn linear(ka: &ExactScalar, kb: &ExactScalar) -> BivariatePoly {
    &BivariatePoly::var_a().scale_exact(ka) + &BivariatePoly::var_b().scale_exact(kb)
}

impl Slice {
    pub fn new(m: &Model) -> Result<Self> {
        let (h1, h2) = (&m.catalog.x[0], &m.catalog.x[1]);
        let re = |x: &ComplexScalar| x.clone().into_real("slice generator");
        let mut a_matrix = PolyMatrix::zeros(7);
        for r in 0..7 {
            for c in 0..7 {
                a_matrix.set(r, c, linear(&re(h1.get(r, c))?, &re(h2.get(r, c))?));
            }
        }
        let c = &m.store.c_ijk;
        let k_matrix = PolyMatrix::from_fn(14, |j, k| linear(c.get(&[0, j, k]), c.get(&[1, j, k])));
        let mut a = vec![BivariatePoly::zero(); 14];
        a[0] = BivariatePoly::var_a();
        a[1] = BivariatePoly::var_b();
        Ok(Self {
            a_matrix,
            k_matrix,
            bundle: AdjointVectorBundle::new(a, &m.sparse),
        })
    }

    pub fn tr_a(&self, k: u32) -> BivariatePoly {
        self.a_matrix.pow(k).trace()
    }

    /// `tr B^k = (−i)^k tr K^k`; odd powers vanish since `K` is antisymmetric.
    pub fn tr_b(&self, k: u32) -> Result<BivariatePoly> {
        let t = self.k_matrix.pow(k).trace();
        if k % 2 == 1 {
            if !t.is_zero() {
                return Err(Error::consistency("odd trace of an antisymmetric matrix is nonzero"));
            }
            return Ok(t);
        }
        Ok(if k.is_multiple_of(4) { t } else { t.neg() })
    }

    /// `C̃⁽⁶⁾ = C⁽⁶⁾ − 88/441 (C⁽²⁾)³`.
    pub fn c6_tilde(&self) -> BivariatePoly {
        let c2_cubed = self.bundle.c2.pow(3);
        self.bundle.c6.sub(&c2_cubed.scale(&crate::rational::q(88, 441)))
    }

    pub fn quantity(&self, q: SliceQuantity) -> Result<BivariatePoly> {
        let b = &self.bundle;
        Ok(match q {
            SliceQuantity::TrA(k) => self.tr_a(k),
            SliceQuantity::TrB(k) => self.tr_b(k)?,
            SliceQuantity::C2 => b.c2.clone(),
            SliceQuantity::C6 => b.c6.clone(),
            SliceQuantity::C6Tilde => self.c6_tilde(),
            SliceQuantity::B(k) => b.b[k - 1].clone(),
            SliceQuantity::D(k) => b.d[k - 1].clone(),
            SliceQuantity::CVec(k) => b.c[k - 1].clone(),
            SliceQuantity::BB => b.bb.clone(),
            SliceQuantity::BD => b.bd.clone(),
            SliceQuantity::CC => b.cc.clone(),
            SliceQuantity::DD => b.dd.clone(),
        })
    }
}

/// Evaluates one slice quantity at rational `(a, b)`.
pub fn slice_value(m: &Model, a: &Rational, b: &Rational, q: SliceQuantity) -> Result<ExactScalar> {
    Ok(Slice::new(m)?.quantity(q)?.eval(a, b))
}

/// `A = a·h₁ + b·h₂` (defining) or `B = a·ad₁ + b·ad₂` (adjoint) at
/// rational `(a, b)`.
pub fn slice_matrix(m: &Model, a: &Rational, b: &Rational, adjoint: bool) -> RepMatrix {
    let (m1, m2) = if adjoint {
        (&m.derived.ad[0], &m.derived.ad[1])
    } else {
        (&m.catalog.x[0], &m.catalog.x[1])
    };
    &m1.scale_rational(a) + &m2.scale_rational(b)
}

/// Characteristic polynomial of the slice matrix; its coefficients are real.
pub fn slice_char_poly(m: &Model, a: &Rational, b: &Rational, adjoint: bool) -> Result<UniPoly<ComplexScalar>> {
    let p = char_poly(&slice_matrix(m, a, b, adjoint));
    p.to_real()?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantity_names_round_trip() {
        for name in [
            "trA6", "trB10", "C2", "C6", "C6tilde", "B1", "D27", "Cvec14", "BB", "BD", "CC", "DD",
        ] {
            let q: SliceQuantity = name.parse().unwrap();
            assert_eq!(q.to_string(), name);
        }
        for bad in ["B0", "B28", "Cvec15", "trA0", "E1", "", "trA"] {
            assert!(
                matches!(bad.parse::<SliceQuantity>(), Err(Error::UnknownQuantity(_))),
                "{bad}"
            );
        }
    }
}
