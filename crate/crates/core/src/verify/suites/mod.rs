mod basis;
mod bilinear;
mod completeness;
mod lemmas;
mod octonion;
mod product;
mod second_class;
mod trilinear;

use crate::error::Result;
use crate::linalg::RepMatrix;
use crate::model::Model;
use crate::scalar::{rat, ComplexScalar, ExactScalar};
use crate::tensors::{family_tensor, Sparse};

use super::{IdentityCase, Suite, Witness};

pub fn catalog(suite: Suite) -> Vec<IdentityCase> {
    match suite {
        Suite::Basis => basis::cases(),
        Suite::Octonion => octonion::cases(),
        Suite::ProductLaw => product::cases(),
        Suite::Bilinear => bilinear::cases(),
        Suite::Lemmas => lemmas::cases(),
        Suite::Completeness => completeness::cases(),
        Suite::Trilinear => trilinear::cases(),
        Suite::SecondClass => second_class::cases(),
        Suite::Casimir => crate::casimir::casimir_cases(),
        Suite::Invariants => crate::casimir::invariant_cases(),
        Suite::All => Suite::All.cases(),
    }
}

fn r(n: i64, d: i64) -> ExactScalar {
    rat(n, d)
}

fn delta(n: usize) -> Sparse {
    Sparse::delta(n)
}

/// `H_i = i·Ht_i`.
fn h_real(m: &Model) -> Result<Sparse> {
    family_tensor(&m.derived.h, true)
}

/// `C_a = i·Ct_a`.
fn c_real(m: &Model) -> Result<Sparse> {
    family_tensor(&m.derived.c, true)
}

fn y_real(m: &Model) -> Result<Sparse> {
    family_tensor(&m.derived.y, false)
}

/// First pair with `tr(a_i b_j) ≠ k·δ_ij` (with `k = 0` off the diagonal
/// when the families differ).
fn gram_witness(a: &[RepMatrix], b: &[RepMatrix], same: bool, k: i64) -> Option<Witness> {
    let k = ComplexScalar::from_integer(k);
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let t = x.trace_product(y);
            let want = if same && i == j {
                k.clone()
            } else {
                ComplexScalar::zero()
            };
            if t != want {
                return Some(Witness::new(&[i, j], t.render_compact(), want.render_compact()));
            }
        }
    }
    None
}

/// `Σ_k coeff(i,j,k)·family_k` as a matrix, for a real tensor slice scaled
/// by a complex phase.
fn combine(family: &[RepMatrix], phase: &ComplexScalar, coeff: impl Fn(usize) -> ExactScalar) -> RepMatrix {
    let mut out = RepMatrix::zeros(family[0].n());
    for (k, f) in family.iter().enumerate() {
        let c = coeff(k);
        if !c.is_zero() {
            out.add_scaled(&phase.scale_real(&c), f);
        }
    }
    out
}
