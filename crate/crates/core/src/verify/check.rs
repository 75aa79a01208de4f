use std::fmt;

use crate::linalg::RepMatrix;
use crate::scalar::{ComplexScalar, ExactScalar};
use crate::tensors::Sparse;

use super::Status;

/// A concrete index tuple (stored 0-based, shown 1-based) with both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(tuple: &[usize], lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Self {
            tuple: tuple.to_vec(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }

    pub fn real(tuple: &[usize], lhs: &ExactScalar, rhs: &ExactScalar) -> Self {
        Self::new(tuple, show(lhs), show(rhs))
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.tuple.is_empty() {
            let t: Vec<String> = self.tuple.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "tuple=({}) ", t.join(","))?;
        }
        write!(f, "lhs={} rhs={}", self.lhs, self.rhs)
    }
}

pub fn show(v: &ExactScalar) -> String {
    ComplexScalar::real(v.clone()).render_compact()
}

/// Result of one checker.
#[derive(Clone, Debug)]
pub struct Check {
    pub status: Status,
    pub detail: Option<String>,
    pub notes: Vec<String>,
}

impl Check {
    pub fn pass() -> Self {
        Self {
            status: Status::Pass(None),
            detail: None,
            notes: Vec::new(),
        }
    }

    pub fn fail(w: Option<Witness>) -> Self {
        Self {
            status: Status::Fail(w),
            detail: None,
            notes: Vec::new(),
        }
    }

    /// Pass when no counterexample was found.
    pub fn from_counterexample(w: Option<Witness>) -> Self {
        match w {
            None => Self::pass(),
            Some(w) => Self::fail(Some(w)),
        }
    }

    /// Pass when a violating tuple exists (negative checks).
    pub fn from_violation(w: Option<Witness>) -> Self {
        match w {
            Some(w) => Self {
                status: Status::Pass(Some(w)),
                detail: None,
                notes: Vec::new(),
            },
            None => Self::fail(None),
        }
    }

    pub fn and(self, other: Check) -> Self {
        let mut out = if self.status.is_pass() {
            other.clone()
        } else {
            self.clone()
        };
        let mut notes = self.notes;
        notes.extend(other.notes);
        out.notes = notes;
        out.detail = match (self.detail, other.detail) {
            (Some(a), Some(b)) => Some(format!("{a} {b}")),
            (a, b) => a.or(b),
        };
        out
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }
}

pub fn expect_true(ok: bool, witness: impl FnOnce() -> Witness) -> Check {
    if ok {
        Check::pass()
    } else {
        Check::fail(Some(witness()))
    }
}

/// Entrywise equality of two tensors of the same shape.
pub fn compare_tensors(lhs: &Sparse, rhs: &Sparse) -> Check {
    Check::from_counterexample(lhs.first_difference(rhs).map(|(idx, a, b)| Witness::real(&idx, &a, &b)))
}

/// `lhs = k·basis` entrywise; reports the constant.
pub fn expect_constant(lhs: &Sparse, basis: &Sparse, k: &ExactScalar) -> Check {
    let c = compare_tensors(lhs, &basis.scale(k));
    if c.status.is_pass() {
        c.detail(format!("constant={}", show(k)))
    } else {
        match lhs.ratio_to(basis) {
            Some(m) => c.detail(format!("measured={}", show(&m))),
            None => c,
        }
    }
}

/// Entrywise equality of two matrix families; the tuple is (member, row, col).
pub fn compare_families(lhs: &[RepMatrix], rhs: &[RepMatrix]) -> Check {
    assert_eq!(lhs.len(), rhs.len(), "family length mismatch");
    for (k, (a, b)) in lhs.iter().zip(rhs).enumerate() {
        if a == b {
            continue;
        }
        for r in 0..a.n() {
            for c in 0..a.n() {
                if a.get(r, c) != b.get(r, c) {
                    return Check::fail(Some(Witness::new(
                        &[k, r, c],
                        a.get(r, c).render_compact(),
                        b.get(r, c).render_compact(),
                    )));
                }
            }
        }
    }
    Check::pass()
}

/// `Σ_i outer_i · inner_j · outer_i` for every member `inner_j`.
pub fn family_sum(outer: &[RepMatrix], inner: &[RepMatrix]) -> Vec<RepMatrix> {
    use rayon::prelude::*;
    inner
        .par_iter()
        .map(|b| {
            let mut acc = RepMatrix::zeros(b.n());
            for a in outer {
                acc = &acc + &(&(a * b) * a);
            }
            acc
        })
        .collect()
}

/// Product of Kronecker deltas over the listed axis pairs.
pub fn delta_product(dims: &[usize], pairs: &[(usize, usize)]) -> Sparse {
    Sparse::from_fn(dims, |idx| {
        if pairs.iter().all(|&(p, q)| idx[p] == idx[q]) {
            ExactScalar::one()
        } else {
            ExactScalar::zero()
        }
    })
}
