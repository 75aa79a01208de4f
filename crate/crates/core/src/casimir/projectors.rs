//! Projectors onto the irreducible pieces of 7⊗7 and 14⊗14, stored as
//! pair-index matrices: `P_{ab,cd}` sits at row `a·n + b`, column `c·n + d`,
//! so the pair-index product is the matrix product.

use crate::linalg::Matrix;
use crate::scalar::{rat, ExactScalar};
use crate::tensors::{einsum, Sparse, SparseStore};
use crate::verify::{delta_product, Check, Witness};

pub type PairMatrix = Matrix<ExactScalar>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    /// 7⊗7 = (1 + 27) + (7 + 14)
    Seven,
    /// 14⊗14 = (1 + 27 + 77) + (14 + 77′)
    Fourteen,
}

impl Space {
    pub fn n(self) -> usize {
        match self {
            Space::Seven => 7,
            Space::Fourteen => 14,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Projector {
    pub label: &'static str,
    pub dim: i64,
    pub symmetric: bool,
    pub matrix: PairMatrix,
}

#[derive(Clone, Debug)]
pub struct ProjectorSet {
    pub space: Space,
    pub projectors: Vec<Projector>,
    pub is: PairMatrix,
    pub ia: PairMatrix,
    /// `Λ_{rs,ij} = −c_pri c_psj`, present for 14⊗14.
    pub lambda: Option<PairMatrix>,
}

/// Flattens a rank-4 `n⁴` tensor into its pair-index matrix.
pub fn pair_matrix(t: &Sparse) -> PairMatrix {
    let n = t.dims()[0];
    assert!(
        t.dims().iter().all(|&d| d == n) && t.rank() == 4,
        "pair matrix needs a rank-4 n⁴ tensor"
    );
    let mut m = PairMatrix::zeros(n * n);
    for (idx, v) in t.entries() {
        m.set(idx[0] * n + idx[1], idx[2] * n + idx[3], v.clone());
    }
    m
}

fn dd(n: usize, p: usize, q: usize, r: usize, s: usize) -> Sparse {
    delta_product(&[n; 4], &[(p, q), (r, s)])
}

impl ProjectorSet {
    pub fn build(space: Space, s: &SparseStore) -> Self {
        let n = space.n();
        let half = rat(1, 2);
        // δ_ac δ_bd and δ_ad δ_bc on (a, b, c, d)
        let direct = dd(n, 0, 2, 1, 3);
        let crossed = dd(n, 0, 3, 1, 2);
        let trace = dd(n, 0, 1, 2, 3);
        let is_t = direct.add(&crossed).scale(&half);
        let ia_t = direct.sub(&crossed).scale(&half);
        let p1 = trace.scale(&rat(1, n as i64));
        let (projectors, lambda) = match space {
            Space::Seven => {
                let p27 = is_t.sub(&p1);
                let p7 = einsum("abe,cde->abcd", &[&s.c_abc, &s.c_abc]).scale(&half);
                let p14 = ia_t.sub(&p7);
                (
                    vec![
                        ("1", 1, true, p1),
                        ("27", 27, true, p27),
                        ("7", 7, false, p7),
                        ("14", 14, false, p14),
                    ],
                    None,
                )
            }
            Space::Fourteen => {
                let p27 = einsum("ija,kla->ijkl", &[&s.d_ij, &s.d_ij]).scale(&rat(9, 32));
                let p77 = is_t.sub(&p1).sub(&p27);
                let p14 = einsum("ijp,klp->ijkl", &[&s.c_ijk, &s.c_ijk]).scale(&rat(1, 8));
                let p77p = ia_t.sub(&p14);
                let lambda = einsum("pri,psj->rsij", &[&s.c_ijk, &s.c_ijk]).scale(&rat(-1, 1));
                (
                    vec![
                        ("1", 1, true, p1),
                        ("27", 27, true, p27),
                        ("77", 77, true, p77),
                        ("14", 14, false, p14),
                        ("77'", 77, false, p77p),
                    ],
                    Some(pair_matrix(&lambda)),
                )
            }
        };
        Self {
            space,
            projectors: projectors
                .into_iter()
                .map(|(label, dim, symmetric, t)| Projector {
                    label,
                    dim,
                    symmetric,
                    matrix: pair_matrix(&t),
                })
                .collect(),
            is: pair_matrix(&is_t),
            ia: pair_matrix(&ia_t),
            lambda,
        }
    }

    pub fn get(&self, label: &str) -> &PairMatrix {
        &self
            .projectors
            .iter()
            .find(|p| p.label == label)
            .unwrap_or_else(|| panic!("no projector {label:?}"))
            .matrix
    }

    /// `Σ_ab P_{ab,ab}`.
    pub fn pair_trace(p: &PairMatrix) -> ExactScalar {
        p.trace()
    }

    /// Idempotence, mutual annihilation, sector sums and pair-traces.
    pub fn check_axioms(&self) -> Check {
        let ps = &self.projectors;
        for (i, p) in ps.iter().enumerate() {
            for (j, q) in ps.iter().enumerate() {
                let prod = &p.matrix * &q.matrix;
                let want = if i == j {
                    p.matrix.clone()
                } else {
                    PairMatrix::zeros(p.matrix.n())
                };
                if prod != want {
                    let what = if i == j { "idempotent" } else { "orthogonal" };
                    return Check::fail(Some(Witness::new(&[i, j], format!("P{}P{}", p.label, q.label), what)));
                }
            }
            let tr = Self::pair_trace(&p.matrix);
            if tr != rat(p.dim, 1) {
                return Check::fail(Some(Witness::new(&[i], tr.to_string(), p.dim.to_string())));
            }
        }
        for (symmetric, unit) in [(true, &self.is), (false, &self.ia)] {
            let mut sum = PairMatrix::zeros(unit.n());
            for p in ps.iter().filter(|p| p.symmetric == symmetric) {
                sum = &sum + &p.matrix;
            }
            if &sum != unit {
                let label = if symmetric { "I_S" } else { "I_A" };
                return Check::fail(Some(Witness::new(&[], "sector_sum", label)));
            }
        }
        let traces: Vec<String> = ps.iter().map(|p| Self::pair_trace(&p.matrix).to_string()).collect();
        Check::pass().detail(format!("pair_traces={}", traces.join(",")))
    }
}
