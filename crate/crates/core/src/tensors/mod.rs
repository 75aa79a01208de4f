//! Invariant tensors extracted from traces of the basis matrices, the
//! octonionic tensor, and the matrix families built back from them.

mod derived;
mod io;
pub mod sparse;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::RepMatrix;
use crate::rep::BasisCatalog;
use crate::scalar::{ComplexScalar, ExactScalar};

pub use derived::{bracket_rhs, satisfies_brackets, DerivedMatrices};
pub use io::{parse_tensor, render_tensor};
pub use sparse::{einsum, einsum_scalar, Sparse};

/// The ordered triples on which ψ is `+1`.
pub const PSI_TRIPLES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 7],
    [1, 6, 5],
    [2, 4, 6],
    [2, 5, 7],
    [3, 5, 4],
    [3, 6, 7],
];

/// Dense multi-index array of real field elements, row-major, 0-based.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor {
    name: String,
    dims: Vec<usize>,
    data: Vec<ExactScalar>,
}

impl Tensor {
    pub fn zeros(name: impl Into<String>, dims: &[usize]) -> Self {
        Self {
            name: name.into(),
            dims: dims.to_vec(),
            data: vec![ExactScalar::zero(); dims.iter().product()],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.dims.len(), "{}: wrong index count", self.name);
        idx.iter().zip(&self.dims).fold(0, |acc, (&i, &d)| {
            assert!(i < d, "{}: index {i} out of range {d}", self.name);
            acc * d + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &ExactScalar {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: ExactScalar) {
        let o = self.offset(idx);
        self.data[o] = value;
    }

    /// Nonzero entries in lexicographic index order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (Vec<usize>, &ExactScalar)> {
        let dims = self.dims.clone();
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(mut flat, v)| {
                let mut idx = vec![0; dims.len()];
                for p in (0..dims.len()).rev() {
                    idx[p] = flat % dims[p];
                    flat /= dims[p];
                }
                (idx, v)
            })
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn to_sparse(&self) -> Sparse {
        Sparse::from_entries(
            &self.dims,
            self.nonzeros().map(|(idx, v)| (sparse::pack(&idx), v.clone())),
        )
    }

    pub fn from_sparse(name: impl Into<String>, s: &Sparse) -> Self {
        let mut t = Self::zeros(name, s.dims());
        for (idx, v) in s.entries() {
            t.set(&idx, v.clone());
        }
        t
    }
}

/// Sign of a permutation of `0..n` given as a slice, 0 when an entry
/// repeats.
pub fn permutation_sign(p: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] == p[j] {
                return 0;
            }
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// The rank-7 Levi-Civita symbol as a functional on 0-based indices.
pub fn epsilon7(idx: &[usize; 7]) -> i32 {
    permutation_sign(idx)
}

/// The 5040 nonzero entries of the rank-7 epsilon tensor.
pub fn epsilon7_sparse() -> Sparse {
    let entries = sparse::permutations(7)
        .into_iter()
        .map(|(p, sign)| (sparse::pack(&p), ExactScalar::from_integer(sign)));
    Sparse::from_entries(&[7; 7], entries)
}

/// ψ_abc: +1 on the seven listed triples, totally antisymmetric.
pub fn build_psi() -> Tensor {
    build_psi_from(&PSI_TRIPLES)
}

pub fn build_psi_from(triples: &[[usize; 3]]) -> Tensor {
    let mut t = Tensor::zeros("psi_abc", &[7, 7, 7]);
    for tri in triples {
        for (p, sign) in sparse::permutations(3) {
            let idx: Vec<usize> = p.iter().map(|&k| tri[k] - 1).collect();
            t.set(&idx, ExactScalar::from_integer(sign));
        }
    }
    t
}

/// Every named tensor of the product laws.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorStore {
    pub c_ijk: Tensor,
    pub h_iab: Tensor,
    pub c_abc: Tensor,
    pub psi_abc: Tensor,
    pub d_ij_alpha: Tensor,
    pub d_ab_alpha: Tensor,
    pub d_ia_alpha: Tensor,
    pub phi_i_alpha_beta: Tensor,
    pub t_a_alpha_beta: Tensor,
    pub d_alpha_beta_gamma: Tensor,
}

/// Which factor multiplies the trace so that the tensor is real.
#[derive(Clone, Copy)]
enum Phase {
    One,
    MinusI,
}

fn trace_tensor(name: &str, a: &[RepMatrix], b: &[RepMatrix], c: &[RepMatrix], phase: Phase) -> Result<Tensor> {
    let (na, nb, nc) = (a.len(), b.len(), c.len());
    let rows: Vec<Result<Vec<ExactScalar>>> = (0..na * nb)
        .into_par_iter()
        .map(|k| {
            let p = &a[k / nb] * &b[k % nb];
            c.iter()
                .enumerate()
                .map(|(l, m)| {
                    let t = p.trace_product(m);
                    let t = match phase {
                        Phase::One => t,
                        Phase::MinusI => t.mul_neg_i(),
                    };
                    t.into_real(&format!("{name}[{},{},{}]", k / nb + 1, k % nb + 1, l + 1))
                })
                .collect()
        })
        .collect();
    let mut data = Vec::with_capacity(na * nb * nc);
    for row in rows {
        data.extend(row?);
    }
    Ok(Tensor {
        name: name.to_string(),
        dims: vec![na, nb, nc],
        data,
    })
}

impl TensorStore {
    /// Names in storage order; also the file stems.
    pub const NAMES: [&'static str; 10] = [
        "c_ijk",
        "h_iab",
        "c_abc",
        "psi_abc",
        "d_ij_alpha",
        "d_ab_alpha",
        "d_ia_alpha",
        "phi_i_alpha_beta",
        "t_a_alpha_beta",
        "d_alpha_beta_gamma",
    ];

    /// Extracts every tensor by its trace formula. A nonzero imaginary part
    /// anywhere is an internal consistency error.
    pub fn extract(cat: &BasisCatalog) -> Result<Self> {
        use Phase::*;
        let (x, z, y) = (&cat.x, &cat.z, &cat.y);
        Ok(Self {
            c_ijk: trace_tensor("c_ijk", x, x, x, MinusI)?,
            h_iab: trace_tensor("h_iab", x, z, z, MinusI)?,
            c_abc: trace_tensor("c_abc", z, z, z, MinusI)?,
            psi_abc: build_psi(),
            d_ij_alpha: trace_tensor("d_ij_alpha", x, x, y, One)?,
            d_ab_alpha: trace_tensor("d_ab_alpha", z, z, y, One)?,
            d_ia_alpha: trace_tensor("d_ia_alpha", x, z, y, One)?,
            phi_i_alpha_beta: trace_tensor("phi_i_alpha_beta", x, y, y, MinusI)?,
            t_a_alpha_beta: trace_tensor("t_a_alpha_beta", z, y, y, MinusI)?,
            d_alpha_beta_gamma: trace_tensor("d_alpha_beta_gamma", y, y, y, One)?,
        })
    }

    pub fn tensors(&self) -> [&Tensor; 10] {
        [
            &self.c_ijk,
            &self.h_iab,
            &self.c_abc,
            &self.psi_abc,
            &self.d_ij_alpha,
            &self.d_ab_alpha,
            &self.d_ia_alpha,
            &self.phi_i_alpha_beta,
            &self.t_a_alpha_beta,
            &self.d_alpha_beta_gamma,
        ]
    }

    pub fn get(&self, name: &str) -> Option<&Tensor> {
        self.tensors().into_iter().find(|t| t.name == name)
    }

    pub fn get_mut(&mut self, name: &str) -> Option<&mut Tensor> {
        [
            &mut self.c_ijk,
            &mut self.h_iab,
            &mut self.c_abc,
            &mut self.psi_abc,
            &mut self.d_ij_alpha,
            &mut self.d_ab_alpha,
            &mut self.d_ia_alpha,
            &mut self.phi_i_alpha_beta,
            &mut self.t_a_alpha_beta,
            &mut self.d_alpha_beta_gamma,
        ]
        .into_iter()
        .find(|t| t.name == name)
    }

    /// Writes one `<name>.txt` file per tensor.
    pub fn save(&self, dir: &std::path::Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        for t in self.tensors() {
            std::fs::write(dir.join(format!("{}.txt", t.name)), render_tensor(t))?;
        }
        Ok(())
    }

    pub fn load(dir: &std::path::Path) -> Result<Self> {
        let read = |name: &str| -> Result<Tensor> {
            let path = dir.join(format!("{name}.txt"));
            let text = std::fs::read_to_string(&path)?;
            let t = parse_tensor(&text).map_err(|e| match e {
                Error::Parse { line, field, message } => Error::Parse {
                    line,
                    field,
                    message: format!("{}: {message}", path.display()),
                },
                other => other,
            })?;
            if t.name != name {
                return Err(Error::parse(format!(
                    "{}: holds tensor {:?}, expected {name:?}",
                    path.display(),
                    t.name
                )));
            }
            Ok(t)
        };
        Ok(Self {
            c_ijk: read("c_ijk")?,
            h_iab: read("h_iab")?,
            c_abc: read("c_abc")?,
            psi_abc: read("psi_abc")?,
            d_ij_alpha: read("d_ij_alpha")?,
            d_ab_alpha: read("d_ab_alpha")?,
            d_ia_alpha: read("d_ia_alpha")?,
            phi_i_alpha_beta: read("phi_i_alpha_beta")?,
            t_a_alpha_beta: read("t_a_alpha_beta")?,
            d_alpha_beta_gamma: read("d_alpha_beta_gamma")?,
        })
    }

    /// Sparse views, computed once for contraction work.
    pub fn sparse(&self) -> SparseStore {
        let s = |t: &Tensor| t.to_sparse();
        SparseStore {
            c_ijk: s(&self.c_ijk),
            h_iab: s(&self.h_iab),
            c_abc: s(&self.c_abc),
            psi: s(&self.psi_abc),
            d_ij: s(&self.d_ij_alpha),
            d_ab: s(&self.d_ab_alpha),
            d_ia: s(&self.d_ia_alpha),
            phi: s(&self.phi_i_alpha_beta),
            t: s(&self.t_a_alpha_beta),
            d_yyy: s(&self.d_alpha_beta_gamma),
        }
    }
}

/// Sparse copies of the store for contraction.
#[derive(Clone, Debug)]
pub struct SparseStore {
    pub c_ijk: Sparse,
    pub h_iab: Sparse,
    pub c_abc: Sparse,
    pub psi: Sparse,
    pub d_ij: Sparse,
    pub d_ab: Sparse,
    pub d_ia: Sparse,
    pub phi: Sparse,
    pub t: Sparse,
    pub d_yyy: Sparse,
}

/// Real tensor `T` with `family[i] = phase · T[i]`, where `phase` is 1 for
/// real families and `i` for imaginary ones.
pub fn family_tensor(family: &[RepMatrix], imaginary: bool) -> Result<Sparse> {
    let n = family[0].n();
    let mut entries = Vec::new();
    for (k, m) in family.iter().enumerate() {
        for (r, c, v) in m.nonzeros() {
            let re = if imaginary {
                v.mul_neg_i().into_real("imaginary family")?
            } else {
                v.clone().into_real("real family")?
            };
            entries.push((sparse::pack(&[k, r, c]), re));
        }
    }
    Ok(Sparse::from_entries(&[family.len(), n, n], entries))
}

/// Builds a matrix family `M_k[r][c] = phase · t[k][r][c]`.
pub fn matrices_from_tensor(t: &Tensor, phase: &ComplexScalar) -> Vec<RepMatrix> {
    let (n0, n) = (t.dims[0], t.dims[1]);
    assert_eq!(t.dims[1], t.dims[2], "{}: not a matrix family", t.name);
    (0..n0)
        .map(|k| RepMatrix::from_fn(n, |r, c| phase.scale_real(t.get(&[k, r, c]))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn psi_entries() {
        let psi = build_psi();
        assert_eq!(psi.get(&[0, 3, 6]), &ExactScalar::one());
        assert_eq!(psi.get(&[3, 0, 6]), &ExactScalar::from_integer(-1));
        assert!(psi.get(&[0, 1, 3]).is_zero());
        assert_eq!(psi.nnz(), 42);
    }

    #[test]
    fn epsilon_functional() {
        assert_eq!(epsilon7(&[0, 1, 2, 3, 4, 5, 6]), 1);
        assert_eq!(epsilon7(&[1, 0, 2, 3, 4, 5, 6]), -1);
        assert_eq!(epsilon7(&[0, 0, 2, 3, 4, 5, 6]), 0);
        let e = epsilon7_sparse();
        assert_eq!(e.nnz(), 5040);
        assert_eq!(e.get(&[6, 5, 4, 3, 2, 1, 0]), ExactScalar::from_integer(-1));
    }

    #[test]
    fn extraction_is_real_and_structured() {
        let cat = BasisCatalog::build().unwrap();
        let store = TensorStore::extract(&cat).unwrap();
        // c_abc = ψ_abc/√3
        let k = ExactScalar::sqrt_of(1, 3);
        for a in 0..7 {
            for b in 0..7 {
                for c in 0..7 {
                    assert_eq!(store.c_abc.get(&[a, b, c]), &(store.psi_abc.get(&[a, b, c]) * &k));
                }
            }
        }
        // h_iab h_jab = 2δ_ij
        let s = store.sparse();
        let hh = einsum("iab,jab->ij", &[&s.h_iab, &s.h_iab]);
        assert_eq!(hh, Sparse::delta(14).scale_rational(&q(2, 1)));
        // d_iiα = 0
        assert!(einsum("iia->a", &[&s.d_ij]).is_zero());
    }
}
