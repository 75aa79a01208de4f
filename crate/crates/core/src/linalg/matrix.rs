use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::scalar::{ComplexScalar, ExactScalar, Ring};

/// Dense square matrix over a coefficient ring, stored row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<R> {
    n: usize,
    data: Vec<R>,
}

/// The matrices of the representations: complex entries over Q(√2,√3,√7).
pub type RepMatrix = Matrix<ComplexScalar>;

/// Below this size a product is computed on the calling thread.
const PAR_THRESHOLD: usize = 24;

impl<R: Ring> Matrix<R> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![R::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = R::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                data.push(f(r, c));
            }
        }
        Self { n, data }
    }

    pub fn diagonal(entries: Vec<R>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 0-based access.
    pub fn get(&self, r: usize, c: usize) -> &R {
        &self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: R) {
        self.data[r * self.n + c] = value;
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut R {
        &mut self.data[r * self.n + c]
    }

    /// Nonzero entries as `(row, col, value)`, 0-based, row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        let n = self.n;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / n, k % n, v))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    fn check_same(&self, other: &Self, op: &str) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "{op}: {}×{} vs {}×{}",
                self.n, self.n, other.n, other.n
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other, "add")?;
        Ok(self.zip_with(other, |a, b| a.add(b)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other, "sub")?;
        Ok(self.zip_with(other, |a, b| a.sub(b)))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&R) -> R) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, k: &R) -> Self {
        self.map(|a| if a.is_zero() { R::zero() } else { a.mul(k) })
    }

    pub fn scale_rational(&self, k: &Rational) -> Self {
        self.map(|a| a.scale(k))
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg)
    }

    /// `self += k · other`.
    pub fn add_scaled(&mut self, k: &R, other: &Self) {
        assert_eq!(self.n, other.n, "add_scaled: dimension mismatch");
        if k.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            a.add_product(k, b);
        }
    }

    /// Row lists of the nonzero entries, used to skip zeros in products.
    fn sparse_rows(&self) -> Vec<Vec<(usize, &R)>> {
        (0..self.n)
            .map(|r| {
                (0..self.n)
                    .filter_map(|c| {
                        let v = self.get(r, c);
                        (!v.is_zero()).then_some((c, v))
                    })
                    .collect()
            })
            .collect()
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other, "mul")?;
        let n = self.n;
        let rows_a = self.sparse_rows();
        let rows_b = other.sparse_rows();
        let row = |r: usize| -> Vec<R> {
            let mut out = vec![R::zero(); n];
            for &(k, a) in &rows_a[r] {
                for &(c, b) in &rows_b[k] {
                    out[c].add_product(a, b);
                }
            }
            out
        };
        let rows: Vec<Vec<R>> = if n >= PAR_THRESHOLD {
            (0..n).into_par_iter().map(row).collect()
        } else {
            (0..n).map(row).collect()
        };
        Ok(Self {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |r, c| self.get(c, r).clone())
    }

    pub fn trace(&self) -> R {
        let mut acc = R::zero();
        for i in 0..self.n {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    /// `tr(self · other)` without forming the product.
    pub fn trace_product(&self, other: &Self) -> R {
        assert_eq!(self.n, other.n, "trace_product: dimension mismatch");
        let mut acc = R::zero();
        for (r, c, a) in self.nonzeros() {
            acc.add_product(a, other.get(c, r));
        }
        acc
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Tensor product; index `(i, j)` maps to `i·m + j` (0-based).
    pub fn kron(&self, other: &Self) -> Self {
        let m = other.n;
        let mut out = Self::zeros(self.n * m);
        for (r1, c1, a) in self.nonzeros() {
            for (r2, c2, b) in other.nonzeros() {
                out.set(r1 * m + r2, c1 * m + c2, a.mul(b));
            }
        }
        out
    }

    /// Partial trace over the first factor of a `first·m`-dimensional matrix:
    /// `out[i][j] = Σ_v self[(v,i),(v,j)]`.
    pub fn partial_trace_first(&self, first: usize) -> Result<Self> {
        if first == 0 || !self.n.is_multiple_of(first) {
            return Err(Error::DimensionMismatch(format!(
                "partial trace: {} is not a multiple of {first}",
                self.n
            )));
        }
        let m = self.n / first;
        let mut out = Self::zeros(m);
        for v in 0..first {
            for i in 0..m {
                for j in 0..m {
                    let e = self.get(v * m + i, v * m + j);
                    if !e.is_zero() {
                        *out.get_mut(i, j) = out.get(i, j).add(e);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `partial_trace_first(self · other)` without forming the full product.
    pub fn partial_trace_of_product(&self, other: &Self, first: usize) -> Result<Self> {
        self.check_same(other, "partial trace of product")?;
        if first == 0 || !self.n.is_multiple_of(first) {
            return Err(Error::DimensionMismatch(format!(
                "partial trace: {} is not a multiple of {first}",
                self.n
            )));
        }
        let m = self.n / first;
        let rows_a = self.sparse_rows();
        let cols_b = other.transpose();
        let cols_b = cols_b.sparse_rows();
        let entries: Vec<R> = (0..m * m)
            .into_par_iter()
            .map(|k| {
                let (i, j) = (k / m, k % m);
                let mut acc = R::zero();
                for v in 0..first {
                    let a = &rows_a[v * m + i];
                    let b = &cols_b[v * m + j];
                    // merge the two sorted sparse lists
                    let (mut p, mut q) = (0, 0);
                    while p < a.len() && q < b.len() {
                        match a[p].0.cmp(&b[q].0) {
                            std::cmp::Ordering::Less => p += 1,
                            std::cmp::Ordering::Greater => q += 1,
                            std::cmp::Ordering::Equal => {
                                acc.add_product(a[p].1, b[q].1);
                                p += 1;
                                q += 1;
                            }
                        }
                    }
                }
                acc
            })
            .collect();
        Ok(Self { n: m, data: entries })
    }

    /// `Some(k)` when the matrix equals `k · I`.
    pub fn as_scalar_multiple(&self) -> Option<R> {
        let k = self.get(0, 0).clone();
        for r in 0..self.n {
            for c in 0..self.n {
                let v = self.get(r, c);
                let ok = if r == c { *v == k } else { v.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(k)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|r| (0..=r).all(|c| *self.get(r, c) == self.get(c, r).neg()))
    }

    /// Converts entries into another ring.
    pub fn convert<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl RepMatrix {
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.n, |r, c| self.get(c, r).conj())
    }

    pub fn is_hermitian(&self) -> bool {
        (0..self.n).all(|r| (0..=r).all(|c| *self.get(r, c) == self.get(c, r).conj()))
    }

    pub fn from_real(m: &Matrix<ExactScalar>) -> Self {
        m.convert(|x| ComplexScalar::real(x.clone()))
    }

    /// The real matrix, or an error when any entry has an imaginary part.
    pub fn to_real(&self, context: &str) -> Result<Matrix<ExactScalar>> {
        let mut data = Vec::with_capacity(self.data.len());
        for z in &self.data {
            data.push(z.clone().into_real(context)?);
        }
        Ok(Matrix { n: self.n, data })
    }

    pub fn mul_i(&self) -> Self {
        self.map(ComplexScalar::mul_i)
    }

    pub fn mul_neg_i(&self) -> Self {
        self.map(ComplexScalar::mul_neg_i)
    }

    /// Text dump: `matrix n=<n>` then `row col scalar` per nonzero entry,
    /// 1-based, lexicographic.
    pub fn dump(&self) -> String {
        let mut out = format!("matrix n={}\n", self.n);
        for (r, c, v) in self.nonzeros() {
            let _ = writeln!(out, "{} {} {}", r + 1, c + 1, v.render());
        }
        out
    }

    /// Parses one or more concatenated dumps.
    pub fn parse_dump(text: &str) -> Result<Vec<Self>> {
        let mut out: Vec<Self> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("matrix ") {
                let n = rest
                    .strip_prefix("n=")
                    .and_then(|v| v.trim().parse::<usize>().ok())
                    .ok_or_else(|| Error::parse_at(lineno, "n", format!("bad header {line:?}")))?;
                out.push(Self::zeros(n));
                continue;
            }
            let m = out
                .last_mut()
                .ok_or_else(|| Error::parse_at(lineno, "header", "entry before any matrix header"))?;
            let mut parts = line.split_whitespace();
            let mut index = |field: &str| -> Result<usize> {
                let tok = parts.next().ok_or_else(|| Error::parse_at(lineno, field, "missing"))?;
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::parse_at(lineno, field, format!("not an index: {tok:?}")))?;
                if v == 0 || v > m.n {
                    return Err(Error::parse_at(
                        lineno,
                        field,
                        format!("index {v} out of range 1..={}", m.n),
                    ));
                }
                Ok(v - 1)
            };
            let r = index("row")?;
            let c = index("col")?;
            let tok = parts
                .next()
                .ok_or_else(|| Error::parse_at(lineno, "scalar", "missing"))?;
            let v = ComplexScalar::parse(tok).map_err(|e| Error::parse_at(lineno, "scalar", e.to_string()))?;
            if parts.next().is_some() {
                return Err(Error::parse_at(lineno, "scalar", "trailing tokens"));
            }
            m.set(r, c, v);
        }
        Ok(out)
    }
}

macro_rules! matrix_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// Panics on a dimension mismatch; use the `checked_*` form to get an error.
        impl<R: Ring> std::ops::$trait<&Matrix<R>> for &Matrix<R> {
            type Output = Matrix<R>;
            fn $method(self, rhs: &Matrix<R>) -> Matrix<R> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

matrix_binop!(Add, add, checked_add);
matrix_binop!(Sub, sub, checked_sub);
matrix_binop!(Mul, mul, checked_mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::scalar::rat;
    use proptest::prelude::*;

    fn c(n: i64) -> ComplexScalar {
        ComplexScalar::from_integer(n)
    }

    fn sample(seed: i64) -> RepMatrix {
        RepMatrix::from_fn(3, |r, k| {
            let v = (r as i64 * 3 + k as i64 + seed) % 5 - 2;
            ComplexScalar::new(rat(v, 1), ExactScalar::sqrt_of(2, 1).scale(&q(r as i64 - k as i64, 1)))
        })
    }

    #[test]
    fn basic_algebra() {
        let a = sample(1);
        assert!(a.commutator(&a).is_zero());
        assert_eq!(RepMatrix::identity(7).trace(), c(7));
        assert_eq!(a.dagger().dagger(), a);
        let b = sample(4);
        assert_eq!((&a * &b).trace(), (&b * &a).trace());
        assert_eq!(a.trace_product(&b), (&a * &b).trace());
        assert!(a.checked_mul(&RepMatrix::identity(2)).is_err());
    }

    #[test]
    fn kron_and_partial_trace() {
        let i6 = RepMatrix::identity(2).kron(&RepMatrix::identity(3));
        assert_eq!(i6, RepMatrix::identity(6));
        let a = sample(2);
        let b = sample(3);
        let k = a.kron(&b);
        assert_eq!(k.n(), 9);
        assert_eq!(k.trace(), &a.trace() * &b.trace());
        // tr_1(A ⊗ B) = tr(A) B
        assert_eq!(k.partial_trace_first(3).unwrap(), b.scale(&a.trace()));
        let k2 = b.kron(&a);
        assert_eq!(
            k.partial_trace_of_product(&k2, 3).unwrap(),
            (&k * &k2).partial_trace_first(3).unwrap()
        );
    }

    #[test]
    fn dump_round_trip() {
        let a = sample(3);
        let text = format!("{}{}", a.dump(), RepMatrix::identity(2).dump());
        let back = RepMatrix::parse_dump(&text).unwrap();
        assert_eq!(back, vec![a, RepMatrix::identity(2)]);
        assert!(RepMatrix::identity(2).dump().starts_with("matrix n=2\n1 1 (1,"));
        let err = RepMatrix::parse_dump("matrix n=2\n3 1 1\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    proptest! {
        #[test]
        fn trace_is_cyclic(v in proptest::collection::vec(-3i64..4, 18)) {
            let a = RepMatrix::from_fn(3, |r, k| c(v[r * 3 + k]));
            let b = RepMatrix::from_fn(3, |r, k| ComplexScalar::new(rat(v[9 + r * 3 + k], 2), rat(v[r + k], 1)));
            prop_assert_eq!((&a * &b).trace(), (&b * &a).trace());
            prop_assert_eq!((&a * &b).dagger(), &b.dagger() * &a.dagger());
        }
    }
}
