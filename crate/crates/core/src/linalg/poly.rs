use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;
use crate::linalg::matrix::{Matrix, RepMatrix};
use crate::rational::Rational;
use crate::scalar::{ComplexScalar, ExactScalar, Ring};

/// Univariate polynomial in `t`, coefficients stored from the constant term
/// upward with no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(R::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn eval(&self, t: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc.mul(t).add(c))
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix<R>) -> Matrix<R> {
        let n = m.n();
        let mut acc = Matrix::zeros(n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * m;
            for i in 0..n {
                let d = acc.get(i, i).add(c);
                acc.set(i, i, d);
            }
        }
        acc
    }

    pub fn convert<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Product of `(t - r)` over the given roots.
    pub fn from_roots(roots: &[R]) -> Self {
        let mut coeffs = vec![R::one()];
        for r in roots {
            let mut next = vec![R::zero(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] = next[k + 1].add(c);
                next[k] = next[k].sub(&c.mul(r));
            }
            coeffs = next;
        }
        Self::new(coeffs)
    }
}

impl UniPoly<ComplexScalar> {
    /// Drops the (required zero) imaginary parts.
    pub fn to_real(&self) -> Result<UniPoly<ExactScalar>> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (k, c) in self.coeffs.iter().enumerate() {
            out.push(c.clone().into_real(&format!("coefficient of t^{k}"))?);
        }
        Ok(UniPoly::new(out))
    }

    /// One line per power from the leading term down: `t^<k> <scalar>`.
    pub fn render_lines(&self) -> String {
        let mut out = String::new();
        for k in (0..self.coeffs.len()).rev() {
            out.push_str(&format!("t^{k} {}\n", self.coeffs[k].render_compact()));
        }
        out
    }
}

impl fmt::Display for UniPoly<ExactScalar> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let mono = match k {
                    0 => String::new(),
                    1 => "t".to_string(),
                    _ => format!("t^{k}"),
                };
                (c.to_string(), mono)
            })
            .collect();
        write_terms(f, &terms)
    }
}

/// Writes `coeff·monomial` terms joined with signs, parenthesizing
/// multi-term coefficients.
fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(String, String)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (coeff, mono)) in terms.iter().enumerate() {
        let compound = coeff.contains(" + ") || coeff.contains(" - ");
        let (neg, mag) = match coeff.strip_prefix('-') {
            Some(rest) if !compound => (true, rest.to_string()),
            _ => (false, coeff.clone()),
        };
        if idx == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        match (mono.is_empty(), mag.as_str(), compound) {
            (true, _, _) => write!(f, "{mag}")?,
            (false, "1", _) => write!(f, "{mono}")?,
            (false, _, true) => write!(f, "({mag}) {mono}")?,
            (false, _, false) => write!(f, "{mag} {mono}")?,
        }
    }
    Ok(())
}

/// Characteristic polynomial `det(t·I - A)` by the Faddeev–LeVerrier
/// recursion. Only divisions by the integers `1..=n` occur.
pub fn char_poly<R: Ring>(a: &Matrix<R>) -> UniPoly<R> {
    let n = a.n();
    let mut coeffs = vec![R::zero(); n + 1];
    coeffs[n] = R::one();
    let mut m = Matrix::<R>::zeros(n);
    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{n-k+1}·I ; c_{n-k} = -tr(A·M_k)/k
        m = a * &m;
        for i in 0..n {
            let d = m.get(i, i).add(&coeffs[n - k + 1]);
            m.set(i, i, d);
        }
        let t = a.trace_product(&m);
        coeffs[n - k] = t.scale(&Rational::new(-1, k as i64).expect("k > 0"));
    }
    UniPoly::new(coeffs)
}

/// Characteristic polynomial of a representation matrix, required to have
/// real coefficients.
pub fn char_poly_real(a: &RepMatrix) -> Result<UniPoly<ExactScalar>> {
    char_poly(a).to_real()
}

/// Polynomial in the slice variables `a`, `b`; keys are `(deg_a, deg_b)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), ExactScalar>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(da: u32, db: u32, c: ExactScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((da, db), c);
        }
        Self { terms }
    }

    pub fn var_a() -> Self {
        Self::monomial(1, 0, ExactScalar::one())
    }

    pub fn var_b() -> Self {
        Self::monomial(0, 1, ExactScalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, da: u32, db: u32) -> ExactScalar {
        self.terms.get(&(da, db)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &ExactScalar)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    fn add_term(&mut self, key: (u32, u32), c: &ExactScalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale_exact(&self, k: &ExactScalar) -> Self {
        let mut out = Self::zero();
        for (key, c) in &self.terms {
            out.add_term(*key, &(c * k));
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::constant(ExactScalar::one());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, a: &Rational, b: &Rational) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for ((da, db), c) in &self.terms {
            acc += &c.scale(&(a.pow(*da) * b.pow(*db)));
        }
        acc
    }

    /// The constant term when the polynomial is constant.
    pub fn as_constant(&self) -> Option<ExactScalar> {
        match self.terms.len() {
            0 => Some(ExactScalar::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BivariatePoly {
    /// Terms by descending total degree, then descending power of `a`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|x| std::cmp::Reverse((x.0 + x.1, x.0)));
        let power = |v: &str, d: u32| match d {
            0 => String::new(),
            1 => v.to_string(),
            _ => format!("{v}^{d}"),
        };
        let terms: Vec<(String, String)> = keys
            .into_iter()
            .map(|key| {
                let mono = [power("a", key.0), power("b", key.1)]
                    .into_iter()
                    .filter(|s| !s.is_empty())
                    .collect::<Vec<_>>()
                    .join(" ");
                (self.terms[key].to_string(), mono)
            })
            .collect();
        write_terms(f, &terms)
    }
}

impl Add<&BivariatePoly> for &BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (key, c) in &rhs.terms {
            out.add_term(*key, c);
        }
        out
    }
}

impl Sub<&BivariatePoly> for &BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (key, c) in &rhs.terms {
            out.add_term(*key, &-c);
        }
        out
    }
}

impl Mul<&BivariatePoly> for &BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        BivariatePoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Ring for BivariatePoly {
    fn zero() -> Self {
        BivariatePoly::zero()
    }
    fn one() -> Self {
        BivariatePoly::constant(ExactScalar::one())
    }
    fn is_zero(&self) -> bool {
        BivariatePoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, factor: &Rational) -> Self {
        self.scale_exact(&ExactScalar::from_rational(factor.clone()))
    }
    fn from_exact(x: &ExactScalar) -> Self {
        BivariatePoly::constant(x.clone())
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        for ((a1, b1), c1) in &a.terms {
            for ((a2, b2), c2) in &b.terms {
                self.add_term((a1 + a2, b1 + b2), &(c1 * c2));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::scalar::rat;
    use proptest::prelude::*;

    fn a() -> BivariatePoly {
        BivariatePoly::var_a()
    }
    fn b() -> BivariatePoly {
        BivariatePoly::var_b()
    }

    #[test]
    fn char_poly_small_cases() {
        let i2 = Matrix::<ExactScalar>::identity(2);
        assert_eq!(char_poly(&i2), UniPoly::new(vec![rat(1, 1), rat(-2, 1), rat(1, 1)]));
        let z7 = Matrix::<ExactScalar>::zeros(7);
        let p = char_poly(&z7);
        assert_eq!(p.degree(), Some(7));
        assert!((0..7).all(|k| p.coeff(k).is_zero()));
    }

    #[test]
    fn char_poly_of_slice_diagonal() {
        let c = ExactScalar::sqrt_of(2, 3);
        let d = ExactScalar::sqrt_of(1, 6);
        let diag = vec![c.clone(), d.clone(), d.clone(), ExactScalar::zero(), -&d, -&d, -&c];
        let p = char_poly(&Matrix::diagonal(diag.clone()));
        assert_eq!(p, UniPoly::from_roots(&diag));
        assert_eq!(p.to_string(), "t^7 - t^5 + 1/4 t^3 - 1/54 t");
        assert!(p.eval_matrix(&Matrix::diagonal(diag)).is_zero());
    }

    #[test]
    fn char_poly_complex_and_cayley_hamilton() {
        let i = ComplexScalar::i();
        let m = RepMatrix::from_fn(3, |r, c| match (r, c) {
            (0, 1) => i.clone(),
            (1, 0) => -&i,
            (2, 2) => ComplexScalar::from_integer(2),
            _ => ComplexScalar::zero(),
        });
        let p = char_poly(&m);
        assert!(p.eval_matrix(&m).is_zero());
        // eigenvalues ±1 and 2
        assert_eq!(
            char_poly_real(&m).unwrap(),
            UniPoly::from_roots(&[rat(1, 1), rat(-1, 1), rat(2, 1)])
        );
        let not_real = RepMatrix::diagonal(vec![i.clone(), ComplexScalar::one()]);
        assert!(char_poly_real(&not_real).is_err());
    }

    #[test]
    fn bivariate_basics() {
        let a2 = a().pow(2);
        let b2 = b().pow(2);
        assert_eq!(&(&a2 - &b2) * &(&a2 + &b2), &a().pow(4) - &b().pow(4));
        assert_eq!((&a2 + &b2).eval(&q(1, 1), &q(0, 1)), rat(1, 1));
        assert!((&a2 - &a2).is_zero());
        let p = &(&a2.scale(&q(4, 9)) - &(&a() * &b()).scale(&q(2, 1))) + &BivariatePoly::one();
        assert_eq!(p.to_string(), "4/9 a^2 - 2 a b + 1");
    }

    #[test]
    fn char_poly_over_polynomials() {
        // diag(a, b): t^2 - (a+b) t + ab
        let m = Matrix::diagonal(vec![a(), b()]);
        let p = char_poly(&m);
        assert_eq!(p.coeff(1), -&(&a() + &b()));
        assert_eq!(p.coeff(0), &a() * &b());
    }

    fn arb_poly() -> impl Strategy<Value = BivariatePoly> {
        proptest::collection::vec((0u32..3, 0u32..3, -4i64..5), 0..5).prop_map(|ts| {
            ts.into_iter().fold(BivariatePoly::zero(), |acc, (da, db, c)| {
                &acc + &BivariatePoly::monomial(da, db, rat(c, 1))
            })
        })
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_map(p in arb_poly(), r in arb_poly(), x in -3i64..4, y in -3i64..4) {
            let (x, y) = (q(x, 2), q(y, 1));
            prop_assert_eq!((&p * &r).eval(&x, &y), &p.eval(&x, &y) * &r.eval(&x, &y));
            prop_assert_eq!((&p + &r).eval(&x, &y), &p.eval(&x, &y) + &r.eval(&x, &y));
            prop_assert_eq!(&p * &r, &r * &p);
        }
    }
}
