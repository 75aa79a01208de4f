//! Exact arithmetic in the real field Q(√2, √3, √7) and its complexification.
//!
//! An [`ExactScalar`] holds eight rational coefficients against the radical
//! basis `(1, √2, √3, √6, √7, √14, √21, √42)`. Basis slot `k` is the square
//! root of the product of the primes selected by the bits of `k`
//! (bit 0 → 2, bit 1 → 3, bit 2 → 7), so the product of slots `i` and `j`
//! lands in slot `i ^ j` with the integer factor `RADICAND[i & j]`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Squarefree radicand of each basis slot.
pub const RADICAND: [i64; 8] = [1, 2, 3, 6, 7, 14, 21, 42];

const BASIS_NAMES: [&str; 8] = ["1", "√2", "√3", "√6", "√7", "√14", "√21", "√42"];

/// Operations shared by every coefficient ring used in matrices and
/// polynomials.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, factor: &Rational) -> Self;
    /// Embeds a real field element.
    fn from_exact(x: &ExactScalar) -> Self;

    /// `self += a * b`, skipping the product when either factor is zero.
    fn add_product(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self = self.add(&a.mul(b));
        }
    }
}

/// Element of Q(√2, √3, √7).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    coeffs: [Rational; 8],
}

impl ExactScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::ONE)
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut s = Self::zero();
        s.coeffs[0] = q;
        s
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn from_coeffs(coeffs: [Rational; 8]) -> Self {
        Self { coeffs }
    }

    /// `q · √RADICAND[slot]`.
    pub fn radical(slot: usize, q: Rational) -> Self {
        let mut s = Self::zero();
        s.coeffs[slot] = q;
        s
    }

    /// Square root of a non-negative rational whose squarefree part divides
    /// 42. Returns `None` for anything else (negative input, or a radical
    /// outside the field).
    pub fn sqrt_rational(q: &Rational) -> Option<Self> {
        if q.signum() < 0 {
            return None;
        }
        if q.is_zero() {
            return Some(Self::zero());
        }
        // √(n/d) = √(n·d) / d
        let den = q.denom();
        let mut rest: BigInt = q.numer() * &den;
        let mut slot = 0usize;
        let mut root = BigInt::from(1);
        for (bit, p) in [(1usize, 2u32), (2, 3), (4, 7)] {
            let p = BigInt::from(p);
            let mut count = 0u32;
            while (&rest % &p).is_zero() {
                rest /= &p;
                count += 1;
            }
            if count % 2 == 1 {
                slot |= bit;
            }
            root *= p.pow(count / 2);
        }
        let s = rest.sqrt();
        if &s * &s != rest {
            return None;
        }
        root *= s;
        let coeff = Rational::from_big(num_rational::BigRational::new(root, den));
        Some(Self::radical(slot, coeff))
    }

    /// Convenience for literal constants: `√(num/den)`. Panics when the
    /// radical is not in the field.
    pub fn sqrt_of(num: i64, den: i64) -> Self {
        let q = Rational::new(num, den).expect("nonzero denominator");
        Self::sqrt_rational(&q).unwrap_or_else(|| panic!("√({num}/{den}) is not in Q(√2,√3,√7)"))
    }

    pub fn coeff(&self, slot: usize) -> &Rational {
        &self.coeffs[slot]
    }

    pub fn coeffs(&self) -> &[Rational; 8] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The value as a rational, when it has no radical part.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        for c in out.coeffs.iter_mut().filter(|c| !c.is_zero()) {
            *c = &*c * factor;
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Column `j` of the result is the coefficient vector of `self · basis_j`.
    fn multiplication_matrix(&self) -> [[Rational; 8]; 8] {
        let mut m: [[Rational; 8]; 8] = Default::default();
        for (i, ci) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for j in 0..8 {
                m[i ^ j][j] = ci.mul_int(RADICAND[i & j]);
            }
        }
        m
    }

    /// Multiplicative inverse, found by solving the 8×8 rational system
    /// `M_x · r = e_0` where `M_x` is multiplication by `self`.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(q.recip().expect("nonzero")));
        }
        let mut a = self.multiplication_matrix();
        let mut rhs: [Rational; 8] = Default::default();
        rhs[0] = Rational::ONE;
        for col in 0..8 {
            let pivot = (col..8).find(|&r| !a[r][col].is_zero()).ok_or(Error::DivisionByZero)?;
            a.swap(col, pivot);
            rhs.swap(col, pivot);
            let inv = a[col][col].recip().expect("pivot is nonzero");
            for k in col..8 {
                a[col][k] = &a[col][k] * &inv;
            }
            rhs[col] = &rhs[col] * &inv;
            for r in 0..8 {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for k in col..8 {
                    let t = &f * &a[col][k];
                    a[r][k] -= &t;
                }
                let t = &f * &rhs[col];
                rhs[r] -= &t;
            }
        }
        Ok(Self { coeffs: rhs })
    }

    pub fn to_f64(&self) -> f64 {
        self.coeffs
            .iter()
            .zip(RADICAND)
            .map(|(c, r)| c.to_f64() * (r as f64).sqrt())
            .sum()
    }

    fn write_coeffs(&self, out: &mut String) {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&c.to_string());
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Human-readable form, e.g. `1/3√6 - 2`. Not the canonical file grammar;
/// see [`ComplexScalar::render`].
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let neg = c.signum() < 0;
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "{}", BASIS_NAMES[k])?,
                (_, false) => write!(f, "{mag}{}", BASIS_NAMES[k])?,
            }
        }
        Ok(())
    }
}

impl Add<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl Mul<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        let mut out = ExactScalar::zero();
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, b) in rhs.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let p = (a * b).mul_int(RADICAND[i & j]);
                out.coeffs[i ^ j] += &p;
            }
        }
        out
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut().filter(|c| !c.is_zero()) {
            *c = -&*c;
        }
        out
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
        impl std::iter::Sum for $t {
            fn sum<I: Iterator<Item = $t>>(iter: I) -> $t {
                let mut acc = <$t>::zero();
                for x in iter {
                    acc += &x;
                }
                acc
            }
        }
    };
}

owned_ops!(ExactScalar);
owned_ops!(ComplexScalar);

impl From<Rational> for ExactScalar {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl Ring for ExactScalar {
    fn zero() -> Self {
        ExactScalar::zero()
    }
    fn one() -> Self {
        ExactScalar::one()
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
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
        ExactScalar::scale(self, factor)
    }
    fn from_exact(x: &ExactScalar) -> Self {
        x.clone()
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        for (i, x) in a.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, y) in b.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let p = (x * y).mul_int(RADICAND[i & j]);
                self.coeffs[i ^ j] += &p;
            }
        }
    }
}

/// `re + i·im` with both parts in Q(√2, √3, √7).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ComplexScalar {
    pub re: ExactScalar,
    pub im: ExactScalar,
}

impl ComplexScalar {
    pub fn new(re: ExactScalar, im: ExactScalar) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(ExactScalar::one())
    }

    pub fn i() -> Self {
        Self::imag(ExactScalar::one())
    }

    pub fn real(re: ExactScalar) -> Self {
        Self {
            re,
            im: ExactScalar::zero(),
        }
    }

    pub fn imag(im: ExactScalar) -> Self {
        Self {
            re: ExactScalar::zero(),
            im,
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::real(ExactScalar::from_rational(q))
    }

    pub fn from_integer(n: i64) -> Self {
        Self::real(ExactScalar::from_integer(n))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `|z|² = re² + im²`; zero exactly when `z` is zero because the ground
    /// field is real.
    pub fn norm_sqr(&self) -> ExactScalar {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn invert(&self) -> Result<Self> {
        let n = self.norm_sqr();
        let inv = n.invert()?;
        Ok(Self {
            re: &self.re * &inv,
            im: -(&self.im * &inv),
        })
    }

    /// `i · self`.
    pub fn mul_i(&self) -> Self {
        Self {
            re: -&self.im,
            im: self.re.clone(),
        }
    }

    /// `-i · self`.
    pub fn mul_neg_i(&self) -> Self {
        Self {
            re: self.im.clone(),
            im: -&self.re,
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self {
            re: self.re.scale(factor),
            im: self.im.scale(factor),
        }
    }

    pub fn scale_real(&self, factor: &ExactScalar) -> Self {
        Self {
            re: &self.re * factor,
            im: &self.im * factor,
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// The real part, or an error naming `context` when the imaginary part
    /// is nonzero.
    pub fn into_real(self, context: &str) -> Result<ExactScalar> {
        if self.im.is_zero() {
            Ok(self.re)
        } else {
            Err(Error::consistency(format!(
                "{context}: expected a real value, got imaginary part {}",
                self.im
            )))
        }
    }

    /// Canonical text form: `(q0,...,q7|q8,...,q15)`.
    pub fn render(&self) -> String {
        let mut out = String::with_capacity(40);
        out.push('(');
        self.re.write_coeffs(&mut out);
        out.push('|');
        self.im.write_coeffs(&mut out);
        out.push(')');
        out
    }

    /// A bare rational when the value is rational, otherwise the canonical
    /// form.
    pub fn render_compact(&self) -> String {
        match (self.im.is_zero(), self.re.as_rational()) {
            (true, Some(q)) => q.to_string(),
            _ => self.render(),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for ComplexScalar {
    type Err = Error;

    /// Accepts the canonical 16-coefficient form or a bare rational.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some(body) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) else {
            return Ok(Self::from_rational(s.parse()?));
        };
        let (re, im) = body
            .split_once('|')
            .ok_or_else(|| Error::parse(format!("missing '|' in scalar {s:?}")))?;
        let parse_part = |part: &str| -> Result<ExactScalar> {
            let items: Vec<&str> = part.split(',').collect();
            if items.len() != 8 {
                return Err(Error::parse(format!(
                    "expected 8 coefficients, found {} in {s:?}",
                    items.len()
                )));
            }
            let mut coeffs: [Rational; 8] = Default::default();
            for (c, item) in coeffs.iter_mut().zip(items) {
                *c = item.parse()?;
            }
            Ok(ExactScalar::from_coeffs(coeffs))
        };
        Ok(Self {
            re: parse_part(re)?,
            im: parse_part(im)?,
        })
    }
}

impl fmt::Debug for ComplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ComplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "i({})", self.im),
            (false, false) => write!(f, "{} + i({})", self.re, self.im),
        }
    }
}

impl Add<&ComplexScalar> for &ComplexScalar {
    type Output = ComplexScalar;
    fn add(self, rhs: &ComplexScalar) -> ComplexScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&ComplexScalar> for &ComplexScalar {
    type Output = ComplexScalar;
    fn sub(self, rhs: &ComplexScalar) -> ComplexScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&ComplexScalar> for ComplexScalar {
    fn add_assign(&mut self, rhs: &ComplexScalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&ComplexScalar> for ComplexScalar {
    fn sub_assign(&mut self, rhs: &ComplexScalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Mul<&ComplexScalar> for &ComplexScalar {
    type Output = ComplexScalar;
    fn mul(self, rhs: &ComplexScalar) -> ComplexScalar {
        let mut out = ComplexScalar::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Neg for &ComplexScalar {
    type Output = ComplexScalar;
    fn neg(self) -> ComplexScalar {
        ComplexScalar {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl From<ExactScalar> for ComplexScalar {
    fn from(re: ExactScalar) -> Self {
        Self::real(re)
    }
}

impl Ring for ComplexScalar {
    fn zero() -> Self {
        ComplexScalar::zero()
    }
    fn one() -> Self {
        ComplexScalar::one()
    }
    fn is_zero(&self) -> bool {
        ComplexScalar::is_zero(self)
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
        ComplexScalar::scale(self, factor)
    }
    fn from_exact(x: &ExactScalar) -> Self {
        ComplexScalar::real(x.clone())
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        // (a + ib)(c + id) = (ac - bd) + i(ad + bc), skipping zero parts
        if a.is_zero() || b.is_zero() {
            return;
        }
        if !a.re.is_zero() {
            self.re.add_product(&a.re, &b.re);
            self.im.add_product(&a.re, &b.im);
        }
        if !a.im.is_zero() {
            if !b.im.is_zero() {
                let t = &a.im * &b.im;
                self.re -= &t;
            }
            self.im.add_product(&a.im, &b.re);
        }
    }
}

/// Shorthand constructors used throughout the matrix tables.
pub fn rat(num: i64, den: i64) -> ExactScalar {
    ExactScalar::from_rational(crate::rational::q(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use proptest::prelude::*;

    fn sqrt(n: i64) -> ExactScalar {
        ExactScalar::sqrt_of(n, 1)
    }

    #[test]
    fn rational_addition() {
        assert_eq!(&rat(1, 2) + &rat(1, 3), rat(5, 6));
        assert!((&sqrt(2) + &(-&sqrt(2))).is_zero());
        let a = &ExactScalar::one() + &sqrt(6);
        let b = &rat(2, 1) - &sqrt(6);
        assert_eq!(&a + &b, rat(3, 1));
    }

    #[test]
    fn radical_products() {
        assert_eq!(&sqrt(2) * &sqrt(3), sqrt(6));
        assert_eq!(&sqrt(2) * &sqrt(21), sqrt(42));
        assert_eq!(&sqrt(14) * &sqrt(21), ExactScalar::radical(3, q(7, 1)));
        let p = &ExactScalar::one() + &sqrt(2);
        let m = &ExactScalar::one() - &sqrt(2);
        assert_eq!(&p * &m, rat(-1, 1));
        let c = ExactScalar::radical(3, q(1, 3));
        assert_eq!(&c * &c, rat(2, 3));
        assert_eq!(ExactScalar::sqrt_of(2, 3), c);
    }

    #[test]
    fn sqrt_of_rationals() {
        assert_eq!(ExactScalar::sqrt_of(1, 21), ExactScalar::radical(6, q(1, 21)));
        assert_eq!(ExactScalar::sqrt_of(4, 21), ExactScalar::radical(6, q(2, 21)));
        assert_eq!(ExactScalar::sqrt_of(72, 1), ExactScalar::radical(1, q(6, 1)));
        assert!(ExactScalar::sqrt_rational(&q(5, 1)).is_none());
        assert!(ExactScalar::sqrt_rational(&q(-1, 1)).is_none());
        assert!(ExactScalar::sqrt_rational(&q(0, 1)).unwrap().is_zero());
    }

    #[test]
    fn inversion() {
        assert_eq!(rat(2, 1).invert().unwrap(), rat(1, 2));
        assert_eq!(sqrt(2).invert().unwrap(), ExactScalar::radical(1, q(1, 2)));
        let x = &(&ExactScalar::one() + &sqrt(2)) + &sqrt(3);
        let r = x.invert().unwrap();
        assert!((&r * &x).is_one());
        assert!(matches!(ExactScalar::zero().invert(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn complex_basics() {
        let i = ComplexScalar::i();
        assert_eq!(&i * &i, ComplexScalar::from_integer(-1));
        let z = ComplexScalar::new(ExactScalar::one(), sqrt(3));
        assert_eq!(z.conj(), ComplexScalar::new(ExactScalar::one(), -&sqrt(3)));
        assert_eq!(i.invert().unwrap(), -&i);
        assert!(ComplexScalar::zero().invert().is_err());
        assert_eq!(z.norm_sqr(), rat(4, 1));
    }

    #[test]
    fn canonical_text() {
        let c = ComplexScalar::real(ExactScalar::sqrt_of(2, 3));
        assert_eq!(c.render(), "(0,0,0,1/3,0,0,0,0|0,0,0,0,0,0,0,0)");
        assert_eq!(ComplexScalar::parse(&c.render()).unwrap(), c);
        assert_eq!(ComplexScalar::parse("284/441").unwrap().render_compact(), "284/441");
        assert!(ComplexScalar::parse("(1,2|3)").is_err());
        assert!(ComplexScalar::parse("(1,0,0,0,0,0,0,0,0|0,0,0,0,0,0,0,0)").is_err());
    }

    #[test]
    fn display_is_readable() {
        let x = &rat(-2, 1) + &ExactScalar::radical(3, q(1, 3));
        assert_eq!(x.to_string(), "-2 + 1/3√6");
        assert_eq!((-&sqrt(7)).to_string(), "-√7");
    }

    fn arb_scalar() -> impl Strategy<Value = ExactScalar> {
        proptest::collection::vec((-6i64..6, 1i64..5), 8).prop_map(|v| {
            let mut coeffs: [Rational; 8] = Default::default();
            for (c, (n, d)) in coeffs.iter_mut().zip(v) {
                *c = q(n, d);
            }
            ExactScalar::from_coeffs(coeffs)
        })
    }

    fn arb_complex() -> impl Strategy<Value = ComplexScalar> {
        (arb_scalar(), arb_scalar()).prop_map(|(re, im)| ComplexScalar::new(re, im))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(x in arb_scalar(), y in arb_scalar(), z in arb_scalar()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            if !x.is_zero() {
                prop_assert!((&x.invert().unwrap() * &x).is_one());
            }
        }

        #[test]
        fn agrees_with_floating_point(x in arb_scalar(), y in arb_scalar()) {
            let p = (&x * &y).to_f64();
            prop_assert!((p - x.to_f64() * y.to_f64()).abs() < 1e-9 * (1.0 + p.abs()));
        }

        #[test]
        fn complex_field_axioms(x in arb_complex(), y in arb_complex()) {
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
            prop_assert_eq!(&x * &y, &y * &x);
            if !x.is_zero() {
                prop_assert_eq!(&x.invert().unwrap() * &x, ComplexScalar::one());
            }
        }

        #[test]
        fn render_parse_round_trip(x in arb_complex()) {
            prop_assert_eq!(ComplexScalar::parse(&x.render()).unwrap(), x.clone());
            prop_assert_eq!(ComplexScalar::parse(&x.render_compact()).unwrap(), x);
        }
    }
}
