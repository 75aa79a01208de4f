use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::rational::Rational;

/// Dimension of the irreducible representation with highest weight `(λ, μ)`.
pub fn dim(lambda: u64, mu: u64) -> BigUint {
    let (l, m) = (BigUint::from(lambda), BigUint::from(mu));
    let one = BigUint::from(1u32);
    let k = |a: u32, b: u32, c: u32| &l * a + &m * b + BigUint::from(c);
    let product = (&l + &one) * (&m + &one) * k(1, 1, 2) * k(2, 1, 3) * k(3, 1, 4) * k(3, 2, 5);
    product / BigUint::from(120u32)
}

/// Quadratic Casimir eigenvalue of `X_i X_i` with generators normalized by
/// `tr(x_i x_j) = 2δ_ij` on the 7: twice `λ² + μ²/3 + λμ + 3λ + 5μ/3`, so
/// that the defining representation gives 4.
pub fn c2(lambda: u64, mu: u64) -> Rational {
    let (l, m) = (BigInt::from(lambda), BigInt::from(mu));
    let num = &l * &l * 3 + &m * &m + &l * &m * 3 + &l * 9 + &m * 5;
    Rational::from_big(BigRational::new(num * 2, BigInt::from(3)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use proptest::prelude::*;

    #[test]
    fn table() {
        let d = |l, m| dim(l, m).to_string();
        assert_eq!(d(0, 0), "1");
        assert_eq!(d(0, 1), "7");
        assert_eq!(d(1, 0), "14");
        assert_eq!(d(0, 2), "27");
        assert_eq!(d(2, 0), "77");
        assert_eq!(d(0, 3), "77");
        assert_eq!(d(1, 1), "64");
        assert_eq!(c2(0, 0), q(0, 1));
        assert_eq!(c2(0, 1), q(4, 1));
        assert_eq!(c2(1, 0), q(8, 1));
        assert_eq!(c2(0, 2), q(28, 3));
    }

    /// Weyl's formula over explicit positive roots: simple roots short `s`
    /// (length² 2) and long `l` (length² 6); `λ` multiplies the long
    /// fundamental weight, `μ` the short one.
    fn weyl_dim(l: u64, m: u64) -> u128 {
        const POSITIVE: [(u128, u128); 6] = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)];
        let pairing = |p: u128, q: u128| -> u128 { POSITIVE.iter().map(|&(a, b)| a * q + 3 * b * p).product() };
        pairing(l as u128 + 1, m as u128 + 1) / pairing(1, 1)
    }

    proptest! {
        #[test]
        fn matches_weyl_formula(l in 0u64..60, m in 0u64..60) {
            prop_assert_eq!(dim(l, m).to_string(), weyl_dim(l, m).to_string());
        }

        #[test]
        fn c2_is_nonnegative_and_monotone(l in 0u64..200, m in 0u64..200) {
            prop_assert!(c2(l, m) >= Rational::zero());
            prop_assert!(c2(l + 1, m) > c2(l, m));
            prop_assert!(c2(l, m + 1) > c2(l, m));
        }
    }
}
