//! Arithmetic in ℚ(√2,√3,√7): radical products, inversion and the complex
//! extension used for hermitian matrices.

use g2kit::rational::q;
use g2kit::scalar::{ComplexScalar, ExactScalar};

fn main() -> g2kit::error::Result<()> {
    let r2 = ExactScalar::sqrt_of(2, 1);
    let r3 = ExactScalar::sqrt_of(3, 1);
    let r7 = ExactScalar::sqrt_of(7, 1);

    println!("√2·√3 = {}", &r2 * &r3);
    println!("√6·√7 = {}", &(&r2 * &r3) * &r7);
    println!("√(2/3) = {}", ExactScalar::sqrt_of(2, 3));
    println!("√(27/8) = {:?}", ExactScalar::sqrt_rational(&q(27, 8)));

    let x = &(&ExactScalar::one() + &r2) + &r3;
    let inv = x.invert()?;
    println!("1/(1+√2+√3) = {inv}");
    println!("check: {}", &x * &inv);

    let z = ComplexScalar::new(r2.clone(), ExactScalar::from_rational(q(-1, 3)));
    println!("z = {z}");
    println!("z·z̄ = {}", &z * &z.conj());
    println!("1/z = {}", z.invert()?);
    Ok(())
}
