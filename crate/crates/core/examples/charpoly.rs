//! Characteristic polynomials of A = a·h₁ + b·h₂ in the 7 and of
//! B = a·ad₁ + b·ad₂ in the 14, by Faddeev–LeVerrier in exact arithmetic.
//!
//! `cargo run --example charpoly -- 2 -1/3`

use g2kit::casimir::slice_char_poly;
use g2kit::model::Model;
use g2kit::rational::Rational;

fn main() -> g2kit::error::Result<()> {
    let mut args = std::env::args().skip(1);
    let a: Rational = args.next().as_deref().unwrap_or("1").parse()?;
    let b: Rational = args.next().as_deref().unwrap_or("0").parse()?;
    let model = Model::build()?;

    println!("det(t - A) at a={a}, b={b}:");
    print!("{}", slice_char_poly(&model, &a, &b, false)?.render_lines());
    println!("det(t - B):");
    print!("{}", slice_char_poly(&model, &a, &b, true)?.render_lines());
    Ok(())
}
