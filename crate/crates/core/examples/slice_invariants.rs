//! Invariants of the adjoint vector on the Cartan slice A = a·h₁ + b·h₂ as
//! exact polynomials in a and b.

use g2kit::casimir::{Slice, SliceQuantity};
use g2kit::model::Model;
use g2kit::rational::q;

fn main() -> g2kit::error::Result<()> {
    let model = Model::build()?;
    let slice = Slice::new(&model)?;
    for qty in [
        SliceQuantity::C2,
        SliceQuantity::TrA(4),
        SliceQuantity::TrA(6),
        SliceQuantity::C6,
        SliceQuantity::C6Tilde,
        SliceQuantity::TrB(2),
        SliceQuantity::TrB(6),
        SliceQuantity::BB,
        SliceQuantity::B(1),
    ] {
        println!("{qty:<6} = {}", slice.quantity(qty)?);
    }

    let (a, b) = (q(1, 1), q(0, 1));
    println!("at (1,0):");
    for qty in [
        SliceQuantity::TrA(6),
        SliceQuantity::C6,
        SliceQuantity::TrB(2),
        SliceQuantity::TrB(6),
    ] {
        println!("  {qty} = {}", slice.quantity(qty)?.eval(&a, &b));
    }
    Ok(())
}
