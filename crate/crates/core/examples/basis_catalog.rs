//! The 48 traceless hermitian 7×7 matrices: 14 g₂ generators x_i, the 7
//! complement matrices z_a and the 27 symmetric y_α, plus the reversal M.

use g2kit::rep::BasisCatalog;
use g2kit::scalar::ComplexScalar;

fn main() -> g2kit::error::Result<()> {
    let cat = BasisCatalog::build()?;
    println!(
        "b3: {}  x: {}  z: {}  y: {}",
        cat.b3.len(),
        cat.x.len(),
        cat.z.len(),
        cat.y.len()
    );

    let h1 = &cat.x[0];
    let diag: Vec<String> = (0..7).map(|k| h1.get(k, k).to_string()).collect();
    println!("diag h1 = [{}]", diag.join(", "));

    let all = cat.all48();
    let mut off = 0;
    for (i, a) in all.iter().enumerate() {
        for (j, b) in all.iter().enumerate() {
            let want = ComplexScalar::from_integer(if i == j { 2 } else { 0 });
            if a.trace_product(b) != want {
                off += 1;
            }
        }
    }
    println!("pairs violating tr(AB) = 2δ: {off}");

    // [x_1, x_3] lies in the x-span; decompose() returns the coefficients
    // over all 48 and the residue.
    let bracket = cat.x[0].commutator(&cat.x[2]);
    let (coeffs, residue) = cat.decompose(&bracket);
    let outside = coeffs[14..].iter().filter(|c| !c.is_zero()).count();
    println!(
        "[x1,x3]: components outside x = {outside}, residue zero = {}",
        residue.is_zero()
    );

    print!("M =\n{}", cat.m.dump());
    Ok(())
}
