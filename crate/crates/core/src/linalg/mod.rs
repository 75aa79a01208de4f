mod matrix;
mod poly;

pub use matrix::{Matrix, RepMatrix};
pub use poly::{char_poly, char_poly_real, BivariatePoly, UniPoly};
