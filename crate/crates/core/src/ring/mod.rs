mod field;
mod poly;

pub use field::{field_arith, is_square, least_non_residue, FieldElement, FieldOp, RingDescriptor};
pub use poly::{poly_arith, Exponent, LaurentPolynomial, PolyOp};
