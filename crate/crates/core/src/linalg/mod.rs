mod matrix;
mod smith;

pub use matrix::{dagger, is_unit_matrix, mat_mul, RingMatrix};
pub use smith::{kernel_basis, smith_normal_form, solve, span_contains, SmithDecomposition};

pub(crate) use smith::require_euclidean;
