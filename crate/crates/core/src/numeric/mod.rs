//! Exact scalars (rationals and prime-field residues) and the small amount
//! of dense linear algebra the rest of the crate needs: products,
//! determinants, identities.

mod matrix;
mod scalar;

pub use matrix::{bareiss_det, int_det, ExactMatrix};
pub use scalar::{format_rational, rational_to_i64, FieldScalar, ScalarKind};
