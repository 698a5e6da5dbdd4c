//! Exact linear algebra over `ℚ`.
//!
//! Matrices are sparse and row-major. Module actions use row vectors
//! (`x ↦ x·A`), while differentials are stored with one column per source
//! basis vector so that `kernel_basis` and `image_basis` have their usual
//! meaning.

mod echelon;
mod elim;
mod matrix;
mod rational;
mod vector;

pub use echelon::{image_basis, kernel_basis, normalize_primitive, solve_in_span, RowEchelon, SpanSolver};
pub use elim::{rank, rank_of_vectors};
pub use matrix::RationalMatrix;
pub use rational::{format_rational, parse_rational, rational, Rational};
pub use vector::{dense_add_scaled, dense_is_zero, SparseVec};
