//! Exact scalars and matrices.
//!
//! Ranks and determinants use fraction-free (Bareiss) elimination. Rational
//! matrices are scaled row by row to integers first; the kernels run on
//! `i64` with checked arithmetic and fall back to big integers on overflow.
//! Full rank may also be certified by a rank computation modulo a large
//! prime, which can never exceed the rational rank.

pub(crate) mod bareiss;
pub(crate) mod echelon;
mod matrix;
pub(crate) mod modular;
pub(crate) mod ring;

pub(crate) use matrix::random_point;
pub use matrix::{toeplitz_31, ExactMatrix, PolyMatrix, SCREEN_BOUND, SCREEN_DRAWS};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rank(m: &ExactMatrix) -> usize {
    m.rank()
}

pub fn determinant(m: &ExactMatrix) -> crate::Result<Rational> {
    m.determinant()
}

pub fn symbolic_rank(m: &PolyMatrix) -> usize {
    m.symbolic_rank()
}
