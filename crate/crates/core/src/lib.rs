//! Exact computations for the codimension-3 Artinian Gorenstein family
//! `I = (x^a, y^b - x^α z^γ, z^c, x^(a-α) y^(b-β), y^(b-β) z^(c-γ))`.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: rationals, dense matrices, fraction-free rank/determinant,
//!   polynomial matrices and their rank over the rational function field.
//! * [`poly`]: sparse multivariate polynomials and the contraction action.
//! * [`semigroup`]: Apéry sets, orders and the M-pure symmetry test.
//! * [`family`]: the parametric ideal family, its dual generator,
//!   resolution shifts and closed-form Hilbert values.
//! * [`algebra`] and [`wlp`]: algebras given by a dual generator, Hessians,
//!   multiplication maps and weak Lefschetz verdicts.
//! * [`harness`]: sweeps, reports and the verification suite used by the CLI.

pub mod algebra;
pub mod arith;
pub mod error;
pub mod family;
pub mod harness;
pub mod poly;
pub mod semigroup;
pub mod wlp;

pub use error::{Error, Result};
