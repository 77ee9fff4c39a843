//! Exact computations on convex tropical tetrahedra: the span of four points
//! of TP³ given as the columns of a 4×4 Kleene star.
//!
//! Everything in the core is exact rational arithmetic. Floating point only
//! appears in angle reports and mesh export.

pub mod census;
pub mod classify;
pub mod error;
pub mod extremal;
pub mod export;
pub mod families;
pub mod io;
pub mod line;
pub mod matrix;
pub mod polytrope;
pub mod maxplus;
pub mod oracle;
pub mod rational;

pub use error::{ParseError, Result, TetraError};
pub use line::{LineType, MinorSextet, TropLine};
pub use matrix::{Matrix4, ProjectivePoint};
pub use maxplus::{kleene_closure, normalize_chart, tdist, trop_det, KleeneMatrix};
pub use rational::Rational;
