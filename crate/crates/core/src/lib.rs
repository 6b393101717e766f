//! Exact algebra for homology cylinders over surfaces and the link exteriors
//! built from them: Fox calculus, Reidemeister torsion, Magnus
//! representations, Seifert-matrix invariants and pretzel-knot censuses.

pub mod abelian;
pub mod cylinder;
pub mod error;
pub mod exterior;
pub mod field;
pub mod format;
pub mod laurent;
pub mod matrix;
pub mod par;
pub mod pretzel;
pub mod seifert;
pub mod word;

pub use error::{Error, Result};
