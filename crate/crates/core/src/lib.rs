//! Exact Kac–Moody Lie bialgebras: finite and untwisted affine algebras,
//! their standard cobrackets, braided cobrackets on graded pieces, and
//! double-bosonisation.

pub mod affine;
pub mod algebra;
pub mod bialgebra;
pub mod braiding;
pub mod cartan;
pub mod dbos;
pub mod error;
pub mod expr;
pub mod finite;
pub mod golden;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod spec;
pub mod table;

pub use error::{Error, Result};
