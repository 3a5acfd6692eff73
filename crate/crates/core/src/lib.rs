//! Exact computation of Pontrjagin rings H_*(Ω(G/T)) of based loop spaces on
//! complete flag manifolds.
//!
//! The rational pipeline goes cohomology presentation → minimal model →
//! quadratic differential → homotopy Lie algebra → universal enveloping
//! algebra. Integral presentations come from the [`catalog`] and are checked
//! degreewise with Smith normal forms. Graded dimensions of every
//! presentation are cross-checked against closed-form Poincaré series.

pub mod catalog;
pub mod coeff;
pub mod envelop;
pub mod error;
pub mod family;
pub mod gca;
pub mod lie;
pub mod linalg;
pub mod naive;
pub mod nc;
pub mod quotient;
pub mod run;
pub mod series;
pub mod sullivan;
pub mod symmetric;

pub use coeff::{Coefficient, Integer, Rational};
pub use error::{Error, Result};
pub use family::LieFamily;
