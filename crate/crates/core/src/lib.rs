//! Exact knot-group computations for branched twist spins of classical knots.
//!
//! The pipeline is: parse a diagram ([`knot`]), build its Wirtinger
//! presentation, differentiate relators with Fox calculus ([`fox`]), and read
//! off elementary ideals, the Alexander polynomial and the determinant
//! ([`alexander`]). [`btspin`] builds the presentation and Alexander matrix of
//! `K^{m,n}` and its first elementary ideals; [`distinguish`] applies the
//! determinant criterion to a pair of branched twist spins.

pub mod alexander;
pub mod batch;
pub mod btspin;
pub mod distinguish;
pub mod error;
pub mod fox;
pub mod knot;
pub mod laurent;
pub mod words;

pub use alexander::{Ideal, PolyMatrix};
pub use btspin::{BtSpinParams, ParityPreference};
pub use error::{Error, ParseError};
pub use knot::{KnotCode, KnotDiagram};
pub use laurent::LaurentPoly;
pub use words::{Presentation, Word};
