//! Minimal graded free resolutions over standard graded quotient rings of
//! polynomial rings over `F_p`, their linear parts, and the linearity defect.

pub mod error;
pub mod field;
pub mod graded;
pub mod groebner;
mod hilbert;
pub mod lindefect;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod poly;
pub mod random;
pub mod resolution;
pub mod ring;
pub mod structure;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use groebner::{FreeVector, ModuleGB};
pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use poly::{PolyRing, Polynomial};
pub use ring::GradedRing;
pub use module::{GradedModule, Ideal};
pub use resolution::{resolve, BettiTable, Bounded, MinimalResolution, Status};
pub use lindefect::{linearity_defect, LindResult, SegaReport};
