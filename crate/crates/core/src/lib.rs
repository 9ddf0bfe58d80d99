//! Exact computation in quantized coordinate rings: a PBW rewriting engine,
//! constructors for the standard families, quantum determinants, torus
//! gradings, integer lattices, and torus-invariant prime stratifications of
//! quantum affine spaces.

pub mod coeff;
pub mod error;
pub mod grading;
pub mod lattice;
pub mod pbw;
pub mod qdet;
pub mod strat;
pub mod zoo;

pub use coeff::{Assignment, Coefficient, ParamContext, UnitMonomial};
pub use error::{Error, Result};
pub use pbw::{Element, GeneratorKind, Letter, Presentation, PresentationBuilder, Rule, Word};
