//! Exact cohomology-ring computations for circle bundles over simply connected
//! 6-dimensional bases.
//!
//! Given a Poincaré duality algebra `H` with a distinguished degree-2 class `ω`,
//! the crate decides hard Lefschetz, computes the cohomology of the circle bundle
//! with Euler class `ω` (both from the Gysin sequence and from the model
//! `(H ⊗ Λx, dx = ω)`), evaluates the quartic formality obstruction on
//! `ker(Sym²(Sym²P) → Sym⁴P)` together with the associated triple Massey products,
//! and builds and checks the degree-3 partial minimal model.

pub mod algebra;
pub mod builtins;
pub mod error;
pub mod format;
pub mod formality;
pub mod gysin;
pub mod lefschetz;
pub mod linalg;
pub mod minimal_model;
pub mod scalar;
pub mod sym;
pub mod synthetic;

pub use algebra::{
    point, projective_space, projective_space_named, tensor_product, AlgebraBuilder,
    CohomologyClass, GradedAlgebra, ValidationReport,
};
pub use error::{Error, Result};
pub use format::{parse_algebra, serialize_algebra};
pub use linalg::Matrix;
pub use scalar::Scalar;
