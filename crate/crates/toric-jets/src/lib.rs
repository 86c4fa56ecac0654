//! Exact-arithmetic toolkit for deciding and certifying k-jet ampleness of
//! ample Cartier T-divisors on projective toric varieties with arbitrary
//! singularities.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! there is no floating point anywhere in this crate. The main entry points:
//!
//! - [`polytope::Polytope`] — lattice polytopes with facets and face lattice,
//! - [`divisor::TCartierDivisor`] — torus-invariant Cartier divisors with
//!   intersection numbers, edge lengths, concavity and Seshadri constants,
//! - [`semigroup`] — weight functions and the singularity constants
//!   `gamma_q` / `gamma_x` of dual cones,
//! - [`jets`] — the per-cone jet-ampleness certificate and a brute-force
//!   evaluation-map oracle that is exact ground truth at desk scale,
//! - [`families`] — generators for standard polytope families used in tests
//!   and on the command line,
//! - [`io`] — the JSON input/report documents spoken by the `toricjet` binary.
//!
//! The `examples/` directory has one runnable program per capability
//! (`cargo run --example gamma_constants`, `certify_sharp_family`,
//! `evaluation_oracle`, `weighted_projective`, `seshadri_and_concavity`,
//! `adjoint_fujita`); the `toricjet` binary exposes the same operations as
//! subcommands over JSON documents.

pub mod arith;
pub mod cone;
pub mod divisor;
pub mod families;
pub mod fan;
pub mod io;
pub mod jets;
pub mod lattice;
pub mod lp;
pub mod matrix;
pub mod polytope;
pub mod semigroup;

pub use arith::{Integer, Rational};

/// Errors reported by library operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero vector is not primitive-able")]
    ZeroVector,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0}")]
    InvalidInput(String),
    #[error("point outside cone")]
    OutsideCone,
    #[error("cone is not pointed")]
    NotPointed,
    #[error("cone or polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("{0} is not a vertex of the polytope")]
    NotAVertex(String),
    #[error("not a face of the polytope")]
    NotAFace,
    #[error("vector not transverse to the cone span")]
    NotTransverse,
    #[error("fan is not complete: {0}")]
    NotComplete(String),
    #[error("divisor is not ample: {0}")]
    NotAmple(String),
    #[error("incompatible Cartier data: {0}")]
    IncompatibleData(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
mod thread_safety {
    // per-cone computations may run on worker threads; the shared values
    // must stay Send + Sync (memo tables are task-confined and are not)
    fn assert_sync<T: Send + Sync>() {}

    #[test]
    fn shared_types_are_send_and_sync() {
        assert_sync::<crate::cone::Cone>();
        assert_sync::<crate::polytope::Polytope>();
        assert_sync::<crate::fan::Fan>();
        assert_sync::<crate::semigroup::DualConeData>();
        assert_sync::<crate::divisor::TCartierDivisor>();
        assert_sync::<crate::divisor::TQDivisor>();
        assert_sync::<crate::jets::JetCertificate>();
    }
}
