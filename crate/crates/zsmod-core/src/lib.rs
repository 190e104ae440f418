//! Exact computational algebra for modules over semirings lacking zero sums.
//!
//! The crate provides:
//!
//! - [`semiring`]: semiring families (boolean, truncated, natural, max-plus,
//!   finite tables), axiom verification, units and the idempotent calculus;
//! - [`module`]: free modules `R^n`, generated submodules with exact closure,
//!   membership testing and full submodule-lattice enumeration for finite
//!   carriers;
//! - [`decomposition`]: the complement hierarchy (direct / semidirect / weak /
//!   trivial-intersection), unique direct complements, decomposition descent
//!   and refinement, the decomposition socle, summand-absorbing submodules and
//!   projective decompositions;
//! - [`greens`]: Green's preorder, the induced congruence and quotient module,
//!   the upper-bound property and the convexity/SA correspondence;
//! - [`oracle`]: an independent brute-force verifier that re-checks every
//!   theorem on enumerated instances and certifies counterexamples.
//!
//! ```
//! use std::sync::Arc;
//! use zsmod_core::decomposition::{Lattice, Level};
//! use zsmod_core::module::{Budget, FreeModule, Vector};
//! use zsmod_core::semiring::{Elem, Semiring};
//!
//! let budget = Budget::default();
//! let plane = FreeModule::new(Arc::new(Semiring::boolean()), 2);
//! let en = Arc::new(plane.enumeration(&budget)?);
//! let lattice = Lattice::full(&en, &budget)?;
//!
//! let axis1 = en.span_vectors(&[Vector::new(vec![Elem::Fin(1), Elem::Fin(0)])])?;
//! let axis2 = en.span_vectors(&[Vector::new(vec![Elem::Fin(0), Elem::Fin(1)])])?;
//! assert_eq!(lattice.classify(&axis1, &axis2)?.level, Level::Direct);
//! assert_eq!(lattice.direct_complement(&axis1)?, Some(axis2));
//! # Ok::<(), zsmod_core::Error>(())
//! ```

pub mod decomposition;
pub mod error;
pub mod greens;
pub mod json;
pub mod module;
pub mod oracle;
pub mod semiring;

pub use decomposition::{ComplementClass, DecompositionReport, Lattice, Level, Projection, Witness};
pub use error::Error;
pub use greens::{Greens, QuotientModule};
pub use module::{Budget, Enumeration, FreeModule, Submodule, Vector};
pub use oracle::{generate_corpus, run_claims, ClaimResult, ClaimStatus, CorpusConfig, InstanceCorpus};
pub use semiring::{AxiomReport, Elem, Idempotent, Semiring, TropInt};
