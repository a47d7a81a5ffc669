//! Exact computer algebra for the characteristic-p quantization models:
//! truncated Weyl algebras over the projective line, restricted Poisson
//! structures on the Frobenius neighborhood, Cartier and p-curvature
//! operators, automorphism groups with inner factorization, Rees
//! constructions and Birkhoff splitting types.
//!
//! Everything is exact arithmetic over GF(p) for a small odd prime p;
//! equality always means structural equality of canonical forms.
//!
//! Entry points:
//! - [`scalars`]: GF(p), F_p[h] charts, F_p[h]/h^m.
//! - [`algebra`]: the model algebras and their normal-form engine.
//! - [`models`]: chart transitions, fibers, the module V, matrix splittings.
//! - [`forms`]: differential forms, Cartier operation, p-curvature, Milne.
//! - [`poisson`]: the restricted Poisson structure on A0.
//! - [`autos`]: automorphisms, G0 membership, inner factorization.
//! - [`p1`]: Rees constructions and vector bundles on the projective line.
//! - [`lagrangian`]: the trace pairing and the half-form action.
//! - [`suite`]: the seeded property-test runner behind the CLI.

pub mod algebra;
pub mod autos;
pub mod error;
pub mod forms;
pub mod io;
pub mod lagrangian;
pub mod linalg;
pub mod models;
pub mod p1;
pub mod poisson;
pub mod scalars;
pub mod suite;

pub use error::{Error, Result};
pub use scalars::Context;
