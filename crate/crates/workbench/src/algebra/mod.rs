//! Finite-rank noncommutative algebra engine over exact coefficient rings:
//! normal-form multiplication, commutators, p-th powers, the Jacobson
//! decomposition, centers, units, and the h-separability predicate.

pub mod center;
pub mod elem;
pub mod jacobson;
pub mod model;
pub mod separability;

pub use center::{center_basis, commutes_with_window, theta_momentum};
pub use elem::{finite_basis, AlgElem};
pub use jacobson::{adjoint_power_check, jacobson_identity_holds, jacobson_terms, jacobson_terms_with};
pub use model::{basis_monomials, AlgebraSpec, CoeffMode, CommVal, ModelKind, Monomial};
pub use separability::{HAlgebraPresentation, Separability};
