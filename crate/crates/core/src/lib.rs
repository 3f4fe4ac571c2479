//! Exact computations around Newton strata of the adjoint quotient: root
//! systems and their lattices, Weyl groups, the alcove homomorphism `ψ`,
//! twisted fixed points on maximal tori, Newton points and Puiseux-series
//! witnesses.
//!
//! Every quantity is exact: rationals are `Ratio<i64>`, roots of unity live
//! in cyclotomic fields `ℚ(ζ_N)`, and lattice questions go through the
//! Smith normal form.

pub mod alcove;
pub mod matrix;
pub mod newton;
pub mod puiseux;
pub mod rational;
pub mod rootsys;
pub mod springer;
pub mod weyl;

pub use alcove::{barycenter, fundamental_alcove_vertices, psi, validate_alcove_automorphism};
pub use rational::{Rat, RatVec};
pub use rootsys::{build_root_system, coset_representatives, AmbientLattice, Kind, RootSystem, TypeSpec};
pub use springer::{CentralClass, TorusPoint};
pub use weyl::{WeylElement, WeylGroup};
