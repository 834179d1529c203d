//! Derivations of group rings `A[G]` for finite groups `G` and finite
//! commutative rings `A`, studied through characters on the groupoid of the
//! adjoint action.

pub mod abelian;
pub mod abhom;
pub mod derivation;
pub mod error;
pub mod group_ring;
pub mod groupoid;
pub mod groups;
pub mod oracle;
mod par;
pub mod report;
pub mod rings;

pub use error::{Error, Result};
pub use group_ring::{GroupRing, GroupRingElement, Limits};
pub use groups::{Element, FiniteGroup, GroupSpec};
pub use rings::{FiniteRing, RingSpec, Scalar};

/// Whether the data-parallel backend is compiled in.
pub fn is_parallel() -> bool {
    par::is_parallel()
}
