//! Exact-arithmetic verification library for sextic surfaces carrying a finite
//! monomial symmetry group.
//!
//! The crate computes, from first principles, the quantities that a published
//! reference derives for this family: invariant subspaces under the group
//! action, Hilbert polynomials of the polarized quotients, Knudsen-Mumford
//! line-bundle degrees, toric intersection numbers for the associated moment
//! polygon, four-manifold index invariants, and a numeric smoothness probe for
//! the surfaces themselves. Every computed value is paired with the reference's
//! expected value in a machine-readable report (see [`registry`]).

pub mod exactnum;
pub mod grouprep;
pub mod hilbert;
pub mod invariants4d;
pub mod kmline;
pub mod polyalg;
pub mod registry;
pub mod report;
pub mod smoothcheck;
pub mod toric;
