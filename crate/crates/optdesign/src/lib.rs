//! Block designs and eigenvalue optimality.
//!
//! This library represents block designs and the matrices derived from them
//! (incidence, concurrence, information), computes their spectra and all the
//! standard eigenvalue optimality criteria (A, D, E, Φ_p, type-1 functionals,
//! majorization), enumerates small simple graphs up to isomorphism, and
//! numerically checks the KKT machinery behind a Φ_p-optimality inequality
//! for spectra with two distinct values.
//!
//! The headline computation ties these together: among all connected simple
//! graphs on 10 vertices and 15 edges, the Petersen graph is certified as the
//! unique graph attaining μ₉ = 2 and a spanning-tree count of 2000, and hence
//! as the unique A-, D-, E- and Φ_p-optimal design in that family.
//!
//! Modules:
//! - [`design`]: block designs, incidence/concurrence/information matrices,
//!   duals, group-divisible parameter recognition and analytic spectra.
//! - [`spectra`]: dense symmetric eigensolver, spectrum clustering, and exact
//!   integer spectral certificates (spanning-tree counts, eigenvalue tests).
//! - [`criteria`]: optimality criteria and the two-eigenvalue sufficiency
//!   check over a streamed design class.
//! - [`graphs`]: graph6 I/O, canonical forms, isomorph-free enumeration, and
//!   the full 10-vertex 15-edge verification pipeline.
//! - [`ineq`]: the constrained power-sum minimization problem, KKT residuals,
//!   MFCQ witnesses, feasible-point sampling, and auxiliary inequality lemmas.
//! - [`search`]: multi-restart exchange search for high-criterion designs.

pub mod criteria;
pub mod design;
pub mod graphs;
pub mod ineq;
pub mod search;
pub mod spectra;
