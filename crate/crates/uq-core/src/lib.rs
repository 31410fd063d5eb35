//! Exact symbolic kernel for quantized enveloping algebras `U_q(g)`.
//!
//! The crate is organized around five subsystems:
//!
//! * [`scalar`] — the coefficient tower: integer Laurent polynomials in `v`,
//!   the rational function field `Q(v)`, cyclotomic fields `Q[v]/Φ_l(v)` at odd
//!   `l`, and polynomial parameter extensions for symbolic twist parameters.
//!   All arithmetic is exact; there is no floating point anywhere in the crate.
//! * [`roots`] — root-system and Weyl-group combinatorics: root data for the
//!   classical and exceptional types (G2 excluded), reduced words, convex
//!   orders, commuting-root bases, parabolic splittings, cones and densities.
//! * [`pbw`] — the symbolic algebra kernel: PBW normal forms for rank ≤ 2 root
//!   data, braid operators and root vectors, divided-power commutation, and
//!   certified identity checking.
//! * [`repn`] — characters of `U_q^0` at odd roots of unity, weight modules,
//!   Verma and simple highest-weight modules, Frobenius twists and Steinberg
//!   factorization.
//! * [`twist`] — Ore localization at divided powers, the `ψ` twisting
//!   automorphisms with symbolic parameter, torsion-free `sl2` modules and
//!   coherent families with polynomial trace data.
//!
//! The [`suites`] module packages the verification suites run by the `uq`
//! command-line tool; each suite re-checks a family of algebraic identities
//! from first principles and reports per-case outcomes.

pub mod error;
pub mod roots;
pub mod scalar;

pub mod pbw;
pub mod repn;
pub mod suites;
pub mod twist;

mod book;

pub use error::{Error, Result};
