//! Simultaneous Padé approximation over prime fields.
//!
//! Given series `S_1, ..., S_n`, moduli `g_1, ..., g_n` and degree bounds
//! `N_0, ..., N_n`, the solutions are the polynomials `λ` with `deg λ < N_0`
//! such that `rem(λ S_i, g_i)` has degree below `N_i` for every `i`. They
//! form a module described compactly by a [`SolutionSpec`]; three solvers
//! compute it ([`direct_sim_pade`], [`duality_sim_pade`],
//! [`recursive_sim_pade`]) and [`oracle`] recomputes the solution space by
//! plain linear algebra for cross-checking.

pub mod adjrow;
pub mod appbasis;
pub mod error;
pub mod ffpoly;
pub mod oracle;
pub mod polymat;
pub mod simpade;

pub use error::{Error, Result};
pub use ffpoly::{FieldElement, FieldMatrix, Poly, PrimeField};
pub use polymat::{PolyMatrix, Shift};
pub use simpade::{
    complete, direct_sim_pade, duality_sim_pade, recursive_sim_pade, verify_solution,
    ProblemInstance, SolutionSpec,
};
