//! Exact-arithmetic solver for the Neumann problem and the generalized
//! Neumann problem on origin-centered ellipsoids in R^n with polynomial
//! boundary data.
//!
//! The boundary data has the normalized form f/‖∇q‖ for a polynomial f and
//! q(x) = Σ β_j x_j². When the compatibility integral vanishes, the solution
//! is a polynomial of degree at most deg f, computed exactly over
//! arbitrary-precision rationals and certified by an independent verifier
//! (harmonicity, divisibility of S(h) − f by q − 1, and h(0) = 0).

pub mod antilaplacian;
pub mod document;
pub mod ellipsoid;
pub mod error;
pub mod mri;
pub mod multi_index;
pub mod parse;
pub mod poly;
pub mod quadrature;
pub mod rational;
pub mod solver;

pub use antilaplacian::anti_laplacian;
pub use document::SolutionDocument;
pub use ellipsoid::{BoundaryReduction, Ellipsoid};
pub use error::{Error, ParseError, Result};
pub use mri::{boundary_data, divergence, electric_field, PolyVectorField};
pub use multi_index::MultiIndex;
pub use parse::parse_polynomial;
pub use poly::Polynomial;
pub use quadrature::{
    generalized_compatible, neumann_compatible, surface_integral, surface_moment,
    volume_integral, volume_moment, ScaledIntegral,
};
pub use rational::Rational;
pub use solver::{
    solve_generalized, solve_neumann, verify_solution, NeumannSolution, VerificationReport,
};
