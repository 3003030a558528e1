//! Exact lattice-point computations for simple lattice polytopes.
//!
//! A polytope is given by integer vertices (and optionally its facet
//! inequalities). From the tangent cone at each vertex the crate builds the
//! cone's rational generating function and derives
//!
//! * Brion's identity: the lattice-point polynomial of the polytope is the sum
//!   of the vertex-cone generating functions ([`formulas::evaluate_brion`]),
//! * the signed decomposition of the polytope's characteristic series into
//!   reflected vertex cones ([`series::decompose_chi`]),
//! * the number of lattice points as a sum of Todd-polynomial constant terms
//!   ([`formulas::count_lattice_points`]),
//! * the volume as a sum of leading vertex terms ([`formulas::volume`]),
//! * the Ehrhart polynomial ([`formulas::ehrhart`]).
//!
//! Everything is exact (`BigInt` / `BigRational`) except the cyclotomic
//! evaluation [`formulas::evaluate_nu_cyclotomic`], which needs roots of unity.
//! [`oracle`] provides brute-force ground truth for all of the above.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod error;
pub mod formulas;
pub mod linalg;
pub mod oracle;
pub mod polytope;
pub mod power_series;
pub mod series;

pub use error::{Error, Result};
pub use formulas::{
    choose_generic_zeta, count_lattice_points, ehrhart, evaluate_brion, evaluate_nu_cyclotomic,
    generic_directions, todd_series, vertex_constant_term, volume, BrionEvaluation, EhrhartMode,
    EhrhartResult, GenericDirection,
};
pub use linalg::{IntMatrix, IntVector, Rat, RatMatrix, RatVector};
pub use oracle::{enumerate_points, pick_check, EnumerationReport, PickCheck};
pub use polytope::{Facet, SimplePolytope, VertexCone};
pub use series::{
    char_series, check_orientation, decompose_chi, expand_nu, nu_of_cone,
    orientation_from_functional, Orientation, RationalGF, Sign, TruncatedCharSeries, Window,
};

pub use num_bigint::BigInt;
