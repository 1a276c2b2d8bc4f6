//! Exact computational toolkit for lattice-polytope geometry and its
//! algebraic shadow: polarization of homogeneous functions on commutative
//! semigroups, mixed volumes with the classical inequalities, and
//! Koushnirenko/BKK root counts for Laurent polynomial systems, with an
//! independent resultant-based oracle for two-variable verification.
//!
//! All core arithmetic is exact: rational coordinates, integer determinants,
//! and (where roots or pi are unavoidable) high-precision decimals with
//! certified directed rounding.

mod error;
mod hull;
mod linalg;
mod unipoly;

pub mod bkk;
pub mod cli;
pub mod decimal;
pub mod io;
pub mod lattice;
pub mod laurent;
pub mod mixed;
pub mod semigroup;
pub mod testkit;

pub use error::{Error, Result};
pub use lattice::{affinely_dependent, convex_hull, DependenceWitness, PointSet, Polytope};
pub use mixed::{
    check_af, check_af_power, check_bm, isoperimetric_check, minkowski_zero_criterion,
    mixed_volume, regular_polygon, surface_area_estimate, virtual_mixed_volume, virtual_volume,
    InequalityReport, ReportValue, VirtualPolytope, VolumeForm,
};
pub use semigroup::{group_polarize, group_value, is_homogeneous, polarize, GroupElement, HomogeneousForm, MonomialForm};
pub use bkk::{
    bkk_count, generic_empty_intersection, kushnirenko_count, no_body_index, oracle_count_2d,
    oracle_majority_2d, CountMethod, RootCount,
};
pub use laurent::{newton_polytope, LaurentPolynomial};
