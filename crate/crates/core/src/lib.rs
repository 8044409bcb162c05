//! Evaluation codes on zero-dimensional complete intersections over finite
//! fields, with exact parameter computation and mechanical checks of the
//! Cayley–Bacharach identity, the resulting minimum-distance bound and the
//! MDS criteria.
//!
//! The pipeline is: a [`gf::FieldSpec`], homogeneous [`poly::Polynomial`]s,
//! the point set Γ they cut out ([`projgeom`]), the code C(Γ)_a
//! ([`evalcode`]), rank-based h⁰/h¹ ([`cohom`]) and the checkers in
//! [`cbtheory`]. [`families`] builds the Reed–Solomon, Reed–Muller and
//! Hermitian complete intersections.

pub mod cbtheory;
pub mod cli;
pub mod cohom;
pub mod error;
pub mod evalcode;
pub mod families;
pub mod gf;
pub mod linalg;
pub mod poly;
pub mod projgeom;
pub mod variety;

pub use cbtheory::{BoundReport, CBReport, CISetup};
pub use error::{Error, Result};
pub use evalcode::{DistanceResult, EvalCode};
pub use gf::{Elem, FieldSpec};
pub use poly::{Monomial, Polynomial};
pub use projgeom::{CIValidation, PointSet, ProjPoint};
