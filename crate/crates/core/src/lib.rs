//! Support varieties of irreducible modules for small quantum groups and
//! Frobenius kernels, computed from root-system and affine Weyl group data.
//!
//! The pipeline runs from a dominant weight `lambda` and a level `ell`
//! through the alcove reduction `lambda = w . lambda^-`, Kazhdan-Lusztig
//! polynomials of the affine Weyl group, exact generic dimensions in
//! `Z[t, t^-1]`, and finally a standard parabolic subset `J` of simple roots
//! naming the orbit closure `G . u_J`.

pub mod affine_weyl;
pub mod error;
pub mod exact_poly;
pub mod gendim;
pub mod kl;
pub mod root_system;
pub mod support;

pub use error::{Error, Result};
