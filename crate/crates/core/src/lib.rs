//! Exact local invariants of isolated hypersurface singularities.
//!
//! Milnor numbers by three independent routes (local standard bases, jet
//! linear algebra, resultants), Newton polygons and Kouchnirenko
//! non-degeneracy for plane germs, versal-unfolding monomial bases, and
//! one-parameter deformation families with their Milnor-number jumps.
//!
//! Coefficients are exact: rationals or rational functions in declared
//! parameters, which behave as generic (transcendental) values.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

/// Version of this crate.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub mod error;
pub mod corpus;
pub mod deform;
pub mod field;
pub mod local;
pub mod newton;
pub mod poly;
pub mod search;
pub mod univariate;

pub use error::{Axis, Error, Result};
pub use field::{Domain, Field, ParamPoly, ParamRatio, Rational};
pub use local::{
    colength, jet_colength, local_reduce, milnor, milnor_with, resultant_mu, standard_basis,
    versal_basis, Colength, IdealGens, Method, MilnorOptions, StandardBasis,
};
pub use poly::{parse_poly, ExpVec, Poly, Ring};
