//! Exact symbolic toolkit for affine cones.
//!
//! Lifts morphisms from affine space into projective space to coprime
//! polynomial tuples with certified empty common zero locus, turns those into
//! surjections onto affine cones, decides rationality of trinomial
//! hypersurfaces, and interpolates polynomial maps through finite point sets.

pub mod cli;
pub mod cone;
pub mod error;
pub mod groebner;
pub mod interpolate;
pub mod lift;
pub mod poly;
pub mod trinomial;

pub use error::{Error, Result};
pub use poly::{Coeff, Monomial, MonomialOrder, Polynomial, RationalFunction, VarSet};
