//! Exact point-scheme and line-scheme computations for the quadratic
//! algebras A(γ) on four generators, with a Gröbner-basis toolkit over ℚ(i).

pub mod algebra;
pub mod arith;
pub mod error;
pub mod fixtures;
pub mod groebner;
pub mod linalg;
pub mod line_scheme;
pub mod numeric;
pub mod plucker;
pub mod point_scheme;
pub mod poly;
pub mod univariate;

pub use arith::GaussianRational;
pub use error::{Error, Result};
pub use poly::{parse_poly, Monomial, MonomialOrder, Polynomial, Ring, VarSet};
