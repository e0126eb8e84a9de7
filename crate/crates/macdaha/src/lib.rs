//! Exact computations in the polynomial representation of double affine
//! Hecke algebras: Macdonald polynomials for reduced root systems, their
//! evaluation, duality, norms, Pieri rules, shift operators, Gaussian
//! twists, and the projective SL2(Z) action at roots of unity.

pub mod certificate;
pub mod coeffdomain;
pub mod daha;
pub mod error;
pub mod laurent;
pub mod macdonald;
pub mod modular;
pub mod normal;
pub mod rootdata;

pub use coeffdomain::{Cyclo, DomainSpec, Params, RatFunc, Scalar, SpecPair};
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use num_rational::BigRational;
pub use rootdata::{AffineElement, RootSystem, Weight, WeylElement};
