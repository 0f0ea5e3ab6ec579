//! Exact computations with invariants of `gl_n` and `sl_n` in positive
//! characteristic and with the centre of their enveloping algebras.

pub mod envelop;
pub mod error;
pub mod field;
pub mod invariants;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod polymatrix;
pub mod report;

pub use error::{Error, Result};
pub use lie::{BasisElt, GroupElement, LieAlgebra, LieElem, RootData, Variant, Weight};
pub use field::{ExtElem, ExtField, Field, FieldElement, PrimeField};
pub use poly::{Monomial, MultiPoly, Poly, Variable};
pub use polymatrix::PolyMatrix;
pub use report::{Params, Report, Status};
