//! Exact computations in the small quantum supergroup `U_q(sl(2|1))` at an odd
//! root of unity: PBW arithmetic, Hopf structure, the quantum double and its
//! universal R-matrix, the typical module `V_mu` and the centralizer algebras
//! of its tensor powers.

pub mod centralizer;
pub mod double;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod pbw;
pub mod rep;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use pbw::{AlgebraKind, AlgebraSpec, Element, Gen, Mono};
pub use scalar::{FieldContext, Scalar};
