//! Exact verification engine for half-quantum matrix algebras.
//!
//! A compatible pair of R-matrices `(R̂, F)` with `R̂` of Hecke type defines an
//! algebra generated by the entries of a matrix `M` subject to the quadratic
//! relations `S^{(2)} M̄_1 M̄_2 A^{(2)} = 0`. This crate builds such pairs over
//! exact rationals, certifies their axioms, and checks the
//! Cayley–Hamilton–Newton identities, the Newton relations and the
//! Cayley–Hamilton theorem by graded ideal membership.
//!
//! Modules, bottom-up:
//!
//! * [`scalars`] – exact rationals, q-numbers
//! * [`tensor`] – dense operators on `V^{⊗N}`
//! * [`rmatrix`] – R-matrix pairs, skew-inverse, F-trace, certification
//! * [`projectors`] – q-(anti)symmetrizer towers
//! * [`ncalg`] – free algebra, twisted copies, relation ideals, identity suites
//! * [`chn`] – symmetric functions, powers, CHN / Newton / Cayley–Hamilton checks
//! * [`run`] – batch driver behind the `hqcert` binary

pub mod chn;
pub mod error;
pub mod linalg;
pub mod ncalg;
pub mod projectors;
pub mod report;
pub mod rmatrix;
pub mod run;
pub mod scalars;
pub mod tensor;

pub use error::{Error, Result};
pub use ncalg::{HqMatrix, Ideal, NCMatrix, NCPoly};
pub use report::VerificationReport;
pub use rmatrix::{FChoice, RFPair};
pub use scalars::{DeformationParam, ExactScalar};
pub use tensor::TensorOp;
