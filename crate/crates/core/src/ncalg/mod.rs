//! The free noncommutative algebra on matrix generators and the half-quantum
//! relations ideal.

mod hq;
mod ideal;
pub mod identities;
mod matrix;
mod poly;

pub use hq::{
    full_qm_relations, generic_hq_matrix, independent, mbar, mbar_product, probe_constant, relations,
    GeneratorRegistry, GeneratorSet, HqMatrix,
};
pub use ideal::{ideal_degree_basis, is_in_ideal, Grading, Ideal, IdealDegreeBasis, Membership, PolySpan, ScalarProbe};
pub use matrix::NCMatrix;
pub use poly::{GenId, NCPoly, Word};
