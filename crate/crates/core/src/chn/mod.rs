//! Symmetric functions, matrix powers, and the Cayley–Hamilton–Newton,
//! Newton and Cayley–Hamilton identities for the generic hq-matrix.

mod checks;
mod determinant;
mod powers;

pub use checks::{
    check_full_qm_powers, chn_check, chn_check_in, chn_residual, count_outside, newton_check, newton_residual,
    proof_step_check, proof_step_check_in, proof_step_sides, trace_linkage_check, traced_variant, ChnVariant,
    NewtonVariant,
};
pub use determinant::{
    cayley_hamilton_check, cayley_hamilton_residual, d_script, det_eigen_residual, det_q, det_q_with,
    determinant_check, epsilon_factor, top_wedge_residual, EpsilonPair,
};
pub use powers::{powers, sym_functions, ChnEngine, PowerFamily, PowerKind, SymFunctions, SymKind};
