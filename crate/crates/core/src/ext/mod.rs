//! Ring extensions built from a base ring: trivial extensions by a module and
//! amalgamations along an ideal.

mod amalg;
mod module;
mod triv;

pub use amalg::{
    amalg_transfer_check, make_amalgamation, AmalgRing, AmalgTransferReport, Direction, ZAmalg,
    ZAmalgElement, ZAmalgReport,
};
pub use module::{make_module_free, make_module_quotient, module_ann, module_is_torsion_free, FiniteModule};
pub use triv::{
    lift_mcs_triv, make_trivial_extension, triv_equivalence_check, LiftMode, TrivEquivalenceReport,
    TrivExtRing,
};
