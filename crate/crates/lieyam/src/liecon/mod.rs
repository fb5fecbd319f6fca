//! Classical linear Lie algebras, reductive pairs and the modules used to build them.

pub mod linear;
pub mod modules;
pub mod pair;
pub mod standard;

pub use linear::{embed_operators, gamma, gl_of, sigma, sl_of, so_of, sp_of, LinearLie};
pub use modules::{exterior_square_rep, restrict_to_submodule, sl2_symmetric_power, symmetric_square_rep, tensor_rep};
pub use pair::ReductivePair;
pub use standard::{
    block_stabilizer, isometry_algebra, jordan_multiplications_in_sl, octonion_derivations_in_so7, principal_sl2, sl_so, sl_sp,
    so_stabilizer, ClassicalPair,
};
