//! Root systems and highest-weight modules: Weyl dimensions, Freudenthal
//! characters and decompositions of tensor, exterior and symmetric squares.

mod character;
mod roots;

pub use character::{
    decompose, decompose_capped, dominant_multiplicities, dominant_weights_below, freudenthal_char, freudenthal_char_capped,
    lambda2_decompose, sym2_decompose, tensor_decompose, Decomposition, WeightChar, DEFAULT_CAP,
};
pub use roots::{root_system, weyl_dim, RootSystem, RootType, Weight};
