//! Split composition algebras and Jordan algebras.

pub mod composition;
pub mod jordan;

pub use composition::{octonions, split_composition, zorn_product, CompositionAlgebra};
pub use jordan::{hermitian_jordan, spin_factor, JordanAlgebra};
