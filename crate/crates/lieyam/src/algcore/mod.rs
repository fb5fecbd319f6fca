//! Structure-constant algebras, representations and the decision procedures
//! built on them.

pub mod algebra;
pub mod certificate;
pub mod form;
pub mod rep;
pub mod sca;
pub mod tensor;

pub use algebra::{adjoint, direct_sum, StructureAlgebra};
pub use certificate::{expect_equal, expect_zero, sweep, sweep_box, Certificate, Counterexample};
pub use form::{BilinearForm, Symmetry};
pub use rep::Representation;
pub use tensor::{Bilinear, Trilinear};
