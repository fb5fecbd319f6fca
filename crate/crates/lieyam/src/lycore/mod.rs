//! Lie-Yamaguti algebras: the axiom checker, construction from reductive
//! pairs, standard enveloping algebras and the verified catalog.

mod catalog;
mod enveloping;
mod ly;

pub use catalog::{
    adjoint_closed_form, albert_closed_form, catalog, catalog_build, catalog_entry, catalog_verify, catalog_verify_all,
    octonion_closed_form, tensor_closed_form, wedge3_pair, CatalogEntry, CrossCheck, EntryReport, Expected, Mismatch,
};
pub use enveloping::{classify_type, enveloping, standard_enveloping, Enveloping, EnvelopingReport, LyType};
pub use ly::{
    check_ly, compare_products, inner_derivation_rep_ly, inner_derivations_ly, ly_from_reductive_pair,
    ly_from_reductive_pair_in_basis, LYAlgebra, LyCertificate, Provenance, AXIOMS,
};
