//! Lie, anti-Lie, orthogonal and symplectic triple systems, Jordan and
//! anti-Jordan pairs, and their construction from reductive pairs.

mod derive;
mod pair;
mod system;
mod tri;

pub use derive::{derive_pair_sl, derive_triple_so, derive_triple_sp, pair_compatibility};
pub use pair::{check_pair, inner_derivation_pair, Pair, PairCheck, PairKind};
pub use system::{
    check_inner_derivations, check_triple, derivation_defect, inner_derivation_rep, inner_derivations, inner_operator_basis,
    TripleKind, TripleSystem,
};
pub use tri::{read_triple, write_triple};

use crate::error::{Error, Result};
use crate::lycore::{enveloping, Enveloping};

/// `g(V) = Inder V ⊕ V` with `[x, y] = (x y ·)`; the even part is `Inder V`.
pub fn standard_embedding_lts(t: &TripleSystem) -> Result<Enveloping> {
    if t.kind() != TripleKind::Lts {
        check_triple(t, TripleKind::Lts)?.map_err(|c| Error::Verification(c.to_string()))?;
    }
    let zero = crate::algcore::Bilinear::zero(t.module_dim());
    enveloping(&zero, t.product())
}
