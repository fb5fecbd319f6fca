//! Named reductive pairs `h ⊂ g` inside classical matrix algebras.

use crate::algcore::{BilinearForm, Representation, Symmetry};
use crate::compjordan::{hermitian_jordan, octonions, split_composition};
use crate::error::{Error, Result};
use crate::exactla::{unit_vec, Matrix};

use super::linear::{embed_operators, gamma, sigma, sl_of, so_of, sp_of, LinearLie};
use super::modules::{restrict_to_submodule, sl2_symmetric_power};
use super::pair::ReductivePair;

/// A reductive pair whose `g` is a linear Lie algebra, with its invariant
/// form when `g` is orthogonal or symplectic.
#[derive(Clone, Debug)]
pub struct ClassicalPair {
    pub g: LinearLie,
    pub pair: ReductivePair,
    pub form: Option<BilinearForm>,
}

impl ClassicalPair {
    /// `h` given by operators lying in `g`; `m` is the Killing complement.
    pub fn from_operators(g: LinearLie, ops: &[Matrix], form: Option<BilinearForm>) -> Result<Self> {
        let h = embed_operators(&g, ops)?;
        let pair = ReductivePair::new(g.algebra().clone(), h)?;
        Ok(ClassicalPair { g, pair, form })
    }

    /// `h` acting on the natural module of `g`.
    pub fn h_module(&self) -> Representation {
        let action = self.pair.h().basis().iter().map(|v| self.g.matrix(v)).collect();
        Representation::new_unchecked(std::sync::Arc::new(self.pair.h_algebra()), self.g.module_dim(), action)
    }
}

/// `so(V, b)` or `sp(V, b)` according to the symmetry of `b`.
pub fn isometry_algebra(b: &BilinearForm) -> Result<LinearLie> {
    match b.symmetry() {
        Symmetry::Symmetric => so_of(b),
        Symmetry::Skew => sp_of(b),
        Symmetry::Neither => Err(Error::WrongSymmetry("symmetric or skew")),
    }
}

/// `so(𝒪₀, n) ⊃ Der 𝒪` on the trace-zero split octonions.
pub fn octonion_derivations_in_so7() -> Result<ClassicalPair> {
    let o = octonions();
    let o0 = o.trace_zero();
    let der = restrict_to_submodule(&o.algebra().derivation_algebra(), &o0)?;
    let b = o.norm_form().restrict(&o0);
    ClassicalPair::from_operators(so_of(&b)?, der.action(), Some(b))
}

/// Principal `sl₂` acting on binary forms of degree `m`, inside `so` or
/// `sp` of its invariant form.
pub fn principal_sl2(m: usize) -> Result<ClassicalPair> {
    let r = sl2_symmetric_power(m);
    let forms = r.invariant_forms();
    let b = forms.first().map(|(f, _)| f.clone()).ok_or(Error::DegenerateForm)?;
    ClassicalPair::from_operators(isometry_algebra(&b)?, r.action(), Some(b))
}

/// `h` preserving each block of coordinates, inside the isometry algebra of `b`.
pub fn block_stabilizer(b: &BilinearForm, blocks: &[Vec<usize>]) -> Result<ClassicalPair> {
    let n = b.dim();
    let g = isometry_algebra(b)?;
    let mut ops = Vec::new();
    for block in blocks {
        for (a, &i) in block.iter().enumerate() {
            for &j in &block[a..] {
                let (x, y) = (unit_vec(n, i), unit_vec(n, j));
                match b.symmetry() {
                    Symmetry::Symmetric if i != j => ops.push(sigma(b, &x, &y)?),
                    Symmetry::Skew => ops.push(gamma(b, &x, &y)?),
                    _ => {}
                }
            }
        }
    }
    ClassicalPair::from_operators(g, &ops, Some(b.clone()))
}

/// `so(n+1) ⊃ so(n)`, the stabilizer of the last basis vector.
pub fn so_stabilizer(n: usize) -> Result<ClassicalPair> {
    block_stabilizer(&BilinearForm::standard_symmetric(n + 1), &[(0..n).collect()])
}

/// `sl(n) ⊃ so(n)` for the standard symmetric form.
pub fn sl_so(n: usize) -> Result<ClassicalPair> {
    let so = so_of(&BilinearForm::standard_symmetric(n))?;
    ClassicalPair::from_operators(sl_of(n)?, so.basis(), None)
}

/// `sl(2n) ⊃ sp(2n)` for the standard skew form.
pub fn sl_sp(dim: usize) -> Result<ClassicalPair> {
    let sp = sp_of(&BilinearForm::standard_skew(dim))?;
    ClassicalPair::from_operators(sl_of(dim)?, sp.basis(), None)
}

/// `sl(ℋ_n(k)) ⊃ L₀(ℋ_n(k))`: the span of the traceless multiplication
/// operators and their commutators.
pub fn jordan_multiplications_in_sl(n: usize) -> Result<ClassicalPair> {
    let j = hermitian_jordan(&split_composition(1)?, n)?;
    let d = j.dim();
    let mut ops: Vec<Matrix> = j.traceless().basis().iter().map(|x| j.algebra().left_of(x)).collect();
    let l: Vec<Matrix> = (0..d).map(|i| j.algebra().left_matrix(i)).collect();
    for (a, x) in l.iter().enumerate() {
        for y in &l[a + 1..] {
            ops.push(x.commutator(y));
        }
    }
    ClassicalPair::from_operators(sl_of(d)?, &ops, None)
}
