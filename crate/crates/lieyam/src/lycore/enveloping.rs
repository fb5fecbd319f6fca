use std::sync::Arc;

use rayon::prelude::*;

use crate::algcore::{adjoint, Bilinear, StructureAlgebra, Trilinear};
use crate::error::{Error, Result};
use crate::exactla::{zero_vec, Rational, Vector};
use crate::liecon::LinearLie;
use crate::triples::inner_operator_basis;

use super::ly::LYAlgebra;

/// `g = D ⊕ m` with `D` the span of the operators `[x, y, ·]`; basis of `D`
/// first, then the basis of `m`.
#[derive(Clone, Debug)]
pub struct Enveloping {
    pub algebra: Arc<StructureAlgebra>,
    pub inner: LinearLie,
    /// Dimension of the even part `D`.
    pub even_dim: usize,
}

/// Brackets `[D, D']` commutator, `[D, z] = D(z)`, `[z, t] = [z, t, ·] + z·t`.
pub fn enveloping(binary: &Bilinear, ternary: &Trilinear) -> Result<Enveloping> {
    let n = ternary.dim();
    if binary.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: binary.dim() });
    }
    let inner = LinearLie::new(n, inner_operator_basis(ternary))?;
    let k = inner.dim();
    let total = k + n;
    let basis = inner.basis();
    let d_coords: Vec<Vector> = (0..n * n)
        .into_par_iter()
        .map(|ij| inner.coordinates(&ternary.operator(ij / n, ij % n)).expect("operator lies in its own span"))
        .collect();
    let table = Bilinear::from_fn(total, |a, b| {
        let mut v = zero_vec(total);
        match (a < k, b < k) {
            (true, true) => {
                let c = inner.algebra().basis_product(a, b);
                v[..k].clone_from_slice(&c);
            }
            (true, false) => {
                v[k..].clone_from_slice(&basis[a].column(b - k));
            }
            (false, true) => {
                for (x, y) in v[k..].iter_mut().zip(basis[b].column(a - k)) {
                    *x = -y;
                }
            }
            (false, false) => {
                let (i, j) = (a - k, b - k);
                v[..k].clone_from_slice(&d_coords[i * n + j]);
                v[k..].clone_from_slice(&binary.basis(i, j));
            }
        }
        v
    });
    let labels = (0..k).map(|a| format!("D{a}")).chain((0..n).map(|i| format!("m{i}"))).collect();
    let algebra = StructureAlgebra::with_labels(table, labels);
    algebra.is_lie().map_err(|c| Error::NotLie(c.to_string()))?;
    Ok(Enveloping { algebra: Arc::new(algebra), inner, even_dim: k })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum LyType {
    Adjoint,
    NonSimple,
    Generic,
}

impl LyType {
    pub fn name(self) -> &'static str {
        match self {
            LyType::Adjoint => "adjoint",
            LyType::NonSimple => "non_simple",
            LyType::Generic => "generic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopingReport {
    pub dim_g: usize,
    pub dim_h: usize,
    pub dim_m: usize,
    pub g_is_lie: bool,
    pub g_simple: bool,
    pub h_simple: bool,
    pub m_abs_irred: bool,
    pub killing_rank: usize,
    pub ly_type: Option<LyType>,
    /// `[m, m] ⊆ h`, i.e. the binary product vanishes.
    pub symmetric_pair: bool,
    pub xi: Option<Rational>,
}

/// The standard enveloping Lie algebra with its report.
pub fn standard_enveloping(a: &LYAlgebra) -> Result<(Enveloping, EnvelopingReport)> {
    let env = enveloping(a.binary(), a.ternary())?;
    let report = report_for(a, &env)?;
    Ok((env, report))
}

fn report_for(a: &LYAlgebra, env: &Enveloping) -> Result<EnvelopingReport> {
    let g = &env.algebra;
    let d = env.inner.algebra();
    let m_rep = env.inner.natural();
    let m_abs_irred = m_rep.absolutely_irreducible();
    let ly_type = if m_abs_irred { Some(type_of(&env.inner)?) } else { None };
    Ok(EnvelopingReport {
        dim_g: g.dim(),
        dim_h: env.even_dim,
        dim_m: a.module_dim(),
        g_is_lie: true,
        g_simple: g.is_simple_lie()?,
        h_simple: d.is_simple_lie()?,
        m_abs_irred,
        killing_rank: g.killing_form()?.rank(),
        ly_type,
        symmetric_pair: a.binary().is_zero(),
        xi: None,
    })
}

fn type_of(inner: &LinearLie) -> Result<LyType> {
    let d = inner.algebra();
    if inner.module_dim() == d.dim() && inner.natural().hom_dimension(&adjoint(d))? >= 1 {
        return Ok(LyType::Adjoint);
    }
    Ok(if d.is_simple_lie()? { LyType::Generic } else { LyType::NonSimple })
}

/// Adjoint, non-simple or generic; requires `m` absolutely irreducible
/// under `D(m, m)`.
pub fn classify_type(a: &LYAlgebra) -> Result<LyType> {
    let inner = super::ly::inner_derivations_ly(a)?;
    if !inner.natural().absolutely_irreducible() {
        return Err(Error::Reducible("m is not absolutely irreducible under its inner derivations".into()));
    }
    type_of(&inner)
}
