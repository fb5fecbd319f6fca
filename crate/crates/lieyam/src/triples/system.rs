use rayon::prelude::*;

use crate::algcore::{expect_equal, sweep, BilinearForm, Certificate, Counterexample, StructureAlgebra, Symmetry, Trilinear};
use crate::error::{Error, Result};
use crate::exactla::{add_vec, is_zero_vec, scale_vec, sub_vec, unit_vec, Matrix, Rational, Subspace, Vector};
use crate::liecon::LinearLie;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum TripleKind {
    Lts,
    AntiLts,
    Orthogonal,
    Symplectic,
    Unclassified,
}

impl TripleKind {
    pub const ALL: [TripleKind; 4] = [TripleKind::Lts, TripleKind::AntiLts, TripleKind::Orthogonal, TripleKind::Symplectic];

    pub fn name(self) -> &'static str {
        match self {
            TripleKind::Lts => "lts",
            TripleKind::AntiLts => "anti_lts",
            TripleKind::Orthogonal => "orthogonal",
            TripleKind::Symplectic => "symplectic",
            TripleKind::Unclassified => "unclassified",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().chain([TripleKind::Unclassified]).find(|k| k.name() == s)
    }

    /// The sign ε in the defining identities.
    fn epsilon(self) -> Option<Rational> {
        match self {
            TripleKind::Lts | TripleKind::Symplectic => Some(Rational::from(-1)),
            TripleKind::AntiLts | TripleKind::Orthogonal => Some(Rational::one()),
            TripleKind::Unclassified => None,
        }
    }
}

/// A module with a trilinear product `xyz`, optionally with a bilinear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSystem {
    product: Trilinear,
    form: Option<BilinearForm>,
    kind: TripleKind,
    xi: Option<Rational>,
}

impl TripleSystem {
    /// Unclassified; use [`TripleSystem::certify`] to attach a kind.
    pub fn new(product: Trilinear, form: Option<BilinearForm>) -> Result<Self> {
        if let Some(b) = &form {
            if b.dim() != product.dim() {
                return Err(Error::DimensionMismatch { expected: product.dim(), found: b.dim() });
            }
        }
        Ok(TripleSystem { product, form, kind: TripleKind::Unclassified, xi: None })
    }

    /// `xyz = [[x,y],z]` on a Lie algebra.
    pub fn from_lie(l: &StructureAlgebra) -> Self {
        let product = Trilinear::from_fn(l.dim(), |i, j, k| l.mul(&l.basis_product(i, j), &unit_vec(l.dim(), k)));
        TripleSystem { product, form: None, kind: TripleKind::Unclassified, xi: None }
    }

    /// Runs the checker for `kind` and records it on success.
    pub fn certify(mut self, kind: TripleKind) -> Result<Self> {
        check_triple(&self, kind)?.map_err(|c| Error::Verification(c.to_string()))?;
        self.kind = kind;
        Ok(self)
    }

    pub(crate) fn with_xi(mut self, xi: Rational) -> Self {
        self.xi = Some(xi);
        self
    }

    pub fn module_dim(&self) -> usize {
        self.product.dim()
    }

    pub fn product(&self) -> &Trilinear {
        &self.product
    }

    pub fn form(&self) -> Option<&BilinearForm> {
        self.form.as_ref()
    }

    pub fn kind(&self) -> TripleKind {
        self.kind
    }

    /// Scalar relating the product to the form, when recovered from a pair.
    pub fn xi(&self) -> Option<&Rational> {
        self.xi.as_ref()
    }

    pub fn triple(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        self.product.apply(x, y, z)
    }
}

/// `D(uvw) − (Du)vw − u(Dv)w − uv(Dw)` on basis vectors.
pub fn derivation_defect(t: &Trilinear, d: &Matrix, u: usize, v: usize, w: usize) -> Vector {
    let n = t.dim();
    let mut out = d.mul_vec(&t.basis(u, v, w));
    let terms = [t.apply_first(&d.column(u), v, w), t.apply_second(u, &d.column(v), w), t.apply_third(u, v, &d.column(w))];
    for term in &terms {
        out = sub_vec(&out, term);
    }
    debug_assert_eq!(out.len(), n);
    out
}

/// Canonical basis of the span of the left multiplications `(eᵢ eⱼ ·)`.
pub fn inner_operator_basis(t: &Trilinear) -> Vec<Matrix> {
    let n = t.dim();
    let flat: Vec<Vector> = (0..n * n).map(|p| t.operator(p / n, p % n).into_flat()).collect();
    Subspace::span(n * n, &flat).basis().iter().map(|v| Matrix::from_flat(n, n, v.clone())).collect()
}

/// Every left multiplication is a derivation of `t`.
///
/// Derivations form a linear space, so it suffices to test a basis of their
/// span; on failure the full sweep finds the least failing tuple.
pub fn check_inner_derivations(t: &Trilinear, label: &str) -> Certificate {
    let n = t.dim();
    let basis = inner_operator_basis(t);
    let all_pass =
        basis.par_iter().all(|d| (0..n).all(|u| (0..n).all(|v| (0..n).all(|w| is_zero_vec(&derivation_defect(t, d, u, v, w))))));
    if all_pass {
        return Ok(());
    }
    sweep(n, 5, |ix| {
        let d = t.operator(ix[0], ix[1]);
        let r = derivation_defect(t, &d, ix[2], ix[3], ix[4]);
        (!is_zero_vec(&r)).then(|| {
            let lhs = d.mul_vec(&t.basis(ix[2], ix[3], ix[4]));
            let rhs = sub_vec(&lhs, &r);
            Counterexample::new(label, ix.to_vec(), lhs, rhs)
        })
    })
}

fn checked_form(t: &TripleSystem, want: Symmetry) -> Result<&BilinearForm> {
    let b = t.form.as_ref().ok_or(Error::MissingForm)?;
    if b.symmetry() != want {
        return Err(Error::WrongSymmetry(want.name()));
    }
    Ok(b)
}

/// Checks the identities of `kind` on all basis tuples.
///
/// Errors only on bad preconditions; a failing identity is reported inside
/// the certificate with the least failing tuple.
pub fn check_triple(t: &TripleSystem, kind: TripleKind) -> Result<Certificate> {
    let eps = kind.epsilon().ok_or_else(|| Error::InvalidInput("no identities for unclassified triples".into()))?;
    let p = &t.product;
    let n = p.dim();
    let e = |i: usize| unit_vec(n, i);
    match kind {
        TripleKind::Lts | TripleKind::AntiLts => {
            let skew = || {
                sweep(n, 3, |ix| {
                    let (i, j, k) = (ix[0], ix[1], ix[2]);
                    expect_equal("xyz = ε yxz", ix, p.basis(i, j, k), scale_vec(&eps, &p.basis(j, i, k)))
                })
            };
            let cyclic = || {
                sweep(n, 3, |ix| {
                    let (i, j, k) = (ix[0], ix[1], ix[2]);
                    let s = add_vec(&add_vec(&p.basis(i, j, k), &p.basis(j, k, i)), &p.basis(k, i, j));
                    crate::algcore::expect_zero("xyz + yzx + zxy = 0", ix, s)
                })
            };
            Ok(skew().and_then(|_| cyclic()).and_then(|_| check_inner_derivations(p, "derivation identity")))
        }
        _ => {
            let want = if kind == TripleKind::Orthogonal { Symmetry::Symmetric } else { Symmetry::Skew };
            let b = checked_form(t, want)?;
            let sym = || {
                sweep(n, 3, |ix| {
                    let (i, j, k) = (ix[0], ix[1], ix[2]);
                    expect_equal("xyz = -ε yxz", ix, p.basis(i, j, k), scale_vec(&-&eps, &p.basis(j, i, k)))
                })
            };
            let form = || {
                sweep(n, 3, |ix| {
                    let (i, j, k) = (ix[0], ix[1], ix[2]);
                    let lhs = add_vec(&p.basis(i, j, k), &scale_vec(&eps, &p.basis(i, k, j)));
                    let mut rhs = scale_vec(&(&eps * b.entry(i, j)), &e(k));
                    rhs = add_vec(&rhs, &scale_vec(b.entry(i, k), &e(j)));
                    rhs = sub_vec(&rhs, &scale_vec(&(Rational::from(2) * &eps * b.entry(j, k)), &e(i)));
                    expect_equal("form identity", ix, lhs, rhs)
                })
            };
            Ok(sym().and_then(|_| form()).and_then(|_| check_inner_derivations(p, "derivation identity")))
        }
    }
}

/// The Lie algebra spanned by the left multiplications, closure verified.
pub fn inner_derivations(t: &TripleSystem) -> Result<LinearLie> {
    LinearLie::new(t.module_dim(), inner_operator_basis(&t.product))
}

pub fn inner_derivation_rep(t: &TripleSystem) -> Result<crate::algcore::Representation> {
    Ok(inner_derivations(t)?.natural())
}
