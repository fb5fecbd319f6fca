//! Triple products induced on the natural module of a classical Lie algebra
//! by a reductive subalgebra `h`.

use std::sync::Arc;

use crate::algcore::{expect_equal, expect_zero, sweep, BilinearForm, Certificate, Representation, Trilinear};
use crate::error::{Error, Result};
use crate::exactla::{add_vec, scale_vec, sub_vec, unit_vec, Matrix, Rational, Vector};
use crate::liecon::{gamma, sigma, LinearLie, ReductivePair};

use super::pair::{Pair, PairKind};
use super::system::{TripleKind, TripleSystem};

/// `h` acting on the natural module of `g`.
fn natural_h_module(g: &LinearLie, pair: &ReductivePair) -> Result<Representation> {
    if pair.g().dim() != g.dim() || **pair.g() != **g.algebra() {
        return Err(Error::InvalidInput("reductive pair does not live in the given linear Lie algebra".into()));
    }
    let action = pair.h().basis().iter().map(|v| g.matrix(v)).collect();
    Ok(Representation::new_unchecked(Arc::new(pair.h_algebra()), g.module_dim(), action))
}

fn require_irreducible(g: &LinearLie, pair: &ReductivePair) -> Result<()> {
    if natural_h_module(g, pair)?.absolutely_irreducible() {
        Ok(())
    } else {
        Err(Error::Reducible(
            "the natural module is reducible under h; split off the fixed line and use the symmetric pair instead".into(),
        ))
    }
}

/// `π_h` applied to an operator of `g`, as a matrix.
fn project(g: &LinearLie, pair: &ReductivePair, op: &Matrix, index: usize) -> Result<Matrix> {
    let coords = g.coordinates(op).ok_or(Error::NotInAlgebra(index))?;
    Ok(g.matrix(&pair.proj_h().mul_vec(&coords)))
}

/// The unique `ξ` with `lhs = ξ·base` on every basis tuple.
fn recover_scalar(
    n: usize,
    identity: &str,
    lhs: impl Fn(usize, usize, usize) -> Vector + Sync,
    base: impl Fn(usize, usize, usize) -> Vector + Sync,
) -> Result<Rational> {
    let mut xi = None;
    'search: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let b = base(i, j, k);
                if let Some(c) = b.iter().position(|x| !x.is_zero()) {
                    xi = Some(&lhs(i, j, k)[c] / &b[c]);
                    break 'search;
                }
            }
        }
    }
    let xi = xi.ok_or_else(|| Error::NeitherIdentity(format!("{identity} is vacuous")))?;
    sweep(n, 3, |ix| {
        let (i, j, k) = (ix[0], ix[1], ix[2]);
        expect_equal(identity, ix, lhs(i, j, k), scale_vec(&xi, &base(i, j, k)))
    })
    .map_err(|c| Error::NeitherIdentity(c.to_string()))?;
    if xi.is_zero() {
        return Err(Error::ZeroXi);
    }
    Ok(xi)
}

/// Shared path of the orthogonal and symplectic cases; `eta = +1` for
/// `so(V, b)` and `−1` for `sp(V, b)`.
fn derive_triple(g: &LinearLie, pair: &ReductivePair, b: &BilinearForm, eta: i64) -> Result<TripleSystem> {
    let n = g.module_dim();
    if b.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: b.dim() });
    }
    require_irreducible(g, pair)?;
    let e = |i: usize| unit_vec(n, i);
    let mut ops = vec![Matrix::zeros(n, n); n * n];
    for i in 0..n {
        for j in i..n {
            let op = if eta > 0 { sigma(b, &e(i), &e(j))? } else { gamma(b, &e(i), &e(j))? };
            let d = project(g, pair, &op, i * n + j)?;
            // σ is skew and γ symmetric in its two arguments.
            ops[j * n + i] = if eta > 0 { d.scale(&Rational::from(-1)) } else { d.clone() };
            ops[i * n + j] = d;
        }
    }
    let product = Trilinear::from_operators(n, |i, j| ops[i * n + j].clone());
    let cyclic = sweep(n, 3, |ix| {
        let (i, j, k) = (ix[0], ix[1], ix[2]);
        let s = add_vec(&add_vec(&product.basis(i, j, k), &product.basis(j, k, i)), &product.basis(k, i, j));
        expect_zero("cyclic identity", ix, s)
    });
    let (lie_kind, form_kind) =
        if eta > 0 { (TripleKind::Lts, TripleKind::Orthogonal) } else { (TripleKind::AntiLts, TripleKind::Symplectic) };
    let eta_q = Rational::from(eta);
    let two = Rational::from(2);
    let recovered = recover_scalar(
        n,
        "xi identity",
        |i, j, k| add_vec(&product.basis(i, j, k), &scale_vec(&eta_q, &product.basis(k, j, i))),
        |i, j, k| {
            let mut v = scale_vec(&(&two * b.entry(i, k)), &e(j));
            v = sub_vec(&v, &scale_vec(&(&eta_q * b.entry(j, k)), &e(i)));
            sub_vec(&v, &scale_vec(b.entry(j, i), &e(k)))
        },
    );
    // When both identities hold, as for h the whole isometry algebra, the
    // form-based kind is reported since it also carries ξ.
    let xi = match (recovered, cyclic.is_ok()) {
        (Ok(xi), _) => xi,
        (Err(_), true) => return TripleSystem::new(product, Some(b.clone()))?.certify(lie_kind),
        (Err(err), false) => return Err(err),
    };
    let t = TripleSystem::new(product, Some(b.scaled(&xi)))?.certify(form_kind)?;
    Ok(t.with_xi(xi))
}

/// Triple product `xyz = π_h(σ_{x,y})(z)` for `h ⊂ so(V, b)`: a Lie triple
/// system or an orthogonal triple system with form `ξb`.
pub fn derive_triple_so(g: &LinearLie, pair: &ReductivePair, b: &BilinearForm) -> Result<TripleSystem> {
    derive_triple(g, pair, b, 1)
}

/// Triple product `xyz = π_h(γ_{x,y})(z)` for `h ⊂ sp(V, b)`: an anti-Lie
/// triple system or a symplectic triple system with form `ξb`.
pub fn derive_triple_sp(g: &LinearLie, pair: &ReductivePair, b: &BilinearForm) -> Result<TripleSystem> {
    derive_triple(g, pair, b, -1)
}

/// Pair on `(V, V*)` for `h ⊂ sl(V)`: `d_{x,φ}` is the `h`-part of the
/// traceless part of `φ(−)x`, and
/// `{xφy} = d_{x,φ}(y) − ξφ(x)y`, `{φxψ} = ψ ∘ d_{x,φ} − ξφ(x)ψ`.
/// In the alternating case the products on `V*` change sign.
pub fn derive_pair_sl(g: &LinearLie, pair: &ReductivePair) -> Result<Pair> {
    let n = g.module_dim();
    if n < 3 {
        return Err(Error::InvalidInput("derive_pair_sl needs dim V at least 3".into()));
    }
    require_irreducible(g, pair)?;
    let scalar = Rational::new(1, n as i64);
    let mut d = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            // φ(−)x for x = eᵢ, φ = eⱼ* is the matrix unit E_ij.
            let mut op = Matrix::zeros(n, n);
            op[(i, j)] = Rational::one();
            if i == j {
                op.add_scaled(&-&scalar, &Matrix::identity(n));
            }
            d.push(project(g, pair, &op, i * n + j)?);
        }
    }
    // d(x, φ) applied to y, with δ = φ(x).
    let dxy = |x: usize, phi: usize, y: usize| d[x * n + phi].column(y);
    let delta = |x: usize, phi: usize| if x == phi { Rational::one() } else { Rational::zero() };
    let e = |i: usize| unit_vec(n, i);
    let sym_base = |x: usize, phi: usize, y: usize| sub_vec(&scale_vec(&delta(x, phi), &e(y)), &scale_vec(&delta(y, phi), &e(x)));
    let alt_base = |x: usize, phi: usize, y: usize| add_vec(&scale_vec(&delta(x, phi), &e(y)), &scale_vec(&delta(y, phi), &e(x)));
    let jordan = recover_scalar(n, "symmetric case", |x, phi, y| sub_vec(&dxy(x, phi, y), &dxy(y, phi, x)), sym_base);
    let (kind, xi) = match jordan {
        Ok(xi) => (PairKind::Jordan, xi),
        Err(Error::ZeroXi) => return Err(Error::ZeroXi),
        Err(first) => {
            match recover_scalar(n, "alternating case", |x, phi, y| add_vec(&dxy(x, phi, y), &dxy(y, phi, x)), alt_base) {
                Ok(xi) => (PairKind::AntiJordan, xi),
                Err(Error::ZeroXi) => return Err(Error::ZeroXi),
                Err(second) => return Err(Error::NeitherIdentity(format!("{first}; {second}"))),
            }
        }
    };
    let minus_sign = if kind == PairKind::Jordan { Rational::one() } else { Rational::from(-1) };
    let mut plus = Vec::with_capacity(n * n);
    let mut minus = vec![Matrix::zeros(n, n); n * n];
    for x in 0..n {
        for phi in 0..n {
            let shift = Matrix::identity(n).scale(&(&xi * delta(x, phi)));
            let dm = &d[x * n + phi];
            plus.push(dm.sub(&shift));
            minus[phi * n + x] = dm.transpose().sub(&shift).scale(&minus_sign);
        }
    }
    let p = Pair::new(n, n, plus, minus)?;
    // The trace relation ξφ(x) = −tr{xφ·}/dim V, re-verified.
    for x in 0..n {
        for phi in 0..n {
            let t = p.plus_operator(x, phi).trace();
            if &xi * delta(x, phi) != -(t / Rational::from(n)) {
                return Err(Error::Verification(format!("trace relation fails at ({x}, {phi})")));
            }
        }
    }
    Ok(p.certify(kind)?.with_xi(xi))
}

/// `{φxψ}(y) = ψ({xφy})` on all basis tuples, up to the sign convention of
/// the alternating case.
pub fn pair_compatibility(p: &Pair) -> Certificate {
    let n = p.dim_plus();
    let sign = if p.kind() == PairKind::AntiJordan { Rational::from(-1) } else { Rational::one() };
    sweep(n, 4, |ix| {
        let (phi, x, psi, y) = (ix[0], ix[1], ix[2], ix[3]);
        let lhs = &sign * &p.minus_operator(phi, x).column(psi)[y];
        let rhs = p.plus_operator(x, phi).column(y)[psi].clone();
        expect_equal("compatibility", ix, vec![lhs], vec![rhs])
    })
}
