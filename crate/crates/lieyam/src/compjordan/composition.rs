use std::sync::Arc;

use crate::algcore::{BilinearForm, StructureAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{q, qi, unit_vec, zero_vec, Matrix, Rational, Vector};

/// Split unital composition algebra with polar norm `n(x, y)`, so that
/// `n(x, x) = 2n(x)` and `t(x) = n(x, 1)`.
#[derive(Clone, Debug)]
pub struct CompositionAlgebra {
    algebra: Arc<StructureAlgebra>,
    norm: BilinearForm,
    conjugation: Matrix,
    unit: Vector,
}

/// Zorn vector-matrix layout: `[α, u₀, u₁, u₂, v₀, v₁, v₂, β]`.
pub const ZORN_LABELS: [&str; 8] = ["alpha", "u0", "u1", "u2", "v0", "v1", "v2", "beta"];

fn cross(a: &[Rational], b: &[Rational]) -> [Rational; 3] {
    [&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

fn dot3(a: &[Rational], b: &[Rational]) -> Rational {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

/// Zorn product of `(α, u, v, β)` and `(α', u', v', β')`:
/// `α'' = αα' + u·v'`, `u'' = αu' + β'u − v×v'`, `v'' = α'v + βv' + u×u'`,
/// `β'' = ββ' + v·u'`.
pub fn zorn_product(x: &[Rational], y: &[Rational]) -> Vector {
    let (a, u, v, b) = (&x[0], &x[1..4], &x[4..7], &x[7]);
    let (a2, u2, v2, b2) = (&y[0], &y[1..4], &y[4..7], &y[7]);
    let vv = cross(v, v2);
    let uu = cross(u, u2);
    let mut out = zero_vec(8);
    out[0] = a * a2 + dot3(u, v2);
    for i in 0..3 {
        out[1 + i] = a * &u2[i] + b2 * &u[i] - &vv[i];
        out[4 + i] = a2 * &v[i] + b * &v2[i] + &uu[i];
    }
    out[7] = b * b2 + dot3(v, u2);
    out
}

impl CompositionAlgebra {
    pub fn algebra(&self) -> &Arc<StructureAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Polar form `n(x, y)`.
    pub fn norm_form(&self) -> &BilinearForm {
        &self.norm
    }

    /// Quadratic norm `n(x) = n(x, x)/2`.
    pub fn norm(&self, x: &[Rational]) -> Rational {
        self.norm.eval(x, x) * q(1, 2)
    }

    pub fn trace(&self, x: &[Rational]) -> Rational {
        self.norm.eval(x, &self.unit)
    }

    pub fn conjugation(&self) -> &Matrix {
        &self.conjugation
    }

    pub fn conjugate(&self, x: &[Rational]) -> Vector {
        self.conjugation.mul_vec(x)
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.algebra.mul(x, y)
    }

    /// Scalar `s` with `x = s·1`, when `x` is a multiple of the unit.
    pub fn as_scalar(&self, x: &[Rational]) -> Option<Rational> {
        let s = self.trace(x) * q(1, 2);
        let back: Vector = self.unit.iter().map(|u| u * &s).collect();
        (back == x).then_some(s)
    }

    /// Trace-zero part `{x : t(x) = 0}`.
    pub fn trace_zero(&self) -> crate::exactla::Subspace {
        let row = self.norm.gram().mul_vec(&self.unit);
        crate::exactla::kernel(&Matrix::from_rows(vec![row]))
    }
}

/// `k`, `k×k`, `Mat₂(k)` or the Zorn octonions.
pub fn split_composition(dim: usize) -> Result<CompositionAlgebra> {
    let (algebra, gram, conjugation, unit) = match dim {
        1 => (
            StructureAlgebra::with_labels(crate::algcore::Bilinear::from_fn(1, |_, _| vec![qi(1)]), vec!["1".into()]),
            Matrix::from_i64(&[&[2]]),
            Matrix::identity(1),
            vec![qi(1)],
        ),
        2 => (
            StructureAlgebra::with_labels(
                crate::algcore::Bilinear::from_fn(2, |i, j| if i == j { unit_vec(2, i) } else { zero_vec(2) }),
                vec!["e1".into(), "e2".into()],
            ),
            Matrix::from_i64(&[&[0, 1], &[1, 0]]),
            Matrix::from_i64(&[&[0, 1], &[1, 0]]),
            vec![qi(1), qi(1)],
        ),
        4 => {
            // matrix units E₁₁, E₁₂, E₂₁, E₂₂ at index 2r + c
            let table = crate::algcore::Bilinear::from_fn(4, |i, j| {
                let (a, b, c, d) = (i / 2, i % 2, j / 2, j % 2);
                if b == c {
                    unit_vec(4, 2 * a + d)
                } else {
                    zero_vec(4)
                }
            });
            (
                StructureAlgebra::with_labels(table, ["E11", "E12", "E21", "E22"].map(String::from).to_vec()),
                Matrix::from_i64(&[&[0, 0, 0, 1], &[0, 0, -1, 0], &[0, -1, 0, 0], &[1, 0, 0, 0]]),
                Matrix::from_i64(&[&[0, 0, 0, 1], &[0, -1, 0, 0], &[0, 0, -1, 0], &[1, 0, 0, 0]]),
                vec![qi(1), qi(0), qi(0), qi(1)],
            )
        }
        8 => {
            let table = crate::algcore::Bilinear::from_fn(8, |i, j| zorn_product(&unit_vec(8, i), &unit_vec(8, j)));
            let mut gram = Matrix::zeros(8, 8);
            gram[(0, 7)] = qi(1);
            gram[(7, 0)] = qi(1);
            for i in 0..3 {
                gram[(1 + i, 4 + i)] = qi(-1);
                gram[(4 + i, 1 + i)] = qi(-1);
            }
            let conj = Matrix::from_fn(8, 8, |i, j| match (i, j) {
                (0, 7) | (7, 0) => qi(1),
                (a, b) if a == b && (1..7).contains(&a) => qi(-1),
                _ => qi(0),
            });
            let mut unit = zero_vec(8);
            unit[0] = qi(1);
            unit[7] = qi(1);
            (StructureAlgebra::with_labels(table, ZORN_LABELS.map(String::from).to_vec()), gram, conj, unit)
        }
        _ => return Err(Error::InvalidInput(format!("no split composition algebra of dimension {dim}"))),
    };
    Ok(CompositionAlgebra { algebra: Arc::new(algebra), norm: BilinearForm::new(gram), conjugation, unit })
}

/// Split octonions.
pub fn octonions() -> CompositionAlgebra {
    split_composition(8).expect("dimension 8 is valid")
}
