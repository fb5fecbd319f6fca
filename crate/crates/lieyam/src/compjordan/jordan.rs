use std::sync::Arc;

use super::composition::CompositionAlgebra;
use crate::algcore::{sweep, Bilinear, Certificate, Counterexample, StructureAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{dot, kernel, q, qi, sub_vec, unit_vec, zero_vec, Matrix, Rational, Subspace, Vector};

/// Commutative Jordan algebra with unit and generic trace.
#[derive(Clone, Debug)]
pub struct JordanAlgebra {
    algebra: Arc<StructureAlgebra>,
    unit: Vector,
    generic_trace: Vector,
    degree: usize,
}

impl JordanAlgebra {
    pub fn new(algebra: StructureAlgebra, unit: Vector, generic_trace: Vector, degree: usize) -> Self {
        JordanAlgebra { algebra: Arc::new(algebra), unit, generic_trace, degree }
    }

    pub fn algebra(&self) -> &Arc<StructureAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generic_trace(&self) -> &Vector {
        &self.generic_trace
    }

    pub fn bullet(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.algebra.mul(x, y)
    }

    pub fn trace(&self, x: &[Rational]) -> Rational {
        dot(&self.generic_trace, x)
    }

    /// `t(x•y)` with `t = generic trace / degree`, so `t(1) = 1`.
    pub fn normalized_trace(&self, x: &[Rational], y: &[Rational]) -> Rational {
        self.trace(&self.bullet(x, y)) * Rational::new(1, self.degree as i64)
    }

    /// `(x•y)•z − x•(y•z)`
    pub fn associator(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        let a = self.bullet(&self.bullet(x, y), z);
        let b = self.bullet(x, &self.bullet(y, z));
        sub_vec(&a, &b)
    }

    /// Kernel of the generic trace.
    pub fn traceless(&self) -> Subspace {
        kernel(&Matrix::from_rows(vec![self.generic_trace.clone()]))
    }

    pub fn check_commutative(&self) -> Certificate {
        let t = self.algebra.table();
        sweep(self.dim(), 2, |ij| {
            if ij[0] >= ij[1] {
                return None;
            }
            crate::algcore::expect_equal("x•y = y•x", ij, t.basis(ij[0], ij[1]), t.basis(ij[1], ij[0]))
        })
    }

    /// Jordan identity `x²•(x•y) = x•(x²•y)` fully linearized in `x` and
    /// checked on basis triples `i ≤ j ≤ k` against every basis `y`.
    pub fn check_jordan_identity(&self) -> Certificate {
        let n = self.dim();
        let e = |i: usize| unit_vec(n, i);
        sweep(n, 4, |t| {
            let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
            if !(i <= j && j <= k) {
                return None;
            }
            let y = e(l);
            let xs = [e(i), e(j), e(k)];
            let mut total = zero_vec(n);
            for c in 0..3 {
                let (a, b) = ((c + 1) % 3, (c + 2) % 3);
                let ab = self.bullet(&xs[a], &xs[b]);
                let lhs = self.bullet(&ab, &self.bullet(&xs[c], &y));
                let rhs = self.bullet(&xs[c], &self.bullet(&ab, &y));
                for (s, (p, m)) in total.iter_mut().zip(lhs.iter().zip(&rhs)) {
                    *s += p - m;
                }
            }
            crate::algcore::expect_zero("Jordan identity", t, total)
        })
    }

    pub fn check(&self) -> std::result::Result<(), Counterexample> {
        self.check_commutative()?;
        self.check_jordan_identity()
    }
}

/// Hermitian `n × n` matrices over `c` with `x•y = ½(xy + yx)`.
///
/// Basis: the diagonal units `E_ii` first, then for each `i < j` and each
/// basis element `a` of `c` the matrix `a E_ij + ā E_ji`.
pub fn hermitian_jordan(c: &CompositionAlgebra, n: usize) -> Result<JordanAlgebra> {
    if n < 2 {
        return Err(Error::InvalidInput("hermitian matrices need n ≥ 2".into()));
    }
    if c.dim() == 8 && n > 3 {
        return Err(Error::InvalidInput(format!("hermitian {n}×{n} octonion matrices are not a Jordan algebra")));
    }
    let d = c.dim();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let dim = n + pairs.len() * d;
    let clabels: Vec<String> = c.algebra().labels().to_vec();
    let mut labels: Vec<String> = (0..n).map(|i| format!("E{}{}", i + 1, i + 1)).collect();
    for &(i, j) in &pairs {
        for l in &clabels {
            labels.push(format!("{l}[{}{}]", i + 1, j + 1));
        }
    }
    // element as an n×n grid of c-vectors
    let to_grid = |x: &[Rational]| -> Vec<Vec<Vector>> {
        let mut g = vec![vec![zero_vec(d); n]; n];
        for i in 0..n {
            g[i][i] = c.unit().iter().map(|u| u * &x[i]).collect();
        }
        for (p, &(i, j)) in pairs.iter().enumerate() {
            let a: Vector = x[n + p * d..n + (p + 1) * d].to_vec();
            g[j][i] = c.conjugate(&a);
            g[i][j] = a;
        }
        g
    };
    let from_grid = |g: &Vec<Vec<Vector>>| -> Vector {
        let mut v = zero_vec(dim);
        for i in 0..n {
            v[i] = c.as_scalar(&g[i][i]).expect("diagonal of a hermitian product is scalar");
        }
        for (p, &(i, j)) in pairs.iter().enumerate() {
            v[n + p * d..n + (p + 1) * d].clone_from_slice(&g[i][j]);
        }
        v
    };
    let half = q(1, 2);
    let table = Bilinear::from_fn(dim, |a, b| {
        let (x, y) = (to_grid(&unit_vec(dim, a)), to_grid(&unit_vec(dim, b)));
        let mut s = vec![vec![zero_vec(d); n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let xy = c.mul(&x[i][k], &y[k][j]);
                    let yx = c.mul(&y[i][k], &x[k][j]);
                    for (t, (p, r)) in s[i][j].iter_mut().zip(xy.iter().zip(&yx)) {
                        *t += (p + r) * &half;
                    }
                }
            }
        }
        from_grid(&s)
    });
    let mut unit = zero_vec(dim);
    let mut trace = zero_vec(dim);
    for i in 0..n {
        unit[i] = qi(1);
        trace[i] = qi(1);
    }
    Ok(JordanAlgebra::new(StructureAlgebra::with_labels(table, labels), unit, trace, n))
}

/// `k1 ⊕ kⁿ` with `(α,u)•(β,v) = (αβ + b(u,v), αv + βu)`, `b` the standard form.
pub fn spin_factor(n: usize) -> Result<JordanAlgebra> {
    if n < 2 {
        return Err(Error::InvalidInput("spin factor needs n ≥ 2".into()));
    }
    let dim = n + 1;
    let table = Bilinear::from_fn(dim, |i, j| match (i, j) {
        (0, k) | (k, 0) => unit_vec(dim, k),
        (a, b) if a == b => unit_vec(dim, 0),
        _ => zero_vec(dim),
    });
    let mut labels = vec!["1".to_string()];
    labels.extend((1..=n).map(|i| format!("e{i}")));
    let mut trace = zero_vec(dim);
    trace[0] = qi(2);
    Ok(JordanAlgebra::new(StructureAlgebra::with_labels(table, labels), unit_vec(dim, 0), trace, 2))
}
