use std::sync::Arc;

use crate::algcore::{BilinearForm, Representation, StructureAlgebra, Symmetry};
use crate::error::{Error, Result};
use crate::exactla::{BasisSolver, Matrix, Rational, Subspace, Vector};

/// Lie algebra of `n × n` matrices with a fixed basis, acting naturally on `kⁿ`.
#[derive(Clone, Debug)]
pub struct LinearLie {
    algebra: Arc<StructureAlgebra>,
    basis: Vec<Matrix>,
    solver: BasisSolver,
    module_dim: usize,
}

impl LinearLie {
    /// Fails if the matrices are dependent or not closed under commutators.
    pub fn new(module_dim: usize, basis: Vec<Matrix>) -> Result<Self> {
        let flat: Vec<Vector> = basis.iter().map(|m| m.flat().to_vec()).collect();
        let solver = BasisSolver::new(module_dim * module_dim, &flat)?;
        let (algebra, _) = StructureAlgebra::from_matrices(&basis)?;
        Ok(LinearLie { algebra: Arc::new(algebra), basis, solver, module_dim })
    }

    /// Lie algebra with the canonical echelon basis of the span of `ops`.
    /// Fails with a closure error if the span is not bracket-closed.
    pub fn spanned_by(module_dim: usize, ops: &[Matrix]) -> Result<Self> {
        let flat: Vec<Vector> = ops.iter().map(|m| m.flat().to_vec()).collect();
        let span = Subspace::span(module_dim * module_dim, &flat);
        let basis = span.basis().iter().map(|v| Matrix::from_flat(module_dim, module_dim, v.clone())).collect();
        Self::new(module_dim, basis)
    }

    pub fn algebra(&self) -> &Arc<StructureAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn natural(&self) -> Representation {
        Representation::new_unchecked(self.algebra.clone(), self.module_dim, self.basis.clone())
    }

    /// Coordinates of a matrix in this algebra's basis, if it belongs.
    pub fn coordinates(&self, m: &Matrix) -> Option<Vector> {
        if m.rows() != self.module_dim || m.cols() != self.module_dim {
            return None;
        }
        self.solver.coordinates(m.flat())
    }

    pub fn matrix(&self, coords: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.module_dim, self.module_dim);
        for (c, b) in coords.iter().zip(&self.basis) {
            m.add_scaled(c, b);
        }
        m
    }
}

fn unit_matrix(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(i, j)] = Rational::one();
    m
}

/// `gl(n)` on matrix units `E_ij` in row-major order.
pub fn gl_of(n: usize) -> LinearLie {
    let basis = (0..n * n).map(|k| unit_matrix(n, k / n, k % n)).collect();
    LinearLie::new(n, basis).expect("matrix units form a Lie algebra")
}

/// `sl(n)`: `E_ij` for `i < j`, then `E_ii − E_{i+1,i+1}`, then `E_ij` for `i > j`.
/// For `n = 2` this is the Chevalley basis `e, h, f`.
pub fn sl_of(n: usize) -> Result<LinearLie> {
    if n < 2 {
        return Err(Error::InvalidInput("sl needs module dimension at least 2".into()));
    }
    let mut basis = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in i + 1..n {
            basis.push(unit_matrix(n, i, j));
        }
    }
    for i in 0..n - 1 {
        basis.push(unit_matrix(n, i, i).sub(&unit_matrix(n, i + 1, i + 1)));
    }
    for i in 0..n {
        for j in 0..i {
            basis.push(unit_matrix(n, i, j));
        }
    }
    LinearLie::new(n, basis)
}

/// Operator `z ↦ b(x, z) y`, whose matrix is `y xᵀ G`.
fn rank_one(b: &BilinearForm, x: &[Rational], y: &[Rational]) -> Matrix {
    let row = b.gram().vec_mul(x);
    Matrix::from_fn(y.len(), row.len(), |i, j| &y[i] * &row[j])
}

/// `σ_{x,y} = b(x,·)y − b(y,·)x` for symmetric `b`.
pub fn sigma(b: &BilinearForm, x: &[Rational], y: &[Rational]) -> Result<Matrix> {
    if b.symmetry() != Symmetry::Symmetric {
        return Err(Error::WrongSymmetry("symmetric"));
    }
    Ok(rank_one(b, x, y).sub(&rank_one(b, y, x)))
}

/// `γ_{x,y} = b(x,·)y + b(y,·)x` for skew `b`.
pub fn gamma(b: &BilinearForm, x: &[Rational], y: &[Rational]) -> Result<Matrix> {
    if b.symmetry() != Symmetry::Skew {
        return Err(Error::WrongSymmetry("skew"));
    }
    Ok(rank_one(b, x, y).add(&rank_one(b, y, x)))
}

fn e(n: usize, i: usize) -> Vector {
    crate::exactla::unit_vec(n, i)
}

/// `so(V, b)` with basis `σ_{eᵢ,eⱼ}` for `i < j`.
pub fn so_of(b: &BilinearForm) -> Result<LinearLie> {
    if b.symmetry() != Symmetry::Symmetric {
        return Err(Error::WrongSymmetry("symmetric"));
    }
    if !b.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    let n = b.dim();
    let mut basis = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            basis.push(sigma(b, &e(n, i), &e(n, j))?);
        }
    }
    LinearLie::new(n, basis)
}

/// `sp(V, b)` with basis `γ_{eᵢ,eⱼ}` for `i ≤ j`.
pub fn sp_of(b: &BilinearForm) -> Result<LinearLie> {
    if b.symmetry() != Symmetry::Skew {
        return Err(Error::WrongSymmetry("skew"));
    }
    if !b.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    let n = b.dim();
    let mut basis = Vec::new();
    for i in 0..n {
        for j in i..n {
            basis.push(gamma(b, &e(n, i), &e(n, j))?);
        }
    }
    LinearLie::new(n, basis)
}

/// Span of the given operators inside `g`, in `g`'s coordinates.
pub fn embed_operators(g: &LinearLie, ops: &[Matrix]) -> Result<Subspace> {
    let mut coords = Vec::with_capacity(ops.len());
    for (i, op) in ops.iter().enumerate() {
        coords.push(g.coordinates(op).ok_or(Error::NotInAlgebra(i))?);
    }
    Ok(Subspace::span(g.dim(), &coords))
}
