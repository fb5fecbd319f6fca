use crate::exactla::{dot, Matrix, Rational, Subspace};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Symmetry {
    Symmetric,
    Skew,
    Neither,
}

impl Symmetry {
    pub fn of(gram: &Matrix) -> Symmetry {
        if gram.is_symmetric() {
            Symmetry::Symmetric
        } else if gram.is_skew() {
            Symmetry::Skew
        } else {
            Symmetry::Neither
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Symmetry::Symmetric => "symmetric",
            Symmetry::Skew => "skew",
            Symmetry::Neither => "neither",
        }
    }
}

/// Bilinear form `b(x, y) = xᵀ·gram·y`. The zero form counts as symmetric.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearForm {
    gram: Matrix,
    symmetry: Symmetry,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Self {
        assert!(gram.is_square(), "gram matrix must be square");
        let symmetry = Symmetry::of(&gram);
        BilinearForm { gram, symmetry }
    }

    /// Identity gram matrix.
    pub fn standard_symmetric(n: usize) -> Self {
        Self::new(Matrix::identity(n))
    }

    /// Block matrix `[[0, I], [−I, 0]]` on `k^(2m)`.
    pub fn standard_skew(n: usize) -> Self {
        assert!(n.is_multiple_of(2), "skew form needs even dimension");
        let m = n / 2;
        Self::new(Matrix::from_fn(n, n, |i, j| {
            if j == i + m {
                Rational::one()
            } else if i == j + m {
                -Rational::one()
            } else {
                Rational::zero()
            }
        }))
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        dot(x, &self.gram.mul_vec(y))
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.gram[(i, j)]
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.gram.determinant().is_zero()
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self::new(self.gram.scale(c))
    }

    /// Gram matrix of the restriction to `s`, in the canonical basis of `s`.
    pub fn restrict(&self, s: &Subspace) -> Self {
        let b = s.basis();
        Self::new(Matrix::from_fn(b.len(), b.len(), |i, j| self.eval(&b[i], &b[j])))
    }
}
