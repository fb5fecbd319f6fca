use std::sync::Arc;

use crate::algcore::StructureAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{form_orthocomplement, is_zero_vec, Matrix, Rational, Subspace, Vector};

/// `g = h ⊕ m` with `h` a subalgebra and `[h, m] ⊆ m`.
#[derive(Clone, Debug)]
pub struct ReductivePair {
    g: Arc<StructureAlgebra>,
    h: Subspace,
    m: Subspace,
    proj_h: Matrix,
    proj_m: Matrix,
    symmetric: bool,
}

impl ReductivePair {
    /// Complement `m = h⊥` for the Killing form of `g`.
    pub fn new(g: Arc<StructureAlgebra>, h: Subspace) -> Result<Self> {
        let killing = g.killing_form()?;
        if !killing.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        let m = form_orthocomplement(killing.gram(), &h)?;
        Self::with_complement(g, h, m)
    }

    /// Uses the given complement instead of the Killing one.
    pub fn with_complement(g: Arc<StructureAlgebra>, h: Subspace, m: Subspace) -> Result<Self> {
        let n = g.dim();
        if h.ambient_dim() != n || m.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: h.ambient_dim() });
        }
        if h.dim() + m.dim() != n || !h.intersect(&m)?.is_zero() {
            return Err(Error::NotReductive("h and m are not complementary".into()));
        }
        for (a, x) in h.basis().iter().enumerate() {
            for (b, y) in h.basis().iter().enumerate().skip(a + 1) {
                if !h.contains(&g.mul(x, y)) {
                    return Err(Error::NotSubalgebra(format!("[h{a}, h{b}] leaves h")));
                }
            }
        }
        for (a, x) in h.basis().iter().enumerate() {
            for (b, y) in m.basis().iter().enumerate() {
                if !m.contains(&g.mul(x, y)) {
                    return Err(Error::NotReductive(format!("[h{a}, m{b}] leaves m")));
                }
            }
        }
        let cols: Vec<Vector> = h.basis().iter().chain(m.basis()).cloned().collect();
        let p = Matrix::from_columns(n, &cols);
        let p_inv = p.inverse().expect("complementary bases");
        let k = h.dim();
        let select = |keep_h: bool| {
            let d = Matrix::from_fn(n, n, |i, j| if i == j && (i < k) == keep_h { Rational::one() } else { Rational::zero() });
            p.mul(&d).mul(&p_inv)
        };
        let (proj_h, proj_m) = (select(true), select(false));
        let symmetric = m
            .basis()
            .iter()
            .enumerate()
            .all(|(a, x)| m.basis().iter().skip(a + 1).all(|y| is_zero_vec(&proj_m.mul_vec(&g.mul(x, y)))));
        Ok(ReductivePair { g, h, m, proj_h, proj_m, symmetric })
    }

    pub fn g(&self) -> &Arc<StructureAlgebra> {
        &self.g
    }

    pub fn h(&self) -> &Subspace {
        &self.h
    }

    pub fn m(&self) -> &Subspace {
        &self.m
    }

    pub fn proj_h(&self) -> &Matrix {
        &self.proj_h
    }

    pub fn proj_m(&self) -> &Matrix {
        &self.proj_m
    }

    /// `[m, m] ⊆ h`.
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// Structure constants of `h` in its canonical basis.
    pub fn h_algebra(&self) -> StructureAlgebra {
        self.g.subalgebra(&self.h).expect("h is a subalgebra")
    }

    pub fn h_coordinates(&self, x: &[Rational]) -> Vector {
        self.h.coordinates(&self.proj_h.mul_vec(x)).expect("projection lands in h")
    }

    pub fn m_coordinates(&self, x: &[Rational]) -> Vector {
        self.m.coordinates(&self.proj_m.mul_vec(x)).expect("projection lands in m")
    }
}
