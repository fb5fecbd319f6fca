use std::sync::{Arc, OnceLock};

use super::certificate::{expect_zero, sweep, Certificate};
use super::form::BilinearForm;
use super::rep::Representation;
use super::tensor::{add_sparse, Bilinear};
use crate::error::{Error, Result};
use crate::exactla::{add_vec, unit_vec, zero_vec, Echelon, Matrix, Rational, Subspace, Vector};

/// Finite-dimensional algebra given by structure constants
/// `eᵢ·eⱼ = Σₖ c[i][j][k] eₖ`.
#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    labels: Vec<String>,
    table: Bilinear,
    lie: OnceLock<Certificate>,
    killing: OnceLock<BilinearForm>,
    semisimple: OnceLock<bool>,
    generators: OnceLock<Vec<usize>>,
}

impl PartialEq for StructureAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for StructureAlgebra {}

fn default_labels(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("e{i}")).collect()
}

impl StructureAlgebra {
    pub fn new(table: Bilinear) -> Self {
        let labels = default_labels(table.dim());
        Self::with_labels(table, labels)
    }

    pub fn with_labels(table: Bilinear, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), table.dim(), "one label per basis vector");
        StructureAlgebra {
            labels,
            table,
            lie: OnceLock::new(),
            killing: OnceLock::new(),
            semisimple: OnceLock::new(),
            generators: OnceLock::new(),
        }
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> Vector) -> Self {
        Self::new(Bilinear::from_fn(dim, f))
    }

    /// Lie algebra spanned by linearly independent matrices closed under
    /// commutators; fails if some commutator leaves the span.
    pub fn from_matrices(basis: &[Matrix]) -> Result<(Self, Subspace)> {
        let k = basis.len();
        let ambient = basis.first().map_or(0, |m| m.rows() * m.cols());
        let solver = crate::exactla::BasisSolver::new(ambient, &basis.iter().map(|m| m.flat().to_vec()).collect::<Vec<_>>())?;
        let mut err = None;
        let table = Bilinear::from_fn(k, |i, j| {
            let c = basis[i].commutator(&basis[j]);
            match solver.coordinates(c.flat()) {
                Some(v) => v,
                None => {
                    err.get_or_insert(Error::ClosureFailure(format!("commutator of basis elements {i} and {j}")));
                    zero_vec(k)
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        let span = Subspace::span(ambient, &basis.iter().map(|m| m.flat().to_vec()).collect::<Vec<_>>());
        Ok((Self::new(table), span))
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &Bilinear {
        &self.table
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.table.entry(i, j, k)
    }

    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), found: v.len() });
            }
        }
        Ok(self.table.apply(x, y))
    }

    /// Product without length checks.
    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.table.apply(x, y)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        self.table.basis(i, j)
    }

    pub fn left_matrix(&self, i: usize) -> Matrix {
        self.table.left_matrix(i)
    }

    pub fn right_matrix(&self, j: usize) -> Matrix {
        self.table.right_matrix(j)
    }

    /// Matrix of left multiplication by `x`.
    pub fn left_of(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.table.apply_left(x, j)).collect();
        Matrix::from_columns(n, &cols)
    }

    /// `xx = 0` (polarized on basis pairs) and Jacobi on basis triples.
    pub fn is_lie(&self) -> Certificate {
        self.lie.get_or_init(|| self.check_lie()).clone()
    }

    fn check_lie(&self) -> Certificate {
        let n = self.dim();
        sweep(n, 2, |ij| {
            let (i, j) = (ij[0], ij[1]);
            if i == j {
                expect_zero("xx = 0", ij, self.basis_product(i, i))
            } else if i < j {
                expect_zero("xy + yx = 0", ij, add_vec(&self.basis_product(i, j), &self.basis_product(j, i)))
            } else {
                None
            }
        })?;
        // With anticommutativity the Jacobiator is alternating, so sorted triples suffice.
        sweep(n, 3, |t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            if !(i < j && j < k) {
                return None;
            }
            let mut s = self.table.apply_left(&self.basis_product(i, j), k);
            let a = self.table.apply_left(&self.basis_product(j, k), i);
            let b = self.table.apply_left(&self.basis_product(k, i), j);
            for (x, (y, z)) in s.iter_mut().zip(a.iter().zip(&b)) {
                *x += y + z;
            }
            expect_zero("Jacobi", t, s)
        })
    }

    fn require_lie(&self) -> Result<()> {
        self.is_lie().map_err(|c| Error::NotLie(c.to_string()))
    }

    /// Basis-level adjoint matrices `ad eᵢ`.
    pub fn ad_matrices(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.left_matrix(i)).collect()
    }

    /// `κ(x, y) = tr(ad x ∘ ad y)`.
    pub fn killing_form(&self) -> Result<BilinearForm> {
        self.require_lie()?;
        Ok(self.killing.get_or_init(|| self.compute_killing()).clone())
    }

    fn compute_killing(&self) -> BilinearForm {
        let n = self.dim();
        // tr(ad eᵢ ad eⱼ) = Σ_{k,l} c[i][l][k] c[j][k][l]
        let mut gram = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut s = Rational::zero();
                for l in 0..n {
                    for (k, a) in self.table.get(i, l) {
                        let b = self.table.entry(j, *k, l);
                        if !b.is_zero() {
                            s += a * &b;
                        }
                    }
                }
                gram[(i, j)] = s.clone();
                gram[(j, i)] = s;
            }
        }
        BilinearForm::new(gram)
    }

    /// Lie and nondegenerate Killing form.
    pub fn is_semisimple(&self) -> bool {
        *self.semisimple.get_or_init(|| self.dim() > 0 && self.killing_form().map(|k| k.is_nondegenerate()).unwrap_or(false))
    }

    /// Nondegenerate Killing form and absolutely irreducible adjoint module.
    pub fn is_simple_lie(self: &Arc<Self>) -> Result<bool> {
        self.require_lie()?;
        if self.dim() == 0 || !self.is_semisimple() {
            return Ok(false);
        }
        Ok(adjoint(self).absolutely_irreducible())
    }

    pub fn derived_subalgebra(&self) -> Result<Subspace> {
        self.require_lie()?;
        let n = self.dim();
        let mut e = Echelon::new(n);
        for i in 0..n {
            for j in i + 1..n {
                e.insert(self.basis_product(i, j));
            }
        }
        Ok(e.into_subspace())
    }

    pub fn center(&self) -> Result<Subspace> {
        self.require_lie()?;
        let n = self.dim();
        // x central iff Σ xᵢ c[i][j][k] = 0 for all j, k.
        let mut e = Echelon::new(n);
        for j in 0..n {
            for k in 0..n {
                e.insert((0..n).map(|i| self.constant(i, j, k)).collect());
            }
        }
        Ok(e.null_space())
    }

    /// Structure constants of a subalgebra in its canonical basis.
    pub fn subalgebra(&self, s: &Subspace) -> Result<StructureAlgebra> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: s.ambient_dim() });
        }
        let k = s.dim();
        let mut err = None;
        let table = Bilinear::from_fn(k, |a, b| {
            let p = self.mul(&s.basis()[a], &s.basis()[b]);
            s.coordinates(&p).unwrap_or_else(|| {
                err.get_or_insert(Error::NotSubalgebra(format!("product of basis elements {a} and {b} leaves the subspace")));
                zero_vec(k)
            })
        });
        match err {
            Some(e) => Err(e),
            None => Ok(StructureAlgebra::new(table)),
        }
    }

    /// Lie subalgebra generated by the given vectors.
    pub fn generated_subalgebra(&self, gens: &[Vector]) -> Subspace {
        let mut e = Echelon::new(self.dim());
        let mut queue: Vec<Vector> = Vec::new();
        for g in gens {
            if e.insert(g.clone()) {
                queue.push(g.clone());
            }
        }
        while let Some(x) = queue.pop() {
            for g in gens {
                let p = self.mul(g, &x);
                if e.insert(p.clone()) {
                    queue.push(p);
                }
            }
        }
        e.into_subspace()
    }

    /// Basis indices whose elements generate the algebra as a Lie algebra,
    /// chosen greedily in index order.
    pub fn lie_generators(&self) -> Vec<usize> {
        self.generators
            .get_or_init(|| {
                let n = self.dim();
                let mut gens: Vec<usize> = Vec::new();
                let mut span = Subspace::zero(n);
                for i in 0..n {
                    let ei = unit_vec(n, i);
                    if span.contains(&ei) {
                        continue;
                    }
                    gens.push(i);
                    let vectors: Vec<Vector> = gens.iter().map(|&g| unit_vec(n, g)).collect();
                    span = self.generated_subalgebra(&vectors);
                    if span.dim() == n {
                        break;
                    }
                }
                gens
            })
            .clone()
    }

    /// Derivations `D(xy) = D(x)y + xD(y)` as the kernel of the Leibniz system,
    /// acting on this algebra.
    pub fn derivation_algebra(&self) -> Representation {
        let n = self.dim();
        let var = |k: usize, p: usize| k * n + p;
        let mut eqs = Echelon::new(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut rows = vec![zero_vec(n * n); n];
                for (p, c) in self.table.get(i, j) {
                    for (k, row) in rows.iter_mut().enumerate() {
                        row[var(k, *p)] += c;
                    }
                }
                for p in 0..n {
                    for (k, c) in self.table.get(p, j) {
                        rows[*k][var(p, i)] -= c;
                    }
                    for (k, c) in self.table.get(i, p) {
                        rows[*k][var(p, j)] -= c;
                    }
                }
                for row in rows {
                    eqs.insert(row);
                }
            }
        }
        let space = eqs.null_space();
        let mats: Vec<Matrix> = space.basis().iter().map(|v| Matrix::from_flat(n, n, v.clone())).collect();
        let k = mats.len();
        let table = Bilinear::from_fn(k, |a, b| {
            let c = mats[a].commutator(&mats[b]);
            space.coordinates(c.flat()).expect("derivations are closed under commutators")
        });
        let lie = Arc::new(StructureAlgebra::new(table));
        Representation::new_unchecked(lie, n, mats)
    }

    /// Write in the `.sca` text format.
    pub fn to_sca(&self) -> String {
        super::sca::write_bilinear(&self.table)
    }

    pub fn from_sca(text: &str) -> Result<Self> {
        super::sca::read_bilinear(text).map(Self::new)
    }
}

/// Adjoint representation `x ↦ ad x`.
pub fn adjoint(l: &Arc<StructureAlgebra>) -> Representation {
    Representation::new_unchecked(l.clone(), l.dim(), l.ad_matrices())
}

/// Direct sum of Lie algebras, basis of `a` first.
pub fn direct_sum(a: &StructureAlgebra, b: &StructureAlgebra) -> StructureAlgebra {
    let (n, m) = (a.dim(), b.dim());
    let table = Bilinear::from_fn(n + m, |i, j| {
        let mut v = zero_vec(n + m);
        if i < n && j < n {
            add_sparse(&mut v[..n], &Rational::one(), a.table().get(i, j));
        } else if i >= n && j >= n {
            add_sparse(&mut v[n..], &Rational::one(), b.table().get(i - n, j - n));
        }
        v
    });
    let mut labels = a.labels().to_vec();
    labels.extend(b.labels().iter().map(|l| format!("{l}'")));
    StructureAlgebra::with_labels(table, labels)
}
