use std::sync::Arc;

use super::algebra::StructureAlgebra;
use super::form::{BilinearForm, Symmetry};
use crate::error::{Error, Result};
use crate::exactla::{unit_vec, Echelon, Matrix, Rational, Subspace, Vector};

/// Action of a structure-constant algebra on `k^module_dim`, one matrix per basis element.
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<StructureAlgebra>,
    module_dim: usize,
    action: Vec<Matrix>,
}

impl Representation {
    /// Checks shapes and, for a Lie algebra, `ρ([x,y]) = [ρ(x),ρ(y)]` on basis pairs.
    pub fn new(algebra: Arc<StructureAlgebra>, module_dim: usize, action: Vec<Matrix>) -> Result<Self> {
        let r = Self::checked_shapes(algebra, module_dim, action)?;
        if r.algebra.is_lie().is_ok() {
            let n = r.algebra.dim();
            for i in 0..n {
                for j in i + 1..n {
                    let lhs = r.action_of(&r.algebra.basis_product(i, j));
                    if lhs != r.action[i].commutator(&r.action[j]) {
                        return Err(Error::InvalidInput(format!("action is not a homomorphism on basis pair ({i}, {j})")));
                    }
                }
            }
        }
        Ok(r)
    }

    fn checked_shapes(algebra: Arc<StructureAlgebra>, module_dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch { expected: algebra.dim(), found: action.len() });
        }
        if let Some(m) = action.iter().find(|m| m.rows() != module_dim || m.cols() != module_dim) {
            return Err(Error::DimensionMismatch { expected: module_dim, found: m.rows().max(m.cols()) });
        }
        Ok(Representation { algebra, module_dim, action })
    }

    /// For actions known to be homomorphisms by construction.
    pub fn new_unchecked(algebra: Arc<StructureAlgebra>, module_dim: usize, action: Vec<Matrix>) -> Self {
        debug_assert_eq!(action.len(), algebra.dim());
        Representation { algebra, module_dim, action }
    }

    pub fn algebra(&self) -> &Arc<StructureAlgebra> {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn action_of(&self, x: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.module_dim, self.module_dim);
        for (c, a) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                m.add_scaled(c, a);
            }
        }
        m
    }

    fn same_algebra(&self, other: &Representation) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra {
            Ok(())
        } else {
            Err(Error::ActingAlgebraMismatch)
        }
    }

    /// `x ↦ −ρ(x)ᵀ`
    pub fn dual(&self) -> Representation {
        let action = self.action.iter().map(|m| m.transpose().scale(&-Rational::one())).collect();
        Representation::new_unchecked(self.algebra.clone(), self.module_dim, action)
    }

    /// Restriction to the subalgebra spanned by `s`, whose structure constants are `sub`.
    pub fn restrict(&self, sub: Arc<StructureAlgebra>, s: &Subspace) -> Result<Representation> {
        if s.dim() != sub.dim() || s.ambient_dim() != self.algebra.dim() {
            return Err(Error::DimensionMismatch { expected: sub.dim(), found: s.dim() });
        }
        let action = s.basis().iter().map(|v| self.action_of(v)).collect();
        Ok(Representation::new_unchecked(sub, self.module_dim, action))
    }

    /// Matrices generating the same associative algebra as the whole action.
    pub fn generators(&self) -> Vec<Matrix> {
        self.generator_indices().into_iter().map(|i| self.action[i].clone()).filter(|m| !m.is_zero()).collect()
    }

    /// Dimension of the unital associative algebra generated by the action.
    pub fn burnside_dimension(&self) -> usize {
        let n = self.module_dim;
        let gens = self.generators();
        let mut span = Echelon::new(n * n);
        let mut queue = Vec::new();
        let identity = Matrix::identity(n);
        span.insert(identity.flat().to_vec());
        queue.push(identity);
        while let Some(w) = queue.pop() {
            if span.dim() == n * n {
                break;
            }
            for g in &gens {
                let p = g.mul(&w);
                if span.insert(p.flat().to_vec()) {
                    queue.push(p);
                }
            }
        }
        span.dim()
    }

    /// Submodule generated by `v`.
    pub fn spin(&self, v: &[Rational]) -> Subspace {
        Spin::new(&self.generators(), v).span()
    }

    /// Irreducible over the algebraic closure.
    ///
    /// For a semisimple algebra the module is completely reducible, so absolute
    /// irreducibility is equivalent to a one-dimensional commutant, computed
    /// from a cyclic vector. Other algebras fall back to the Burnside closure,
    /// whose word products can get expensive in a basis with large rationals.
    pub fn absolutely_irreducible(&self) -> bool {
        let n = self.module_dim;
        if n == 0 {
            return false;
        }
        if !self.algebra.is_semisimple() {
            return self.burnside_dimension() == n * n;
        }
        let gens = self.generators();
        let spin = Spin::new(&gens, &unit_vec(n, 0));
        if spin.basis.len() < n {
            return false;
        }
        spin.intertwiner_rank(&gens, &gens, n, Some(n - 1)) == n - 1
    }

    /// Dimension of `Hom(self, other)` as modules.
    pub fn hom_dimension(&self, other: &Representation) -> Result<usize> {
        Ok(self.hom_space(other)?.len())
    }

    /// Basis of the module maps `self → other`, as `other.dim × self.dim` matrices.
    pub fn hom_space(&self, other: &Representation) -> Result<Vec<Matrix>> {
        self.same_algebra(other)?;
        let (m, n) = (self.module_dim, other.module_dim);
        if m == 0 || n == 0 {
            return Ok(Vec::new());
        }
        let gens_m = self.generator_indices();
        let gens_n: Vec<Matrix> = gens_m.iter().map(|&i| other.action[i].clone()).collect();
        let gens_m: Vec<Matrix> = gens_m.iter().map(|&i| self.action[i].clone()).collect();
        // Hom(M, N) ≅ Hom(N*, M*) by transposition, so a cyclic vector on
        // either side gives a small linear system; pick the smaller one.
        let dm: Vec<Matrix> = gens_m.iter().map(|g| g.transpose().scale(&-Rational::one())).collect();
        let dn: Vec<Matrix> = gens_n.iter().map(|g| g.transpose().scale(&-Rational::one())).collect();
        let direct = Spin::new(&gens_m, &unit_vec(m, 0));
        let direct_ok = direct.basis.len() == m;
        if direct_ok && n <= m {
            return Ok(direct.intertwiners(&gens_m, &gens_n));
        }
        let dual = Spin::new(&dn, &unit_vec(n, 0));
        if dual.basis.len() == n {
            return Ok(dual.intertwiners(&dn, &dm).into_iter().map(|t| t.transpose()).collect());
        }
        if direct_ok {
            return Ok(direct.intertwiners(&gens_m, &gens_n));
        }
        Ok(full_intertwiners(&gens_m, &gens_n))
    }

    /// Indices of acting-algebra basis elements to impose equivariance on.
    fn generator_indices(&self) -> Vec<usize> {
        if self.algebra.is_lie().is_ok() {
            self.algebra.lie_generators()
        } else {
            (0..self.algebra.dim()).collect()
        }
    }

    /// Invariant bilinear forms `ρ(x)ᵀB + Bρ(x) = 0`: a basis of the symmetric
    /// ones followed by a basis of the skew ones.
    pub fn invariant_forms(&self) -> Vec<(BilinearForm, Symmetry)> {
        let maps = self.hom_space(&self.dual()).expect("dual shares the acting algebra");
        let half = Rational::new(1, 2);
        let mut sym = Echelon::new(self.module_dim * self.module_dim);
        let mut skew = Echelon::new(self.module_dim * self.module_dim);
        for b in &maps {
            let t = b.transpose();
            sym.insert(b.add(&t).scale(&half).into_flat());
            skew.insert(b.sub(&t).scale(&half).into_flat());
        }
        let n = self.module_dim;
        let mut out = Vec::new();
        for v in sym.into_subspace().basis().iter().chain(skew.into_subspace().basis()) {
            let form = BilinearForm::new(Matrix::from_flat(n, n, v.clone()));
            let s = form.symmetry();
            out.push((form, s));
        }
        out
    }
}

/// Kernel of `T·ρ_M(g) = ρ_N(g)·T` over all `n × m` matrices `T`.
fn full_intertwiners(gens_m: &[Matrix], gens_n: &[Matrix]) -> Vec<Matrix> {
    let m = gens_m.first().map_or(0, Matrix::rows);
    let n = gens_n.first().map_or(0, Matrix::rows);
    let mut eqs = Echelon::new(n * m);
    for (gm, gn) in gens_m.iter().zip(gens_n) {
        // entry (a, b): Σ_c T[a][c] gm[c][b] − Σ_c gn[a][c] T[c][b]
        for a in 0..n {
            for b in 0..m {
                let mut row = crate::exactla::zero_vec(n * m);
                for c in 0..m {
                    row[a * m + c] += &gm[(c, b)];
                }
                for c in 0..n {
                    row[c * m + b] -= &gn[(a, c)];
                }
                eqs.insert(row);
            }
        }
    }
    eqs.null_space().basis().iter().map(|v| Matrix::from_flat(n, m, v.clone())).collect()
}

/// Spanning set of a cyclic submodule, each new vector recorded as a generator
/// applied to an earlier one.
struct Spin {
    basis: Vec<Vector>,
    /// `(parent, generator)` for every basis vector after the first.
    steps: Vec<(usize, usize)>,
}

impl Spin {
    fn new(gens: &[Matrix], v: &[Rational]) -> Spin {
        let n = v.len();
        let mut ech = Echelon::new(n);
        let mut basis = Vec::new();
        let mut steps = Vec::new();
        if !ech.insert(v.to_vec()) {
            return Spin { basis, steps };
        }
        basis.push(v.to_vec());
        let mut next = 0;
        while next < basis.len() && basis.len() < n {
            for (j, g) in gens.iter().enumerate() {
                let w = g.mul_vec(&basis[next]);
                if ech.insert(w.clone()) {
                    basis.push(w);
                    steps.push((next, j));
                    if basis.len() == n {
                        break;
                    }
                }
            }
            next += 1;
        }
        Spin { basis, steps }
    }

    fn span(&self) -> Subspace {
        let n = self.basis.first().map_or(0, Vec::len);
        Subspace::span(n, &self.basis)
    }

    /// Matrices `W_k` with `T(a_k) = W_k · T(a_0)`, built along the spin words
    /// using the target generators.
    fn word_maps(&self, gens_target: &[Matrix], target_dim: usize) -> Vec<Matrix> {
        let mut maps = vec![Matrix::identity(target_dim)];
        for &(parent, j) in &self.steps {
            let w = gens_target[j].mul(&maps[parent]);
            maps.push(w);
        }
        maps
    }

    /// Relations on `w = T(a_0)`: for each basis vector `a_i` and generator
    /// `g`, `Σ c_k W_k w = g_N W_i w` where `g a_i = Σ c_k a_k`. Returns the
    /// echelon of relations, stopping early once `stop_at` is reached.
    fn relations(
        &self,
        gens_source: &[Matrix],
        gens_target: &[Matrix],
        target_dim: usize,
        stop_at: Option<usize>,
    ) -> (Echelon, Vec<Matrix>) {
        let m = self.basis.len();
        let maps = self.word_maps(gens_target, target_dim);
        let a = Matrix::from_columns(m, &self.basis);
        let a_inv = a.inverse().expect("spin basis is a basis");
        let mut is_step = vec![vec![false; gens_source.len()]; m];
        for &(parent, j) in &self.steps {
            is_step[parent][j] = true;
        }
        let mut eqs = Echelon::new(target_dim);
        'outer: for i in 0..m {
            for (j, g) in gens_source.iter().enumerate() {
                if is_step[i][j] {
                    continue;
                }
                let coords = a_inv.mul_vec(&g.mul_vec(&self.basis[i]));
                let mut rel = gens_target[j].mul(&maps[i]);
                for (k, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        rel.add_scaled(&-c, &maps[k]);
                    }
                }
                for row in rel.row_vectors() {
                    eqs.insert(row);
                    if stop_at.is_some_and(|s| eqs.dim() >= s) {
                        break 'outer;
                    }
                }
            }
        }
        (eqs, maps)
    }

    fn intertwiner_rank(
        &self,
        gens_source: &[Matrix],
        gens_target: &[Matrix],
        target_dim: usize,
        stop_at: Option<usize>,
    ) -> usize {
        self.relations(gens_source, gens_target, target_dim, stop_at).0.dim()
    }

    /// Intertwiners from the cyclic source module, in standard coordinates.
    fn intertwiners(&self, gens_source: &[Matrix], gens_target: &[Matrix]) -> Vec<Matrix> {
        let target_dim = gens_target.first().map_or(0, Matrix::rows);
        let (eqs, maps) = self.relations(gens_source, gens_target, target_dim, None);
        let a = Matrix::from_columns(self.basis.len(), &self.basis);
        let a_inv = a.inverse().expect("spin basis is a basis");
        eqs.null_space()
            .basis()
            .iter()
            .map(|w| {
                let cols: Vec<Vector> = maps.iter().map(|mk| mk.mul_vec(w)).collect();
                Matrix::from_columns(target_dim, &cols).mul(&a_inv)
            })
            .collect()
    }
}
