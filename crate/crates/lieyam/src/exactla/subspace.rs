use super::matrix::{axpy, is_zero_vec, unit_vec, zero_vec, Matrix, Vector};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Subspace of `k^ambient` held as a reduced row echelon basis.
///
/// The basis is canonical: two equal subspaces have identical
/// representations, so `==` is set equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: (0..ambient).map(|i| unit_vec(ambient, i)).collect(), pivots: (0..ambient).collect() }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length differs from ambient dimension");
            e.insert(v.clone());
        }
        e.into_subspace()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coefficients of `v` in the canonical basis, or `None` if `v ∉ self`.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient dimension");
        // In reduced echelon form the coefficient of basis vector i is v[pivot_i].
        let coeffs: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (c, b) in coeffs.iter().zip(&self.basis) {
            axpy(&mut r, &-c, b);
        }
        is_zero_vec(&r).then_some(coeffs)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Vector with the given coordinates in the canonical basis.
    pub fn vector(&self, coords: &[Rational]) -> Vector {
        assert_eq!(coords.len(), self.dim());
        let mut v = zero_vec(self.ambient);
        for (c, b) in coords.iter().zip(&self.basis) {
            axpy(&mut v, c, b);
        }
        v
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut e = Echelon::from_subspace(self);
        for v in &other.basis {
            e.insert(v.clone());
        }
        Ok(e.into_subspace())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        // Solve Σ aᵢ sᵢ − Σ bⱼ tⱼ = 0; the intersection is spanned by Σ aᵢ sᵢ.
        let (d1, d2) = (self.dim(), other.dim());
        let m = Matrix::from_fn(
            self.ambient,
            d1 + d2,
            |i, j| {
                if j < d1 {
                    self.basis[j][i].clone()
                } else {
                    -&other.basis[j - d1][i]
                }
            },
        );
        let k = kernel(&m);
        let vectors: Vec<Vector> = k.basis.iter().map(|sol| self.vector(&sol[..d1])).collect();
        Ok(Subspace::span(self.ambient, &vectors))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    /// Matrix whose rows are the canonical basis vectors.
    pub fn basis_matrix(&self) -> Matrix {
        if self.basis.is_empty() {
            return Matrix::zeros(0, self.ambient);
        }
        Matrix::from_rows(self.basis.clone())
    }
}

/// Null space of `m` as a canonical subspace of `k^cols`.
pub fn kernel(m: &Matrix) -> Subspace {
    let (r, pivots) = m.rref();
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vector> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = unit_vec(n, f);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(row, f)];
            }
            v
        })
        .collect();
    Subspace::span(n, &vectors)
}

/// Some solution of `a·x = b`, or `None` when the system is inconsistent.
pub fn solve(a: &Matrix, b: &[Rational]) -> Result<Option<Vector>> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.rows(), found: b.len() });
    }
    let n = a.cols();
    let aug = Matrix::from_fn(a.rows(), n + 1, |i, j| if j < n { a[(i, j)].clone() } else { b[i].clone() });
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = zero_vec(n);
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, n)].clone();
    }
    Ok(Some(x))
}

/// `{v : b(v, s) = 0 for all s ∈ sub}` where `b(v, s) = vᵀ·gram·s`.
pub fn form_orthocomplement(gram: &Matrix, sub: &Subspace) -> Result<Subspace> {
    let n = sub.ambient_dim();
    if gram.rows() != n || gram.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: gram.rows() });
    }
    if sub.is_zero() {
        return Ok(Subspace::full(n));
    }
    let rows: Vec<Vector> = sub.basis().iter().map(|s| gram.mul_vec(s)).collect();
    Ok(kernel(&Matrix::from_rows(rows)))
}

/// Incrementally built echelon basis, kept fully reduced.
///
/// With tracking enabled every row also records its expression in terms of
/// the accepted (independent) input vectors, so membership queries can return
/// coefficients relative to the original spanning vectors.
#[derive(Clone, Debug)]
pub struct Echelon {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
    combos: Option<Vec<Vector>>,
    accepted: usize,
}

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Echelon { ambient, rows: Vec::new(), pivots: Vec::new(), combos: None, accepted: 0 }
    }

    pub fn tracking(ambient: usize) -> Self {
        Echelon { combos: Some(Vec::new()), ..Self::new(ambient) }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        Echelon { ambient: s.ambient, rows: s.basis.clone(), pivots: s.pivots.clone(), combos: None, accepted: s.dim() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Residual of `v` after elimination and the coefficients used per row.
    fn reduce(&self, v: &mut Vector) -> Vec<Rational> {
        let mut coeffs = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if !c.is_zero() {
                axpy(v, &-&c, row);
            }
            coeffs.push(c);
        }
        coeffs
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut r = v.to_vec();
        self.reduce(&mut r);
        is_zero_vec(&r)
    }

    /// Inserts `v`; returns true if it enlarged the span.
    pub fn insert(&mut self, v: Vector) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut r = v;
        let coeffs = self.reduce(&mut r);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let new_index = self.accepted;
        self.accepted += 1;
        let mut combo_new = None;
        if let Some(combos) = &self.combos {
            // r = (v − Σ cᵢ rowᵢ)/lead, rowᵢ = Σ combosᵢ · inputs
            let mut c = zero_vec(new_index + 1);
            c[new_index] = inv.clone();
            for (ci, combo) in coeffs.iter().zip(combos) {
                if !ci.is_zero() {
                    let f = -(ci * &inv);
                    for (k, x) in combo.iter().enumerate() {
                        if !x.is_zero() {
                            c[k] += &f * x;
                        }
                    }
                }
            }
            combo_new = Some(c);
        }
        // Keep the existing rows reduced with respect to the new pivot.
        for i in 0..self.rows.len() {
            let f = self.rows[i][p].clone();
            if f.is_zero() {
                continue;
            }
            let nf = -&f;
            axpy(&mut self.rows[i], &nf, &r);
            if let (Some(combos), Some(cn)) = (&mut self.combos, &combo_new) {
                let combo = &mut combos[i];
                combo.resize(new_index + 1, Rational::zero());
                axpy(combo, &nf, cn);
            }
        }
        if let (Some(combos), Some(cn)) = (&mut self.combos, combo_new) {
            for combo in combos.iter_mut() {
                combo.resize(new_index + 1, Rational::zero());
            }
            combos.push(cn);
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    /// Coefficients of `v` over the accepted input vectors (tracking mode).
    pub fn express(&self, v: &[Rational]) -> Option<Vector> {
        let combos = self.combos.as_ref().expect("express requires a tracking echelon");
        let mut r = v.to_vec();
        let coeffs = self.reduce(&mut r);
        if !is_zero_vec(&r) {
            return None;
        }
        let mut out = zero_vec(self.accepted);
        for (c, combo) in coeffs.iter().zip(combos) {
            if !c.is_zero() {
                for (k, x) in combo.iter().enumerate() {
                    if !x.is_zero() {
                        out[k] += c * x;
                    }
                }
            }
        }
        Some(out)
    }

    /// Solutions `x` of `row · x = 0` for every row, canonically.
    pub fn null_space(&self) -> Subspace {
        let n = self.ambient;
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut vectors = Vec::new();
        for f in (0..n).filter(|&f| !is_pivot[f]) {
            let mut v = zero_vec(n);
            v[f] = Rational::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[f].is_zero() {
                    v[p] = -&row[f];
                }
            }
            vectors.push(v);
        }
        Subspace::span(n, &vectors)
    }

    pub fn into_subspace(self) -> Subspace {
        let mut pairs: Vec<(usize, Vector)> = self.pivots.into_iter().zip(self.rows).collect();
        pairs.sort_by_key(|(p, _)| *p);
        let (pivots, basis) = pairs.into_iter().unzip();
        Subspace { ambient: self.ambient, basis, pivots }
    }
}

/// Coordinates relative to a fixed, not necessarily echelon, list of
/// linearly independent vectors.
#[derive(Clone, Debug)]
pub struct BasisSolver {
    echelon: Echelon,
    len: usize,
}

impl BasisSolver {
    /// Fails if the vectors are linearly dependent.
    pub fn new(ambient: usize, vectors: &[Vector]) -> Result<Self> {
        let mut echelon = Echelon::tracking(ambient);
        for v in vectors {
            if !echelon.insert(v.clone()) {
                return Err(Error::InvalidInput("basis vectors are linearly dependent".into()));
            }
        }
        Ok(BasisSolver { echelon, len: vectors.len() })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        self.echelon.express(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rational::qi;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| qi(x)).collect()
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Matrix::identity(2)).dim(), 0);
        assert_eq!(kernel(&Matrix::zeros(1, 3)).dim(), 3);
        let k = kernel(&Matrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(k, Subspace::span(2, &[v(&[-2, 1])]));
    }

    #[test]
    fn solve_examples() {
        let b = v(&[3, -1]);
        assert_eq!(solve(&Matrix::identity(2), &b).unwrap(), Some(b));
        let x = solve(&Matrix::from_i64(&[&[1, 1]]), &v(&[2])).unwrap().unwrap();
        assert_eq!(&x[0] + &x[1], qi(2));
        assert_eq!(solve(&Matrix::from_i64(&[&[1], &[1]]), &v(&[1, 2])).unwrap(), None);
        assert!(solve(&Matrix::identity(2), &v(&[1])).is_err());
    }

    #[test]
    fn coordinate_examples() {
        let line = Subspace::span(2, &[v(&[1, 1])]);
        assert_eq!(line.coordinates(&v(&[2, 2])), Some(v(&[2])));
        assert_eq!(Subspace::zero(2).coordinates(&v(&[1, 0])), None);
        assert_eq!(Subspace::full(2).coordinates(&v(&[5, 7])), Some(v(&[5, 7])));
    }

    #[test]
    fn intersection_examples() {
        let s = Subspace::span(3, &[v(&[1, 2, 3]), v(&[0, 1, 1])]);
        assert_eq!(s.intersect(&s).unwrap(), s);
        let a = Subspace::span(2, &[v(&[1, 0])]);
        let b = Subspace::span(2, &[v(&[1, 1])]);
        assert_eq!(a.intersect(&b).unwrap().dim(), 0);
        let p1 = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let p2 = Subspace::span(3, &[v(&[0, 1, 1]), v(&[1, 0, 1])]);
        let line = p1.intersect(&p2).unwrap();
        assert_eq!(line, Subspace::span(3, &[v(&[1, -1, 0])]));
        assert!(a.intersect(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn orthocomplement_examples() {
        let axis = Subspace::span(3, &[v(&[1, 0, 0])]);
        let perp = form_orthocomplement(&Matrix::identity(3), &axis).unwrap();
        assert_eq!(perp, Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]));
        let all = form_orthocomplement(&Matrix::identity(4), &Subspace::zero(4)).unwrap();
        assert_eq!(all.dim(), 4);
    }

    #[test]
    fn tracking_echelon_expresses_in_input_basis() {
        let inputs = [v(&[1, 1, 0]), v(&[0, 1, 1]), v(&[2, 3, 1])];
        let mut e = Echelon::tracking(3);
        assert!(e.insert(inputs[0].clone()));
        assert!(e.insert(inputs[1].clone()));
        assert!(!e.insert(inputs[2].clone()));
        assert_eq!(e.express(&inputs[2]), Some(v(&[2, 1])));
        assert_eq!(e.express(&v(&[1, 0, 0])), None);
        let s = BasisSolver::new(3, &inputs[..2]).unwrap();
        assert_eq!(s.coordinates(&v(&[3, 5, 2])), Some(v(&[3, 2])));
    }
}
