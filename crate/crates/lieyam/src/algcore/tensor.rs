use crate::exactla::{zero_vec, Matrix, Rational, Vector};

/// Sparse vector: `(index, value)` pairs sorted by index, no zero values.
pub type Sparse = Vec<(usize, Rational)>;

pub fn sparse(v: &[Rational]) -> Sparse {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn densify(s: &Sparse, n: usize) -> Vector {
    let mut v = zero_vec(n);
    for (i, x) in s {
        v[*i] = x.clone();
    }
    v
}

/// `acc += c * s`
pub fn add_sparse(acc: &mut [Rational], c: &Rational, s: &Sparse) {
    if c.is_zero() {
        return;
    }
    for (i, x) in s {
        acc[*i] += c * x;
    }
}

fn nonzero(v: &[Rational]) -> impl Iterator<Item = (usize, &Rational)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero())
}

/// Bilinear map `k^n × k^n → k^n` given on basis pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bilinear {
    dim: usize,
    entries: Vec<Sparse>,
}

impl Bilinear {
    pub fn zero(dim: usize) -> Self {
        Bilinear { dim, entries: vec![Vec::new(); dim * dim] }
    }

    /// `f(i, j)` is the product of basis vectors `i` and `j`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim, "product vector has wrong length");
                entries.push(sparse(&v));
            }
        }
        Bilinear { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Sparse {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: &[Rational]) {
        self.entries[i * self.dim + j] = sparse(v);
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> Rational {
        self.get(i, j).iter().find(|(l, _)| *l == k).map_or_else(Rational::zero, |(_, x)| x.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    pub fn basis(&self, i: usize, j: usize) -> Vector {
        densify(self.get(i, j), self.dim)
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = zero_vec(self.dim);
        let ys: Vec<(usize, &Rational)> = nonzero(y).collect();
        for (i, a) in nonzero(x) {
            for &(j, b) in &ys {
                add_sparse(&mut out, &(a * b), self.get(i, j));
            }
        }
        out
    }

    /// Product of an arbitrary vector with basis vector `j`.
    pub fn apply_left(&self, x: &[Rational], j: usize) -> Vector {
        let mut out = zero_vec(self.dim);
        for (i, a) in nonzero(x) {
            add_sparse(&mut out, a, self.get(i, j));
        }
        out
    }

    /// Product of basis vector `i` with an arbitrary vector.
    pub fn apply_right(&self, i: usize, y: &[Rational]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (j, b) in nonzero(y) {
            add_sparse(&mut out, b, self.get(i, j));
        }
        out
    }

    /// Matrix of `y ↦ eᵢ·y`.
    pub fn left_matrix(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, x) in self.get(i, j) {
                m[(*k, j)] = x.clone();
            }
        }
        m
    }

    /// Matrix of `x ↦ x·eⱼ`.
    pub fn right_matrix(&self, j: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for (k, x) in self.get(i, j) {
                m[(*k, i)] = x.clone();
            }
        }
        m
    }

    /// Same map in the basis given by the columns of `p` (new ← old).
    pub fn transport(&self, p: &Matrix, p_inv: &Matrix) -> Bilinear {
        let cols: Vec<Vector> = (0..self.dim).map(|a| p_inv.column(a)).collect();
        Bilinear::from_fn(self.dim, |a, b| p.mul_vec(&self.apply(&cols[a], &cols[b])))
    }
}

/// Trilinear map `k^n × k^n × k^n → k^n` given on basis triples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Trilinear {
    dim: usize,
    entries: Vec<Sparse>,
}

impl Trilinear {
    pub fn zero(dim: usize) -> Self {
        Trilinear { dim, entries: vec![Vec::new(); dim * dim * dim] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Vector) -> Self {
        let mut entries = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let v = f(i, j, k);
                    assert_eq!(v.len(), dim, "product vector has wrong length");
                    entries.push(sparse(&v));
                }
            }
        }
        Trilinear { dim, entries }
    }

    /// Built from the operators `z ↦ (eᵢ, eⱼ, z)`.
    pub fn from_operators(dim: usize, op: impl Fn(usize, usize) -> Matrix) -> Self {
        let mut t = Trilinear::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                let m = op(i, j);
                for k in 0..dim {
                    t.entries[(i * dim + j) * dim + k] = sparse(&m.column(k));
                }
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Sparse {
        &self.entries[(i * self.dim + j) * self.dim + k]
    }

    pub fn entry(&self, i: usize, j: usize, k: usize, l: usize) -> Rational {
        self.get(i, j, k).iter().find(|(m, _)| *m == l).map_or_else(Rational::zero, |(_, x)| x.clone())
    }

    pub fn set_entry(&mut self, i: usize, j: usize, k: usize, l: usize, value: Rational) {
        let idx = (i * self.dim + j) * self.dim + k;
        let mut v = densify(&self.entries[idx], self.dim);
        v[l] = value;
        self.entries[idx] = sparse(&v);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    pub fn basis(&self, i: usize, j: usize, k: usize) -> Vector {
        densify(self.get(i, j, k), self.dim)
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        let mut out = zero_vec(self.dim);
        let ys: Vec<(usize, &Rational)> = nonzero(y).collect();
        let zs: Vec<(usize, &Rational)> = nonzero(z).collect();
        for (i, a) in nonzero(x) {
            for &(j, b) in &ys {
                let ab = a * b;
                for &(k, c) in &zs {
                    add_sparse(&mut out, &(&ab * c), self.get(i, j, k));
                }
            }
        }
        out
    }

    /// `(x, eⱼ, eₖ)` for arbitrary `x`.
    pub fn apply_first(&self, x: &[Rational], j: usize, k: usize) -> Vector {
        let mut out = zero_vec(self.dim);
        for (i, a) in nonzero(x) {
            add_sparse(&mut out, a, self.get(i, j, k));
        }
        out
    }

    /// `(eᵢ, y, eₖ)` for arbitrary `y`.
    pub fn apply_second(&self, i: usize, y: &[Rational], k: usize) -> Vector {
        let mut out = zero_vec(self.dim);
        for (j, b) in nonzero(y) {
            add_sparse(&mut out, b, self.get(i, j, k));
        }
        out
    }

    /// `(eᵢ, eⱼ, z)` for arbitrary `z`.
    pub fn apply_third(&self, i: usize, j: usize, z: &[Rational]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (k, c) in nonzero(z) {
            add_sparse(&mut out, c, self.get(i, j, k));
        }
        out
    }

    /// Matrix of `z ↦ (eᵢ, eⱼ, z)`.
    pub fn operator(&self, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for k in 0..self.dim {
            for (l, x) in self.get(i, j, k) {
                m[(*l, k)] = x.clone();
            }
        }
        m
    }

    /// Matrix of `z ↦ (x, y, z)`.
    pub fn operator_of(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, a) in nonzero(x) {
            for (j, b) in nonzero(y) {
                m.add_scaled(&(a * b), &self.operator(i, j));
            }
        }
        m
    }

    pub fn transport(&self, p: &Matrix, p_inv: &Matrix) -> Trilinear {
        let cols: Vec<Vector> = (0..self.dim).map(|a| p_inv.column(a)).collect();
        Trilinear::from_fn(self.dim, |a, b, c| p.mul_vec(&self.apply(&cols[a], &cols[b], &cols[c])))
    }
}
