use std::sync::Arc;

use super::linear::sl_of;
use crate::algcore::Representation;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rational, Subspace, Vector};

/// `sl₂` (basis `e, h, f`) on binary forms of degree `m`, basis `x^(m−k) y^k`.
pub fn sl2_symmetric_power(m: usize) -> Representation {
    let sl2 = sl_of(2).expect("n = 2");
    let d = m + 1;
    let mut e = Matrix::zeros(d, d);
    let mut h = Matrix::zeros(d, d);
    let mut f = Matrix::zeros(d, d);
    for k in 0..d {
        h[(k, k)] = Rational::from(m as i64 - 2 * k as i64);
        if k > 0 {
            // x ∂_y
            e[(k - 1, k)] = Rational::from(k);
        }
        if k < m {
            // y ∂_x
            f[(k + 1, k)] = Rational::from(m - k);
        }
    }
    Representation::new(sl2.algebra().clone(), d, vec![e, h, f]).expect("symmetric powers are modules")
}

fn same_algebra(r1: &Representation, r2: &Representation) -> Result<()> {
    if Arc::ptr_eq(r1.algebra(), r2.algebra()) || r1.algebra() == r2.algebra() {
        Ok(())
    } else {
        Err(Error::ActingAlgebraMismatch)
    }
}

/// `ρ₁(x) ⊗ 1 + 1 ⊗ ρ₂(x)`, basis index `i * dim₂ + j`.
pub fn tensor_rep(r1: &Representation, r2: &Representation) -> Result<Representation> {
    same_algebra(r1, r2)?;
    let (a, b) = (r1.module_dim(), r2.module_dim());
    let (ia, ib) = (Matrix::identity(a), Matrix::identity(b));
    let action = r1.action().iter().zip(r2.action()).map(|(x, y)| x.kronecker(&ib).add(&ia.kronecker(y))).collect();
    Ok(Representation::new_unchecked(r1.algebra().clone(), a * b, action))
}

/// Index table for unordered pairs `(i, j)` with `i < j` (or `i ≤ j` when `diagonal`).
#[allow(clippy::needless_range_loop)]
fn pair_index(n: usize, diagonal: bool) -> (usize, Vec<Vec<usize>>) {
    let mut table = vec![vec![usize::MAX; n]; n];
    let mut count = 0;
    for i in 0..n {
        for j in (if diagonal { i } else { i + 1 })..n {
            table[i][j] = count;
            table[j][i] = count;
            count += 1;
        }
    }
    (count, table)
}

/// `Λ²`, basis `eᵢ ∧ eⱼ` for `i < j` in lexicographic order.
pub fn exterior_square_rep(r: &Representation) -> Representation {
    let n = r.module_dim();
    let (d, index) = pair_index(n, false);
    // c · (e_a ∧ e_b) added to column `col`
    let add = |m: &mut Matrix, col: usize, a: usize, b: usize, c: &Rational| {
        if a != b && !c.is_zero() {
            if a < b {
                m[(index[a][b], col)] += c;
            } else {
                m[(index[a][b], col)] -= c;
            }
        }
    };
    let action = r
        .action()
        .iter()
        .map(|x| {
            let mut m = Matrix::zeros(d, d);
            for i in 0..n {
                for j in i + 1..n {
                    let col = index[i][j];
                    for k in 0..n {
                        add(&mut m, col, k, j, &x[(k, i)]);
                        add(&mut m, col, i, k, &x[(k, j)]);
                    }
                }
            }
            m
        })
        .collect();
    Representation::new_unchecked(r.algebra().clone(), d, action)
}

/// `S²`, basis `eᵢeⱼ` for `i ≤ j` in lexicographic order.
pub fn symmetric_square_rep(r: &Representation) -> Representation {
    let n = r.module_dim();
    let (d, index) = pair_index(n, true);
    let action = r
        .action()
        .iter()
        .map(|x| {
            let mut m = Matrix::zeros(d, d);
            for i in 0..n {
                for j in i..n {
                    let col = index[i][j];
                    for k in 0..n {
                        if !x[(k, i)].is_zero() {
                            m[(index[k][j], col)] += &x[(k, i)];
                        }
                        if !x[(k, j)].is_zero() {
                            m[(index[i][k], col)] += &x[(k, j)];
                        }
                    }
                }
            }
            m
        })
        .collect();
    Representation::new_unchecked(r.algebra().clone(), d, action)
}

/// Action on an invariant subspace, in the subspace's canonical basis.
pub fn restrict_to_submodule(r: &Representation, s: &Subspace) -> Result<Representation> {
    if s.ambient_dim() != r.module_dim() {
        return Err(Error::DimensionMismatch { expected: r.module_dim(), found: s.ambient_dim() });
    }
    let mut action = Vec::with_capacity(r.action().len());
    for (i, x) in r.action().iter().enumerate() {
        let mut cols: Vec<Vector> = Vec::with_capacity(s.dim());
        for b in s.basis() {
            let c = s
                .coordinates(&x.mul_vec(b))
                .ok_or_else(|| Error::InvalidInput(format!("subspace is not invariant under basis element {i}")))?;
            cols.push(c);
        }
        action.push(Matrix::from_columns(s.dim(), &cols));
    }
    Ok(Representation::new_unchecked(r.algebra().clone(), s.dim(), action))
}
