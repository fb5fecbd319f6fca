use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{q, qi, Matrix, Rational};

/// A weight in fundamental-weight coordinates.
pub type Weight = Vec<i64>;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl RootType {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => RootType::A,
            "B" => RootType::B,
            "C" => RootType::C,
            "D" => RootType::D,
            "E" => RootType::E,
            "F" => RootType::F,
            "G" => RootType::G,
            other => return Err(Error::InvalidRootSystem(other.chars().next().unwrap_or('?'), 0)),
        })
    }
}

impl RootType {
    pub fn letter(self) -> char {
        format!("{self:?}").chars().next().expect("variant name")
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Root system of a simple Lie algebra, numbered as in Humphreys
/// (Bourbaki for the exceptional types).
#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: RootType,
    rank: usize,
    /// `A[i][j] = ⟨αᵢ, αⱼ^∨⟩ = 2(αᵢ,αⱼ)/(αⱼ,αⱼ)`
    cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, by height.
    positive_simple: Vec<Vec<i64>>,
    /// Positive roots in fundamental-weight coordinates.
    positive: Vec<Weight>,
    /// `(λᵢ, λⱼ)` with long roots of squared length 2.
    weight_form: Matrix,
    /// `A⁻¹`, taking fundamental to simple-root coordinates.
    cartan_inv: Matrix,
}

/// Inner products of the simple roots, long roots normalized to 2.
fn simple_gram(kind: RootType, n: usize) -> Result<Matrix> {
    let valid = match kind {
        RootType::A => n >= 1,
        RootType::B | RootType::C => n >= 2,
        RootType::D => n >= 4,
        RootType::E => (6..=8).contains(&n),
        RootType::F => n == 4,
        RootType::G => n == 2,
    };
    if !valid {
        return Err(Error::InvalidRootSystem(kind.letter(), n));
    }
    let mut g = Matrix::zeros(n, n);
    let link = |g: &mut Matrix, i: usize, j: usize, v: Rational| {
        g[(i, j)] = v.clone();
        g[(j, i)] = v;
    };
    match kind {
        RootType::A | RootType::B | RootType::C | RootType::D => {
            for i in 0..n {
                g[(i, i)] = qi(2);
            }
            for i in 0..n - 1 {
                link(&mut g, i, i + 1, qi(-1));
            }
            match kind {
                RootType::B => g[(n - 1, n - 1)] = qi(1),
                RootType::C => {
                    for i in 0..n - 1 {
                        g[(i, i)] = qi(1);
                    }
                    for i in 0..n - 2 {
                        link(&mut g, i, i + 1, q(-1, 2));
                    }
                }
                RootType::D => {
                    link(&mut g, n - 2, n - 1, qi(0));
                    link(&mut g, n - 3, n - 1, qi(-1));
                }
                _ => {}
            }
        }
        RootType::E => {
            for i in 0..n {
                g[(i, i)] = qi(2);
            }
            // 1-3-4-5-…-n chain, with 2 attached to 4
            link(&mut g, 0, 2, qi(-1));
            link(&mut g, 1, 3, qi(-1));
            for i in 2..n - 1 {
                link(&mut g, i, i + 1, qi(-1));
            }
        }
        RootType::F => {
            for (i, d) in [2, 2, 1, 1].iter().enumerate() {
                g[(i, i)] = qi(*d);
            }
            link(&mut g, 0, 1, qi(-1));
            link(&mut g, 1, 2, qi(-1));
            link(&mut g, 2, 3, q(-1, 2));
        }
        RootType::G => {
            g[(0, 0)] = q(2, 3);
            g[(1, 1)] = qi(2);
            link(&mut g, 0, 1, qi(-1));
        }
    }
    Ok(g)
}

impl RootSystem {
    pub fn kind(&self) -> RootType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive
    }

    pub fn positive_roots_simple(&self) -> &[Vec<i64>] {
        &self.positive_simple
    }

    pub fn rho(&self) -> Weight {
        vec![1; self.rank]
    }

    /// `αᵢ` in fundamental-weight coordinates: row `i` of the Cartan matrix.
    pub fn simple_root(&self, i: usize) -> Weight {
        self.cartan[i].clone()
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> Rational {
        let mut s = Rational::zero();
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if *y != 0 {
                    s += &self.weight_form[(i, j)] * &Rational::from(x * y);
                }
            }
        }
        s
    }

    /// Coordinates in the basis of simple roots.
    pub fn simple_coordinates(&self, w: &[i64]) -> Vec<Rational> {
        let v: Vec<Rational> = w.iter().map(|x| Rational::from(*x)).collect();
        self.cartan_inv.vec_mul(&v)
    }

    pub fn is_dominant(&self, w: &[i64]) -> bool {
        w.len() == self.rank && w.iter().all(|x| *x >= 0)
    }

    pub fn require_dominant(&self, w: &[i64]) -> Result<()> {
        if w.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, found: w.len() });
        }
        if !self.is_dominant(w) {
            return Err(Error::NonDominant);
        }
        Ok(())
    }

    /// `sᵢ(w) = w − ⟨w, αᵢ^∨⟩ αᵢ`
    pub fn reflect(&self, w: &[i64], i: usize) -> Weight {
        let c = w[i];
        w.iter().zip(&self.cartan[i]).map(|(x, a)| x - c * a).collect()
    }

    /// Dominant weight in the Weyl orbit of `w`.
    pub fn dominant_representative(&self, w: &[i64]) -> Weight {
        let mut w = w.to_vec();
        while let Some(i) = w.iter().position(|x| *x < 0) {
            w = self.reflect(&w, i);
        }
        w
    }

    /// Weyl orbit of a weight by closure under simple reflections.
    pub fn orbit(&self, w: &[i64]) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut stack = vec![w.to_vec()];
        seen.insert(w.to_vec());
        while let Some(x) = stack.pop() {
            for i in 0..self.rank {
                if x[i] != 0 {
                    let y = self.reflect(&x, i);
                    if seen.insert(y.clone()) {
                        stack.push(y);
                    }
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort();
        out
    }
}

/// Cartan data and positive roots; roots are generated from the simple
/// ones by the string rule `β + αᵢ` is a root iff `p − ⟨β, αᵢ^∨⟩ > 0`.
pub fn root_system(kind: RootType, rank: usize) -> Result<RootSystem> {
    let gram = simple_gram(kind, rank)?;
    let n = rank;
    let cartan: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = Rational::from(2) * &gram[(i, j)] / &gram[(j, j)];
                    v.to_i64().expect("Cartan entries are integers")
                })
                .collect()
        })
        .collect();
    let cartan_m = Matrix::from_fn(n, n, |i, j| Rational::from(cartan[i][j]));
    let cartan_inv = cartan_m.inverse().expect("Cartan matrix is invertible");
    // (λᵢ, αⱼ) = δᵢⱼ (αⱼ,αⱼ)/2 and λᵢ = Σ (A⁻¹)ᵢₖ αₖ
    let weight_form = Matrix::from_fn(n, n, |i, j| &cartan_inv[(i, j)] * &gram[(j, j)] * q(1, 2));

    let mut roots: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut known: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut level = roots.clone();
    while !level.is_empty() {
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..n {
                // ⟨β, αᵢ^∨⟩ = Σⱼ cⱼ A[j][i]
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        roots.extend(next.iter().cloned());
        level = next;
    }
    let positive = roots.iter().map(|c| (0..n).map(|j| (0..n).map(|i| c[i] * cartan[i][j]).sum()).collect()).collect();
    Ok(RootSystem { kind, rank, cartan, positive_simple: roots, positive, weight_form, cartan_inv })
}

/// `Π_{α>0} (λ+ρ, α)/(ρ, α)`
pub fn weyl_dim(rs: &RootSystem, lambda: &[i64]) -> Result<u64> {
    rs.require_dominant(lambda)?;
    let rho = rs.rho();
    let shifted: Weight = lambda.iter().map(|x| x + 1).collect();
    let mut d = Rational::one();
    for alpha in rs.positive_roots() {
        d = d * rs.inner(&shifted, alpha) / rs.inner(&rho, alpha);
    }
    d.to_i64()
        .and_then(|x| u64::try_from(x).ok())
        .ok_or_else(|| Error::InvalidInput(format!("dimension {d} does not fit in 64 bits")))
}
