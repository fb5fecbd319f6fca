use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;

use super::roots::{weyl_dim, RootSystem, Weight};
use crate::error::{Error, Result};
use crate::exactla::Rational;

/// Default limit on the dimension of any character computed.
pub const DEFAULT_CAP: u64 = 4000;

/// Weight multiplicities of a finite-dimensional module.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeightChar {
    mult: BTreeMap<Weight, u64>,
}

impl WeightChar {
    pub fn from_map(mult: BTreeMap<Weight, u64>) -> Self {
        WeightChar { mult: mult.into_iter().filter(|(_, m)| *m > 0).collect() }
    }

    pub fn mult(&self, w: &[i64]) -> u64 {
        self.mult.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.mult.iter()
    }

    pub fn weights(&self) -> &BTreeMap<Weight, u64> {
        &self.mult
    }

    pub fn total(&self) -> u64 {
        self.mult.values().sum()
    }

    /// Multiplicities of the dominant weights only.
    pub fn dominant(&self) -> BTreeMap<Weight, u64> {
        self.mult.iter().filter(|(w, _)| w.iter().all(|x| *x >= 0)).map(|(w, m)| (w.clone(), *m)).collect()
    }

    /// Multiplicities are invariant under each simple reflection.
    pub fn is_weyl_symmetric(&self, rs: &RootSystem) -> bool {
        (0..rs.rank()).all(|i| self.mult.iter().all(|(w, m)| self.mult(&rs.reflect(w, i)) == *m))
    }

    pub fn add(&self, other: &WeightChar) -> WeightChar {
        let mut out = self.mult.clone();
        for (w, m) in &other.mult {
            *out.entry(w.clone()).or_default() += m;
        }
        WeightChar::from_map(out)
    }

    /// Character of the tensor product.
    pub fn product(&self, other: &WeightChar) -> WeightChar {
        let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
        for (a, m) in &self.mult {
            for (b, n) in &other.mult {
                let w: Weight = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *out.entry(w).or_default() += m * n;
            }
        }
        WeightChar { mult: out }
    }

    /// Adams operation: `ψ²χ(ν) = χ(ν/2)`.
    fn adams2(&self, nu: &[i64]) -> u64 {
        if nu.iter().any(|x| x % 2 != 0) {
            return 0;
        }
        let half: Weight = nu.iter().map(|x| x / 2).collect();
        self.mult(&half)
    }

    fn square(&self, sign: i64) -> WeightChar {
        let sq = self.product(self);
        let mult = sq
            .mult
            .iter()
            .map(|(w, m)| {
                let v = *m as i64 + sign * self.adams2(w) as i64;
                (w.clone(), (v / 2) as u64)
            })
            .collect();
        WeightChar::from_map(mult)
    }

    pub fn exterior_square(&self) -> WeightChar {
        self.square(-1)
    }

    pub fn symmetric_square(&self) -> WeightChar {
        self.square(1)
    }
}

fn check_cap(dim: u64, cap: u64) -> Result<()> {
    if dim > cap {
        return Err(Error::CapExceeded { limit: cap as usize, needed: dim as usize });
    }
    Ok(())
}

/// Dominant weights `μ ≤ λ`, reached from `λ` through dominant weights by
/// subtracting positive roots.
pub fn dominant_weights_below(rs: &RootSystem, lambda: &[i64]) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::new();
    seen.insert(lambda.to_vec());
    let mut stack = vec![lambda.to_vec()];
    while let Some(mu) = stack.pop() {
        for alpha in rs.positive_roots() {
            let nu: Weight = mu.iter().zip(alpha).map(|(x, a)| x - a).collect();
            if rs.is_dominant(&nu) && seen.insert(nu.clone()) {
                stack.push(nu);
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    out.sort();
    out
}

/// Multiplicities of the dominant weights of `V(λ)` by Freudenthal's
/// recursion `((λ+ρ,λ+ρ) − (μ+ρ,μ+ρ)) m(μ) = 2 Σ_{α>0} Σ_{k≥1} (μ+kα, α) m(μ+kα)`.
pub fn dominant_multiplicities(rs: &RootSystem, lambda: &[i64], cap: u64) -> Result<BTreeMap<Weight, u64>> {
    check_cap(weyl_dim(rs, lambda)?, cap)?;
    let rho = rs.rho();
    let plus_rho = |w: &[i64]| -> Weight { w.iter().zip(&rho).map(|(x, r)| x + r).collect() };
    let top = {
        let s = plus_rho(lambda);
        rs.inner(&s, &s)
    };
    // depth = height of λ − μ
    let depth = |mu: &[i64]| -> Rational {
        let d: Weight = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        rs.simple_coordinates(&d).into_iter().fold(Rational::zero(), |acc, x| acc + x)
    };
    let mut levels: BTreeMap<Rational, Vec<Weight>> = BTreeMap::new();
    for mu in dominant_weights_below(rs, lambda) {
        levels.entry(depth(&mu)).or_default().push(mu);
    }
    let mut mult: HashMap<Weight, u64> = HashMap::new();
    for (d, level) in levels {
        if d.is_zero() {
            mult.insert(lambda.to_vec(), 1);
            continue;
        }
        let known = &mult;
        let computed: Vec<(Weight, u64)> = level
            .par_iter()
            .map(|mu| {
                let lookup = |w: &Weight| known.get(&rs.dominant_representative(w)).copied().unwrap_or(0);
                let mut rhs = Rational::zero();
                for alpha in rs.positive_roots() {
                    let mut nu = mu.clone();
                    loop {
                        for (x, a) in nu.iter_mut().zip(alpha) {
                            *x += a;
                        }
                        let m = lookup(&nu);
                        if m == 0 {
                            break;
                        }
                        rhs += rs.inner(&nu, alpha) * Rational::from(m as i64);
                    }
                }
                rhs *= Rational::from(2);
                let s = plus_rho(mu);
                let value = rhs / (&top - &rs.inner(&s, &s));
                let m = value.to_i64().and_then(|v| u64::try_from(v).ok()).expect("multiplicities are nonnegative integers");
                (mu.clone(), m)
            })
            .collect();
        mult.extend(computed);
    }
    Ok(mult.into_iter().filter(|(_, m)| *m > 0).collect())
}

/// Full character of `V(λ)`; fails if `dim V(λ)` exceeds `cap`.
pub fn freudenthal_char_capped(rs: &RootSystem, lambda: &[i64], cap: u64) -> Result<WeightChar> {
    let dominant = dominant_multiplicities(rs, lambda, cap)?;
    let mut mult = BTreeMap::new();
    for (mu, m) in dominant {
        for w in rs.orbit(&mu) {
            mult.insert(w, m);
        }
    }
    Ok(WeightChar { mult })
}

pub fn freudenthal_char(rs: &RootSystem, lambda: &[i64]) -> Result<WeightChar> {
    freudenthal_char_capped(rs, lambda, DEFAULT_CAP)
}

/// Irreducible summands with multiplicity, largest first.
pub type Decomposition = Vec<(Weight, u64)>;

/// Greedy peeling: take the dominant weight with positive multiplicity that is
/// lexicographically largest in simple-root coordinates (which refines the
/// dominance order), subtract its irreducible character, repeat.
pub fn decompose(rs: &RootSystem, ch: &WeightChar) -> Result<Decomposition> {
    decompose_capped(rs, ch, DEFAULT_CAP)
}

pub fn decompose_capped(rs: &RootSystem, ch: &WeightChar, cap: u64) -> Result<Decomposition> {
    let mut rest: BTreeMap<Weight, i64> = ch.dominant().into_iter().map(|(w, m)| (w, m as i64)).collect();
    let mut out = Vec::new();
    loop {
        if rest.values().any(|m| *m < 0) {
            return Err(Error::NegativeMultiplicity);
        }
        let Some(top) = rest
            .iter()
            .filter(|(_, m)| **m > 0)
            .map(|(w, _)| w)
            .max_by(|a, b| rs.simple_coordinates(a).cmp(&rs.simple_coordinates(b)))
            .cloned()
        else {
            break;
        };
        let k = rest[&top];
        for (w, m) in dominant_multiplicities(rs, &top, cap.max(1))? {
            *rest.entry(w).or_default() -= k * m as i64;
        }
        rest.retain(|_, m| *m != 0);
        out.push((top, k as u64));
    }
    Ok(out)
}

pub fn tensor_decompose(rs: &RootSystem, lambda: &[i64], mu: &[i64]) -> Result<Decomposition> {
    let a = freudenthal_char(rs, lambda)?;
    let b = freudenthal_char(rs, mu)?;
    check_cap(a.total() * b.total(), DEFAULT_CAP)?;
    decompose(rs, &a.product(&b))
}

pub fn lambda2_decompose(rs: &RootSystem, lambda: &[i64]) -> Result<Decomposition> {
    let a = freudenthal_char(rs, lambda)?;
    check_cap(a.total() * a.total(), DEFAULT_CAP)?;
    decompose(rs, &a.exterior_square())
}

pub fn sym2_decompose(rs: &RootSystem, lambda: &[i64]) -> Result<Decomposition> {
    let a = freudenthal_char(rs, lambda)?;
    check_cap(a.total() * a.total(), DEFAULT_CAP)?;
    decompose(rs, &a.symmetric_square())
}
