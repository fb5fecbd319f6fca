use std::fmt;

use rayon::prelude::*;

use crate::exactla::{is_zero_vec, zero_vec, Vector};

/// A basis tuple on which an identity fails, with both sides evaluated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Counterexample {
    pub identity: String,
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl Counterexample {
    pub fn new(identity: impl Into<String>, indices: Vec<usize>, lhs: Vector, rhs: Vector) -> Self {
        Counterexample { identity: identity.into(), indices, lhs, rhs }
    }

    /// Counterexample for an identity of the form `expr = 0`.
    pub fn nonzero(identity: impl Into<String>, indices: Vec<usize>, value: Vector) -> Self {
        let n = value.len();
        Counterexample::new(identity, indices, value, zero_vec(n))
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &Vector| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "{} fails at {:?}: lhs [{}] rhs [{}]", self.identity, self.indices, show(&self.lhs), show(&self.rhs))
    }
}

/// `Ok(())` when an identity holds on every basis tuple.
pub type Certificate = std::result::Result<(), Counterexample>;

/// Compare two sides; a mismatch becomes a counterexample.
pub fn expect_equal(identity: &str, indices: &[usize], lhs: Vector, rhs: Vector) -> Option<Counterexample> {
    (lhs != rhs).then(|| Counterexample::new(identity, indices.to_vec(), lhs, rhs))
}

pub fn expect_zero(identity: &str, indices: &[usize], value: Vector) -> Option<Counterexample> {
    (!is_zero_vec(&value)).then(|| Counterexample::nonzero(identity, indices.to_vec(), value))
}

/// Sweep all tuples in `[0, n)^arity` in lexicographic order, in parallel over
/// the leading index, returning the lexicographically least failure.
pub fn sweep(n: usize, arity: usize, check: impl Fn(&[usize]) -> Option<Counterexample> + Sync) -> Certificate {
    sweep_box(&vec![n; arity], check)
}

/// As [`sweep`], over the box `[0, dims[0]) × [0, dims[1]) × …`.
pub fn sweep_box(dims: &[usize], check: impl Fn(&[usize]) -> Option<Counterexample> + Sync) -> Certificate {
    if dims.is_empty() || dims.contains(&0) {
        return Ok(());
    }
    let arity = dims.len();
    let found = (0..dims[0]).into_par_iter().find_map_first(|first| {
        let mut idx = vec![0; arity];
        idx[0] = first;
        loop {
            if let Some(c) = check(&idx) {
                return Some(c);
            }
            let mut pos = arity - 1;
            loop {
                if pos == 0 {
                    return None;
                }
                idx[pos] += 1;
                if idx[pos] < dims[pos] {
                    break;
                }
                idx[pos] = 0;
                pos -= 1;
            }
        }
    });
    match found {
        Some(c) => Err(c),
        None => Ok(()),
    }
}
