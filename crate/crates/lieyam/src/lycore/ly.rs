use rayon::prelude::*;

use crate::algcore::{expect_equal, expect_zero, sweep, Bilinear, Certificate, Counterexample, Trilinear};
use crate::error::{Error, Result};
use crate::exactla::{add_vec, is_zero_vec, sub_vec, BasisSolver, Matrix, Rational, Vector};
use crate::liecon::{LinearLie, ReductivePair};
use crate::triples::{check_inner_derivations, inner_operator_basis};

/// How the products of an LY-algebra were obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    ClosedForm,
    Derived,
    /// Both recipes were run and agree exactly.
    Both,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::ClosedForm => "closed_form",
            Provenance::Derived => "derived",
            Provenance::Both => "both",
        }
    }
}

/// A module with a binary product `x·y` and a ternary product `[x,y,z]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LYAlgebra {
    binary: Bilinear,
    ternary: Trilinear,
    provenance: Provenance,
}

impl LYAlgebra {
    /// Checks the skew-symmetry axioms (the first two) on basis pairs.
    pub fn new(binary: Bilinear, ternary: Trilinear, provenance: Provenance) -> Result<Self> {
        let a = Self::new_unchecked(binary, ternary, provenance)?;
        {
            let [ly1, ly2, ..] = a.axiom_checks();
            ly1().and_then(|_| ly2()).map_err(|c| Error::Verification(c.to_string()))?;
        }
        Ok(a)
    }

    /// Skips the skew-symmetry checks; used to build perturbed negative controls.
    pub fn new_unchecked(binary: Bilinear, ternary: Trilinear, provenance: Provenance) -> Result<Self> {
        if binary.dim() != ternary.dim() {
            return Err(Error::DimensionMismatch { expected: binary.dim(), found: ternary.dim() });
        }
        Ok(LYAlgebra { binary, ternary, provenance })
    }

    pub fn module_dim(&self) -> usize {
        self.binary.dim()
    }

    pub fn binary(&self) -> &Bilinear {
        &self.binary
    }

    pub fn ternary(&self) -> &Trilinear {
        &self.ternary
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    /// The same algebra in the basis given by the columns of `p`.
    pub fn transport(&self, p: &Matrix) -> Result<Self> {
        let p_inv = p.inverse().ok_or_else(|| Error::InvalidInput("change of basis is singular".into()))?;
        // Coordinates change by p⁻¹ and basis vectors are the columns of p.
        Self::new(self.binary.transport(&p_inv, p), self.ternary.transport(&p_inv, p), self.provenance)
    }

    #[allow(clippy::type_complexity)]
    fn axiom_checks(&self) -> [Box<dyn Fn() -> Certificate + '_>; 6] {
        let n = self.module_dim();
        let bin = &self.binary;
        let ter = &self.ternary;
        [
            Box::new(move || {
                sweep(n, 2, |ix| expect_zero("LY1", ix, add_vec(&bin.basis(ix[0], ix[1]), &bin.basis(ix[1], ix[0]))))
            }),
            Box::new(move || {
                sweep(n, 3, |ix| {
                    let (i, j, k) = (ix[0], ix[1], ix[2]);
                    expect_zero("LY2", ix, add_vec(&ter.basis(i, j, k), &ter.basis(j, i, k)))
                })
            }),
            Box::new(move || {
                sweep(n, 3, |ix| {
                    let (i, j, k) = (ix[0], ix[1], ix[2]);
                    let mut s = vec![Rational::zero(); n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        s = add_vec(&s, &ter.basis(a, b, c));
                        s = add_vec(&s, &bin.apply_left(&bin.basis(a, b), c));
                    }
                    expect_zero("LY3", ix, s)
                })
            }),
            Box::new(move || {
                sweep(n, 4, |ix| {
                    let (i, j, k, l) = (ix[0], ix[1], ix[2], ix[3]);
                    let mut s = vec![Rational::zero(); n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        s = add_vec(&s, &ter.apply_first(&bin.basis(a, b), c, l));
                    }
                    expect_zero("LY4", ix, s)
                })
            }),
            Box::new(move || check_binary_derivations(bin, ter)),
            Box::new(move || check_inner_derivations(ter, "LY6")),
        ]
    }
}

/// `D(u·v) − D(u)·v − u·D(v)` on basis vectors.
fn binary_defect(bin: &Bilinear, d: &Matrix, u: usize, v: usize) -> Vector {
    let lhs = d.mul_vec(&bin.basis(u, v));
    sub_vec(&sub_vec(&lhs, &bin.apply_left(&d.column(u), v)), &bin.apply_right(u, &d.column(v)))
}

/// Every `[x,y,·]` derives the binary product, tested on a basis of the
/// span first and by a full sweep on failure.
fn check_binary_derivations(bin: &Bilinear, ter: &Trilinear) -> Certificate {
    let n = bin.dim();
    let basis = inner_operator_basis(ter);
    let ok = basis.par_iter().all(|d| (0..n).all(|u| (0..n).all(|v| is_zero_vec(&binary_defect(bin, d, u, v)))));
    if ok {
        return Ok(());
    }
    sweep(n, 4, |ix| {
        let d = ter.operator(ix[0], ix[1]);
        let lhs = d.mul_vec(&bin.basis(ix[2], ix[3]));
        let r = binary_defect(bin, &d, ix[2], ix[3]);
        (!is_zero_vec(&r)).then(|| Counterexample::new("LY5", ix.to_vec(), lhs.clone(), sub_vec(&lhs, &r)))
    })
}

pub const AXIOMS: [&str; 6] = ["LY1", "LY2", "LY3", "LY4", "LY5", "LY6"];

/// Outcome of each axiom with its least failing tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyCertificate {
    pub axioms: Vec<(&'static str, Certificate)>,
}

impl LyCertificate {
    pub fn passed(&self) -> bool {
        self.axioms.iter().all(|(_, c)| c.is_ok())
    }

    pub fn get(&self, name: &str) -> Option<&Certificate> {
        self.axioms.iter().find(|(n, _)| *n == name).map(|(_, c)| c)
    }

    pub fn first_failure(&self) -> Option<&Counterexample> {
        self.axioms.iter().find_map(|(_, c)| c.as_ref().err())
    }
}

/// All six axioms on all basis tuples; each axiom is evaluated independently.
pub fn check_ly(a: &LYAlgebra) -> LyCertificate {
    let checks = a.axiom_checks();
    LyCertificate { axioms: AXIOMS.iter().zip(checks.iter()).map(|(name, check)| (*name, check())).collect() }
}

/// `D(m, m) = span [x, y, ·]` with closure verified.
pub fn inner_derivations_ly(a: &LYAlgebra) -> Result<LinearLie> {
    LinearLie::new(a.module_dim(), inner_operator_basis(&a.ternary))
}

pub fn inner_derivation_rep_ly(a: &LYAlgebra) -> Result<crate::algcore::Representation> {
    Ok(inner_derivations_ly(a)?.natural())
}

/// Products induced on `m` by `x·y = π_m[x,y]`, `[x,y,z] = [π_h[x,y], z]`,
/// in the canonical basis of `m`.
pub fn ly_from_reductive_pair(p: &ReductivePair) -> Result<LYAlgebra> {
    ly_from_reductive_pair_in_basis(p, p.m().basis())
}

/// As [`ly_from_reductive_pair`], with `m` identified to `kⁿ` through the
/// given basis of `m` (vectors of `g`).
pub fn ly_from_reductive_pair_in_basis(p: &ReductivePair, basis: &[Vector]) -> Result<LYAlgebra> {
    let n = basis.len();
    if n != p.m().dim() {
        return Err(Error::DimensionMismatch { expected: p.m().dim(), found: n });
    }
    if let Some(i) = basis.iter().position(|v| !p.m().contains(v)) {
        return Err(Error::InvalidInput(format!("basis vector {i} is not in m")));
    }
    let solver = BasisSolver::new(p.g().dim(), basis)?;
    let coords = |v: &[Rational]| solver.coordinates(v).expect("vector lies in m");
    let g = p.g();
    let brackets: Vec<Vector> = (0..n * n).into_par_iter().map(|ij| g.mul(&basis[ij / n], &basis[ij % n])).collect();
    let binary = Bilinear::from_fn(n, |i, j| coords(&p.proj_m().mul_vec(&brackets[i * n + j])));
    let h_parts: Vec<Vector> = brackets.par_iter().map(|b| p.proj_h().mul_vec(b)).collect();
    let values: Vec<Vector> = (0..n * n * n)
        .into_par_iter()
        .map(|ijk| {
            let (ij, k) = (ijk / n, ijk % n);
            coords(&g.mul(&h_parts[ij], &basis[k]))
        })
        .collect();
    let ternary = Trilinear::from_fn(n, |i, j, k| values[(i * n + j) * n + k].clone());
    LYAlgebra::new(binary, ternary, Provenance::Derived)
}

/// Entrywise comparison of two LY-algebras on the same module.
pub fn compare_products(a: &LYAlgebra, b: &LYAlgebra) -> Certificate {
    let n = a.module_dim();
    if b.module_dim() != n {
        return Err(Counterexample::new(
            "module dimension",
            vec![],
            vec![Rational::from(n)],
            vec![Rational::from(b.module_dim())],
        ));
    }
    sweep(n, 2, |ix| expect_equal("binary products agree", ix, a.binary.basis(ix[0], ix[1]), b.binary.basis(ix[0], ix[1])))?;
    sweep(n, 3, |ix| {
        let (i, j, k) = (ix[0], ix[1], ix[2]);
        expect_equal("ternary products agree", ix, a.ternary.basis(i, j, k), b.ternary.basis(i, j, k))
    })
}
