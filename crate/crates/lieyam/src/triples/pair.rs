use crate::algcore::{expect_equal, sweep_box, Certificate};
use crate::error::{Error, Result};
use crate::exactla::{add_vec, scale_vec, sub_vec, Matrix, Rational, Vector};
use crate::liecon::LinearLie;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum PairKind {
    Jordan,
    AntiJordan,
    Unclassified,
}

impl PairKind {
    pub fn name(self) -> &'static str {
        match self {
            PairKind::Jordan => "jordan",
            PairKind::AntiJordan => "anti_jordan",
            PairKind::Unclassified => "unclassified",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [PairKind::Jordan, PairKind::AntiJordan, PairKind::Unclassified].into_iter().find(|k| k.name() == s)
    }

    fn epsilon(self) -> Option<Rational> {
        match self {
            PairKind::Jordan => Some(Rational::one()),
            PairKind::AntiJordan => Some(Rational::from(-1)),
            PairKind::Unclassified => None,
        }
    }
}

/// Two modules `U⁺, U⁻` with products `U^σ × U^−σ × U^σ → U^σ`, stored as the
/// operators `z ↦ {x y z}` for basis vectors `x ∈ U^σ`, `y ∈ U^−σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pair {
    dim_plus: usize,
    dim_minus: usize,
    plus: Vec<Matrix>,
    minus: Vec<Matrix>,
    kind: PairKind,
    xi: Option<Rational>,
}

impl Pair {
    /// `plus[i * dim_minus + j]` is `{eᵢ fⱼ ·}` on `U⁺`; `minus[j * dim_plus + i]`
    /// is `{fⱼ eᵢ ·}` on `U⁻`.
    pub fn new(dim_plus: usize, dim_minus: usize, plus: Vec<Matrix>, minus: Vec<Matrix>) -> Result<Self> {
        let count = dim_plus * dim_minus;
        for ops in [&plus, &minus] {
            if ops.len() != count {
                return Err(Error::DimensionMismatch { expected: count, found: ops.len() });
            }
        }
        let bad_shape = |ops: &[Matrix], d: usize| ops.iter().find(|m| m.rows() != d || m.cols() != d).map(|m| m.rows());
        if let Some(found) = bad_shape(&plus, dim_plus) {
            return Err(Error::DimensionMismatch { expected: dim_plus, found });
        }
        if let Some(found) = bad_shape(&minus, dim_minus) {
            return Err(Error::DimensionMismatch { expected: dim_minus, found });
        }
        Ok(Pair { dim_plus, dim_minus, plus, minus, kind: PairKind::Unclassified, xi: None })
    }

    /// Both products on the same module, given as functions on basis triples.
    pub fn symmetric_from_fn(
        dim: usize,
        plus: impl Fn(usize, usize, usize) -> Vector,
        minus: impl Fn(usize, usize, usize) -> Vector,
    ) -> Result<Self> {
        let ops = |f: &dyn Fn(usize, usize, usize) -> Vector| -> Vec<Matrix> {
            (0..dim * dim)
                .map(|p| Matrix::from_columns(dim, &(0..dim).map(|k| f(p / dim, p % dim, k)).collect::<Vec<_>>()))
                .collect()
        };
        Self::new(dim, dim, ops(&plus), ops(&minus))
    }

    pub fn certify(mut self, kind: PairKind) -> Result<Self> {
        check_pair(&self, kind)?.identities.map_err(|c| Error::Verification(c.to_string()))?;
        self.kind = kind;
        Ok(self)
    }

    pub(crate) fn with_xi(mut self, xi: Rational) -> Self {
        self.xi = Some(xi);
        self
    }

    pub fn dim_plus(&self) -> usize {
        self.dim_plus
    }

    pub fn dim_minus(&self) -> usize {
        self.dim_minus
    }

    pub fn kind(&self) -> PairKind {
        self.kind
    }

    pub fn xi(&self) -> Option<&Rational> {
        self.xi.as_ref()
    }

    pub fn plus_operator(&self, i: usize, j: usize) -> &Matrix {
        &self.plus[i * self.dim_minus + j]
    }

    pub fn minus_operator(&self, j: usize, i: usize) -> &Matrix {
        &self.minus[j * self.dim_plus + i]
    }

    /// `{x y z}` with `x, z ∈ U⁺`, `y ∈ U⁻`.
    pub fn product_plus(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        operator_of(&self.plus, self.dim_minus, self.dim_plus, x, y).mul_vec(z)
    }

    /// `{y x w}` with `y, w ∈ U⁻`, `x ∈ U⁺`.
    pub fn product_minus(&self, y: &[Rational], x: &[Rational], w: &[Rational]) -> Vector {
        operator_of(&self.minus, self.dim_plus, self.dim_minus, y, x).mul_vec(w)
    }

    pub fn is_zero(&self) -> bool {
        self.plus.iter().chain(&self.minus).all(Matrix::is_zero)
    }
}

fn operator_of(ops: &[Matrix], inner: usize, d: usize, x: &[Rational], y: &[Rational]) -> Matrix {
    let mut m = Matrix::zeros(d, d);
    for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            m.add_scaled(&(a * b), &ops[i * inner + j]);
        }
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    pub identities: Certificate,
    /// Both products vanish, so the pair passes vacuously but is not simple.
    pub zero_product: bool,
}

/// One side of the pair: operators `{a b ·}` on a module of dimension `d`
/// with `b` ranging over the other module of dimension `other`.
struct Side<'a> {
    ops: &'a [Matrix],
    d: usize,
    other: usize,
}

impl Side<'_> {
    fn op(&self, a: usize, b: usize) -> &Matrix {
        &self.ops[a * self.other + b]
    }

    /// `{x y z}` for an arbitrary `x` and basis `y`, `z`.
    fn apply_first(&self, x: &[Rational], b: usize, z: usize) -> Vector {
        let mut out = vec![Rational::zero(); self.d];
        for (a, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            out = add_vec(&out, &scale_vec(c, &self.op(a, b).column(z)));
        }
        out
    }

    /// `{x y z}` for an arbitrary `y` and basis `x`, `z`.
    fn apply_second(&self, a: usize, y: &[Rational], z: usize) -> Vector {
        let mut out = vec![Rational::zero(); self.d];
        for (b, c) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            out = add_vec(&out, &scale_vec(c, &self.op(a, b).column(z)));
        }
        out
    }
}

fn side_identities(this: &Side, that: &Side, eps: &Rational, sign: &str) -> Certificate {
    let outer = format!("outer symmetry ({sign})");
    sweep_box(&[this.d, this.other, this.d], |ix| {
        let (x, y, z) = (ix[0], ix[1], ix[2]);
        expect_equal(&outer, ix, this.op(x, y).column(z), scale_vec(eps, &this.op(z, y).column(x)))
    })?;
    let five = format!("five-term identity ({sign})");
    sweep_box(&[this.d, this.other, this.d, this.other, this.d], |ix| {
        let (x, y, u, v, w) = (ix[0], ix[1], ix[2], ix[3], ix[4]);
        let dxy = this.op(x, y);
        let duv = this.op(u, v);
        let lhs = dxy.mul_vec(&duv.column(w));
        let first = this.apply_first(&dxy.column(u), v, w);
        let middle = this.apply_second(u, &that.op(y, x).column(v), w);
        let last = duv.mul_vec(&dxy.column(w));
        let rhs = add_vec(&sub_vec(&first, &scale_vec(eps, &middle)), &last);
        expect_equal(&five, ix, lhs, rhs)
    })
}

/// Outer symmetry and the five-term identity for both signs.
pub fn check_pair(p: &Pair, kind: PairKind) -> Result<PairCheck> {
    let eps = kind.epsilon().ok_or_else(|| Error::InvalidInput("no identities for unclassified pairs".into()))?;
    let plus = Side { ops: &p.plus, d: p.dim_plus, other: p.dim_minus };
    let minus = Side { ops: &p.minus, d: p.dim_minus, other: p.dim_plus };
    let identities = side_identities(&plus, &minus, &eps, "+").and_then(|_| side_identities(&minus, &plus, &eps, "-"));
    Ok(PairCheck { identities, zero_product: p.is_zero() })
}

/// Span of `(D₊(x,y), −ε D₋(y,x))` acting block-diagonally on `U⁺ ⊕ U⁻`.
pub fn inner_derivation_pair(p: &Pair) -> Result<LinearLie> {
    let eps = p.kind.epsilon().ok_or_else(|| Error::InvalidInput("pair is not certified".into()))?;
    let (dp, dm) = (p.dim_plus, p.dim_minus);
    let n = dp + dm;
    let mut ops = Vec::with_capacity(dp * dm);
    for i in 0..dp {
        for j in 0..dm {
            let a = p.plus_operator(i, j);
            let b = p.minus_operator(j, i).scale(&-&eps);
            let m = Matrix::from_fn(n, n, |r, c| match (r < dp, c < dp) {
                (true, true) => a[(r, c)].clone(),
                (false, false) => b[(r - dp, c - dp)].clone(),
                _ => Rational::zero(),
            });
            ops.push(m);
        }
    }
    LinearLie::spanned_by(n, &ops)
}
