use lieyam::algcore::{BilinearForm, StructureAlgebra, Trilinear};
use lieyam::compjordan::octonions;
use lieyam::exactla::{qi, unit_vec, Matrix, Rational, Vector};
use lieyam::liecon::*;
use lieyam::triples::*;
use lieyam::Error;
use proptest::prelude::*;

fn e(n: usize, i: usize) -> Vector {
    unit_vec(n, i)
}

fn sl2() -> std::sync::Arc<StructureAlgebra> {
    sl_of(2).unwrap().algebra().clone()
}

/// `xyz = b(x,z)y − b(y,z)x` for the identity form on `kⁿ`.
fn sphere_lts(n: usize) -> TripleSystem {
    let product = Trilinear::from_fn(n, |i, j, k| {
        let mut v = vec![Rational::zero(); n];
        if i == k {
            v[j] += Rational::one();
        }
        if j == k {
            v[i] -= Rational::one();
        }
        v
    });
    TripleSystem::new(product, Some(BilinearForm::standard_symmetric(n))).unwrap()
}

#[test]
fn lie_algebra_triple_is_lts() {
    let t = TripleSystem::from_lie(&sl2());
    assert_eq!(check_triple(&t, TripleKind::Lts).unwrap(), Ok(()));
    assert!(check_triple(&t, TripleKind::AntiLts).unwrap().is_err());
    let t = t.certify(TripleKind::Lts).unwrap();
    let env = standard_embedding_lts(&t).unwrap();
    assert_eq!(env.algebra.dim(), 6);
    assert!(env.algebra.is_semisimple());
    assert!(!env.algebra.is_simple_lie().unwrap());
}

#[test]
fn sphere_lts_and_embedding() {
    let t = sphere_lts(5).certify(TripleKind::Lts).unwrap();
    let inner = inner_derivations(&t).unwrap();
    assert_eq!(inner.dim(), 10);
    let env = standard_embedding_lts(&t).unwrap();
    assert_eq!((env.algebra.dim(), env.even_dim), (15, 10));
    assert!(env.algebra.is_simple_lie().unwrap());
}

#[test]
fn form_checks_need_matching_forms() {
    let t = sphere_lts(3);
    let bare = TripleSystem::new(t.product().clone(), None).unwrap();
    assert_eq!(check_triple(&bare, TripleKind::Orthogonal), Err(Error::MissingForm));
    let skew = TripleSystem::new(Trilinear::zero(2), Some(BilinearForm::standard_skew(2))).unwrap();
    assert_eq!(check_triple(&skew, TripleKind::Orthogonal), Err(Error::WrongSymmetry("symmetric")));
    assert!(check_triple(&skew, TripleKind::Unclassified).is_err());
    assert!(TripleSystem::new(Trilinear::zero(3), Some(BilinearForm::standard_skew(2))).is_err());
}

#[test]
fn octonion_triple_is_orthogonal() {
    let cp = octonion_derivations_in_so7().unwrap();
    let t = derive_triple_so(&cp.g, &cp.pair, cp.form.as_ref().unwrap()).unwrap();
    assert_eq!(t.kind(), TripleKind::Orthogonal);
    assert!(!t.xi().unwrap().is_zero());
    let inner = inner_derivations(&t).unwrap();
    assert_eq!(inner.dim(), 14);
    assert!(inner.algebra().is_simple_lie().unwrap());
    // the inner derivations derive the product
    for d in inner.basis() {
        for u in 0..7 {
            for v in 0..7 {
                for w in 0..7 {
                    assert!(derivation_defect(t.product(), d, u, v, w).iter().all(Rational::is_zero));
                }
            }
        }
    }
}

#[test]
fn principal_so3_gives_lts_of_sl3() {
    let cp = principal_sl2(4).unwrap();
    let t = derive_triple_so(&cp.g, &cp.pair, cp.form.as_ref().unwrap()).unwrap();
    assert_eq!(t.kind(), TripleKind::Lts);
    let env = standard_embedding_lts(&t).unwrap();
    assert_eq!(env.algebra.dim(), 8);
    assert!(env.algebra.is_simple_lie().unwrap());
}

#[test]
fn reducible_modules_are_rejected() {
    let cp = so_stabilizer(5).unwrap();
    let err = derive_triple_so(&cp.g, &cp.pair, cp.form.as_ref().unwrap()).unwrap_err();
    assert!(matches!(err, Error::Reducible(_)));
    let b = BilinearForm::standard_skew(4);
    let cp = block_stabilizer(&b, &[vec![0, 2], vec![1, 3]]).unwrap();
    let err = derive_triple_sp(&cp.g, &cp.pair, &b).unwrap_err();
    assert!(matches!(err, Error::Reducible(_)));
}

#[test]
fn principal_sl2_in_sp4_is_symplectic() {
    let cp = principal_sl2(3).unwrap();
    assert_eq!(cp.pair.m().dim(), 7);
    let t = derive_triple_sp(&cp.g, &cp.pair, cp.form.as_ref().unwrap()).unwrap();
    assert_eq!(t.kind(), TripleKind::Symplectic);
    assert!(!t.xi().unwrap().is_zero());
    assert_eq!(inner_derivations(&t).unwrap().dim(), 3);
}

#[test]
fn full_sp_gives_gamma_with_unit_xi() {
    let b = BilinearForm::standard_skew(4);
    let g = sp_of(&b).unwrap();
    let h = lieyam::exactla::Subspace::full(g.dim());
    let m = lieyam::exactla::Subspace::zero(g.dim());
    let pair = ReductivePair::with_complement(g.algebra().clone(), h, m).unwrap();
    let t = derive_triple_sp(&g, &pair, &b).unwrap();
    assert_eq!(t.kind(), TripleKind::Symplectic);
    assert_eq!(t.xi(), Some(&Rational::one()));
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(t.product().operator(i, j), gamma(&b, &e(4, i), &e(4, j)).unwrap());
        }
    }
}

fn h2_pair() -> Pair {
    // symmetric 2×2 matrices, basis E11, E22, E12 + E21
    let mats: Vec<Matrix> =
        vec![Matrix::from_i64(&[&[1, 0], &[0, 0]]), Matrix::from_i64(&[&[0, 0], &[0, 1]]), Matrix::from_i64(&[&[0, 1], &[1, 0]])];
    let coords = |m: &Matrix| -> Vector { vec![m[(0, 0)].clone(), m[(1, 1)].clone(), m[(0, 1)].clone()] };
    let f = |i: usize, j: usize, k: usize| {
        let (x, y, z) = (&mats[i], &mats[j], &mats[k]);
        coords(&x.mul(&y.transpose()).mul(z).add(&z.mul(&y.transpose()).mul(x)))
    };
    Pair::symmetric_from_fn(3, f, f).unwrap()
}

/// `{xyz} = b(x,y)z + b(y,z)x − ε b(x,z)y` with `b` symmetric for `ε = 1`
/// and skew for `ε = −1`.
fn form_pair(b: &BilinearForm, eps: i64) -> Pair {
    let n = b.dim();
    let f = |i: usize, j: usize, k: usize| {
        let mut v = vec![Rational::zero(); n];
        v[k] += b.entry(i, j);
        v[i] += b.entry(j, k);
        v[j] -= &(Rational::from(eps) * b.entry(i, k));
        v
    };
    Pair::symmetric_from_fn(n, f, f).unwrap()
}

#[test]
fn hermitian_jordan_pair() {
    let p = h2_pair().certify(PairKind::Jordan).unwrap();
    assert!(check_pair(&p, PairKind::AntiJordan).unwrap().identities.is_err());
    let inner = inner_derivation_pair(&p).unwrap();
    assert_eq!(inner.dim(), 4);
    assert_eq!(inner.algebra().derived_subalgebra().unwrap().dim(), 3);
}

#[test]
fn type_four_and_symplectic_pairs() {
    let p = form_pair(&BilinearForm::standard_symmetric(6), 1).certify(PairKind::Jordan).unwrap();
    assert_eq!(inner_derivation_pair(&p).unwrap().dim(), 16);
    let p = form_pair(&BilinearForm::standard_skew(4), -1).certify(PairKind::AntiJordan).unwrap();
    assert_eq!(inner_derivation_pair(&p).unwrap().dim(), 11);
}

#[test]
fn zero_pair_passes_but_is_flagged() {
    let z = vec![Matrix::zeros(2, 2); 6];
    let w = vec![Matrix::zeros(3, 3); 6];
    let p = Pair::new(2, 3, z, w).unwrap();
    let c = check_pair(&p, PairKind::Jordan).unwrap();
    assert_eq!(c.identities, Ok(()));
    assert!(c.zero_product);
    assert!(!check_pair(&h2_pair(), PairKind::Jordan).unwrap().zero_product);
}

#[test]
fn sl_pairs_classify() {
    let cases =
        [(sl_so(5).unwrap(), PairKind::Jordan), (sl_sp(4).unwrap(), PairKind::AntiJordan), (sl_so(3).unwrap(), PairKind::Jordan)];
    for (cp, kind) in cases {
        let p = derive_pair_sl(&cp.g, &cp.pair).unwrap();
        assert_eq!(p.kind(), kind);
        assert!(!p.xi().unwrap().is_zero());
        assert_eq!(pair_compatibility(&p), Ok(()));
        assert_eq!(check_pair(&p, kind).unwrap().identities, Ok(()));
    }
}

#[test]
fn sl5_so5_pair_is_proportional_to_form_pair() {
    let cp = sl_so(5).unwrap();
    let p = derive_pair_sl(&cp.g, &cp.pair).unwrap();
    let q = form_pair(&BilinearForm::standard_symmetric(5), 1);
    let ratio = {
        let a = p.plus_operator(0, 0);
        let b = q.plus_operator(0, 0);
        let (r, c) = (0..5).flat_map(|r| (0..5).map(move |c| (r, c))).find(|&(r, c)| !b[(r, c)].is_zero()).unwrap();
        &a[(r, c)] / &b[(r, c)]
    };
    for i in 0..5 {
        for j in 0..5 {
            assert_eq!(*p.plus_operator(i, j), q.plus_operator(i, j).scale(&ratio));
        }
    }
}

#[test]
fn tri_format_round_trip() {
    let t = sphere_lts(4);
    let text = write_triple(&t);
    assert!(text.starts_with("dim 4\n"));
    let back = read_triple(&text).unwrap();
    assert_eq!(back, t);
    assert_eq!(write_triple(&back), text);
    let bare = read_triple("# lone entry\ndim 2\n0 1 0 1 1/2\n").unwrap();
    assert_eq!(bare.product().entry(0, 1, 0, 1), Rational::new(1, 2));
    assert!(bare.form().is_none());
    for bad in ["", "dim 2\n0 1 0 2 1\n", "dim 2\n0 0 0 0 1\n0 0 0 0 2\n", "dim 2\nform\n0 0 1\nform\n", "dim 2\n0 0 x 0 1\n"] {
        assert!(matches!(read_triple(bad), Err(Error::Parse { .. })), "{bad:?}");
    }
}

#[test]
fn perturbed_lts_reports_counterexample() {
    let t = sphere_lts(3);
    let mut product = t.product().clone();
    product.set_entry(0, 1, 0, 1, qi(2));
    let bad = TripleSystem::new(product, None).unwrap();
    let c = check_triple(&bad, TripleKind::Lts).unwrap().unwrap_err();
    assert_eq!(c.indices.len(), 3);
    assert_ne!(c.lhs, c.rhs);
}

#[test]
fn closure_failure_of_partial_span() {
    let t = sphere_lts(4);
    let mut ops = inner_operator_basis(t.product());
    ops.pop();
    // a proper subspace of so(4) of dimension five is not a subalgebra
    assert!(matches!(LinearLie::new(4, ops), Err(Error::ClosureFailure(_))));
}

#[test]
fn octonion_triple_inner_derivations_are_g2() {
    let o = octonions();
    let cp = octonion_derivations_in_so7().unwrap();
    let t = derive_triple_so(&cp.g, &cp.pair, cp.form.as_ref().unwrap()).unwrap();
    let inner = inner_derivations(&t).unwrap();
    let der = restrict_to_submodule(&o.algebra().derivation_algebra(), &o.trace_zero()).unwrap();
    let span = |ms: &[Matrix]| lieyam::exactla::Subspace::span(49, &ms.iter().map(|m| m.flat().to_vec()).collect::<Vec<_>>());
    assert_eq!(span(inner.basis()), span(der.action()));
}

fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-2i64..=2, n * n)
        .prop_map(move |v| Matrix::from_fn(n, n, |i, j| qi(v[i * n + j]) + if i == j { qi(5) } else { qi(0) }))
        .prop_filter("invertible", |m| m.inverse().is_some())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn lts_survives_basis_change(p in invertible(4)) {
        let t = sphere_lts(4);
        let inv = p.inverse().unwrap();
        let moved = TripleSystem::new(t.product().transport(&inv, &p), None).unwrap();
        prop_assert_eq!(check_triple(&moved, TripleKind::Lts).unwrap(), Ok(()));
        prop_assert_eq!(inner_derivations(&moved).unwrap().dim(), 6);
    }

    #[test]
    fn random_scaling_breaks_lts(c in 2i64..6, i in 0usize..3, j in 0usize..3) {
        prop_assume!(i != j);
        let t = sphere_lts(3);
        let mut product = t.product().clone();
        let old = product.entry(i, j, i, j);
        product.set_entry(i, j, i, j, old * qi(c));
        let bad = TripleSystem::new(product, None).unwrap();
        prop_assert!(check_triple(&bad, TripleKind::Lts).unwrap().is_err());
    }
}
