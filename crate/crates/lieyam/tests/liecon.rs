use lieyam::algcore::{adjoint, BilinearForm, Symmetry};
use lieyam::compjordan::{hermitian_jordan, octonions, split_composition};
use lieyam::exactla::{unit_vec, Matrix, Rational, Subspace, Vector};
use lieyam::liecon::*;

fn e(n: usize, i: usize) -> Vector {
    unit_vec(n, i)
}

/// so(𝒪₀, n) with the image of Der 𝒪.
fn octonion_pair() -> (LinearLie, Subspace, Subspace) {
    let o = octonions();
    let o0 = o.trace_zero();
    let der = restrict_to_submodule(&o.algebra().derivation_algebra(), &o0).unwrap();
    let so7 = so_of(&o.norm_form().restrict(&o0)).unwrap();
    let h = embed_operators(&so7, der.action()).unwrap();
    (so7, h, o0)
}

#[test]
fn gl_sl_dims() {
    assert_eq!(sl_of(2).unwrap().dim(), 3);
    let sl5 = sl_of(5).unwrap();
    assert_eq!(sl5.dim(), 24);
    assert!(sl5.algebra().is_simple_lie().unwrap());
    let gl2 = gl_of(2);
    assert_eq!(gl2.dim(), 4);
    assert_eq!(gl2.algebra().center().unwrap().dim(), 1);
    assert!(sl_of(1).is_err());
}

#[test]
fn sl2_basis_is_chevalley() {
    let sl2 = sl_of(2).unwrap();
    let a = sl2.algebra();
    assert_eq!(a.basis_product(1, 0), e(3, 0).iter().map(|x| x * Rational::from(2)).collect::<Vec<_>>());
    assert_eq!(a.basis_product(0, 2), e(3, 1));
}

#[test]
fn so_sp_dims() {
    assert_eq!(so_of(&BilinearForm::standard_symmetric(5)).unwrap().dim(), 10);
    assert_eq!(sp_of(&BilinearForm::standard_skew(4)).unwrap().dim(), 10);
    let (so7, _, _) = octonion_pair();
    assert_eq!(so7.dim(), 21);
    assert!(so_of(&BilinearForm::standard_skew(4)).is_err());
    assert!(sp_of(&BilinearForm::standard_symmetric(4)).is_err());
    let degenerate = BilinearForm::new(Matrix::from_i64(&[&[1, 0], &[0, 0]]));
    assert!(so_of(&degenerate).is_err());
}

#[test]
fn so_sp_operators_preserve_forms() {
    let o = octonions();
    let forms = [BilinearForm::standard_symmetric(5), o.norm_form().restrict(&o.trace_zero()), BilinearForm::standard_skew(6)];
    for b in &forms {
        let g = if b.symmetry() == Symmetry::Symmetric { so_of(b) } else { sp_of(b) }.unwrap();
        let n = b.dim();
        for f in g.basis() {
            for i in 0..n {
                for j in 0..n {
                    let s = b.eval(&f.mul_vec(&e(n, i)), &e(n, j)) + b.eval(&e(n, i), &f.mul_vec(&e(n, j)));
                    assert!(s.is_zero());
                }
            }
        }
    }
}

#[test]
fn sigma_gamma_examples() {
    let b = BilinearForm::standard_symmetric(5);
    let x: Vector = [1, 2, 0, -1, 3].map(Rational::from).to_vec();
    assert!(sigma(&b, &x, &x).unwrap().is_zero());
    let s = BilinearForm::standard_skew(4);
    let (p, q) = (e(4, 0), e(4, 3));
    assert_eq!(gamma(&s, &p, &q).unwrap(), gamma(&s, &q, &p).unwrap());
    assert!(sigma(&s, &p, &q).is_err());
    assert!(gamma(&b, &x, &x).is_err());
    let so5 = so_of(&b).unwrap();
    let mut ops = Vec::new();
    for i in 0..5 {
        for j in 0..5 {
            ops.push(sigma(&b, &e(5, i), &e(5, j)).unwrap());
        }
    }
    assert_eq!(embed_operators(&so5, &ops).unwrap().dim(), 10);
    let sp4 = sp_of(&s).unwrap();
    let ops: Vec<Matrix> =
        (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).map(|(i, j)| gamma(&s, &e(4, i), &e(4, j)).unwrap()).collect();
    assert_eq!(embed_operators(&sp4, &ops).unwrap().dim(), 10);
}

#[test]
fn pair_so6_so5() {
    let b = BilinearForm::standard_symmetric(6);
    let so6 = so_of(&b).unwrap();
    let ops: Vec<Matrix> =
        (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).map(|(i, j)| sigma(&b, &e(6, i), &e(6, j)).unwrap()).collect();
    let h = embed_operators(&so6, &ops).unwrap();
    let p = ReductivePair::new(so6.algebra().clone(), h).unwrap();
    assert_eq!(p.m().dim(), 5);
    assert!(p.is_symmetric());
    assert!(p.proj_h().mul(p.proj_m()).is_zero());
    assert_eq!(p.proj_h().add(p.proj_m()), Matrix::identity(15));
    assert_eq!(p.proj_h().mul(p.proj_h()), *p.proj_h());
}

#[test]
fn pair_octonions() {
    let (so7, h, _) = octonion_pair();
    assert_eq!(h.dim(), 14);
    let p = ReductivePair::new(so7.algebra().clone(), h).unwrap();
    assert_eq!(p.m().dim(), 7);
    assert!(!p.is_symmetric());
}

#[test]
fn pair_sl5_so5() {
    let sl5 = sl_of(5).unwrap();
    let so5 = so_of(&BilinearForm::standard_symmetric(5)).unwrap();
    let h = embed_operators(&sl5, so5.basis()).unwrap();
    let p = ReductivePair::new(sl5.algebra().clone(), h).unwrap();
    assert_eq!(p.m().dim(), 14);
    assert!(p.is_symmetric());
}

#[test]
fn pair_rejects_non_subalgebra() {
    let (so7, _, o0) = octonion_pair();
    let o = octonions();
    let ads: Vec<Matrix> = o0
        .basis()
        .iter()
        .map(|x| {
            let cols: Vec<Vector> = o0
                .basis()
                .iter()
                .map(|y| {
                    let c: Vector = o.mul(x, y).iter().zip(o.mul(y, x)).map(|(a, b)| a - b).collect();
                    o0.coordinates(&c).unwrap()
                })
                .collect();
            Matrix::from_columns(7, &cols)
        })
        .collect();
    let ad = embed_operators(&so7, &ads).unwrap();
    assert_eq!(ad.dim(), 7);
    assert!(ReductivePair::new(so7.algebra().clone(), ad).is_err());
    let not_member = Matrix::identity(7);
    assert!(embed_operators(&so7, &[not_member]).is_err());
}

#[test]
fn multiplication_operators_of_h2() {
    let j = hermitian_jordan(&split_composition(1).unwrap(), 2).unwrap();
    let sl3 = sl_of(3).unwrap();
    let t = j.traceless();
    let mut ops: Vec<Matrix> = t.basis().iter().map(|x| j.algebra().left_of(x)).collect();
    let l: Vec<Matrix> = (0..3).map(|i| j.algebra().left_matrix(i)).collect();
    for a in &l {
        for b in &l {
            ops.push(a.commutator(b));
        }
    }
    let h = embed_operators(&sl3, &ops).unwrap();
    assert_eq!(h.dim(), 3);
    assert!(sl3.algebra().subalgebra(&h).is_ok());
}

#[test]
fn symmetric_powers() {
    let v1 = sl2_symmetric_power(1);
    assert_eq!(v1.module_dim(), 2);
    assert_eq!(v1.action(), sl_of(2).unwrap().basis());
    for m in 0..6 {
        let r = sl2_symmetric_power(m);
        assert!(r.absolutely_irreducible());
        let forms = r.invariant_forms();
        assert_eq!(forms.len(), 1);
        let expected = if m % 2 == 0 { Symmetry::Symmetric } else { Symmetry::Skew };
        assert_eq!(forms[0].1, expected, "m = {m}");
    }
}

#[test]
fn squares_of_natural_modules() {
    let so5 = so_of(&BilinearForm::standard_symmetric(5)).unwrap();
    let w = exterior_square_rep(&so5.natural());
    assert_eq!(w.module_dim(), 10);
    assert_eq!(w.hom_dimension(&adjoint(so5.algebra())).unwrap(), 1);
    let sp4 = sp_of(&BilinearForm::standard_skew(4)).unwrap();
    let s = symmetric_square_rep(&sp4.natural());
    assert_eq!(s.module_dim(), 10);
    assert_eq!(s.hom_dimension(&adjoint(sp4.algebra())).unwrap(), 1);
    let one = sl2_symmetric_power(0);
    assert_eq!(exterior_square_rep(&one).module_dim(), 0);
    let t = tensor_rep(&so5.natural(), &so5.natural()).unwrap();
    assert_eq!(t.module_dim(), 25);
    assert!(tensor_rep(&so5.natural(), &sp4.natural()).is_err());
}

#[test]
fn squares_are_representations() {
    let r = sl2_symmetric_power(3);
    for s in [exterior_square_rep(&r), symmetric_square_rep(&r), tensor_rep(&r, &r).unwrap()] {
        let checked = lieyam::algcore::Representation::new(s.algebra().clone(), s.module_dim(), s.action().to_vec());
        assert!(checked.is_ok());
    }
}

#[test]
fn hom_three_for_so5_in_sl5() {
    let so5 = so_of(&BilinearForm::standard_symmetric(5)).unwrap();
    let v = so5.natural();
    let vvv = tensor_rep(&tensor_rep(&v, &v.dual()).unwrap(), &v).unwrap();
    assert_eq!(vvv.hom_dimension(&v).unwrap(), 3);
}

#[test]
fn principal_subalgebras_have_equal_envelope_dims() {
    let s4 = sl2_symmetric_power(4);
    let b = s4.invariant_forms()[0].0.clone();
    let so5 = so_of(&b).unwrap();
    let h = embed_operators(&so5, s4.action()).unwrap();
    let p = ReductivePair::new(so5.algebra().clone(), h).unwrap();
    let s3 = sl2_symmetric_power(3);
    let b = s3.invariant_forms()[0].0.clone();
    let sp4 = sp_of(&b).unwrap();
    let h = embed_operators(&sp4, s3.action()).unwrap();
    let q = ReductivePair::new(sp4.algebra().clone(), h).unwrap();
    assert_eq!((p.g().dim(), p.h().dim(), p.m().dim()), (10, 3, 7));
    assert_eq!((q.g().dim(), q.h().dim(), q.m().dim()), (10, 3, 7));
}
