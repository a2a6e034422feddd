mod common;

use common::{full_catalog, naive_associative, naive_i_general, random_invertible, rng, taft2_feq_g, z2_feq_g};
use ihopf_core::axioms::{verify_associativity, verify_unit};
use ihopf_core::base_change::{transform_mult, transform_presentation, transport_witness, TransitionData};
use ihopf_core::catalog::{self, AbelianGroupSpec};
use ihopf_core::ihopf::{i_construct_general, i_construct_scaled, i_construct_simple, verify_cyclic_witness};
use ihopf_core::{BialgebraPresentation, DualityWitness, Element, Error, Field, Matrix, Scalar};

/// An F = G fixture moved by diag(a), with the weights b = a⁻² it then satisfies.
fn rescaled(p: &BialgebraPresentation, a: &[i64]) -> (BialgebraPresentation, Vec<Scalar>, TransitionData) {
    let field = p.field();
    let diag: Vec<Scalar> = a.iter().map(|&x| field.from_integer(x)).collect();
    let td = TransitionData::new(Matrix::diagonal(field, &diag)).unwrap();
    let weights = diag.iter().map(|x| (x * x).inv().unwrap()).collect();
    (transform_presentation(p, &td).unwrap(), weights, td)
}

#[test]
fn general_matches_seven_index_oracle() {
    for (name, p, w) in full_catalog() {
        let Some(w) = w else { continue };
        let a = i_construct_general(&p, &w).unwrap();
        assert_eq!(a.mult(), &naive_i_general(&p, w.matrix()), "{name}");
    }
}

#[test]
fn general_with_identity_is_simple() {
    for p in [taft2_feq_g(), z2_feq_g()] {
        let id = DualityWitness::new(Matrix::identity(p.field(), p.dim())).unwrap();
        assert_eq!(i_construct_general(&p, &id).unwrap().mult(), i_construct_simple(&p).unwrap().mult());
    }
}

#[test]
fn general_with_inverse_weights_is_scaled() {
    for p in [taft2_feq_g(), z2_feq_g()] {
        let a = [1, 2, -3, 5];
        let (moved, weights, td) = rescaled(&p, &a[..p.dim()]);
        let scaled = i_construct_scaled(&moved, &weights).unwrap();
        let inv: Vec<Scalar> = weights.iter().map(|b| b.inv().unwrap()).collect();
        let w = DualityWitness::new(Matrix::diagonal(moved.field(), &inv)).unwrap();
        assert_eq!(&transport_witness(&DualityWitness::new(Matrix::identity(p.field(), p.dim())).unwrap(), &td).unwrap(), &w);
        assert_eq!(i_construct_general(&moved, &w).unwrap().mult(), scaled.mult());
        let simple = i_construct_simple(&p).unwrap();
        assert_eq!(scaled.mult(), &transform_mult(simple.mult(), &td));
    }
}

#[test]
fn construction_commutes_with_base_change() {
    let q = Field::rational();
    let mut r = rng(53);
    let h = catalog::taft(2, &q).unwrap();
    let w = catalog::taft2_witness(&q).unwrap();
    let base = i_construct_general(&h, &w).unwrap();
    for _ in 0..5 {
        let t = TransitionData::new(random_invertible(&q, 4, &mut r)).unwrap();
        let moved = transform_presentation(&h, &t).unwrap();
        let moved_w = transport_witness(&w, &t).unwrap();
        let a = i_construct_general(&moved, &moved_w).unwrap();
        assert_eq!(a.mult(), &transform_mult(base.mult(), &t));
    }
}

#[test]
fn results_are_unital_associative_algebras() {
    let mut outputs = Vec::new();
    for (_, p, w) in full_catalog() {
        if let Some(w) = w {
            outputs.push(i_construct_general(&p, &w).unwrap());
        }
    }
    for p in [taft2_feq_g(), z2_feq_g()] {
        outputs.push(i_construct_simple(&p).unwrap());
        let (moved, weights, _) = rescaled(&p, &[3, -1, 2, 7][..p.dim()]);
        outputs.push(i_construct_scaled(&moved, &weights).unwrap());
    }
    for a in outputs {
        assert!(verify_associativity(a.mult()).holds());
        assert!(naive_associative(a.mult()));
        assert!(verify_unit(a.mult(), a.unit()).holds());
    }
}

#[test]
fn hypotheses_are_enforced() {
    let q = Field::rational();
    let h = catalog::taft(2, &q).unwrap();
    assert!(matches!(i_construct_simple(&h), Err(Error::Hypothesis(_))));
    assert!(matches!(i_construct_scaled(&h, &[q.one(), q.one(), q.one(), q.one()]), Err(Error::Hypothesis(_))));
    let id = DualityWitness::new(Matrix::identity(&q, 4)).unwrap();
    assert!(matches!(i_construct_general(&h, &id), Err(Error::Hypothesis(_))));
    let asym = DualityWitness::new(Matrix::from_ints(&q, &[&[1, 2, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]))
        .unwrap();
    assert_eq!(i_construct_general(&h, &asym), Err(Error::NotSymmetric));
}

#[test]
fn group_algebra_i_algebras_are_commutative() {
    for n in 1..=5u32 {
        let k = Field::cyclotomic(n).unwrap();
        let g = AbelianGroupSpec::cyclic(n);
        let p = catalog::group_algebra(&g, &k).unwrap();
        let a = i_construct_general(&p, &catalog::group_selfdual_witness(&g, &k).unwrap()).unwrap();
        assert!(a.is_commutative());
    }
}

#[test]
fn cyclic_witness_reports() {
    let k8 = Field::cyclotomic(8).unwrap();
    let a = i_construct_general(&catalog::taft(2, &k8).unwrap(), &catalog::taft2_witness(&k8).unwrap()).unwrap();
    let x = a.basis(2).scale(&k8.root_of_unity(1).unwrap());
    assert!(verify_cyclic_witness(&a, &x, 4).unwrap().holds());
    let report = verify_cyclic_witness(&a, &a.basis(2), 4).unwrap();
    assert_eq!(report.first_violation.unwrap().detail, Some("x^m = 1"));
    let report = verify_cyclic_witness(&a, &a.unit_element(), 4).unwrap();
    assert_eq!(report.first_violation.unwrap().detail, Some("rank of 1, x, ..., x^(m-1)"));
    assert!(verify_cyclic_witness(&a, &Element::zero(&k8, 3), 4).is_err());
}
