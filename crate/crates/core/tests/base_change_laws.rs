mod common;

use common::{random_invertible, random_symmetric, rng};
use ihopf_core::axioms::verify_all;
use ihopf_core::base_change::{
    congruence_diagonalize, gram_factorize, normalize_to_feq_g, transform_presentation, transport_witness,
    GramFactorization, Normalized, TransitionData,
};
use ihopf_core::catalog::{self, AbelianGroupSpec};
use ihopf_core::duality::selfdual_reports;
use ihopf_core::{BialgebraPresentation, DualityWitness, Error, Field, Matrix};

fn fixtures() -> Vec<BialgebraPresentation> {
    let q = Field::rational();
    vec![
        catalog::group_algebra(&AbelianGroupSpec::cyclic(2), &q).unwrap(),
        catalog::taft(2, &q).unwrap(),
        catalog::group_algebra(&AbelianGroupSpec::cyclic(4), &q).unwrap(),
    ]
}

fn outcomes(p: &BialgebraPresentation) -> Vec<(String, bool)> {
    verify_all(p).into_iter().map(|r| (r.axiom_name.clone(), r.holds())).collect()
}

#[test]
fn identity_inverse_and_composition() {
    let q = Field::rational();
    let mut r = rng(31);
    for p in fixtures() {
        let n = p.dim();
        assert_eq!(transform_presentation(&p, &TransitionData::identity(&q, n)).unwrap(), p);
        for _ in 0..10 {
            let t1 = TransitionData::new(random_invertible(&q, n, &mut r)).unwrap();
            let t2 = TransitionData::new(random_invertible(&q, n, &mut r)).unwrap();
            let once = transform_presentation(&p, &t1).unwrap();
            assert_eq!(transform_presentation(&once, &t1.inverted()).unwrap(), p);
            let twice = transform_presentation(&once, &t2).unwrap();
            assert_eq!(transform_presentation(&p, &t1.then(&t2)).unwrap(), twice);
            assert_eq!(outcomes(&once), outcomes(&p));
        }
    }
}

#[test]
fn failing_presentations_keep_failing() {
    let q = Field::rational();
    let mut r = rng(37);
    let h = catalog::taft(2, &q).unwrap();
    let mut f = h.mult().clone();
    f.add_at(2, 2, 0, &q.one());
    let broken =
        BialgebraPresentation::new(h.labels().to_vec(), f, h.comult().clone(), h.unit().to_vec(), h.counit().to_vec(), None)
            .unwrap();
    let before = outcomes(&broken);
    assert!(before.iter().any(|(_, ok)| !ok));
    for _ in 0..5 {
        let t = TransitionData::new(random_invertible(&q, 4, &mut r)).unwrap();
        assert_eq!(outcomes(&transform_presentation(&broken, &t).unwrap()), before);
    }
}

#[test]
fn transported_witnesses_stay_witnesses() {
    let q = Field::rational();
    let mut r = rng(41);
    let h = catalog::taft(2, &q).unwrap();
    let w = catalog::taft2_witness(&q).unwrap();
    for _ in 0..5 {
        let t = TransitionData::new(random_invertible(&q, 4, &mut r)).unwrap();
        let moved = transform_presentation(&h, &t).unwrap();
        let moved_w = transport_witness(&w, &t).unwrap();
        assert!(moved_w.is_symmetric());
        for report in selfdual_reports(&moved, &moved_w) {
            assert!(report.holds(), "{report}");
        }
    }
}

fn check_congruence(s: &Matrix) {
    let (p, d) = congruence_diagonalize(s).unwrap();
    for i in 0..d.rows() {
        for j in 0..d.cols() {
            if i != j {
                assert!(d.get(i, j).is_zero());
            }
        }
    }
    assert!(p.is_invertible());
    assert_eq!(&p.transpose().mul(&d).unwrap().mul(&p).unwrap(), s);
}

#[test]
fn congruence_over_rationals_and_f5() {
    let mut r = rng(43);
    for field in [Field::rational(), Field::prime(5).unwrap()] {
        for i in 0..25 {
            let s = random_symmetric(&field, 2 + i % 4, &mut r);
            check_congruence(&s);
        }
    }
}

#[test]
fn congruence_repairs_zero_diagonals() {
    let q = Field::rational();
    check_congruence(&Matrix::from_ints(&q, &[&[0, 1], &[1, 0]]));
    check_congruence(&Matrix::from_ints(&q, &[&[0, 0, 1], &[0, 0, 2], &[1, 2, 0]]));
    check_congruence(&Matrix::zeros(&q, 3, 3));
}

#[test]
fn congruence_rejects_bad_inputs() {
    let q = Field::rational();
    assert_eq!(congruence_diagonalize(&Matrix::from_ints(&q, &[&[1, 2], &[3, 4]])), Err(Error::NotSymmetric));
    let f2 = Field::prime(2).unwrap();
    assert!(matches!(
        congruence_diagonalize(&Matrix::identity(&f2, 2)),
        Err(Error::Unsupported { .. })
    ));
}

#[test]
fn gram_factorization() {
    let k8 = Field::cyclotomic(8).unwrap();
    let s = catalog::taft2_witness(&k8).unwrap().matrix().clone();
    match gram_factorize(&s).unwrap() {
        GramFactorization::Factor(t) => assert_eq!(t.transpose().mul(&t).unwrap(), s),
        other => panic!("{other:?}"),
    }
    let q = Field::rational();
    let s = Matrix::from_ints(&q, &[&[1, 1], &[1, -1]]);
    assert!(matches!(gram_factorize(&s).unwrap(), GramFactorization::NotRepresentable { index: 1, .. }));
    let s = Matrix::from_ints(&q, &[&[4, 0], &[0, 9]]);
    assert_eq!(gram_factorize(&s).unwrap(), GramFactorization::Factor(Matrix::from_ints(&q, &[&[2, 0], &[0, 3]])));
}

#[test]
fn normalization_reaches_feq_g() {
    let k8 = Field::cyclotomic(8).unwrap();
    let cases: Vec<(BialgebraPresentation, DualityWitness)> = vec![
        (catalog::taft(2, &k8).unwrap(), catalog::taft2_witness(&k8).unwrap()),
        (
            catalog::group_algebra(&AbelianGroupSpec::cyclic(2), &k8).unwrap(),
            catalog::group_selfdual_witness(&AbelianGroupSpec::cyclic(2), &k8).unwrap(),
        ),
    ];
    for (p, w) in cases {
        match normalize_to_feq_g(&p, &w).unwrap() {
            Normalized::Done { presentation, transition } => {
                assert_eq!(presentation.mult(), presentation.comult());
                assert!(verify_all(&presentation).iter().all(|r| r.holds()));
                assert_eq!(transform_presentation(&p, &transition).unwrap(), presentation);
                let moved = transport_witness(&w, &transition).unwrap();
                assert!(moved.matrix().is_identity());
            }
            other => panic!("{other:?}"),
        }
    }
}

#[test]
fn normalization_over_rationals_needs_square_roots() {
    let q = Field::rational();
    let h = catalog::taft(2, &q).unwrap();
    let outcome = normalize_to_feq_g(&h, &catalog::taft2_witness(&q).unwrap()).unwrap();
    assert!(matches!(outcome, Normalized::NotRepresentable { .. }));
}

#[test]
fn normalization_rejects_non_witnesses() {
    let q = Field::rational();
    let h = catalog::taft(2, &q).unwrap();
    let asym = DualityWitness::new(Matrix::from_ints(&q, &[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]))
        .unwrap();
    assert_eq!(normalize_to_feq_g(&h, &asym), Err(Error::NotSymmetric));
    let id = DualityWitness::new(Matrix::identity(&q, 4)).unwrap();
    assert!(matches!(normalize_to_feq_g(&h, &id), Err(Error::Hypothesis(_))));
}
