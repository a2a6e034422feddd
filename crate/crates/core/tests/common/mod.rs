//! Shared helpers for the integration tests: seeded generators and
//! brute-force reference implementations.
#![allow(dead_code)]

use ihopf_core::base_change::{normalize_to_feq_g, Normalized};
use ihopf_core::catalog::{self, AbelianGroupSpec};
use ihopf_core::{BialgebraPresentation, DualityWitness, Element, Field, Matrix, Scalar, StructureTensor};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small random element: rationals with numerators in [-5, 5] and
/// denominators in [1, 3], on every cyclotomic coordinate.
pub fn random_scalar(field: &Field, rng: &mut impl Rng) -> Scalar {
    let mut rat = || BigRational::new(BigInt::from(rng.gen_range(-5i64..=5)), BigInt::from(rng.gen_range(1i64..=3)));
    match field.spec() {
        ihopf_core::FieldSpec::Cyclotomic(n) => {
            let deg = ihopf_core::scalar::euler_phi(n as u64) as usize;
            let coeffs: Vec<BigRational> = (0..deg).map(|_| rat()).collect();
            field.from_zeta_poly(&coeffs).unwrap()
        }
        ihopf_core::FieldSpec::PrimeField(p) => field.from_integer(rng.gen_range(0..p as i64)),
        ihopf_core::FieldSpec::Rational => field.from_rational(rat()).unwrap(),
    }
}

pub fn random_small_int(field: &Field, rng: &mut impl Rng, range: i64) -> Scalar {
    field.from_integer(rng.gen_range(-range..=range))
}

pub fn random_element(field: &Field, dim: usize, rng: &mut impl Rng) -> Element {
    Element((0..dim).map(|_| random_scalar(field, rng)).collect())
}

pub fn random_matrix(field: &Field, n: usize, rng: &mut impl Rng) -> Matrix {
    let rows = (0..n).map(|_| (0..n).map(|_| random_small_int(field, rng, 3)).collect()).collect();
    Matrix::from_rows(field, rows).unwrap()
}

pub fn random_invertible(field: &Field, n: usize, rng: &mut impl Rng) -> Matrix {
    loop {
        let m = random_matrix(field, n, rng);
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn random_symmetric(field: &Field, n: usize, rng: &mut impl Rng) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in i..n {
            let v = random_small_int(field, rng, 4);
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
    }
    m
}

pub fn random_tensor(field: &Field, n: usize, rng: &mut impl Rng) -> StructureTensor {
    StructureTensor::from_fn(field, n, |_, _, _| random_small_int(field, rng, 2))
}

pub fn int_vec(field: &Field, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| field.from_integer(x)).collect()
}

/// Catalog presentations of dimension at most 4 over ℚ.
pub fn small_catalog() -> Vec<(&'static str, BialgebraPresentation)> {
    let q = Field::rational();
    vec![
        ("taft2", catalog::taft(2, &q).unwrap()),
        ("Z1", catalog::group_algebra(&AbelianGroupSpec::cyclic(1), &q).unwrap()),
        ("Z2", catalog::group_algebra(&AbelianGroupSpec::cyclic(2), &q).unwrap()),
        ("Z3", catalog::group_algebra(&AbelianGroupSpec::cyclic(3), &q).unwrap()),
        ("Z4", catalog::group_algebra(&AbelianGroupSpec::cyclic(4), &q).unwrap()),
        ("Z2xZ2", catalog::group_algebra(&AbelianGroupSpec::new(vec![2, 2]).unwrap(), &q).unwrap()),
        (
            "Z2(x)Z2*",
            catalog::tensor_with_dual(&catalog::group_algebra(&AbelianGroupSpec::cyclic(2), &q).unwrap()).unwrap(),
        ),
    ]
}

/// Every catalog presentation the tests know about, with a witness when one ships.
pub fn full_catalog() -> Vec<(String, BialgebraPresentation, Option<DualityWitness>)> {
    let q = Field::rational();
    let mut out = Vec::new();
    out.push(("taft2/Q".to_string(), catalog::taft(2, &q).unwrap(), Some(catalog::taft2_witness(&q).unwrap())));
    let k8 = Field::cyclotomic(8).unwrap();
    out.push(("taft2/Q(z8)".into(), catalog::taft(2, &k8).unwrap(), Some(catalog::taft2_witness(&k8).unwrap())));
    for n in [3u32, 4] {
        let k = Field::cyclotomic(n).unwrap();
        out.push((format!("taft{n}"), catalog::taft(n as usize, &k).unwrap(), None));
    }
    for n in 1..=5u32 {
        let k = Field::cyclotomic(n).unwrap();
        let g = AbelianGroupSpec::cyclic(n);
        out.push((
            format!("Z{n}"),
            catalog::group_algebra(&g, &k).unwrap(),
            Some(catalog::group_selfdual_witness(&g, &k).unwrap()),
        ));
    }
    let klein = AbelianGroupSpec::new(vec![2, 2]).unwrap();
    out.push((
        "Z2xZ2".into(),
        catalog::group_algebra(&klein, &q).unwrap(),
        Some(catalog::group_selfdual_witness(&klein, &q).unwrap()),
    ));
    let f5 = Field::prime(5).unwrap();
    let z4 = AbelianGroupSpec::cyclic(4);
    out.push((
        "Z4/F5".into(),
        catalog::group_algebra(&z4, &f5).unwrap(),
        Some(catalog::group_selfdual_witness(&z4, &f5).unwrap()),
    ));
    out.push((
        "Z2(x)Z2*".into(),
        catalog::tensor_with_dual(&catalog::group_algebra(&AbelianGroupSpec::cyclic(2), &q).unwrap()).unwrap(),
        None,
    ));
    out
}

/// H₂ over ℚ(ζ₈) moved to a basis with F = G.
pub fn taft2_feq_g() -> BialgebraPresentation {
    let k = Field::cyclotomic(8).unwrap();
    let h = catalog::taft(2, &k).unwrap();
    match normalize_to_feq_g(&h, &catalog::taft2_witness(&k).unwrap()).unwrap() {
        Normalized::Done { presentation, .. } => presentation,
        other => panic!("expected a normalization, got {other:?}"),
    }
}

/// k[ℤ/2] over ℚ(ζ₈) moved to a basis with F = G.
pub fn z2_feq_g() -> BialgebraPresentation {
    let k = Field::cyclotomic(8).unwrap();
    let g = AbelianGroupSpec::cyclic(2);
    let p = catalog::group_algebra(&g, &k).unwrap();
    match normalize_to_feq_g(&p, &catalog::group_selfdual_witness(&g, &k).unwrap()).unwrap() {
        Normalized::Done { presentation, .. } => presentation,
        other => panic!("expected a normalization, got {other:?}"),
    }
}

fn kron(p: &BialgebraPresentation) -> (usize, &StructureTensor, &StructureTensor, Field) {
    (p.dim(), p.mult(), p.comult(), p.field().clone())
}

/// Σₖ F(i,j,k)G(k′,k″,k) and Σ G(i′,i″,i)G(j′,j″,j)F(i′,j′,k′)F(i″,j″,k″) by
/// plain loops over all eight indices, flattened over (i, j, k′, k″).
pub fn naive_green(p: &BialgebraPresentation) -> (Vec<Scalar>, Vec<Scalar>) {
    let (n, f, g, field) = kron(p);
    assert!(n <= 4, "naive Green oracle is limited to dimension 4");
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k1 in 0..n {
                for k2 in 0..n {
                    let mut l = field.zero();
                    for k in 0..n {
                        l = l + f.get(i, j, k) * g.get(k1, k2, k);
                    }
                    let mut r = field.zero();
                    for i1 in 0..n {
                        for i2 in 0..n {
                            for j1 in 0..n {
                                for j2 in 0..n {
                                    r = r + g.get(i1, i2, i)
                                        * g.get(j1, j2, j)
                                        * f.get(i1, j1, k1)
                                        * f.get(i2, j2, k2);
                                }
                            }
                        }
                    }
                    lhs.push(l);
                    rhs.push(r);
                }
            }
        }
    }
    (lhs, rhs)
}

/// Associativity of a tensor by direct comparison of both bracketings.
pub fn naive_associative(f: &StructureTensor) -> bool {
    let n = f.dim();
    let field = f.field();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut a = field.zero();
                    let mut b = field.zero();
                    for s in 0..n {
                        a = a + f.get(i, j, s) * f.get(s, k, l);
                        b = b + f.get(i, s, l) * f.get(j, k, s);
                    }
                    if a != b {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The general ı-product by a single seven-index loop.
pub fn naive_i_general(p: &BialgebraPresentation, s: &Matrix) -> StructureTensor {
    let (n, f, g, field) = kron(p);
    StructureTensor::from_fn(&field, n, |i, j, k| {
        let mut acc = field.zero();
        for y1 in 0..n {
            for y2 in 0..n {
                let sv = s.get(y1, y2);
                if sv.is_zero() {
                    continue;
                }
                for x in 0..n {
                    for z in 0..n {
                        acc = acc + sv * g.get(y1, x, i) * g.get(z, y2, j) * f.get(x, z, k);
                    }
                }
            }
        }
        acc
    })
}

/// Element-level Δ(a)·Δ(b) in A⊗A, computed from first principles.
pub fn tensor_square_product(p: &BialgebraPresentation, x: &Matrix, y: &Matrix) -> Matrix {
    let n = p.dim();
    let f = p.mult();
    let field = p.field();
    let mut out = Matrix::zeros(field, n, n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let coeff = x.get(a, b) * y.get(c, d);
                    if coeff.is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        for l in 0..n {
                            let v = out.get(k, l) + &(&coeff * &(f.get(a, c, k) * f.get(b, d, l)));
                            out.set(k, l, v);
                        }
                    }
                }
            }
        }
    }
    out
}
