//! Dual presentations and self-duality witnesses.
//!
//! A witness is the matrix S of a linear map φ: A → A* in the basis {cᵢ}
//! and its dual basis {c*ᵢ}, stored by columns: column i holds the
//! coordinates of φ(cᵢ), so φ(cᵢ) = Σⱼ S[j, i] c*ⱼ. Transposing S by
//! mistake silently changes every downstream ı-construction.

use rayon::prelude::*;

use crate::axioms::{AxiomReport, Violation};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::presentation::BialgebraPresentation;
use crate::scalar::Scalar;

/// An invertible matrix proposed as a self-duality A → A*.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityWitness {
    matrix: Matrix,
}

impl DualityWitness {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        if !matrix.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        Ok(DualityWitness { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// φ = φ* exactly when S is symmetric.
    pub fn is_symmetric(&self) -> bool {
        is_symmetric(&self.matrix)
    }
}

pub fn is_symmetric(s: &Matrix) -> bool {
    s.is_symmetric()
}

/// The dual bialgebra on the dual basis: products from G, coproducts from F,
/// unit and counit exchanged, antipode transposed.
pub fn dualize(p: &BialgebraPresentation) -> BialgebraPresentation {
    let labels = p
        .labels()
        .iter()
        .map(|l| match l.strip_suffix('*') {
            Some(base) => base.to_string(),
            None => format!("{l}*"),
        })
        .collect();
    BialgebraPresentation::new(
        labels,
        p.comult().clone(),
        p.mult().clone(),
        p.counit().to_vec(),
        p.unit().to_vec(),
        p.antipode().map(Matrix::transpose),
    )
    .expect("dual of a valid presentation is valid")
}

fn compare(name: &str, n: usize, lhs: Vec<Scalar>, rhs: Vec<Scalar>) -> AxiomReport {
    let pos = lhs.iter().zip(&rhs).position(|(a, b)| a != b);
    AxiomReport {
        axiom_name: name.to_string(),
        first_violation: pos.map(|p| Violation {
            indices: vec![p / (n * n), (p / n) % n, p % n],
            lhs: lhs[p].clone(),
            rhs: rhs[p].clone(),
            detail: None,
        }),
    }
}

fn check_dim(p: &BialgebraPresentation, w: &DualityWitness) {
    assert_eq!(p.dim(), w.dim(), "witness and presentation dimensions differ");
}

/// φ(cᵢ·cⱼ) = φ(cᵢ)·φ(cⱼ), as Σₖ F(i,j,k) S[l,k] = Σ S[i′,i] S[j′,j] G(i′,j′,l)
/// over all (i, j, l).
pub fn verify_selfdual_algebra(p: &BialgebraPresentation, w: &DualityWitness) -> AxiomReport {
    check_dim(p, w);
    let n = p.dim();
    let s = w.matrix();
    let f = p.mult();
    let g = p.comult();
    let field = p.field();

    let rows: Vec<(Vec<Scalar>, Vec<Scalar>)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut lhs = vec![field.zero(); n * n];
            let mut rhs = vec![field.zero(); n * n];
            for j in 0..n {
                for k in 0..n {
                    let fv = f.get(i, j, k);
                    if fv.is_zero() {
                        continue;
                    }
                    for l in 0..n {
                        lhs[j * n + l].add_product(fv, s.get(l, k));
                    }
                }
            }
            // H(i′, j, l) = Σ_{j′} S[j′, j] G(i′, j′, l), then contract i′ against S[i′, i]
            for a in 0..n {
                let sa = s.get(a, i);
                if sa.is_zero() {
                    continue;
                }
                for b in 0..n {
                    for l in 0..n {
                        let gv = g.get(a, b, l);
                        if gv.is_zero() {
                            continue;
                        }
                        let c = sa * gv;
                        for j in 0..n {
                            rhs[j * n + l].add_product(&c, s.get(b, j));
                        }
                    }
                }
            }
            (lhs, rhs)
        })
        .collect();
    let (lhs, rhs): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
    compare(
        "selfdual_algebra",
        n,
        lhs.into_iter().flatten().collect(),
        rhs.into_iter().flatten().collect(),
    )
}

/// (φ⊗φ)∘Δ = Δ*∘φ, as Σ S[a,i] S[b,j] G(i,j,k) = Σₗ F(a,b,l) S[l,k] over all (a, b, k).
pub fn verify_selfdual_coalgebra(p: &BialgebraPresentation, w: &DualityWitness) -> AxiomReport {
    check_dim(p, w);
    let n = p.dim();
    let s = w.matrix();
    let f = p.mult();
    let g = p.comult();
    let field = p.field();

    let rows: Vec<(Vec<Scalar>, Vec<Scalar>)> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut lhs = vec![field.zero(); n * n];
            let mut rhs = vec![field.zero(); n * n];
            for i in 0..n {
                let sa = s.get(a, i);
                if sa.is_zero() {
                    continue;
                }
                for j in 0..n {
                    for k in 0..n {
                        let gv = g.get(i, j, k);
                        if gv.is_zero() {
                            continue;
                        }
                        let c = sa * gv;
                        for b in 0..n {
                            lhs[b * n + k].add_product(&c, s.get(b, j));
                        }
                    }
                }
            }
            for b in 0..n {
                for l in 0..n {
                    let fv = f.get(a, b, l);
                    if fv.is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        rhs[b * n + k].add_product(fv, s.get(l, k));
                    }
                }
            }
            (lhs, rhs)
        })
        .collect();
    let (lhs, rhs): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
    compare(
        "selfdual_coalgebra",
        n,
        lhs.into_iter().flatten().collect(),
        rhs.into_iter().flatten().collect(),
    )
}

/// φ∘S = S*∘φ, i.e. W·A = Aᵀ·W, when the presentation has an antipode.
pub fn verify_antipode_intertwining(p: &BialgebraPresentation, w: &DualityWitness) -> Option<AxiomReport> {
    check_dim(p, w);
    let a = p.antipode()?;
    let lhs = w.matrix().mul(a).expect("square");
    let rhs = a.transpose().mul(w.matrix()).expect("square");
    let n = p.dim();
    let mut report = AxiomReport::pass("antipode_intertwining");
    'scan: for r in 0..n {
        for c in 0..n {
            if lhs.get(r, c) != rhs.get(r, c) {
                report.first_violation = Some(Violation {
                    indices: vec![r, c],
                    lhs: lhs.get(r, c).clone(),
                    rhs: rhs.get(r, c).clone(),
                    detail: None,
                });
                break 'scan;
            }
        }
    }
    Some(report)
}

/// All self-duality reports: algebra, coalgebra, then antipode intertwining
/// when an antipode is present.
pub fn selfdual_reports(p: &BialgebraPresentation, w: &DualityWitness) -> Vec<AxiomReport> {
    let mut out = vec![verify_selfdual_algebra(p, w), verify_selfdual_coalgebra(p, w)];
    out.extend(verify_antipode_intertwining(p, w));
    out
}
