//! Change of basis for structure constants, and Gram factorization of
//! symmetric witnesses.
//!
//! A transition matrix T expresses a new basis in the old one by columns:
//! dⱼ = Σᵢ T[i, j] cᵢ.

use crate::duality::DualityWitness;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::presentation::{BialgebraPresentation, StructureTensor};
use crate::scalar::Scalar;

/// An invertible matrix with its exact inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionData {
    matrix: Matrix,
    inverse: Matrix,
}

impl TransitionData {
    pub fn new(matrix: Matrix) -> Result<Self> {
        let inverse = matrix.inverse()?;
        Ok(TransitionData { matrix, inverse })
    }

    pub fn identity(field: &crate::scalar::Field, n: usize) -> Self {
        let id = Matrix::identity(field, n);
        TransitionData {
            matrix: id.clone(),
            inverse: id,
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// The transition back to the old basis.
    pub fn inverted(&self) -> TransitionData {
        TransitionData {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }

    /// Changing basis by `self` and then by `next` is changing basis by the product.
    pub fn then(&self, next: &TransitionData) -> TransitionData {
        TransitionData {
            matrix: self.matrix.mul(&next.matrix).expect("square"),
            inverse: next.inverse.mul(&self.inverse).expect("square"),
        }
    }
}

/// out[.., x, ..] = Σ_y m[y, x] · t[.., y, ..] on the given leg.
fn contract_leg(t: &StructureTensor, m: &Matrix, leg: usize) -> StructureTensor {
    let n = t.dim();
    let mut out = StructureTensor::zeros(t.field(), n);
    for ((i, j, k), v) in t.nonzero() {
        let idx = [i, j, k];
        let y = idx[leg];
        for x in 0..n {
            let c = m.get(y, x);
            if c.is_zero() {
                continue;
            }
            let mut o = idx;
            o[leg] = x;
            out.add_at(o[0], o[1], o[2], &(c * v));
        }
    }
    out
}

/// The multiplication rule: F̃(ĩ,j̃,k̃) = Σ T[i,ĩ] T[j,j̃] T⁻¹[k̃,k] F(i,j,k).
pub fn transform_mult(f: &StructureTensor, td: &TransitionData) -> StructureTensor {
    let inv_t = td.inverse().transpose();
    let step = contract_leg(f, td.matrix(), 0);
    let step = contract_leg(&step, td.matrix(), 1);
    contract_leg(&step, &inv_t, 2)
}

/// The comultiplication rule: G̃(ĩ,j̃,k̃) = Σ T⁻¹[ĩ,i] T⁻¹[j̃,j] T[k,k̃] G(i,j,k).
pub fn transform_comult(g: &StructureTensor, td: &TransitionData) -> StructureTensor {
    let inv_t = td.inverse().transpose();
    let step = contract_leg(g, &inv_t, 0);
    let step = contract_leg(&step, &inv_t, 1);
    contract_leg(&step, td.matrix(), 2)
}

/// Unit coordinates in the new basis: T⁻¹λ.
pub fn transform_unit(unit: &[Scalar], td: &TransitionData) -> Vec<Scalar> {
    td.inverse().mul_vec(unit).expect("dimension checked")
}

/// Counit values on the new basis: μᵀT.
pub fn transform_counit(counit: &[Scalar], td: &TransitionData) -> Vec<Scalar> {
    td.matrix().transpose().mul_vec(counit).expect("dimension checked")
}

/// The presentation in the basis given by `td`. Labels are kept.
pub fn transform_presentation(p: &BialgebraPresentation, td: &TransitionData) -> Result<BialgebraPresentation> {
    if td.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: td.dim(),
        });
    }
    if td.matrix().field() != p.field() {
        return Err(Error::FieldMismatch {
            left: p.field().spec(),
            right: td.matrix().field().spec(),
        });
    }
    let antipode = p
        .antipode()
        .map(|a| td.inverse().mul(a).and_then(|x| x.mul(td.matrix())))
        .transpose()?;
    BialgebraPresentation::new(
        p.labels().to_vec(),
        transform_mult(p.mult(), td),
        transform_comult(p.comult(), td),
        transform_unit(p.unit(), td),
        transform_counit(p.counit(), td),
        antipode,
    )
}

/// The witness expressed in the new basis: TᵀST.
pub fn transport_witness(w: &DualityWitness, td: &TransitionData) -> Result<DualityWitness> {
    let s = td.matrix().transpose().mul(w.matrix())?.mul(td.matrix())?;
    DualityWitness::new(s)
}

fn check_symmetric_odd_char(s: &Matrix) -> Result<()> {
    if !s.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if s.field().characteristic() == 2 {
        return Err(Error::Unsupported {
            field: s.field().spec(),
            reason: "congruence diagonalization needs characteristic other than 2".into(),
        });
    }
    Ok(())
}

/// Symmetric elimination: returns (P, D) with S = PᵀDP and D diagonal.
pub fn congruence_diagonalize(s: &Matrix) -> Result<(Matrix, Matrix)> {
    check_symmetric_odd_char(s)?;
    let n = s.rows();
    let field = s.field();
    let mut a = s.clone();
    // invariant: a = e·S·eᵀ
    let mut e = Matrix::identity(field, n);
    for k in 0..n {
        if a.get(k, k).is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a.get(j, j).is_zero()) {
                a.swap_rows(k, j);
                a.swap_cols(k, j);
                e.swap_rows(k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a.get(k, j).is_zero()) {
                // a[k,k] becomes 2·a[k,j]
                let one = field.one();
                a.add_row_multiple(k, j, &one);
                a.add_col_multiple(k, j, &one);
                e.add_row_multiple(k, j, &one);
            } else {
                continue;
            }
        }
        let pivot_inv = a.get(k, k).inv()?;
        for r in k + 1..n {
            if a.get(r, k).is_zero() {
                continue;
            }
            let f = -&(a.get(r, k) * &pivot_inv);
            a.add_row_multiple(r, k, &f);
            a.add_col_multiple(r, k, &f);
            e.add_row_multiple(r, k, &f);
        }
    }
    let p = e.inverse()?.transpose();
    Ok((p, a))
}

/// Outcome of a Gram factorization attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GramFactorization {
    /// T with TᵀT = S.
    Factor(Matrix),
    /// The diagonal entry at `index` has no square root in the field's table.
    NotRepresentable { index: usize, entry: Scalar },
}

/// S = TᵀT with T = √D·P, when every entry of D has a square root.
pub fn gram_factorize(s: &Matrix) -> Result<GramFactorization> {
    let (p, d) = congruence_diagonalize(s)?;
    let mut roots = Vec::with_capacity(d.rows());
    for i in 0..d.rows() {
        match d.get(i, i).sqrt() {
            Some(r) => roots.push(r),
            None => {
                return Ok(GramFactorization::NotRepresentable {
                    index: i,
                    entry: d.get(i, i).clone(),
                })
            }
        }
    }
    let t = Matrix::diagonal(s.field(), &roots).mul(&p)?;
    debug_assert_eq!(&t.transpose().mul(&t)?, s);
    Ok(GramFactorization::Factor(t))
}

/// Outcome of moving a symmetric self-dual presentation to a basis with F = G.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalized {
    Done {
        presentation: BialgebraPresentation,
        transition: TransitionData,
    },
    NotRepresentable {
        index: usize,
        entry: Scalar,
    },
}

/// Factor S = TᵀT and change basis by T⁻¹, after which the witness is the
/// identity and F = G.
pub fn normalize_to_feq_g(p: &BialgebraPresentation, w: &DualityWitness) -> Result<Normalized> {
    if !w.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !crate::duality::verify_selfdual_algebra(p, w).holds() {
        return Err(Error::Hypothesis("witness is not an algebra map A -> A*".into()));
    }
    let t = match gram_factorize(w.matrix())? {
        GramFactorization::Factor(t) => t,
        GramFactorization::NotRepresentable { index, entry } => {
            return Ok(Normalized::NotRepresentable { index, entry })
        }
    };
    let transition = TransitionData::new(t)?.inverted();
    let presentation = transform_presentation(p, &transition)?;
    if presentation.mult() != presentation.comult() {
        return Err(Error::PostCheckFailed("F = G after normalization".into()));
    }
    Ok(Normalized::Done {
        presentation,
        transition,
    })
}
