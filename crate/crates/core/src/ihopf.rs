//! ı-algebras built from symmetrically self-dual Hopf algebras.
//!
//! Three constructions, each implemented on its own and tied together by
//! tests rather than by a shared kernel:
//!
//! - simple, for presentations with F = G:
//!   ıF(i,j,k) = Σ F(a,c,j) F(c,b,i) F(b,a,k)
//! - scaled, for F(i,j,k) = G(i,j,k)·wₖ/(wᵢwⱼ):
//!   ıF(i,j,k) = Σ G(a,c,j) G(c,b,i) F(b,a,k) / w_c
//! - general, from a symmetric witness S:
//!   ıF(i,j,k) = Σ S[y₁,y₂] G(y₁,x,i) G(z,y₂,j) F(x,z,k)
//!
//! Every result is checked for associativity and the unit law before it is
//! returned.

use std::fmt;

use rayon::prelude::*;

use crate::axioms::{verify_associativity, verify_unit, AxiomReport, Violation};
use crate::duality::{verify_selfdual_algebra, DualityWitness};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::presentation::{multiply_with, power_with, BialgebraPresentation, Element, StructureTensor};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Simple,
    Scaled(Vec<Scalar>),
    General,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Simple => f.write_str("simple"),
            Construction::Scaled(w) => {
                let parts: Vec<String> = w.iter().map(ToString::to_string).collect();
                write!(f, "scaled by {}", parts.join("; "))
            }
            Construction::General => f.write_str("general"),
        }
    }
}

/// An associative unital algebra produced by one of the ı-constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IAlgebra {
    labels: Vec<String>,
    mult: StructureTensor,
    unit: Vec<Scalar>,
    construction: Construction,
    source: String,
}

impl IAlgebra {
    /// Wraps the given constants after checking associativity and the unit law.
    pub fn new(
        labels: Vec<String>,
        mult: StructureTensor,
        unit: Vec<Scalar>,
        construction: Construction,
        source: String,
    ) -> Result<Self> {
        if labels.len() != mult.dim() || unit.len() != mult.dim() {
            return Err(Error::DimensionMismatch {
                expected: mult.dim(),
                found: labels.len().min(unit.len()),
            });
        }
        let assoc = verify_associativity(&mult);
        if !assoc.holds() {
            return Err(Error::PostCheckFailed(assoc.to_string()));
        }
        let unit_report = verify_unit(&mult, &unit);
        if !unit_report.holds() {
            return Err(Error::PostCheckFailed(unit_report.to_string()));
        }
        Ok(IAlgebra {
            labels,
            mult,
            unit,
            construction,
            source,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> &Field {
        self.mult.field()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mult(&self) -> &StructureTensor {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::basis(self.field(), self.dim(), i)
    }

    pub fn unit_element(&self) -> Element {
        Element(self.unit.clone())
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        multiply_with(&self.mult, a, b)
    }

    pub fn power(&self, a: &Element, m: u32) -> Result<Element> {
        power_with(&self.mult, &self.unit, a, m)
    }

    pub fn is_commutative(&self) -> bool {
        is_commutative(self)
    }
}

fn source_name(p: &BialgebraPresentation) -> String {
    format!("{}-dimensional presentation over {}", p.dim(), p.field().spec())
}

/// ıF for a presentation whose F and G coincide.
pub fn i_construct_simple(p: &BialgebraPresentation) -> Result<IAlgebra> {
    if p.mult() != p.comult() {
        return Err(Error::Hypothesis("simple construction needs F = G".into()));
    }
    let n = p.dim();
    let f = p.mult();
    let field = p.field();
    // M(a, b, i, j) = Σ_c F(a,c,j)·F(c,b,i), then contract (a, b) against F(b,a,k)
    let rows: Vec<Vec<Scalar>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut m = vec![field.zero(); n * n * n];
            for c in 0..n {
                for b in 0..n {
                    let right = f.get(c, b, i);
                    if right.is_zero() {
                        continue;
                    }
                    for a in 0..n {
                        for j in 0..n {
                            let left = f.get(a, c, j);
                            if !left.is_zero() {
                                m[(a * n + b) * n + j].add_product(left, right);
                            }
                        }
                    }
                }
            }
            let mut row = vec![field.zero(); n * n];
            for a in 0..n {
                for b in 0..n {
                    for j in 0..n {
                        let mv = &m[(a * n + b) * n + j];
                        if mv.is_zero() {
                            continue;
                        }
                        for k in 0..n {
                            row[j * n + k].add_product(mv, f.get(b, a, k));
                        }
                    }
                }
            }
            row
        })
        .collect();
    let mult = tensor_from_rows(field, n, rows);
    IAlgebra::new(
        p.labels().to_vec(),
        mult,
        p.unit().to_vec(),
        Construction::Simple,
        source_name(p),
    )
}

/// ıF for a presentation with F(i,j,k) = G(i,j,k)·wₖ/(wᵢwⱼ).
pub fn i_construct_scaled(p: &BialgebraPresentation, weights: &[Scalar]) -> Result<IAlgebra> {
    let n = p.dim();
    if weights.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: weights.len(),
        });
    }
    if weights.iter().any(Scalar::is_zero) {
        return Err(Error::Hypothesis("scaling weights must be nonzero".into()));
    }
    let field = p.field();
    let inv: Vec<Scalar> = weights.iter().map(Scalar::inv).collect::<Result<_>>()?;
    let f = p.mult();
    let g = p.comult();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let expected = g.get(i, j, k) * &(&weights[k] * &(&inv[i] * &inv[j]));
                if *f.get(i, j, k) != expected {
                    return Err(Error::Hypothesis(format!(
                        "F({},{},{}) = {} but the scaled relation gives {}",
                        i + 1,
                        j + 1,
                        k + 1,
                        f.get(i, j, k),
                        expected
                    )));
                }
            }
        }
    }
    let rows: Vec<Vec<Scalar>> = (0..n)
        .into_par_iter()
        .map(|i| {
            // M(a, b, j) = Σ_c G(a,c,j)·G(c,b,i)/w_c
            let mut m = vec![field.zero(); n * n * n];
            for c in 0..n {
                for b in 0..n {
                    let right = g.get(c, b, i);
                    if right.is_zero() {
                        continue;
                    }
                    let right = right * &inv[c];
                    for a in 0..n {
                        for j in 0..n {
                            let left = g.get(a, c, j);
                            if !left.is_zero() {
                                m[(a * n + b) * n + j].add_product(left, &right);
                            }
                        }
                    }
                }
            }
            let mut row = vec![field.zero(); n * n];
            for a in 0..n {
                for b in 0..n {
                    for j in 0..n {
                        let mv = &m[(a * n + b) * n + j];
                        if mv.is_zero() {
                            continue;
                        }
                        for k in 0..n {
                            row[j * n + k].add_product(mv, f.get(b, a, k));
                        }
                    }
                }
            }
            row
        })
        .collect();
    let mult = tensor_from_rows(field, n, rows);
    IAlgebra::new(
        p.labels().to_vec(),
        mult,
        p.unit().to_vec(),
        Construction::Scaled(weights.to_vec()),
        source_name(p),
    )
}

/// ıF from a symmetric self-duality witness, by three pairwise contractions.
pub fn i_construct_general(p: &BialgebraPresentation, w: &DualityWitness) -> Result<IAlgebra> {
    let n = p.dim();
    if w.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: w.dim(),
        });
    }
    if !w.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let report = verify_selfdual_algebra(p, w);
    if !report.holds() {
        return Err(Error::Hypothesis(format!("witness is not self-dual: {report}")));
    }
    let s = w.matrix();
    let f = p.mult();
    let g = p.comult();
    let field = p.field();
    let rows: Vec<Vec<Scalar>> = (0..n)
        .into_par_iter()
        .map(|i| {
            // A(y₂, x) = Σ_{y₁} S[y₁,y₂]·G(y₁,x,i)
            let mut stage_a = vec![field.zero(); n * n];
            for y1 in 0..n {
                for x in 0..n {
                    let gv = g.get(y1, x, i);
                    if gv.is_zero() {
                        continue;
                    }
                    for y2 in 0..n {
                        stage_a[y2 * n + x].add_product(s.get(y1, y2), gv);
                    }
                }
            }
            // B(x, z, j) = Σ_{y₂} A(y₂,x)·G(z,y₂,j)
            let mut stage_b = vec![field.zero(); n * n * n];
            for y2 in 0..n {
                for x in 0..n {
                    let av = &stage_a[y2 * n + x];
                    if av.is_zero() {
                        continue;
                    }
                    for z in 0..n {
                        for j in 0..n {
                            let gv = g.get(z, y2, j);
                            if !gv.is_zero() {
                                stage_b[(x * n + z) * n + j].add_product(av, gv);
                            }
                        }
                    }
                }
            }
            // ıF(i, j, k) = Σ_{x,z} B(x,z,j)·F(x,z,k)
            let mut row = vec![field.zero(); n * n];
            for x in 0..n {
                for z in 0..n {
                    for j in 0..n {
                        let bv = &stage_b[(x * n + z) * n + j];
                        if bv.is_zero() {
                            continue;
                        }
                        for k in 0..n {
                            row[j * n + k].add_product(bv, f.get(x, z, k));
                        }
                    }
                }
            }
            row
        })
        .collect();
    let mult = tensor_from_rows(field, n, rows);
    IAlgebra::new(
        p.labels().to_vec(),
        mult,
        p.unit().to_vec(),
        Construction::General,
        source_name(p),
    )
}

fn tensor_from_rows(field: &Field, n: usize, rows: Vec<Vec<Scalar>>) -> StructureTensor {
    let mut t = StructureTensor::zeros(field, n);
    for (i, row) in rows.into_iter().enumerate() {
        for (jk, v) in row.into_iter().enumerate() {
            if !v.is_zero() {
                t.set(i, jk / n, jk % n, v);
            }
        }
    }
    t
}

pub fn is_commutative(algebra: &IAlgebra) -> bool {
    algebra.mult == algebra.mult.swap_inputs()
}

/// Certifies A ≅ k[ℤ/m] for a commutative A of dimension m: the powers
/// 1, x, …, x^{m−1} are independent and x^m = 1.
pub fn verify_cyclic_witness(algebra: &IAlgebra, x: &Element, m: usize) -> Result<AxiomReport> {
    if m != algebra.dim() {
        return Err(Error::DimensionMismatch {
            expected: algebra.dim(),
            found: m,
        });
    }
    let field = algebra.field();
    let mut powers = Vec::with_capacity(m);
    let mut acc = algebra.unit_element();
    for _ in 0..m {
        powers.push(acc.0.clone());
        acc = algebra.multiply(&acc, x)?;
    }
    let mut report = AxiomReport::pass("cyclic_witness");
    let rank = Matrix::from_rows(field, powers)?.rank();
    if rank != m {
        report.first_violation = Some(Violation {
            indices: vec![],
            lhs: field.from_integer(rank as i64),
            rhs: field.from_integer(m as i64),
            detail: Some("rank of 1, x, ..., x^(m-1)"),
        });
        return Ok(report);
    }
    if let Some(k) = (0..m).find(|&k| acc.0[k] != algebra.unit[k]) {
        report.first_violation = Some(Violation {
            indices: vec![k],
            lhs: acc.0[k].clone(),
            rhs: algebra.unit[k].clone(),
            detail: Some("x^m = 1"),
        });
    }
    Ok(report)
}
