//! Exact decision procedures for the bialgebra and Hopf axioms.
//!
//! Every check compares two exactly computed arrays entry by entry in
//! lexicographic index order and reports the first disagreement, so the
//! same input always yields the same report.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::presentation::{triple_constants, BialgebraPresentation, Side, StructureTensor};
use crate::scalar::{Field, Scalar};

/// Where an identity first fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// 0-based index tuple; rendered 1-based.
    pub indices: Vec<usize>,
    pub lhs: Scalar,
    pub rhs: Scalar,
    /// Which half of a two-sided law failed, when that matters.
    pub detail: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom_name: String,
    pub first_violation: Option<Violation>,
}

impl AxiomReport {
    pub fn pass(name: &str) -> Self {
        AxiomReport {
            axiom_name: name.to_string(),
            first_violation: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }

    fn from_sides(name: &str, shape: &[usize], lhs: &[Scalar], rhs: &[Scalar], detail: Option<&'static str>) -> Self {
        AxiomReport {
            axiom_name: name.to_string(),
            first_violation: first_mismatch(shape, lhs, rhs, detail),
        }
    }

    fn and_then(self, other: impl FnOnce() -> AxiomReport) -> AxiomReport {
        if self.holds() {
            let mut next = other();
            next.axiom_name = self.axiom_name;
            next
        } else {
            self
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_violation {
            None => write!(f, "PASS {}", self.axiom_name),
            Some(v) => {
                let idx: Vec<String> = v.indices.iter().map(|i| (i + 1).to_string()).collect();
                write!(f, "FAIL {} at ({}) lhs={} rhs={}", self.axiom_name, idx.join(","), v.lhs, v.rhs)?;
                if let Some(d) = v.detail {
                    write!(f, " [{d}]")?;
                }
                Ok(())
            }
        }
    }
}

fn first_mismatch(shape: &[usize], lhs: &[Scalar], rhs: &[Scalar], detail: Option<&'static str>) -> Option<Violation> {
    debug_assert_eq!(lhs.len(), rhs.len());
    let pos = lhs.iter().zip(rhs).position(|(a, b)| a != b)?;
    let mut indices = vec![0; shape.len()];
    let mut rest = pos;
    for (slot, &size) in indices.iter_mut().zip(shape).rev() {
        *slot = rest % size;
        rest /= size;
    }
    Some(Violation {
        indices,
        lhs: lhs[pos].clone(),
        rhs: rhs[pos].clone(),
        detail,
    })
}

fn kronecker_delta(field: &Field, a: usize, b: usize) -> Scalar {
    if a == b {
        field.one()
    } else {
        field.zero()
    }
}

/// Σₛ F(i,j,s)F(s,k,l) = Σₜ F(i,t,l)F(j,k,t) for all (i,j,k,l).
pub fn verify_associativity(mult: &StructureTensor) -> AxiomReport {
    named_associativity("associativity", mult)
}

/// Coassociativity has the same shape in the G convention.
pub fn verify_coassociativity(comult: &StructureTensor) -> AxiomReport {
    named_associativity("coassociativity", comult)
}

fn named_associativity(name: &str, t: &StructureTensor) -> AxiomReport {
    let n = t.dim();
    let left = triple_constants(t, Side::Left);
    let right = triple_constants(t, Side::Right);
    AxiomReport::from_sides(name, &[n, n, n, n], &left, &right, None)
}

/// Σᵢ λᵢF(i,j,k) = δⱼₖ (left, checked first) and Σⱼ λⱼF(i,j,k) = δᵢₖ (right).
pub fn verify_unit(mult: &StructureTensor, unit: &[Scalar]) -> AxiomReport {
    contract_identity("unit", mult, unit)
}

/// Σᵢ μᵢG(i,j,k) = δⱼₖ (left, checked first) and Σⱼ μⱼG(i,j,k) = δᵢₖ (right).
pub fn verify_counit(comult: &StructureTensor, counit: &[Scalar]) -> AxiomReport {
    contract_identity("counit", comult, counit)
}

fn contract_identity(name: &str, t: &StructureTensor, v: &[Scalar]) -> AxiomReport {
    let n = t.dim();
    let field = t.field();
    let mut left = Vec::with_capacity(n * n);
    let mut right = Vec::with_capacity(n * n);
    let mut delta = Vec::with_capacity(n * n);
    for a in 0..n {
        for k in 0..n {
            let mut l = field.zero();
            let mut r = field.zero();
            for (x, vx) in v.iter().enumerate() {
                l.add_product(vx, t.get(x, a, k));
                r.add_product(vx, t.get(a, x, k));
            }
            left.push(l);
            right.push(r);
            delta.push(kronecker_delta(field, a, k));
        }
    }
    AxiomReport::from_sides(name, &[n, n], &left, &delta, Some("left"))
        .and_then(|| AxiomReport::from_sides(name, &[n, n], &right, &delta, Some("right")))
}

/// Both sides of the compatibility Δ(cᵢcⱼ) = Δ(cᵢ)Δ(cⱼ), flattened over
/// (i, j, k′, k″).
///
/// The left side is the composite Δ∘m; the right side is
/// (m⊗m)∘τ₂₃∘(Δ⊗Δ), with τ₂₃ the middle-legs swap, evaluated in three
/// pairwise contractions per i:
///
/// 1. P(b, c, k′) = Σₐ G(a,b,i)·F(a,c,k′)
/// 2. Q(b, k′, j, d) = Σ_c P(b,c,k′)·G(c,d,j)
/// 3. R(j, k′, k″) = Σ_{b,d} Q(b,k′,j,d)·F(b,d,k″)
pub fn green_compat_sides(p: &BialgebraPresentation) -> (Vec<Scalar>, Vec<Scalar>) {
    let n = p.dim();
    let f = p.mult();
    let g = p.comult();
    let field = p.field();

    let lhs_rows: Vec<Vec<Scalar>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = vec![field.zero(); n * n * n];
            for j in 0..n {
                for k in 0..n {
                    let fk = f.get(i, j, k);
                    if fk.is_zero() {
                        continue;
                    }
                    for k1 in 0..n {
                        for k2 in 0..n {
                            row[(j * n + k1) * n + k2].add_product(fk, g.get(k1, k2, k));
                        }
                    }
                }
            }
            row
        })
        .collect();

    let rhs_rows: Vec<Vec<Scalar>> = (0..n)
        .into_par_iter()
        .map(|i| {
            // P[(b*n + c)*n + k1]
            let mut stage_p = vec![field.zero(); n * n * n];
            for a in 0..n {
                for b in 0..n {
                    let gi = g.get(a, b, i);
                    if gi.is_zero() {
                        continue;
                    }
                    for c in 0..n {
                        for k1 in 0..n {
                            stage_p[(b * n + c) * n + k1].add_product(gi, f.get(a, c, k1));
                        }
                    }
                }
            }
            // Q[((b*n + k1)*n + j)*n + d]
            let mut stage_q = vec![field.zero(); n * n * n * n];
            for b in 0..n {
                for c in 0..n {
                    for k1 in 0..n {
                        let pv = &stage_p[(b * n + c) * n + k1];
                        if pv.is_zero() {
                            continue;
                        }
                        for j in 0..n {
                            for d in 0..n {
                                stage_q[((b * n + k1) * n + j) * n + d].add_product(pv, g.get(c, d, j));
                            }
                        }
                    }
                }
            }
            let mut row = vec![field.zero(); n * n * n];
            for b in 0..n {
                for k1 in 0..n {
                    for j in 0..n {
                        for d in 0..n {
                            let qv = &stage_q[((b * n + k1) * n + j) * n + d];
                            if qv.is_zero() {
                                continue;
                            }
                            for k2 in 0..n {
                                row[(j * n + k1) * n + k2].add_product(qv, f.get(b, d, k2));
                            }
                        }
                    }
                }
            }
            row
        })
        .collect();

    (
        lhs_rows.into_iter().flatten().collect(),
        rhs_rows.into_iter().flatten().collect(),
    )
}

/// Δ is an algebra morphism: Σₖ F(i,j,k)G(k′,k″,k) = Σ G(i′,i″,i)G(j′,j″,j)F(i′,j′,k′)F(i″,j″,k″).
pub fn verify_green_compat(p: &BialgebraPresentation) -> AxiomReport {
    let n = p.dim();
    let (lhs, rhs) = green_compat_sides(p);
    AxiomReport::from_sides("green_compat", &[n, n, n, n], &lhs, &rhs, None)
}

/// ε is an algebra morphism: Σₖ F(i,j,k)μₖ = μᵢμⱼ.
pub fn verify_counit_compat(mult: &StructureTensor, counit: &[Scalar]) -> AxiomReport {
    morphism_of_scalars("counit_compat", mult, counit)
}

/// u is a coalgebra morphism: Σₖ G(i,j,k)λₖ = λᵢλⱼ.
pub fn verify_unit_compat(comult: &StructureTensor, unit: &[Scalar]) -> AxiomReport {
    morphism_of_scalars("unit_compat", comult, unit)
}

fn morphism_of_scalars(name: &str, t: &StructureTensor, v: &[Scalar]) -> AxiomReport {
    let n = t.dim();
    let field = t.field();
    let mut lhs = Vec::with_capacity(n * n);
    let mut rhs = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = field.zero();
            for (k, vk) in v.iter().enumerate() {
                acc.add_product(t.get(i, j, k), vk);
            }
            lhs.push(acc);
            rhs.push(&v[i] * &v[j]);
        }
    }
    AxiomReport::from_sides(name, &[n, n], &lhs, &rhs, None)
}

/// m∘(S⊗id)∘Δ = u∘ε (left, checked first) and m∘(id⊗S)∘Δ = u∘ε (right),
/// tested on every basis element l and output coordinate k.
pub fn verify_antipode(p: &BialgebraPresentation) -> Result<AxiomReport> {
    let s = p.antipode().ok_or(Error::MissingAntipode)?;
    let n = p.dim();
    let field = p.field();
    let f = p.mult();
    let g = p.comult();
    // S(cᵢ)·cⱼ and cᵢ·S(cⱼ)
    let mut s_left = StructureTensor::zeros(field, n);
    let mut s_right = StructureTensor::zeros(field, n);
    for i in 0..n {
        for a in 0..n {
            let sa = s.get(a, i);
            if sa.is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    let fl = f.get(a, j, k);
                    if !fl.is_zero() {
                        s_left.add_at(i, j, k, &(sa * fl));
                    }
                    let fr = f.get(j, a, k);
                    if !fr.is_zero() {
                        s_right.add_at(j, i, k, &(sa * fr));
                    }
                }
            }
        }
    }
    let mut left = Vec::with_capacity(n * n);
    let mut right = Vec::with_capacity(n * n);
    let mut expected = Vec::with_capacity(n * n);
    for l in 0..n {
        for k in 0..n {
            let mut lv = field.zero();
            let mut rv = field.zero();
            for i in 0..n {
                for j in 0..n {
                    let gv = g.get(i, j, l);
                    if gv.is_zero() {
                        continue;
                    }
                    lv.add_product(gv, s_left.get(i, j, k));
                    rv.add_product(gv, s_right.get(i, j, k));
                }
            }
            left.push(lv);
            right.push(rv);
            expected.push(&p.counit()[l] * &p.unit()[k]);
        }
    }
    Ok(AxiomReport::from_sides("antipode", &[n, n], &left, &expected, Some("left"))
        .and_then(|| AxiomReport::from_sides("antipode", &[n, n], &right, &expected, Some("right"))))
}

/// Runs every check in this fixed order: associativity, unit,
/// coassociativity, counit, green_compat, counit_compat, unit_compat, and
/// antipode when the presentation carries one.
pub fn verify_all(p: &BialgebraPresentation) -> Vec<AxiomReport> {
    let mut reports = vec![
        verify_associativity(p.mult()),
        verify_unit(p.mult(), p.unit()),
        verify_coassociativity(p.comult()),
        verify_counit(p.comult(), p.counit()),
        verify_green_compat(p),
        verify_counit_compat(p.mult(), p.counit()),
        verify_unit_compat(p.comult(), p.unit()),
    ];
    if p.antipode().is_some() {
        reports.push(verify_antipode(p).expect("antipode present"));
    }
    reports
}

pub fn all_hold(reports: &[AxiomReport]) -> bool {
    reports.iter().all(AxiomReport::holds)
}
