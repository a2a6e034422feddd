//! Structure-constant presentations.
//!
//! For a basis c₀,…,c_{n−1}:
//!
//! * the multiplication tensor stores `F(i, j, k)` with cᵢ·cⱼ = Σₖ F(i, j, k)·cₖ;
//! * the comultiplication tensor stores `G(i, j, k)` with Δ(cₖ) = Σᵢⱼ G(i, j, k)·cᵢ⊗cⱼ.
//!
//! So in both tensors the last index is the single leg: the output of a product,
//! the input of a coproduct. Indices are 0-based here and 1-based in files and
//! CLI output.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};

/// Dense n×n×n array of scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor {
    dim: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl StructureTensor {
    pub fn zeros(field: &Field, dim: usize) -> Self {
        StructureTensor {
            dim,
            field: field.clone(),
            entries: vec![field.zero(); dim * dim * dim],
        }
    }

    pub fn from_fn(field: &Field, dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut t = Self::zeros(field, dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    t.set(i, j, k, f(i, j, k));
                }
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.entries[self.index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let idx = self.index(i, j, k);
        self.entries[idx] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
        let idx = self.index(i, j, k);
        self.entries[idx] = &self.entries[idx] + v;
    }

    /// Nonzero entries in lexicographic (i, j, k) order.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize, usize), &Scalar)> + '_ {
        let n = self.dim;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(move |(idx, s)| ((idx / (n * n), (idx / n) % n, idx % n), s))
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// Swaps the first two legs: T'(i, j, k) = T(j, i, k).
    pub fn swap_inputs(&self) -> Self {
        Self::from_fn(&self.field, self.dim, |i, j, k| self.get(j, i, k).clone())
    }

    fn check_field(&self, field: &Field) -> Result<()> {
        if self.entries.iter().any(|s| s.field_spec() != field.spec()) || self.field != *field {
            return Err(Error::FieldMismatch {
                left: field.spec(),
                right: self.field.spec(),
            });
        }
        Ok(())
    }
}

/// Which bracketing [`triple_constants`] computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// (cᵢcⱼ)cₖ: Σₛ T(i,j,s)·T(s,k,l)
    Left,
    /// cᵢ(cⱼcₖ): Σₜ T(i,t,l)·T(j,k,t)
    Right,
}

/// Rank-4 array of triple-product constants, flattened as ((i·n + j)·n + k)·n + l.
pub fn triple_constants(t: &StructureTensor, side: Side) -> Vec<Scalar> {
    let n = t.dim();
    let rows: Vec<Vec<Scalar>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = vec![t.field().zero(); n * n * n];
            match side {
                Side::Left => {
                    for j in 0..n {
                        for s in 0..n {
                            let a = t.get(i, j, s);
                            if a.is_zero() {
                                continue;
                            }
                            for k in 0..n {
                                for l in 0..n {
                                    row[(j * n + k) * n + l].add_product(a, t.get(s, k, l));
                                }
                            }
                        }
                    }
                }
                Side::Right => {
                    for tt in 0..n {
                        for l in 0..n {
                            let a = t.get(i, tt, l);
                            if a.is_zero() {
                                continue;
                            }
                            for j in 0..n {
                                for k in 0..n {
                                    row[(j * n + k) * n + l].add_product(a, t.get(j, k, tt));
                                }
                            }
                        }
                    }
                }
            }
            row
        })
        .collect();
    rows.into_iter().flatten().collect()
}

/// A vector in the span of the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element(pub Vec<Scalar>);

impl Element {
    pub fn zero(field: &Field, dim: usize) -> Self {
        Element(vec![field.zero(); dim])
    }

    pub fn basis(field: &Field, dim: usize, i: usize) -> Self {
        let mut v = Self::zero(field, dim);
        v.0[i] = field.one();
        v
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Element(self.0.iter().map(|x| x * s).collect())
    }

    pub fn add(&self, other: &Element) -> Self {
        Element(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }
}

/// Bilinear product under a multiplication tensor: (a·b)ₖ = Σᵢⱼ aᵢ bⱼ F(i,j,k).
pub fn multiply_with(mult: &StructureTensor, a: &Element, b: &Element) -> Result<Element> {
    let n = mult.dim();
    for e in [a, b] {
        if e.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: e.dim(),
            });
        }
        if let Some(s) = e.0.iter().find(|s| s.field_spec() != mult.field().spec()) {
            return Err(Error::FieldMismatch {
                left: mult.field().spec(),
                right: s.field_spec(),
            });
        }
    }
    let mut out = Element::zero(mult.field(), n);
    for (i, x) in a.0.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.0.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let xy = x * y;
            for k in 0..n {
                out.0[k].add_product(&xy, mult.get(i, j, k));
            }
        }
    }
    Ok(out)
}

/// aᵐ as left-associated products, a⁰ = unit.
pub fn power_with(mult: &StructureTensor, unit: &[Scalar], a: &Element, m: u32) -> Result<Element> {
    let mut acc = Element(unit.to_vec());
    if m == 0 {
        return Ok(acc);
    }
    acc = a.clone();
    for _ in 1..m {
        acc = multiply_with(mult, &acc, a)?;
    }
    Ok(acc)
}

/// Finite-dimensional bialgebra (or Hopf algebra) given by structure constants.
///
/// Nothing about the axioms is assumed here; see [`crate::axioms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraPresentation {
    labels: Vec<String>,
    mult: StructureTensor,
    comult: StructureTensor,
    unit: Vec<Scalar>,
    counit: Vec<Scalar>,
    /// Column i holds the coordinates of S(cᵢ).
    antipode: Option<Matrix>,
}

impl BialgebraPresentation {
    pub fn new(
        labels: Vec<String>,
        mult: StructureTensor,
        comult: StructureTensor,
        unit: Vec<Scalar>,
        counit: Vec<Scalar>,
        antipode: Option<Matrix>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidPresentation("dimension must be positive".into()));
        }
        let field = mult.field().clone();
        for (what, d) in [
            ("multiplication", mult.dim()),
            ("comultiplication", comult.dim()),
            ("unit", unit.len()),
            ("counit", counit.len()),
        ] {
            if d != n {
                return Err(Error::InvalidPresentation(format!(
                    "{what} has dimension {d}, expected {n}"
                )));
            }
        }
        mult.check_field(&field)?;
        comult.check_field(&field)?;
        if let Some(s) = unit.iter().chain(&counit).find(|s| s.field_spec() != field.spec()) {
            return Err(Error::FieldMismatch {
                left: field.spec(),
                right: s.field_spec(),
            });
        }
        if let Some(a) = &antipode {
            if a.rows() != n || a.cols() != n {
                return Err(Error::InvalidPresentation(format!(
                    "antipode is {}x{}, expected {n}x{n}",
                    a.rows(),
                    a.cols()
                )));
            }
            if a.field() != &field {
                return Err(Error::FieldMismatch {
                    left: field.spec(),
                    right: a.field().spec(),
                });
            }
        }
        check_labels(&labels)?;
        Ok(BialgebraPresentation {
            labels,
            mult,
            comult,
            unit,
            counit,
            antipode,
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

    pub fn comult(&self) -> &StructureTensor {
        &self.comult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode(&self) -> Option<&Matrix> {
        self.antipode.as_ref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: labels.len(),
            });
        }
        check_labels(&labels)?;
        self.labels = labels;
        Ok(self)
    }

    pub fn without_antipode(mut self) -> Self {
        self.antipode = None;
        self
    }

    pub fn with_antipode(self, antipode: Matrix) -> Result<Self> {
        Self::new(self.labels, self.mult, self.comult, self.unit, self.counit, Some(antipode))
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

    /// Coordinates of Δ(a) in the basis cᵢ⊗cⱼ, as an n×n matrix.
    pub fn comultiply(&self, a: &Element) -> Result<Matrix> {
        let n = self.dim();
        if a.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: a.dim(),
            });
        }
        if let Some(s) = a.0.iter().find(|s| s.field_spec() != self.field().spec()) {
            return Err(Error::FieldMismatch {
                left: self.field().spec(),
                right: s.field_spec(),
            });
        }
        let mut out = Matrix::zeros(self.field(), n, n);
        for (k, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    let g = self.comult.get(i, j, k);
                    if !g.is_zero() {
                        let v = out.get(i, j) + &(x * g);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn power(&self, a: &Element, m: u32) -> Result<Element> {
        power_with(&self.mult, &self.unit, a, m)
    }

    /// Product in A⊗A of two tensors given as n×n coefficient matrices.
    pub fn multiply_tensor_square(&self, x: &Matrix, y: &Matrix) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zeros(self.field(), n, n);
        for a in 0..n {
            for b in 0..n {
                let xv = x.get(a, b);
                if xv.is_zero() {
                    continue;
                }
                for c in 0..n {
                    for d in 0..n {
                        let yv = y.get(c, d);
                        if yv.is_zero() {
                            continue;
                        }
                        let coeff = xv * yv;
                        for k in 0..n {
                            let f1 = self.mult.get(a, c, k);
                            if f1.is_zero() {
                                continue;
                            }
                            let c1 = &coeff * f1;
                            for l in 0..n {
                                let f2 = self.mult.get(b, d, l);
                                if !f2.is_zero() {
                                    let v = out.get(k, l) + &(&c1 * f2);
                                    out.set(k, l, v);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

fn check_labels(labels: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for l in labels {
        if l.is_empty() || l.chars().any(char::is_whitespace) {
            return Err(Error::InvalidPresentation(format!(
                "label `{l}` must be nonempty without whitespace"
            )));
        }
        if !seen.insert(l.as_str()) {
            return Err(Error::InvalidPresentation(format!("duplicate label `{l}`")));
        }
    }
    Ok(())
}
