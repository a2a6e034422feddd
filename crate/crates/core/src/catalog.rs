//! Concrete families: abelian group algebras, Taft algebras, and A⊗A*.

use crate::duality::DualityWitness;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::presentation::{BialgebraPresentation, Element, StructureTensor};
use crate::scalar::{Field, Scalar};

/// A finite abelian group ℤ/n₁ × … × ℤ/n_r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroupSpec {
    factors: Vec<u32>,
}

impl AbelianGroupSpec {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if factors.contains(&0) {
            return Err(Error::InvalidPresentation("cyclic factors must be at least 1".into()));
        }
        Ok(AbelianGroupSpec { factors })
    }

    pub fn cyclic(n: u32) -> Self {
        Self::new(vec![n]).expect("positive order")
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.factors.iter().map(|&f| f as usize).product()
    }

    /// Exponent tuple of the i-th element; the last factor varies fastest.
    fn element(&self, mut i: usize) -> Vec<u32> {
        let mut out = vec![0; self.factors.len()];
        for (slot, &f) in out.iter_mut().zip(&self.factors).rev() {
            *slot = (i % f as usize) as u32;
            i /= f as usize;
        }
        out
    }

    fn index(&self, exps: &[u32]) -> usize {
        exps.iter()
            .zip(&self.factors)
            .fold(0, |acc, (&e, &f)| acc * f as usize + (e % f) as usize)
    }

    fn label(&self, exps: &[u32]) -> String {
        let single = self.factors.len() == 1;
        let parts: Vec<String> = exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(r, &e)| {
                let base = if single { "g".to_string() } else { format!("g{}", r + 1) };
                if e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("")
        }
    }
}

fn check_characteristic(field: &Field, order: u64) -> Result<()> {
    let p = field.characteristic();
    if p != 0 && order.is_multiple_of(p) {
        return Err(Error::CharacteristicDivides {
            characteristic: p,
            order,
        });
    }
    Ok(())
}

/// The group algebra k[G] in its grouplike basis.
pub fn group_algebra(group: &AbelianGroupSpec, field: &Field) -> Result<BialgebraPresentation> {
    let n = group.order();
    check_characteristic(field, n as u64)?;
    let elems: Vec<Vec<u32>> = (0..n).map(|i| group.element(i)).collect();
    let add = |a: &[u32], b: &[u32]| -> usize {
        let sum: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        group.index(&sum)
    };
    let mult = StructureTensor::from_fn(field, n, |i, j, k| {
        if add(&elems[i], &elems[j]) == k {
            field.one()
        } else {
            field.zero()
        }
    });
    let comult = StructureTensor::from_fn(field, n, |i, j, k| {
        if i == k && j == k {
            field.one()
        } else {
            field.zero()
        }
    });
    let mut unit = vec![field.zero(); n];
    unit[0] = field.one();
    let counit = vec![field.one(); n];
    let mut antipode = Matrix::zeros(field, n, n);
    for (i, e) in elems.iter().enumerate() {
        let neg: Vec<u32> = e.iter().zip(group.factors()).map(|(&x, &f)| (f - x) % f).collect();
        antipode.set(group.index(&neg), i, field.one());
    }
    let labels = elems.iter().map(|e| group.label(e)).collect();
    BialgebraPresentation::new(labels, mult, comult, unit, counit, Some(antipode))
}

/// The character table s_ij = Π ζ_{n_r}^{a_r b_r}, a symmetric self-duality of k[G].
pub fn group_selfdual_witness(group: &AbelianGroupSpec, field: &Field) -> Result<DualityWitness> {
    let n = group.order();
    let roots: Vec<Scalar> = group
        .factors()
        .iter()
        .map(|&f| field.primitive_root(f as u64))
        .collect::<Result<_>>()?;
    let elems: Vec<Vec<u32>> = (0..n).map(|i| group.element(i)).collect();
    let mut s = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            let mut v = field.one();
            for (r, root) in roots.iter().enumerate() {
                let f = group.factors()[r];
                let e = (elems[i][r] * elems[j][r]) % f;
                v = &v * &root.pow(e);
            }
            s.set(i, j, v);
        }
    }
    DualityWitness::new(s)
}

/// Index of gᵃhᵇ in the Taft basis.
pub fn taft_index(n: usize, a: usize, b: usize) -> usize {
    if n == 2 {
        b * 2 + a
    } else {
        a * n + b
    }
}

fn taft_label(a: usize, b: usize) -> String {
    let part = |sym: &str, e: usize| match e {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{e}"),
    };
    let s = format!("{}{}", part("g", a), part("h", b));
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// The Taft algebra Hₙ(q) with q the field's canonical primitive n-th root.
pub fn taft(n: usize, field: &Field) -> Result<BialgebraPresentation> {
    if n < 2 {
        return Err(Error::InvalidPresentation("Taft algebras need n >= 2".into()));
    }
    check_characteristic(field, n as u64)?;
    let q = field.primitive_root(n as u64)?;
    taft_with_root(n, &q)
}

/// Hₙ(q) for an explicitly chosen q, which must have exact order n.
pub fn taft_with_root(n: usize, q: &Scalar) -> Result<BialgebraPresentation> {
    let field = q.field();
    if n < 2 {
        return Err(Error::InvalidPresentation("Taft algebras need n >= 2".into()));
    }
    check_characteristic(&field, n as u64)?;
    if q.multiplicative_order(n as u32) != Some(n as u32) {
        return Err(Error::Hypothesis(format!("{q} is not a primitive root of order {n}")));
    }
    let dim = n * n;
    let idx = |a: usize, b: usize| taft_index(n, a, b);
    let q_pows: Vec<Scalar> = (0..n as u32).map(|e| q.pow(e)).collect();

    // gᵃhᵇ · gᶜhᵈ = q^{bc} g^{a+c} h^{b+d}
    let mut mult = StructureTensor::zeros(&field, dim);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if b + d >= n {
                        continue;
                    }
                    mult.set(
                        idx(a, b),
                        idx(c, d),
                        idx((a + c) % n, b + d),
                        q_pows[(b * c) % n].clone(),
                    );
                }
            }
        }
    }

    let mut unit = vec![field.zero(); dim];
    unit[idx(0, 0)] = field.one();
    let mut counit = vec![field.zero(); dim];
    for a in 0..n {
        counit[idx(a, 0)] = field.one();
    }
    let labels: Vec<String> = {
        let mut l = vec![String::new(); dim];
        for a in 0..n {
            for b in 0..n {
                l[idx(a, b)] = taft_label(a, b);
            }
        }
        l
    };

    // Δ is built from Δ(g) = g⊗g and Δ(h) = 1⊗h + h⊗g using the product above.
    let scaffold = BialgebraPresentation::new(
        labels.clone(),
        mult.clone(),
        StructureTensor::zeros(&field, dim),
        unit.clone(),
        counit.clone(),
        None,
    )?;
    let mut delta_g = Matrix::zeros(&field, dim, dim);
    delta_g.set(idx(1, 0), idx(1, 0), field.one());
    let mut delta_h = Matrix::zeros(&field, dim, dim);
    delta_h.set(idx(0, 0), idx(0, 1), field.one());
    delta_h.set(idx(0, 1), idx(1, 0), field.one());
    let mut delta_one = Matrix::zeros(&field, dim, dim);
    delta_one.set(idx(0, 0), idx(0, 0), field.one());

    let mut comult = StructureTensor::zeros(&field, dim);
    let mut g_power = delta_one;
    for a in 0..n {
        let mut term = g_power.clone();
        for b in 0..n {
            let k = idx(a, b);
            for i in 0..dim {
                for j in 0..dim {
                    let v = term.get(i, j);
                    if !v.is_zero() {
                        comult.set(i, j, k, v.clone());
                    }
                }
            }
            term = scaffold.multiply_tensor_square(&term, &delta_h);
        }
        g_power = scaffold.multiply_tensor_square(&g_power, &delta_g);
    }

    // S(gᵃhᵇ) = S(h)ᵇ S(g)ᵃ with S(g) = g^{n-1}, S(h) = -q⁻¹ g^{n-1} h
    let s_g = Element::basis(&field, dim, idx(n - 1, 0));
    let s_h = Element::basis(&field, dim, idx(n - 1, 1)).scale(&-&q.inv()?);
    let mut antipode = Matrix::zeros(&field, dim, dim);
    for a in 0..n {
        for b in 0..n {
            let image = scaffold.multiply(&scaffold.power(&s_h, b as u32)?, &scaffold.power(&s_g, a as u32)?)?;
            for (r, v) in image.coords().iter().enumerate() {
                antipode.set(r, idx(a, b), v.clone());
            }
        }
    }

    BialgebraPresentation::new(labels, mult, comult, unit, counit, Some(antipode))
}

/// The symmetric self-duality of H₂ in the basis (1, g, h, gh).
pub fn taft2_witness(field: &Field) -> Result<DualityWitness> {
    DualityWitness::new(Matrix::from_ints(
        field,
        &[&[1, 1, 0, 0], &[1, -1, 0, 0], &[0, 0, 1, 1], &[0, 0, 1, -1]],
    ))
}

/// A⊗A* with the componentwise (untwisted) structure, basis cᵢ⊗c*ⱼ at index i·n + j.
pub fn tensor_with_dual(p: &BialgebraPresentation) -> Result<BialgebraPresentation> {
    let n = p.dim();
    let field = p.field();
    let dim = n * n;
    let f = p.mult();
    let g = p.comult();
    let pair = |t1: &StructureTensor, t2: &StructureTensor| {
        let mut out = StructureTensor::zeros(field, dim);
        for ((i, k, m), x) in t1.nonzero() {
            for ((j, l, o), y) in t2.nonzero() {
                out.set(i * n + j, k * n + l, m * n + o, x * y);
            }
        }
        out
    };
    let mult = pair(f, g);
    let comult = pair(g, f);
    let outer = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
        u.iter().flat_map(|a| v.iter().map(move |b| a * b)).collect()
    };
    let unit = outer(p.unit(), p.counit());
    let counit = outer(p.counit(), p.unit());
    let antipode = p.antipode().map(|s| s.kronecker(&s.transpose()));
    let labels = p
        .labels()
        .iter()
        .flat_map(|a| p.labels().iter().map(move |b| format!("{a}.{b}*")))
        .collect();
    BialgebraPresentation::new(labels, mult, comult, unit, counit, antipode)
}

/// Names of the families the catalog can build.
pub const FAMILIES: &[(&str, &str)] = &[
    ("group", "group algebra of Z/n1 x ... x Z/nr, with its character-table witness"),
    ("taft", "Taft algebra H_n(q) of dimension n^2 (n = 2 ships the self-duality witness)"),
    ("tensor-dual", "A (x) A* for a group algebra or a Taft algebra"),
];
