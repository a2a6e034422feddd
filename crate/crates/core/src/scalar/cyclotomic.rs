//! Arithmetic in ℚ(ζₙ) ≅ ℚ[x]/(Φₙ), elements stored as reduced coefficient vectors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Precomputed data for one cyclotomic field.
#[derive(Debug)]
pub struct CyclotomicContext {
    order: u32,
    modulus: Vec<BigInt>,
    // x^(degree + t) mod Φₙ for t in 0..degree-1
    reduction: Vec<Vec<BigRational>>,
}

impl CyclotomicContext {
    pub fn new(order: u32) -> Self {
        assert!(order >= 1);
        let modulus = cyclotomic_polynomial(order);
        let degree = modulus.len() - 1;
        let mut reduction = Vec::with_capacity(degree.saturating_sub(1));
        // x^degree ≡ -(Φ - x^degree)
        let mut current: Vec<BigRational> = modulus[..degree]
            .iter()
            .map(|c| BigRational::from_integer(-c.clone()))
            .collect();
        for _ in 0..degree.saturating_sub(1) {
            reduction.push(current.clone());
            // multiply by x and reduce
            let top = current[degree - 1].clone();
            let mut next = vec![BigRational::zero(); degree];
            for i in (1..degree).rev() {
                next[i] = current[i - 1].clone();
            }
            if !top.is_zero() {
                for (i, c) in modulus[..degree].iter().enumerate() {
                    next[i] -= &top * BigRational::from_integer(c.clone());
                }
            }
            current = next;
        }
        Self {
            order,
            modulus,
            reduction,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Coefficients of Φₙ, lowest degree first.
    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    pub fn mul(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let d = self.degree();
        if d == 1 {
            return vec![&a[0] * &b[0]];
        }
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] += x * y;
            }
        }
        let mut out: Vec<BigRational> = prod[..d].to_vec();
        for (t, c) in prod[d..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(&self.reduction[t]) {
                if !r.is_zero() {
                    *o += c * r;
                }
            }
        }
        out
    }

    /// Reduces an arbitrary-length polynomial in ζ modulo Φₙ.
    pub fn reduce(&self, poly: &[BigRational]) -> Vec<BigRational> {
        let d = self.degree();
        let mut out = vec![BigRational::zero(); d];
        let zeta = self.zeta();
        let mut power = self.monomial(0);
        for c in poly {
            if !c.is_zero() {
                for (o, p) in out.iter_mut().zip(&power) {
                    *o += c * p;
                }
            }
            power = self.mul(&power, &zeta);
        }
        out
    }

    /// ζ itself as a reduced coefficient vector.
    pub fn zeta(&self) -> Vec<BigRational> {
        let d = self.degree();
        if d == 1 {
            // Φ₁ = x − 1, Φ₂ = x + 1
            return vec![BigRational::from_integer(-self.modulus[0].clone())];
        }
        let mut v = vec![BigRational::zero(); d];
        v[1] = BigRational::one();
        v
    }

    /// ζᵏ as a reduced coefficient vector, k taken modulo n.
    pub fn monomial(&self, k: usize) -> Vec<BigRational> {
        let d = self.degree();
        let k = k % self.order as usize;
        if k < d && d > 1 {
            let mut v = vec![BigRational::zero(); d];
            v[k] = BigRational::one();
            return v;
        }
        let zeta = self.zeta();
        let mut v = vec![BigRational::zero(); d];
        v[0] = BigRational::one();
        for _ in 0..k {
            v = self.mul(&v, &zeta);
        }
        v
    }

    /// Multiplicative inverse by solving (a·X) = 1 over ℚ. Returns `None` for zero.
    pub fn inverse(&self, a: &[BigRational]) -> Option<Vec<BigRational>> {
        let d = self.degree();
        if a.iter().all(Zero::is_zero) {
            return None;
        }
        let zeta = self.zeta();
        // columns: a·ζʲ
        let mut cols = Vec::with_capacity(d);
        let mut col = a.to_vec();
        for j in 0..d {
            if j > 0 {
                col = self.mul(&col, &zeta);
            }
            cols.push(col.clone());
        }
        // augmented rows [M | e0]
        let mut rows: Vec<Vec<BigRational>> = (0..d)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..d).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
                row
            })
            .collect();
        for c in 0..d {
            let pivot = (c..d).find(|&r| !rows[r][c].is_zero())?;
            rows.swap(c, pivot);
            let inv = rows[c][c].recip();
            for v in rows[c].iter_mut() {
                *v *= &inv;
            }
            for r in 0..d {
                if r != c && !rows[r][c].is_zero() {
                    let factor = rows[r][c].clone();
                    for k in c..=d {
                        let delta = &factor * &rows[c][k];
                        rows[r][k] -= delta;
                    }
                }
            }
        }
        Some(rows.into_iter().map(|mut r| r.pop().unwrap()).collect())
    }
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Φₙ with integer coefficients (lowest degree first), obtained by dividing
/// xⁿ − 1 by every Φ_d with d | n, d < n.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        poly = exact_divide(&poly, &cyclotomic_polynomial(d));
    }
    poly
}

fn exact_divide(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead = den.last().expect("nonempty divisor");
    debug_assert!(lead.abs().is_one());
    let mut quot = vec![BigInt::zero(); rem.len() - dl + 1];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + dl - 1] / lead;
        if !c.is_zero() {
            for (j, dc) in den.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "non-exact cyclotomic division");
    quot
}
