//! Exact scalars over ℚ, 𝔽ₚ and ℚ(ζₙ).
//!
//! A [`Field`] is a cheap handle (the cyclotomic tables sit behind an `Arc`).
//! A [`Scalar`] carries enough of its field to do arithmetic on its own, so
//! tensors and matrices can be plain `Vec<Scalar>`. Every representation is
//! canonical, so derived equality is value equality.

mod cyclotomic;
mod sqrt;
mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CyclotomicContext};

/// Which exact field a scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rational,
    PrimeField(u64),
    /// ℚ(ζₙ); orders 1 and 2 are ℚ itself with one coefficient.
    Cyclotomic(u32),
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::PrimeField(p) => *p,
            _ => 0,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::PrimeField(p) => write!(f, "prime {p}"),
            FieldSpec::Cyclotomic(n) => write!(f, "cyclotomic {n}"),
        }
    }
}

/// Handle on a constructed field.
#[derive(Clone)]
pub struct Field {
    spec: FieldSpec,
    cyclo: Option<Arc<CyclotomicContext>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.spec)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for Field {}

impl Field {
    pub fn rational() -> Self {
        Field {
            spec: FieldSpec::Rational,
            cyclo: None,
        }
    }

    /// 𝔽ₚ for a prime p < 2³².
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field {
            spec: FieldSpec::PrimeField(p),
            cyclo: None,
        })
    }

    /// ℚ(ζₙ), with Φₙ precomputed.
    pub fn cyclotomic(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroCyclotomicOrder);
        }
        Ok(Field {
            spec: FieldSpec::Cyclotomic(n),
            cyclo: Some(Arc::new(CyclotomicContext::new(n))),
        })
    }

    pub fn from_spec(spec: FieldSpec) -> Result<Self> {
        match spec {
            FieldSpec::Rational => Ok(Self::rational()),
            FieldSpec::PrimeField(p) => Self::prime(p),
            FieldSpec::Cyclotomic(n) => Self::cyclotomic(n),
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn characteristic(&self) -> u64 {
        self.spec.characteristic()
    }

    pub(crate) fn cyclotomic_context(&self) -> Option<&Arc<CyclotomicContext>> {
        self.cyclo.as_ref()
    }

    pub fn zero(&self) -> Scalar {
        self.from_integer(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_integer(1)
    }

    pub fn from_integer(&self, v: i64) -> Scalar {
        self.from_rational(BigRational::from_integer(BigInt::from(v)))
            .expect("integers embed in every supported field")
    }

    /// Embeds a rational. Fails in 𝔽ₚ when the denominator is divisible by p.
    pub fn from_rational(&self, r: BigRational) -> Result<Scalar> {
        match &self.spec {
            FieldSpec::Rational => Ok(Scalar::Rational(r)),
            FieldSpec::PrimeField(p) => {
                let num = reduce_bigint(r.numer(), *p);
                let den = reduce_bigint(r.denom(), *p);
                if den == 0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Prime {
                    value: mul_mod(num, inv_mod(den, *p), *p),
                    modulus: *p,
                })
            }
            FieldSpec::Cyclotomic(_) => {
                let ctx = self.cyclo.clone().expect("cyclotomic context");
                let mut coeffs = vec![BigRational::zero(); ctx.degree()];
                coeffs[0] = r;
                Ok(Scalar::Cyclotomic { ctx, coeffs })
            }
        }
    }

    /// Builds ℚ(ζₙ) element Σ cᵢ ζⁱ from any number of coefficients, reducing mod Φₙ.
    pub fn from_zeta_poly(&self, coeffs: &[BigRational]) -> Result<Scalar> {
        let ctx = self.cyclo.clone().ok_or_else(|| Error::Unsupported {
            field: self.spec,
            reason: "not a cyclotomic field".into(),
        })?;
        let coeffs = ctx.reduce(coeffs);
        Ok(Scalar::Cyclotomic { ctx, coeffs })
    }

    /// ζₙᵏ in ℚ(ζₙ); k may be negative.
    pub fn root_of_unity(&self, k: i64) -> Result<Scalar> {
        let ctx = self.cyclo.clone().ok_or_else(|| Error::Unsupported {
            field: self.spec,
            reason: "root_of_unity needs a cyclotomic field; use primitive_root".into(),
        })?;
        let n = ctx.order() as i64;
        let coeffs = ctx.monomial(k.rem_euclid(n) as usize);
        Ok(Scalar::Cyclotomic { ctx, coeffs })
    }

    /// An element of exact multiplicative order `order`.
    ///
    /// In ℚ(ζₘ) the available orders are the divisors of m (or of 2m for odd m);
    /// the result is ζ^(m/order). In 𝔽ₚ the order must divide p − 1 and the
    /// result is g^((p−1)/order) for the least generator g.
    pub fn primitive_root(&self, order: u64) -> Result<Scalar> {
        let missing = || Error::MissingRootOfUnity {
            field: self.spec,
            order,
        };
        if order == 0 {
            return Err(missing());
        }
        match &self.spec {
            FieldSpec::Rational => match order {
                1 => Ok(self.one()),
                2 => Ok(self.from_integer(-1)),
                _ => Err(missing()),
            },
            FieldSpec::PrimeField(p) => {
                let p = *p;
                if (p - 1) % order != 0 {
                    return Err(missing());
                }
                let g = primitive_generator(p);
                Ok(Scalar::Prime {
                    value: pow_mod(g, (p - 1) / order, p),
                    modulus: p,
                })
            }
            FieldSpec::Cyclotomic(m) => {
                let m = *m as u64;
                let full = if m.is_multiple_of(2) { m } else { 2 * m };
                if full % order != 0 {
                    return Err(missing());
                }
                // primitive `full`-th root: ζ itself, or −ζ^((m+1)/2) for odd m
                let base = if m.is_multiple_of(2) {
                    self.root_of_unity(1)?
                } else {
                    -self.root_of_unity(m.div_ceil(2) as i64)?
                };
                Ok(base.pow((full / order) as u32))
            }
        }
    }
}

/// An exact field element.
#[derive(Clone)]
pub enum Scalar {
    Rational(BigRational),
    Prime {
        value: u64,
        modulus: u64,
    },
    Cyclotomic {
        ctx: Arc<CyclotomicContext>,
        coeffs: Vec<BigRational>,
    },
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (
                Scalar::Prime { value, modulus },
                Scalar::Prime {
                    value: v,
                    modulus: m,
                },
            ) => modulus == m && value == v,
            (
                Scalar::Cyclotomic { ctx, coeffs },
                Scalar::Cyclotomic {
                    ctx: c2,
                    coeffs: k2,
                },
            ) => ctx.order() == c2.order() && coeffs == k2,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Scalar {
    pub fn field_spec(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Prime { modulus, .. } => FieldSpec::PrimeField(*modulus),
            Scalar::Cyclotomic { ctx, .. } => FieldSpec::Cyclotomic(ctx.order()),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::rational(),
            Scalar::Prime { modulus, .. } => Field {
                spec: FieldSpec::PrimeField(*modulus),
                cyclo: None,
            },
            Scalar::Cyclotomic { ctx, .. } => Field {
                spec: FieldSpec::Cyclotomic(ctx.order()),
                cyclo: Some(ctx.clone()),
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
            Scalar::Cyclotomic { coeffs, .. } => coeffs.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
            Scalar::Cyclotomic { coeffs, .. } => {
                coeffs[0].is_one() && coeffs[1..].iter().all(Zero::is_zero)
            }
        }
    }

    /// The rational value, if this scalar lies in ℚ (never for 𝔽ₚ).
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::Prime { .. } => None,
            Scalar::Cyclotomic { coeffs, .. } => coeffs[1..]
                .iter()
                .all(Zero::is_zero)
                .then(|| coeffs[0].clone()),
        }
    }

    fn check_same(&self, other: &Scalar) -> Result<()> {
        let (l, r) = (self.field_spec(), other.field_spec());
        if l == r {
            Ok(())
        } else {
            Err(Error::FieldMismatch { left: l, right: r })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value, modulus }, Scalar::Prime { value: v, .. }) => Scalar::Prime {
                value: (value + v) % modulus,
                modulus: *modulus,
            },
            (Scalar::Cyclotomic { ctx, coeffs }, Scalar::Cyclotomic { coeffs: c2, .. }) => {
                Scalar::Cyclotomic {
                    ctx: ctx.clone(),
                    coeffs: coeffs.iter().zip(c2).map(|(a, b)| a + b).collect(),
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value, modulus }, Scalar::Prime { value: v, .. }) => Scalar::Prime {
                value: mul_mod(*value, *v, *modulus),
                modulus: *modulus,
            },
            (Scalar::Cyclotomic { ctx, coeffs }, Scalar::Cyclotomic { coeffs: c2, .. }) => {
                Scalar::Cyclotomic {
                    ctx: ctx.clone(),
                    coeffs: ctx.mul(coeffs, c2),
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
            Scalar::Cyclotomic { ctx, coeffs } => Scalar::Cyclotomic {
                ctx: ctx.clone(),
                coeffs: ctx.inverse(coeffs).ok_or(Error::DivisionByZero)?,
            },
        })
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact multiplicative order, searched up to `limit`.
    pub fn multiplicative_order(&self, limit: u32) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut x = self.clone();
        for k in 1..=limit {
            if x.is_one() {
                return Some(k);
            }
            x = &x * self;
        }
        None
    }

    /// A square root from the supported table, or `None`.
    pub fn sqrt(&self) -> Option<Scalar> {
        sqrt::sqrt(self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_scalar(self))
    }
}

pub use text::{parse_field_spec, parse_scalar};

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect(concat!("scalar ", stringify!($method)))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
            Scalar::Cyclotomic { ctx, coeffs } => Scalar::Cyclotomic {
                ctx: ctx.clone(),
                coeffs: coeffs.iter().map(|c| -c).collect(),
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Scalar {
    /// `self += a * b`, skipping the work when either factor is zero.
    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let prod = a * b;
        *self = &*self + &prod;
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((v % &m) + &m) % &m;
    r.to_u64().expect("residue fits")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn primitive_generator(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("every prime field has a generator")
}

pub(crate) fn prime_sqrt(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    // Tonelli–Shanks
    let mut q = p - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)?;
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r.min(p - r))
}

pub(crate) fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}
