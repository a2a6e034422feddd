//! The partial square-root table.
//!
//! Supported inputs: rational perfect squares; in 𝔽ₚ every quadratic residue;
//! in ℚ(ζₙ) every r·ζᵏ where ζᵏ has a square root among the powers of ζ and
//! r is s² or −s² (when i ∈ ℚ(ζₙ)) or ±2s² (when 8 | n, via ζ₈ ± ζ₈⁻¹).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{prime_sqrt, rational_sqrt, Field, Scalar};

pub(super) fn sqrt(a: &Scalar) -> Option<Scalar> {
    let root = match a {
        Scalar::Rational(r) => rational_sqrt(r).map(Scalar::Rational),
        Scalar::Prime { value, modulus } => prime_sqrt(*value, *modulus).map(|v| Scalar::Prime {
            value: v,
            modulus: *modulus,
        }),
        Scalar::Cyclotomic { .. } => cyclotomic_sqrt(a),
    }?;
    debug_assert!(&root * &root == *a);
    (&root * &root == *a).then_some(root)
}

fn cyclotomic_sqrt(a: &Scalar) -> Option<Scalar> {
    let field = a.field();
    if a.is_zero() {
        return Some(field.zero());
    }
    let n = match field.spec() {
        super::FieldSpec::Cyclotomic(n) => n as i64,
        _ => unreachable!(),
    };
    // a = r·ζᵏ for some rational r and some k
    for k in 0..n {
        let shifted = a * &field.root_of_unity(-k).ok()?;
        let Some(r) = shifted.as_rational() else {
            continue;
        };
        let Some(unit_root) = unit_sqrt(&field, n, k) else {
            continue;
        };
        if let Some(rational_root) = rational_part_sqrt(&field, n, &r) {
            return Some(&rational_root * &unit_root);
        }
    }
    None
}

/// A square root of ζᵏ among the powers of ζ.
fn unit_sqrt(field: &Field, n: i64, k: i64) -> Option<Scalar> {
    if k % 2 == 0 {
        field.root_of_unity(k / 2).ok()
    } else if n % 2 == 1 {
        field.root_of_unity((k + n) / 2).ok()
    } else {
        None
    }
}

fn rational_part_sqrt(field: &Field, n: i64, r: &BigRational) -> Option<Scalar> {
    let magnitude = r.abs();
    let sign_root = if r.is_negative() {
        // √−1 = ζ^(n/4)
        if n % 4 != 0 {
            None
        } else {
            field.root_of_unity(n / 4).ok()
        }
    } else {
        Some(field.one())
    };
    if let (Some(s), Some(sign)) = (rational_sqrt(&magnitude), sign_root.clone()) {
        return Some(&field.from_rational(s).ok()? * &sign);
    }
    // ±2s², using √2 = ζ₈ + ζ₈⁻¹ and √−2 = ζ₈ − ζ₈⁻¹
    if n % 8 != 0 {
        return None;
    }
    let half = &magnitude / BigRational::from_integer(BigInt::from(2));
    if half.is_zero() {
        return None;
    }
    let s = rational_sqrt(&half)?;
    let zeta8 = field.root_of_unity(n / 8).ok()?;
    let zeta8_inv = field.root_of_unity(-(n / 8)).ok()?;
    let root2 = if r.is_negative() {
        &zeta8 - &zeta8_inv
    } else {
        &zeta8 + &zeta8_inv
    };
    Some(&field.from_rational(s).ok()? * &root2)
}
