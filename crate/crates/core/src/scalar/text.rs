//! Text encoding of scalars and field specs.
//!
//! Rationals: `a` or `a/b` (b > 0). Prime-field residues: decimal digits.
//! Cyclotomic elements: `[c0, c1, ..., c_{φ(n)-1}] @ zeta(n)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Field, FieldSpec, Scalar};
use crate::error::{Error, Result};

pub(super) fn format_scalar(s: &Scalar) -> String {
    match s {
        Scalar::Rational(r) => format_rational(r),
        Scalar::Prime { value, .. } => value.to_string(),
        Scalar::Cyclotomic { ctx, coeffs } => {
            let parts: Vec<String> = coeffs.iter().map(format_rational).collect();
            format!("[{}] @ zeta({})", parts.join(", "), ctx.order())
        }
    }
}

fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("invalid rational `{text}`"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num: BigInt = parse_integer(num).ok_or_else(bad)?;
    let den: BigInt = match den {
        Some(d) => {
            if d.starts_with(['-', '+']) {
                return Err(bad());
            }
            parse_integer(d).ok_or_else(bad)?
        }
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{text}`")));
    }
    Ok(BigRational::new(num, den))
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

/// Parses a scalar in the given field.
///
/// Plain rational text is accepted in every field (it embeds); the
/// bracketed form must name the field's own ζ-order and carry exactly
/// φ(n) coefficients.
pub fn parse_scalar(field: &Field, text: &str) -> Result<Scalar> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix('[') {
        let (body, tail) = rest
            .split_once(']')
            .ok_or_else(|| Error::Parse(format!("unclosed `[` in `{text}`")))?;
        let order = tail
            .trim()
            .strip_prefix('@')
            .map(str::trim)
            .and_then(|t| t.strip_prefix("zeta("))
            .and_then(|t| t.strip_suffix(')'))
            .and_then(|t| t.trim().parse::<u32>().ok())
            .ok_or_else(|| Error::Parse(format!("expected `@ zeta(n)` after `]` in `{text}`")))?;
        if field.spec() != FieldSpec::Cyclotomic(order) {
            return Err(Error::FieldMismatch {
                left: field.spec(),
                right: FieldSpec::Cyclotomic(order),
            });
        }
        let ctx = field.cyclotomic_context().expect("cyclotomic field").clone();
        let coeffs: Vec<BigRational> = body
            .split(',')
            .map(parse_rational)
            .collect::<Result<_>>()?;
        if coeffs.len() != ctx.degree() {
            return Err(Error::Parse(format!(
                "expected {} coefficients for zeta({order}), found {}",
                ctx.degree(),
                coeffs.len()
            )));
        }
        return Ok(Scalar::Cyclotomic { ctx, coeffs });
    }
    match field.spec() {
        FieldSpec::PrimeField(p) => {
            let v: u64 = text
                .parse()
                .map_err(|_| Error::Parse(format!("invalid residue `{text}`")))?;
            if v >= p {
                return Err(Error::Parse(format!("residue {v} out of range for prime {p}")));
            }
            Ok(Scalar::Prime {
                value: v,
                modulus: p,
            })
        }
        _ => field.from_rational(parse_rational(text)?),
    }
}

/// Parses `rational`, `prime P` or `cyclotomic N` (a `:` may replace the space).
pub fn parse_field_spec(text: &str) -> Result<FieldSpec> {
    let text = text.trim();
    let mut parts = text.split([' ', ':']).filter(|s| !s.is_empty());
    let kind = parts.next().unwrap_or("");
    let param = parts.next();
    let bad = || Error::Parse(format!("invalid field `{text}`"));
    let spec = match (kind, param) {
        ("rational", None) | ("Q", None) => FieldSpec::Rational,
        ("prime", Some(p)) => FieldSpec::PrimeField(p.parse().map_err(|_| bad())?),
        ("cyclotomic", Some(n)) => FieldSpec::Cyclotomic(n.parse().map_err(|_| bad())?),
        _ => return Err(bad()),
    };
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(spec)
}
