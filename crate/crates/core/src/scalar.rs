//! Exact rational scalars and their text literals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational coefficient. Always stored in lowest terms with a positive denominator.
pub type Scalar = BigRational;

/// Error produced by [`parse_literal`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LiteralError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("non-reduced rational literal {0:?} (expected {1})")]
    NotReduced(String, String),
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

fn parse_digits(s: &str, whole: &str) -> Result<BigInt, LiteralError> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(LiteralError::Malformed(whole.to_string()));
    }
    s.parse::<BigInt>()
        .map_err(|_| LiteralError::Malformed(whole.to_string()))
}

/// Parses `"p/q"`, `"p"`, with an optional sign on the numerator.
///
/// Literals must already be in lowest terms with a positive denominator, so that
/// [`format_literal`] inverts this function exactly.
pub fn parse_literal(text: &str) -> Result<Scalar, LiteralError> {
    let t = text.trim();
    if t.is_empty() {
        return Err(LiteralError::Empty);
    }
    match t.split_once('/') {
        None => Ok(Scalar::from_integer(parse_digits(t, text)?)),
        Some((n, d)) => {
            let num = parse_digits(n, text)?;
            if d.starts_with(['+', '-']) {
                return Err(LiteralError::Malformed(text.to_string()));
            }
            let den = parse_digits(d, text)?;
            if den.is_zero() {
                return Err(LiteralError::ZeroDenominator(text.to_string()));
            }
            let value = Scalar::new(num.clone(), den.clone());
            if *value.numer() != num || *value.denom() != den {
                return Err(LiteralError::NotReduced(
                    text.to_string(),
                    format_literal(&value),
                ));
            }
            Ok(value)
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_literal(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_f64(x: &Scalar) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// Sign as -1, 0 or 1.
pub fn sign(x: &Scalar) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        assert_eq!(parse_literal("3").unwrap(), int(3));
        assert_eq!(parse_literal("3/1").unwrap(), int(3));
        assert_eq!(parse_literal("-9/2").unwrap(), frac(-9, 2));
        assert_eq!(parse_literal("+5").unwrap(), int(5));
        assert_eq!(
            parse_literal("1/0"),
            Err(LiteralError::ZeroDenominator("1/0".into()))
        );
        assert!(matches!(
            parse_literal("2/4"),
            Err(LiteralError::NotReduced(_, _))
        ));
        assert!(parse_literal("1.5").is_err());
        assert!(parse_literal("1/-2").is_err());
        assert!(parse_literal("").is_err());
        assert!(parse_literal("a/b").is_err());
    }

    #[test]
    fn canonical_form() {
        assert_eq!(format_literal(&frac(9, 2)), "9/2");
        assert_eq!(format_literal(&frac(-4, 2)), "-2");
        assert_eq!(format_literal(&zero()), "0");
    }
}
