//! Exact rational scalars and their `"<num>/<den>"` text form.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational. `Ratio` keeps itself reduced with a
/// positive denominator, so structural equality is numeric equality.
pub type Scalar = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarParseError {
    #[error("malformed rational `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `"n/d"` or a bare integer `"n"`. Non-reduced input is reduced.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    let malformed = || ScalarParseError::Malformed(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    if !is_integer_literal(num) || !is_integer_literal(den) {
        return Err(malformed());
    }
    let num = BigInt::from_str(num).map_err(|_| malformed())?;
    let den = BigInt::from_str(den).map_err(|_| malformed())?;
    if den.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(text.to_string()));
    }
    Ok(Scalar::new(num, den))
}

fn is_integer_literal(s: &str) -> bool {
    let digits = s.strip_prefix('-').unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

/// Reduced fraction with an explicit denominator, e.g. `3/1`, `-1/2`.
pub fn format_scalar(x: &Scalar) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn half() -> Scalar {
    Scalar::new(BigInt::one(), BigInt::from(2))
}

/// Serde adapter for ordered lists of scalars.
pub(crate) mod serde_text_vec {
    use super::{format_scalar, parse_scalar, Scalar};
    use serde::{de::Error, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(xs: &[Scalar], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&format_scalar(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Scalar>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| parse_scalar(t).map_err(D::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        assert_eq!(parse_scalar("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_scalar("-5").unwrap(), int(-5));
        assert_eq!(parse_scalar("3/-6").unwrap(), ratio(-1, 2));
        assert_eq!(format_scalar(&parse_scalar("6/4").unwrap()), "3/2");
        assert_eq!(format_scalar(&int(0)), "0/1");
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1/", "/2", "1.5", "a/b", "1/2/3", "+-1", " 1"] {
            assert!(
                matches!(parse_scalar(bad), Err(ScalarParseError::Malformed(_))),
                "{bad}"
            );
        }
        assert_eq!(
            parse_scalar("1/0"),
            Err(ScalarParseError::ZeroDenominator("1/0".into()))
        );
    }

    #[test]
    fn huge_values_stay_exact() {
        let x = parse_scalar("123456789012345678901234567891/2").unwrap();
        assert_eq!(format_scalar(&x), "123456789012345678901234567891/2");
    }
}
