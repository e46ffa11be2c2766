//! Exact rational scalars.
//!
//! Every coefficient in the engine is a [`Scalar`]: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. The canonical
//! text form is `p` for integers and `p/q` otherwise.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn half() -> Scalar {
    frac(1, 2)
}

/// Canonical text form: `p` or `p/q`.
pub fn format_scalar(s: &Scalar) -> String {
    s.to_string()
}

/// Parses `p` or `p/q` (optionally signed) into a reduced scalar.
pub fn parse_scalar(src: &str) -> Result<Scalar, ParseError> {
    let src = src.trim();
    let bad = || ParseError::Syntax {
        position: 0,
        message: format!("invalid rational `{src}`"),
    };
    let (num, den) = match src.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (src, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(ParseError::Syntax {
            position: 0,
            message: "zero denominator".into(),
        });
    }
    Ok(Scalar::new(num, den))
}

/// Exact square root of a non-negative rational, when it exists.
pub fn rational_sqrt(s: &Scalar) -> Option<Scalar> {
    if s.is_negative() {
        return None;
    }
    let n = s.numer().sqrt();
    let d = s.denom().sqrt();
    if &(&n * &n) == s.numer() && &(&d * &d) == s.denom() {
        Some(Scalar::new(n, d))
    } else {
        None
    }
}

/// `[num, den]` pair used by the JSON schemas.
pub fn to_pair(s: &Scalar) -> (String, String) {
    (s.numer().to_string(), s.denom().to_string())
}

pub fn to_i64_pair(s: &Scalar) -> Option<(i64, i64)> {
    use num_traits::ToPrimitive;
    Some((s.numer().to_i64()?, s.denom().to_i64()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let s = frac(6, -4);
        assert_eq!(s.numer(), &BigInt::from(-3));
        assert_eq!(s.denom(), &BigInt::from(2));
        assert_eq!(format_scalar(&s), "-3/2");
        assert_eq!(format_scalar(&int(7)), "7");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_scalar("5/7").unwrap(), frac(5, 7));
        assert_eq!(parse_scalar("-10/4").unwrap(), frac(-5, 2));
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn sqrt() {
        assert_eq!(rational_sqrt(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert_eq!(rational_sqrt(&int(-1)), None);
    }

    proptest::proptest! {
        #[test]
        fn text_round_trip(n in -1_000_000i64..1_000_000, d in 1i64..100_000) {
            let s = frac(n, d);
            proptest::prop_assert_eq!(parse_scalar(&format_scalar(&s)).unwrap(), s);
        }
    }
}
