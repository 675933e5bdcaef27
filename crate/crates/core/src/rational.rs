//! The exact scalar.
//!
//! [`Rational`] is `num_rational::BigRational`: always normalised, positive
//! denominator, zero stored as `0/1`. Its `Display` already produces the
//! `"p/q"` / `"p"` text form used in every document.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p/q"` or `"p"` (optional sign, decimal digits only).
pub fn parse(s: &str) -> Result<Rational> {
    let bad = |msg: &str| Error::Parse {
        line: 0,
        column: 0,
        message: format!("{msg}: {s:?}"),
    };
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let valid = |t: &str| {
        let digits = t
            .strip_prefix('-')
            .or_else(|| t.strip_prefix('+'))
            .unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) {
        return Err(bad("malformed rational"));
    }
    let num: BigInt = num.parse().map_err(|_| bad("malformed numerator"))?;
    let den: BigInt = den.parse().map_err(|_| bad("malformed denominator"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

pub fn to_text(r: &Rational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn text_form() {
        assert_eq!(to_text(&frac(-3, 7)), "-3/7");
        assert_eq!(to_text(&frac(6, 3)), "2");
        assert_eq!(to_text(&frac(3, -6)), "-1/2");
        assert_eq!(to_text(&zero()), "0");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse("-3/7").unwrap(), frac(-3, 7));
        assert_eq!(parse("4").unwrap(), int(4));
        assert_eq!(parse(" 10/-4 ").unwrap(), frac(-5, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("1.5").is_err());
        assert!(parse("").is_err());
        assert!(parse("a/b").is_err());
    }

    proptest! {
        #[test]
        fn normalisation_roundtrip(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let s = frac(a, b) + frac(c, d);
            prop_assert!(s.denom() > &BigInt::zero());
            prop_assert!(num_integer::Integer::gcd(s.numer(), s.denom()).is_one() || s.is_zero());
            if s.is_zero() {
                prop_assert!(s.denom().is_one());
            }
            prop_assert_eq!(parse(&to_text(&s)).unwrap(), s.clone());
            prop_assert_eq!(s, frac(a * d + c * b, b * d));
        }
    }
}
