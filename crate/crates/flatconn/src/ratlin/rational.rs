//! Scalar type and canonical string form.
//!
//! `num_rational::BigRational` already maintains the invariants we need:
//! the denominator is always positive and the fraction is always reduced,
//! so structural equality is value equality. Scalars cross module and
//! process boundaries as the strings "p/q" or "p".

pub use num::BigRational as Rational;

use num::bigint::BigInt;
use num::Zero;

/// Rational from an integer pair. Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "zero denominator");
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical string form: "p/q" when the denominator is not 1, else "p".
pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

/// Parses "p/q" or "p". Whitespace is not accepted; the sign belongs to
/// the numerator.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    if let Some((n, d)) = s.split_once('/') {
        let numer: BigInt = n
            .parse()
            .map_err(|_| format!("invalid numerator {n:?}"))?;
        let denom: BigInt = d
            .parse()
            .map_err(|_| format!("invalid denominator {d:?}"))?;
        if denom.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(Rational::new(numer, denom))
    } else {
        let numer: BigInt = s.parse().map_err(|_| format!("invalid rational {s:?}"))?;
        Ok(Rational::from_integer(numer))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_string_round_trip() {
        let r = rat(-6, 4);
        assert_eq!(rational_to_string(&r), "-3/2");
        assert_eq!(parse_rational("-3/2").unwrap(), r);
        assert_eq!(rational_to_string(&rat(4, 2)), "2");
        assert_eq!(parse_rational("2").unwrap(), rat_int(2));
    }

    #[test]
    fn parse_normalizes_sign_and_gcd() {
        assert_eq!(parse_rational("6/-4").unwrap(), rat(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/2").is_err());
        assert!(parse_rational("1.5").is_err());
    }
}
