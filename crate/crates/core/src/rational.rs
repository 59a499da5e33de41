//! Exact rational scalars.
//!
//! Everything in this crate computes over [`Rational`], an arbitrary
//! precision fraction kept in lowest terms with a positive denominator.
//! The textual form is `"p/q"` (or just `"p"` when the denominator is one);
//! it is the only representation used on the wire.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `p/q` as a [`Rational`]. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `base^exp` for any integer exponent; `0^0 = 1`.
///
/// Panics on a negative power of zero.
pub fn pow(base: &Rational, exp: i64) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    if exp < 0 {
        assert!(!base.is_zero(), "negative power of zero");
        return pow(&base.recip(), -exp);
    }
    num_traits::pow::pow(base.clone(), exp as usize)
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * int(k))
}

/// Ordinary binomial coefficient `C(n, k)`; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 || k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * int(n - i) / int(i + 1);
    }
    acc
}

/// Canonical text form: `"-2/3"`, `"7"`, `"0"`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p/q"` or `"p"`, tolerating surrounding whitespace.
/// The result is always normalised to lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| err())?;
    let den = BigInt::from_str(den).map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Approximate decimal rendering for human consumption, e.g. `"2.5e-2"`.
pub fn format_decimal(r: &Rational) -> String {
    match r.to_f64() {
        Some(v) => format!("{v:.6e}"),
        None => {
            if r.is_negative() {
                "-inf".into()
            } else {
                "inf".into()
            }
        }
    }
}

/// Serde adapter writing a [`Rational`] as its canonical string.
pub mod serde_rational {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Same as [`serde_rational`] for optional fields.
pub mod serde_rational_opt {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        r: &Option<Rational>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&format_rational(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Option<Rational>, D::Error> {
        let s = Option::<String>::deserialize(d)?;
        s.map(|s| parse_rational(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form_is_lowest_terms() {
        assert_eq!(format_rational(&rat(4, -6)), "-2/3");
        assert_eq!(format_rational(&rat(14, 2)), "7");
        assert_eq!(format_rational(&int(0)), "0");
    }

    #[test]
    fn parse_accepts_both_forms() {
        assert_eq!(parse_rational("-2/3").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational(" 6/4 ").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("5").unwrap(), int(5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn pow_handles_signs() {
        assert_eq!(pow(&rat(1, 2), 3), rat(1, 8));
        assert_eq!(pow(&rat(1, 2), -2), int(4));
        assert_eq!(pow(&int(0), 0), int(1));
        assert_eq!(pow(&int(0), 3), int(0));
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(5, 6), int(0));
        assert_eq!(binomial(5, -1), int(0));
        assert_eq!(factorial(5), int(120));
    }
}
