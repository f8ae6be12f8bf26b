//! Exact rationals and their canonical string form (`"p/q"`, or `"p"` when
//! the denominator is one).

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn format(q: &Rational) -> String {
    q.to_string()
}

pub fn parse(text: &str) -> Result<Rational> {
    let invalid = || Error::InvalidRational(text.to_string());
    let trimmed = text.trim();
    if let Some((_, den)) = trimmed.split_once('/') {
        if BigInt::from_str(den.trim()).map_err(|_| invalid())?.is_zero() {
            return Err(invalid());
        }
    }
    Rational::from_str(trimmed).map_err(|_| invalid())
}

/// Serde adapter for rows of rationals encoded as canonical strings.
pub(crate) mod serde_rows {
    use serde::{de, Deserialize, Deserializer, Serializer};
    use serde::ser::SerializeSeq;

    use super::Rational;

    pub fn serialize<S: Serializer>(rows: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(rows.len()))?;
        for row in rows {
            let text: Vec<String> = row.iter().map(super::format).collect();
            seq.serialize_element(&text)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let raw: Vec<Vec<String>> = Vec::deserialize(d)?;
        raw.iter()
            .map(|row| {
                row.iter()
                    .map(|x| super::parse(x).map_err(de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_strings() {
        assert_eq!(format(&frac(2, 4)), "1/2");
        assert_eq!(format(&frac(3, -6)), "-1/2");
        assert_eq!(format(&int(7)), "7");
        assert_eq!(format(&int(0)), "0");
        assert_eq!(parse("4/6").unwrap(), frac(2, 3));
        assert_eq!(parse("-5").unwrap(), int(-5));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }
}
