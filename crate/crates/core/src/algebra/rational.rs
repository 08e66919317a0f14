//! Exact rationals and the small helpers the rest of the crate leans on.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `p` or `p/q` with optional sign.
pub fn parse_rat(text: &str) -> Option<Rat> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rat::new(num, den))
}

/// Least common multiple of the denominators.
pub fn lcm_denominators<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Gcd of the numerators (non-negative; zero when every value is zero).
pub fn gcd_numerators<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v.numer()))
}

/// `-1/2 - 1/i` for some integer `i >= 2`; returns that `i`.
pub fn half_minus_reciprocal_index(value: &Rat) -> Option<BigInt> {
    let gap = -value - rat(1, 2);
    if !gap.is_positive() {
        return None;
    }
    let inv = gap.recip();
    if inv.is_integer() && inv.to_integer() >= BigInt::from(2) {
        Some(inv.to_integer())
    } else {
        None
    }
}

/// Display helper: `5/6`, `-1`, ...
pub fn fmt_rat(value: &Rat) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[derive(Serialize, Deserialize)]
struct RatRepr {
    num: String,
    den: String,
}

/// Serde adapter writing a rational as `{"num": "..", "den": ".."}`.
pub mod serde_rat {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Rat, s: S) -> Result<S::Ok, S::Error> {
        RatRepr {
            num: value.numer().to_string(),
            den: value.denom().to_string(),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let repr = RatRepr::deserialize(d)?;
        let num: BigInt = repr.num.parse().map_err(serde::de::Error::custom)?;
        let den: BigInt = repr.den.parse().map_err(serde::de::Error::custom)?;
        if den.is_zero() {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(Rat::new(num, den))
    }

    /// The same encoding as a JSON value.
    pub fn to_value(value: &Rat) -> serde_json::Value {
        serde_json::json!({
            "num": value.numer().to_string(),
            "den": value.denom().to_string(),
        })
    }
}

/// Serde adapter for `Vec<Rat>`.
pub mod serde_rat_vec {
    use super::*;

    pub fn serialize<S: Serializer>(values: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        let reprs: Vec<RatRepr> = values
            .iter()
            .map(|v| RatRepr {
                num: v.numer().to_string(),
                den: v.denom().to_string(),
            })
            .collect();
        reprs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        let reprs = Vec::<RatRepr>::deserialize(d)?;
        reprs
            .into_iter()
            .map(|r| {
                let num: BigInt = r.num.parse().map_err(serde::de::Error::custom)?;
                let den: BigInt = r.den.parse().map_err(serde::de::Error::custom)?;
                if den.is_zero() {
                    return Err(serde::de::Error::custom("zero denominator"));
                }
                Ok(Rat::new(num, den))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_normalize() {
        assert_eq!(parse_rat("6/-4"), Some(rat(-3, 2)));
        assert_eq!(parse_rat(" 7 "), Some(int(7)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(fmt_rat(&rat(10, 12)), "5/6");
    }

    #[test]
    fn reciprocal_index() {
        assert_eq!(half_minus_reciprocal_index(&rat(-5, 6)), Some(BigInt::from(3)));
        assert_eq!(half_minus_reciprocal_index(&int(-1)), Some(BigInt::from(2)));
        assert_eq!(half_minus_reciprocal_index(&rat(-7, 10)), Some(BigInt::from(5)));
        assert_eq!(half_minus_reciprocal_index(&rat(-2, 3)), Some(BigInt::from(6)));
        assert_eq!(half_minus_reciprocal_index(&rat(-3, 5)), Some(BigInt::from(10)));
        assert_eq!(half_minus_reciprocal_index(&rat(-4, 5)), None);
        assert_eq!(half_minus_reciprocal_index(&rat(-1, 2)), None);
    }
}
