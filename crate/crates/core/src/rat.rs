//! Exact rationals and their canonical text form.
//!
//! Every scalar in the crate is a [`Rat`]. `num-rational` keeps values in
//! lowest terms with a positive denominator, so equality is structural.
//! The text form is `"p/q"`, or `"p"` when the denominator is one.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number.
pub type Rat = num_rational::BigRational;

/// Builds `n/d` from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` (optional sign on `p`, surrounding whitespace ignored).
pub fn parse_rat(text: &str) -> Result<Rat, Error> {
    let s = text.trim();
    let bad = || Error::Parse(format!("not a rational: {text:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    if num.is_empty() || den.is_empty() || den.starts_with(['+', '-']) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rat::new(n, d))
}

/// Parses a comma-separated list of rationals. Empty input gives an empty list.
pub fn parse_rat_list(text: &str) -> Result<Vec<Rat>, Error> {
    let s = text.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rat).collect()
}

/// Canonical string for a rational.
pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

/// Wrapper that displays a slice as `(a, b, c)`.
pub struct Tuple<'a>(pub &'a [Rat]);

impl fmt::Display for Tuple<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

pub(crate) fn is_nonneg(r: &Rat) -> bool {
    !r.is_negative()
}

/// Serde adapter for a single rational stored as a string.
pub mod serde_rat {
    use super::{fmt_rat, parse_rat, Rat};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let text = RatText::deserialize(d)?;
        text.into_rat().map_err(D::Error::custom)
    }

    /// Accepts `"3/2"` as well as bare JSON integers.
    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum RatText {
        Str(String),
        Int(i64),
    }

    impl RatText {
        pub(crate) fn into_rat(self) -> Result<Rat, crate::error::Error> {
            match self {
                RatText::Str(s) => parse_rat(&s),
                RatText::Int(i) => Ok(super::int(i)),
            }
        }
    }
}

/// Serde adapter for a list of rationals stored as strings.
pub mod serde_rat_vec {
    use super::serde_rat::RatText;
    use super::{fmt_rat, Rat};
    use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&fmt_rat(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        Vec::<RatText>::deserialize(d)?
            .into_iter()
            .map(|t| t.into_rat().map_err(D::Error::custom))
            .collect()
    }
}
