use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{FieldContext, Scalar};
use crate::error::{Error, Result};

/// Wire form of a scalar: rational coefficients of `1, q, q^2, ...` as strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarJson {
    pub d: u32,
    pub coeffs: Vec<String>,
}

fn ratio_string(n: &BigInt, d: &BigInt) -> String {
    if d.is_one() {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

fn parse_ratio(s: &str) -> Result<(BigInt, BigInt)> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok((n, d))
        }
        None => Ok((s.parse().map_err(|_| bad())?, BigInt::one())),
    }
}

impl Scalar {
    pub fn to_json(&self) -> ScalarJson {
        ScalarJson {
            d: self.d(),
            coeffs: self.coefficients().iter().map(|(n, d)| ratio_string(n, d)).collect(),
        }
    }

    pub fn from_json(json: &ScalarJson) -> Result<Scalar> {
        let ctx = FieldContext::get(json.d as i64)?;
        if json.coeffs.len() != ctx.degree() {
            return Err(Error::Parse(format!(
                "expected {} coefficients for d = {}, got {}",
                ctx.degree(),
                json.d,
                json.coeffs.len()
            )));
        }
        let coeffs = json.coeffs.iter().map(|s| parse_ratio(s)).collect::<Result<Vec<_>>>()?;
        Scalar::from_rational_coeffs(ctx, &coeffs)
    }

    /// Parse a polynomial string such as `1 - q + 3/2*q^2` or `q^-1`.
    pub fn parse(ctx: &'static FieldContext, text: &str) -> Result<Scalar> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut acc = Scalar::zero(ctx);
        for term in terms {
            acc += &parse_term(ctx, term)?;
        }
        Ok(acc)
    }
}

fn parse_term(ctx: &'static FieldContext, term: &str) -> Result<Scalar> {
    let bad = || Error::Parse(format!("bad term `{term}`"));
    let (negative, body) = match term.as_bytes().first() {
        Some(b'-') => (true, &term[1..]),
        Some(b'+') => (false, &term[1..]),
        _ => (false, term),
    };
    let (coef, power) = match body.find('q') {
        None => (body, None),
        Some(pos) => {
            let coef = body[..pos].trim_end_matches('*');
            let rest = &body[pos + 1..];
            let exp = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^').ok_or_else(bad)?.parse::<i64>().map_err(|_| bad())?
            };
            (coef, Some(exp))
        }
    };
    let (n, d) = if coef.is_empty() {
        if power.is_none() {
            return Err(bad());
        }
        (BigInt::one(), BigInt::one())
    } else {
        parse_ratio(coef)?
    };
    let n = if negative { -n } else { n };
    let c = Scalar::from_rational_coeffs(ctx, &[(n, d)])?;
    Ok(match power {
        Some(e) => &c * &Scalar::q_power(ctx, e),
        None => c,
    })
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, (n, d)) in self.coefficients().iter().enumerate() {
            if n.is_zero() {
                continue;
            }
            let mag = n.abs();
            let sign = if n.is_negative() { "-" } else { "+" };
            if first {
                if n.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let unit = mag.is_one() && d.is_one();
            match k {
                0 => write!(f, "{}", ratio_string(&mag, d))?,
                _ => {
                    if !unit {
                        write!(f, "{}*", ratio_string(&mag, d))?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let json = ScalarJson::deserialize(deserializer)?;
        Scalar::from_json(&json).map_err(serde::de::Error::custom)
    }
}
