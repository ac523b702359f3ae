//! Exact rational failure exponents.
//!
//! The exponent c enters the parameter formulas multiplicatively; keeping it
//! rational lets those formulas be evaluated with integer arithmetic only.

use num_rational::Ratio;

pub type Rat = Ratio<u64>;

/// Parse "3", "3/4", or a terminating decimal like "0.5" into an exact ratio.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: u64 = num.trim().parse().map_err(|_| format!("bad numerator {num:?}"))?;
        let d: u64 = den.trim().parse().map_err(|_| format!("bad denominator {den:?}"))?;
        if d == 0 {
            return Err("denominator must be nonzero".into());
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let whole: u64 = if whole.is_empty() {
            0
        } else {
            whole.parse().map_err(|_| format!("bad number {s:?}"))?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad number {s:?}"));
        }
        let digits = frac.len() as u32;
        if digits > 18 {
            return Err("too many decimal digits".into());
        }
        let frac_val: u64 = frac.parse().map_err(|_| format!("bad number {s:?}"))?;
        let scale = 10u64.pow(digits);
        return Ok(Rat::new(whole * scale + frac_val, scale));
    }
    let n: u64 = s.parse().map_err(|_| format!("bad number {s:?}"))?;
    Ok(Rat::from_integer(n))
}

/// Serialize a ratio as its exact display form ("1", "1/2"), which survives
/// CSV and JSON unchanged.
pub mod rat_string {
    use super::{parse_rat, Rat};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rat, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_rat(&s).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_fractions_and_decimals() {
        assert_eq!(parse_rat("3").unwrap(), Rat::from_integer(3));
        assert_eq!(parse_rat("3/4").unwrap(), Rat::new(3, 4));
        assert_eq!(parse_rat("0.5").unwrap(), Rat::new(1, 2));
        assert_eq!(parse_rat("1.25").unwrap(), Rat::new(5, 4));
        assert_eq!(parse_rat(".5").unwrap(), Rat::new(1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1.x").is_err());
    }

    #[test]
    fn display_is_exact() {
        assert_eq!(parse_rat("2/4").unwrap().to_string(), "1/2");
        assert_eq!(parse_rat("1").unwrap().to_string(), "1");
    }
}
