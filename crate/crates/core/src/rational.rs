//! Exact weights.
//!
//! Graphs store integer weights in units of a per-graph denominator. Input
//! weights are parsed as exact rationals and brought to a common denominator
//! when the graph is built.

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};

pub type Rational = Ratio<u64>;

/// Parses `7`, `3.25` or `5/4` into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: u64 = num.trim().parse().ok()?;
        let den: u64 = den.trim().parse().ok()?;
        if den == 0 {
            return None;
        }
        return Some(Ratio::new(num, den));
    }
    if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() && int.is_empty() {
            return None;
        }
        if !frac.bytes().all(|b| b.is_ascii_digit()) || !int.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let den = 10u64.checked_pow(frac.len() as u32)?;
        let int: u64 = if int.is_empty() { 0 } else { int.parse().ok()? };
        let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().ok()? };
        let num = int.checked_mul(den)?.checked_add(frac)?;
        return Some(Ratio::new(num, den));
    }
    text.parse::<u64>().ok().map(Ratio::from_integer)
}

pub fn format_rational(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of all denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Result<u64> {
    values.into_iter().try_fold(1u64, |acc, r| {
        let d = *r.denom();
        let g = acc.gcd(&d);
        (acc / g).checked_mul(d).ok_or(Error::Overflow)
    })
}

/// Expresses `r` as an integer count of `1/denominator` units.
pub fn to_units(r: &Rational, denominator: u64) -> Result<u64> {
    let scale = denominator / r.denom();
    debug_assert_eq!(scale * r.denom(), denominator);
    r.numer().checked_mul(scale).ok_or(Error::Overflow)
}

pub fn from_units(units: u64, denominator: u64) -> Rational {
    Ratio::new(units, denominator)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse_rational("7"), Some(Ratio::from_integer(7)));
        assert_eq!(parse_rational("3.5"), Some(Ratio::new(7, 2)));
        assert_eq!(parse_rational("0.25"), Some(Ratio::new(1, 4)));
        assert_eq!(parse_rational("10/4"), Some(Ratio::new(5, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("-1"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("."), None);
    }

    #[test]
    fn denominators_combine() {
        let ws = [Ratio::new(1, 4), Ratio::new(1, 6), Ratio::from_integer(3)];
        let d = common_denominator(&ws).unwrap();
        assert_eq!(d, 12);
        assert_eq!(to_units(&ws[0], d).unwrap(), 3);
        assert_eq!(to_units(&ws[1], d).unwrap(), 2);
        assert_eq!(to_units(&ws[2], d).unwrap(), 36);
        assert_eq!(format_rational(&from_units(3, d)), "1/4");
        assert_eq!(format_rational(&from_units(36, d)), "3");
    }
}
