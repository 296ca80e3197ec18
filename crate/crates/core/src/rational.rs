//! Exact rational scalars.
//!
//! `Rational` is `num`'s arbitrary-precision fraction, which keeps every value
//! in lowest terms with a positive denominator, so structural equality is
//! value equality.

use num::bigint::Sign;
use num::{BigInt, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// -1, 0 or +1.
pub fn sign(r: &Rational) -> i8 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Parses `"p/q"`, `"k"` or a plain decimal such as `"2.5"` into an exact rational.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let s = input.trim();
    let fail = |reason: &str| Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    if s.is_empty() {
        return Err(fail("empty string"));
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| fail("bad numerator"))?;
        let q: BigInt = q.trim().parse().map_err(|_| fail("bad denominator"))?;
        if q.is_zero() {
            return Err(fail("zero denominator"));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = whole.trim_start_matches(['-', '+']);
        if (digits.is_empty() && frac.is_empty())
            || !digits.chars().all(|c| c.is_ascii_digit())
            || !frac.chars().all(|c| c.is_ascii_digit())
        {
            return Err(fail("bad decimal"));
        }
        let mantissa: BigInt = format!("{digits}{frac}").parse().map_err(|_| fail("bad decimal"))?;
        let scale = num::pow(BigInt::from(10), frac.len());
        let value = Rational::new(mantissa, scale);
        return Ok(if negative { -value } else { value });
    }
    let k: BigInt = s.parse().map_err(|_| fail("not a rational number"))?;
    Ok(Rational::from_integer(k))
}

/// Canonical `"p/q"` form; integers print without a denominator.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Nearest binary64 value (saturating to +-inf for huge magnitudes).
pub fn to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() && (!v.is_zero() || r.is_zero()) {
            return v;
        }
    }
    // numer and denom individually overflow or the quotient underflows
    let shift = r.numer().bits() as i64 - r.denom().bits() as i64;
    let scaled = if shift >= 0 {
        r / Rational::from_integer(BigInt::one() << (shift as usize))
    } else {
        r * Rational::from_integer(BigInt::one() << ((-shift) as usize))
    };
    let m = scaled.to_f64().unwrap_or(0.0);
    let v = m * 2f64.powi(shift.clamp(i32::MIN as i64, i32::MAX as i64) as i32);
    if v.is_nan() {
        0.0
    } else if r.is_negative() && v > 0.0 {
        -v
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_integer_and_decimal() {
        assert_eq!(parse_rational("5/2").unwrap(), ratio(5, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational("2.0").unwrap(), int(2));
        assert_eq!(parse_rational("-0.25").unwrap(), ratio(-1, 4));
        assert_eq!(parse_rational(" 1/3 ").unwrap(), ratio(1, 3));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["x", "", "1/0", "1/", "/2", "1.2.3", "abc/2", "."] {
            assert!(parse_rational(bad).is_err(), "{bad} should not parse");
        }
    }

    #[test]
    fn normalized_on_construction() {
        let r = ratio(10, -4);
        assert_eq!(r.numer(), &BigInt::from(-5));
        assert_eq!(r.denom(), &BigInt::from(2));
        let z = ratio(0, 7);
        assert_eq!(z.denom(), &BigInt::from(1));
        assert_eq!(format_rational(&z), "0");
        assert_eq!(format_rational(&ratio(-1, 2)), "-1/2");
    }

    #[test]
    fn huge_values_convert_to_float() {
        let big = Rational::new(BigInt::from(3) << 2000usize, BigInt::from(1) << 1999usize);
        assert_eq!(to_f64(&big), 6.0);
        assert_eq!(to_f64(&ratio(-3, 4)), -0.75);
        assert_eq!(sign(&ratio(-3, 4)), -1);
        assert_eq!(sign(&int(0)), 0);
    }
}
