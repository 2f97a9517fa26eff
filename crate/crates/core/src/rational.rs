//! Exact rational scalars and text formatting shared across the crate.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::Error;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator (guaranteed by `BigRational`).
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses the canonical "num/den" form (den omitted when 1).
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt, Error> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad integer `{t}`")))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(parse_int(num)?, den))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// Renders as "num/den", omitting "/den" when the value is an integer.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

/// n! as an exact rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient C(n, k) as an exact rational (0 when k > n).
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Rational::new(num, den)
}

/// C(n, k) as a usize, for index arithmetic at desk scale.
pub fn binomial_usize(n: usize, k: usize) -> usize {
    use num::ToPrimitive;
    binomial(n, k).to_integer().to_usize().expect("binomial overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "5", "-3", "3/2", "-7/4"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        // non-canonical input normalizes
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert_eq!(format_rational(&parse_rational("1/-2").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), rat(6));
        assert_eq!(binomial(7, 4), binomial(7, 3));
        assert_eq!(binomial(3, 5), rat(0));
        assert_eq!(binomial_usize(10, 4), 210);
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), rat(1));
        assert_eq!(factorial(5), rat(120));
    }
}
