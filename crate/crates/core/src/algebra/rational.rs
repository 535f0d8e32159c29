//! Rational numbers and the string forms used on the wire.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Longest coefficient string accepted by [`parse_rational`].
pub const MAX_RATIONAL_LEN: usize = 4096;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses a decimal integer (`"-12"`) or a fraction (`"3/4"`).
pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let s = s.trim();
    if s.is_empty() || s.len() > MAX_RATIONAL_LEN {
        return Err(AlgebraError::Parse(format!("bad rational literal {s:?}")));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let parse_int = |t: &str| -> Result<BigInt, AlgebraError> {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(AlgebraError::Parse(format!("bad integer {t:?}")));
        }
        t.parse::<BigInt>()
            .map_err(|e| AlgebraError::Parse(format!("bad integer {t:?}: {e}")))
    };
    let n = parse_int(num)?;
    let d = match den {
        Some(d) => parse_int(d)?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(AlgebraError::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Integer square root of a non-negative integer if it is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// True iff `q = r^2` for some rational `r`; zero counts as a square.
pub fn is_square_rational(q: &Rational) -> bool {
    !q.is_negative() && exact_sqrt(q.numer()).is_some() && exact_sqrt(q.denom()).is_some()
}

pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    Some(Rational::new(exact_sqrt(q.numer())?, exact_sqrt(q.denom())?))
}

pub fn lcm_of_denominators<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    qs.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("-2").unwrap(), int(-2));
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational(" 1/-3 ").unwrap(), ratio(-1, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("--1").is_err());
        assert!(parse_rational("/3").is_err());
    }

    #[test]
    fn square_test() {
        assert!(is_square_rational(&ratio(4, 9)));
        assert!(!is_square_rational(&int(-4)));
        assert!(!is_square_rational(&int(2)));
        assert!(is_square_rational(&int(0)));
        assert!(!is_square_rational(&ratio(1, 2)));
    }
}
