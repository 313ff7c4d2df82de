//! Canonical rendering and parsing of exact rationals.

use num::rational::BigRational;
use num::traits::One;

/// Renders a rational as `n` when integral and `n/d` otherwise, with the
/// sign on the numerator. This is the one textual form used everywhere
/// (polynomial coefficients, matrix entries, JSON payloads).
pub fn render(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses the output of [`render`].
pub fn parse(s: &str) -> Option<BigRational> {
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: num::BigInt = numer.parse().ok()?;
    let d: num::BigInt = denom.parse().ok()?;
    if d == num::BigInt::ZERO {
        return None;
    }
    Some(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    #[test]
    fn round_trips() {
        for s in ["0", "3", "-7", "1/2", "-22/7"] {
            assert_eq!(render(&parse(s).unwrap()), s);
        }
        // non-canonical input normalizes
        assert_eq!(render(&parse("4/2").unwrap()), "2");
        assert_eq!(render(&parse("3/-6").unwrap()), "-1/2");
        assert!(parse("1/0").is_none());
        assert!(parse("x").is_none());
        assert_eq!(
            parse("5").unwrap(),
            BigRational::from_integer(BigInt::from(5))
        );
    }
}
