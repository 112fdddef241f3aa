//! Scalar helpers for exact rational arithmetic.
//!
//! The whole crate computes over `BigRational` (arbitrary precision, always
//! reduced, positive denominator). Nothing here rounds.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

pub type Rat = BigRational;

/// `p/q` from machine integers, reduced.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise (lowest terms,
/// positive denominator). This is the on-disk format; round trips are exact.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_from_str(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let parse_int = |t: &str| BigInt::from_str(t).map_err(|e| format!("bad integer {t:?}: {e}"));
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rat::new(parse_int(num)?, den))
        }
    }
}

/// Multiplicative height max(|p|, q) of a reduced fraction p/q.
pub fn height(r: &Rat) -> BigUint {
    r.numer()
        .magnitude()
        .clone()
        .max(r.denom().magnitude().clone())
}

/// Bit length of the height; used for the group-law overflow guard.
pub fn height_bits(r: &Rat) -> u64 {
    height(r).bits()
}

/// Exact square root when `r` is a perfect square of a rational.
pub fn sqrt_exact(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let num = sqrt_exact_uint(r.numer().magnitude())?;
    let den = sqrt_exact_uint(r.denom().magnitude())?;
    Some(Rat::new(
        BigInt::from_biguint(Sign::Plus, num),
        BigInt::from_biguint(Sign::Plus, den),
    ))
}

fn sqrt_exact_uint(n: &BigUint) -> Option<BigUint> {
    let root = n.sqrt();
    if &root * &root == *n {
        Some(root)
    } else {
        None
    }
}

pub fn is_square(r: &Rat) -> bool {
    sqrt_exact(r).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip_is_canonical() {
        for s in ["0", "7", "-3", "22/7", "-22/7", "1000000000000000000000/7"] {
            let r = rat_from_str(s).unwrap();
            assert_eq!(rat_to_string(&r), s);
        }
        // non-canonical input normalizes
        assert_eq!(rat_to_string(&rat_from_str("4/6").unwrap()), "2/3");
        assert_eq!(rat_to_string(&rat_from_str("3/-6").unwrap()), "-1/2");
        assert_eq!(rat_to_string(&rat_from_str("-4/2").unwrap()), "-2");
    }

    #[test]
    fn square_detection() {
        assert_eq!(sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_exact(&rat(0, 1)), Some(rat(0, 1)));
        assert!(sqrt_exact(&rat(-9, 4)).is_none());
        assert!(sqrt_exact(&rat(2, 1)).is_none());
        assert!(sqrt_exact(&rat(9, 5)).is_none());
    }

    #[test]
    fn heights() {
        assert_eq!(height(&rat(22, 7)), BigUint::from(22u32));
        assert_eq!(height(&rat(-3, 8)), BigUint::from(8u32));
        assert_eq!(height_bits(&rat(1024, 1)), 11);
    }
}
