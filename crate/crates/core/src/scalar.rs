//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Q`]; nothing is ever rounded.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision rational number.
pub type Q = BigRational;

/// `n / 1`.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `n / d`, reduced.
pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Renders as `p/q` with a positive denominator, always including the slash.
pub fn to_pq(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses the `p/q` (or bare integer) form written by [`to_pq`].
pub fn from_pq(s: &str) -> Option<Q> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.trim().parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// Short human form: integers without a denominator.
pub fn to_short(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        to_pq(x)
    }
}

/// Converts an integral rational to `i64`, if it is one and fits.
pub fn to_i64(x: &Q) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.numer()).ok()
}

pub fn is_positive(x: &Q) -> bool {
    x.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_round_trip() {
        for x in [frac(-3, 4), q(7), zero(), frac(6, -8)] {
            assert_eq!(from_pq(&to_pq(&x)).unwrap(), x);
        }
        assert_eq!(to_pq(&q(3)), "3/1");
        assert_eq!(to_pq(&frac(2, -4)), "-1/2");
        assert_eq!(from_pq("5").unwrap(), q(5));
        assert!(from_pq("1/0").is_none());
    }
}
