use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number. `num_rational` keeps the numerator and the positive
/// denominator coprime.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn is_integer(q: &Rat) -> bool {
    q.denom().is_one()
}

pub fn floor(q: &Rat) -> BigInt {
    q.floor().to_integer()
}

pub fn to_f64(q: &Rat) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        if q.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, q| {
        if q.is_zero() {
            acc
        } else {
            acc.lcm(q.denom())
        }
    })
}
