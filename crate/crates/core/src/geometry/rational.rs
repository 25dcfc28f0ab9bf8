use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `p/q` with the denominator always written, `1/1` included.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Scales a rational vector by the lcm of its denominators, returning the
/// integer vector and the (positive) factor used.
pub(crate) fn clear_denominators(values: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints = values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    (ints, lcm)
}

/// Divides an integer vector by the gcd of its entries.
pub(crate) fn make_primitive(values: &mut [BigInt]) {
    let g = values.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in values.iter_mut() {
            *v /= &g;
        }
    }
}
