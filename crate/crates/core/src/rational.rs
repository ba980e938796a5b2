//! Exact arithmetic helpers shared by the bound computations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Binomial coefficient; zero when `k > n`.
pub fn choose(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

pub fn int(v: i128) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i128, den: i128) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `p/q` in lowest terms, or a bare integer when `q = 1`.
pub fn fmt_exact(r: &Rational) -> String {
    r.to_string()
}

/// Exact decimal expansion when the reduced denominator has no prime factor
/// other than 2 and 5; otherwise falls back to [`fmt_exact`].
pub fn fmt_decimal(r: &Rational) -> String {
    let den = r.denom().clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let mut rest = den.clone();
    let mut twos = 0u32;
    let mut fives = 0u32;
    while rest.is_even() {
        rest /= &two;
        twos += 1;
    }
    while (&rest % &five).is_zero() {
        rest /= &five;
        fives += 1;
    }
    if !rest.is_one() {
        return fmt_exact(r);
    }
    let digits = twos.max(fives);
    if digits == 0 {
        return r.numer().to_string();
    }
    let scale = num_traits::pow(BigInt::from(10), digits as usize);
    let scaled = r.numer().abs() * &scale / &den;
    let (whole, frac) = scaled.div_rem(&scale);
    let sign = if r.is_negative() { "-" } else { "" };
    format!(
        "{sign}{whole}.{:0>width$}",
        frac.to_string(),
        width = digits as usize
    )
}

/// Lossy conversion used for ratios and summary statistics only.
pub fn to_f64(r: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(choose(5, 5), 1);
        assert_eq!(choose(4, 5), 0);
        assert_eq!(choose(10, 5), 252);
        assert_eq!(choose(0, 0), 1);
        assert_eq!(choose(103, 5), 87_541_245);
        assert_eq!(choose(4096, 5), 9_584_242_993_188_864);
    }

    #[test]
    fn decimal_formatting() {
        assert_eq!(fmt_decimal(&ratio(777, 16)), "48.5625");
        assert_eq!(fmt_decimal(&ratio(-3, 1)), "-3");
        assert_eq!(fmt_decimal(&ratio(-21, 8)), "-2.625");
        assert_eq!(fmt_decimal(&ratio(-1, 8)), "-0.125");
        assert_eq!(fmt_decimal(&ratio(1, 3)), "1/3");
        assert_eq!(fmt_decimal(&ratio(3, 20)), "0.15");
    }

    #[test]
    fn exact_formatting() {
        assert_eq!(fmt_exact(&ratio(777, 16)), "777/16");
        assert_eq!(fmt_exact(&ratio(10, 5)), "2");
        assert_eq!(fmt_exact(&ratio(-6, 4)), "-3/2");
    }
}
