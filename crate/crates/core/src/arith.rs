//! Exact integer and rational primitives shared by every module.
//!
//! `ExactInteger` and `ExactRational` are the arbitrary-precision types from
//! `num-bigint` / `num-rational`; a rational is always stored reduced with a
//! positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type ExactInteger = BigInt;
pub type ExactRational = BigRational;

pub fn int(v: i64) -> ExactInteger {
    BigInt::from(v)
}

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> ExactRational {
    BigRational::new(num.into(), den.into())
}

pub fn to_rational(v: &ExactInteger) -> ExactRational {
    BigRational::from_integer(v.clone())
}

/// `2^e`.
pub fn pow2(e: u64) -> ExactInteger {
    BigInt::one() << e
}

/// `(-1)^k` for any integer `k`.
pub fn sign_pow(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Generalized binomial coefficient `x(x-1)...(x-k+1)/k!`.
///
/// Any integer `x` is accepted; negative `x` yields signed values. Returns 0
/// for `k < 0`, and for `0 <= x < k`.
pub fn binomial(x: i64, k: i64) -> ExactInteger {
    if k < 0 {
        return BigInt::zero();
    }
    if x < 0 {
        // binom(x, k) = (-1)^k binom(k - x - 1, k)
        return choose(k - x - 1, k) * sign_pow(k);
    }
    choose(x, k)
}

/// Combinatorial binomial: zero unless `0 <= k <= n`.
///
/// This is the convention the identities use for out-of-range entries; the
/// polynomial evaluator uses [`binomial`] instead.
pub fn choose(n: i64, k: i64) -> ExactInteger {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Row `n` of Pascal's triangle, `[binom(n, 0), ..., binom(n, n)]`.
pub fn pascal_row(n: i64) -> Vec<ExactInteger> {
    assert!(n >= 0, "pascal_row: negative row {n}");
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut acc = BigInt::one();
    row.push(acc.clone());
    for k in 0..n {
        acc *= n - k;
        acc /= k + 1;
        row.push(acc.clone());
    }
    row
}

/// Sum of rationals over the running least common denominator, reducing
/// only once at the end. Much cheaper than repeated `+=` on long sums.
pub fn sum_rationals<I: IntoIterator<Item = ExactRational>>(terms: I) -> ExactRational {
    let mut den = ExactInteger::one();
    let mut num = ExactInteger::zero();
    for t in terms {
        let (n, d) = t.into_raw();
        if den.is_multiple_of(&d) {
            num += n * (&den / &d);
        } else {
            let lcm = den.lcm(&d);
            num = num * (&lcm / &den) + n * (&lcm / &d);
            den = lcm;
        }
    }
    ExactRational::new(num, den)
}

/// Converts a rational that must be integral, failing loudly otherwise.
pub fn into_integer(value: ExactRational, context: &'static str) -> Result<ExactInteger> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral {
            context,
            value: value.to_string(),
        })
    }
}

/// Exact quotient `num / den`, failing if the division leaves a remainder.
pub fn exact_div(num: &ExactInteger, den: &ExactInteger, context: &'static str) -> Result<ExactInteger> {
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonIntegral {
            context,
            value: format!("{num}/{den}"),
        })
    }
}

/// 2-adic valuation of a nonzero integer; `None` for zero.
pub fn nu2(v: &ExactInteger) -> Option<u64> {
    if v.is_zero() {
        None
    } else {
        v.magnitude().trailing_zeros()
    }
}

/// Least nonnegative residue of `v` modulo `2^log2_modulus`.
pub fn residue_pow2(v: &ExactInteger, log2_modulus: u32) -> ExactInteger {
    v.mod_floor(&pow2(log2_modulus as u64))
}

pub fn is_odd(v: &ExactInteger) -> bool {
    v.is_odd()
}

pub fn abs(v: &ExactInteger) -> ExactInteger {
    v.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sums() {
        let terms = (1..=30).map(|k| ratio(1, k * (k + 1)));
        assert_eq!(sum_rationals(terms), ratio(30, 31));
        assert_eq!(sum_rationals(Vec::new()), ratio(0, 1));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(48, 16), "2254848913647".parse::<BigInt>().unwrap());
        assert_eq!(binomial(-1, 3), int(-1));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(binomial(7, -1), int(0));
        assert_eq!(binomial(-2, 2), int(3));
    }

    #[test]
    fn generalized_binomial_matches_falling_factorial() {
        for x in -12i64..=12 {
            for k in 0i64..=8 {
                let mut num = BigInt::one();
                let mut fact = BigInt::one();
                for i in 0..k {
                    num *= x - i;
                    fact *= i + 1;
                }
                assert_eq!(binomial(x, k), num / fact, "x={x} k={k}");
            }
        }
    }

    #[test]
    fn choose_is_zero_outside_triangle() {
        assert!(choose(-1, 0).is_zero());
        assert!(choose(3, 4).is_zero());
        assert_eq!(choose(0, 0), int(1));
    }

    #[test]
    fn pascal_row_matches_choose() {
        for n in 0..30 {
            let row = pascal_row(n);
            for k in 0..=n {
                assert_eq!(row[k as usize], choose(n, k));
            }
        }
    }

    #[test]
    fn integrality_guard() {
        assert_eq!(into_integer(ratio(10, 5), "t").unwrap(), int(2));
        assert!(matches!(into_integer(ratio(1, 3), "t"), Err(Error::NonIntegral { .. })));
        assert!(exact_div(&int(7), &int(2), "t").is_err());
    }

    #[test]
    fn residues_are_normalized() {
        assert_eq!(residue_pow2(&int(-1), 4), int(15));
        assert_eq!(nu2(&int(56)), Some(3));
        assert_eq!(nu2(&int(0)), None);
    }
}
