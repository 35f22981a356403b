//! Reduction of `K_p^{2m}(2j)` to Krawtchouk values of order `m`, its
//! transposed and cancellation corollaries, and the iterated version for
//! `K_p^{2^r m}(2^s j)`.

mod general;

pub(crate) use general::{chain_trace, check_general};
pub use general::{
    enumerate_chains, reduce_general, reduce_general_with, ChainSpec, GeneralParams, ReductionOptions, ReductionTerm,
    ReductionTrace, DEFAULT_TERM_CAP,
};

use num_traits::Zero;

use crate::arith::{choose, into_integer, pow2, to_rational, ExactInteger};
use crate::error::{Error, Result};
use crate::krawtchouk::krawtchouk_conv;

/// `f(s, r)`: `r - s` when `s <= r`, otherwise 0.
pub fn f_exponent(s: i64, r: i64) -> i64 {
    if s <= r {
        r - s
    } else {
        0
    }
}

/// Largest `l` that can contribute to the reduction of `K_p^{2m}`:
/// `min{p, mu_p(m), 2m - p}` with `mu_p(m) = m` when `p ≡ m (mod 2)` and
/// `m - 1` otherwise.
pub fn rho_bound(p: i64, m: i64) -> i64 {
    let mu = if (p - m).rem_euclid(2) == 0 { m } else { m - 1 };
    p.min(mu).min(2 * m - p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

fn check_reduction_degree(m: i64, p: i64) -> Result<()> {
    if m < 0 {
        return Err(Error::ArgumentOutOfRange(format!("half-order must be >= 0, got {m}")));
    }
    if p < 0 || p > 2 * m {
        return Err(Error::DegreeOutOfRange {
            order: 2 * m,
            degree: p,
        });
    }
    Ok(())
}

/// Summand `2^l binom(m - l, (p - l)/2) K_l^m(j)` of the basic reduction.
fn theorem1_term(m: i64, p: i64, l: i64, j: i64) -> ExactInteger {
    let coefficient = choose(m - l, (p - l) / 2);
    if coefficient.is_zero() {
        return coefficient;
    }
    pow2(l as u64) * coefficient * krawtchouk_conv(m, l, j)
}

fn theorem1_upto(m: i64, p: i64, j: i64, upper: i64) -> ExactInteger {
    let mut acc = ExactInteger::zero();
    let mut l = p % 2;
    while l <= upper {
        acc += theorem1_term(m, p, l, j);
        l += 2;
    }
    acc
}

/// `K_p^{2m}(2j)` as `sum_{l ≡ p (2)} 2^l binom(m-l, (p-l)/2) K_l^m(j)`.
///
/// Arguments `j` outside `0..=m` are allowed; the order-`m` values then
/// vanish, as does the left side.
pub fn reduce_theorem1(m: i64, p: i64, j: i64) -> Result<ExactInteger> {
    check_reduction_degree(m, p)?;
    Ok(theorem1_upto(m, p, j, p))
}

/// Same sum, truncated at [`rho_bound`]; the dropped terms all vanish.
pub fn reduce_theorem1_bounded(m: i64, p: i64, j: i64) -> Result<ExactInteger> {
    check_reduction_degree(m, p)?;
    Ok(theorem1_upto(m, p, j, rho_bound(p, m)))
}

/// The parity-split form: degree `2q` (even) or `2q + 1` (odd).
pub fn reduce_theorem1_split(m: i64, q: i64, parity: Parity, j: i64) -> Result<ExactInteger> {
    let max_q = match parity {
        Parity::Even => m,
        Parity::Odd => m - 1,
    };
    if q < 0 || q > max_q {
        return Err(Error::RangeViolation(format!(
            "{parity:?} split needs 0 <= q <= {max_q}, got q = {q}"
        )));
    }
    let mut acc = ExactInteger::zero();
    for k in 0..=q {
        let four_k = pow2(2 * k as u64);
        acc += match parity {
            Parity::Even => four_k * choose(m - 2 * k, q - k) * krawtchouk_conv(m, 2 * k, j),
            Parity::Odd => four_k * choose(m - 2 * k - 1, q - k) * krawtchouk_conv(m, 2 * k + 1, j),
        };
    }
    if parity == Parity::Odd {
        acc *= 2;
    }
    Ok(acc)
}

/// `K_{2j}^{2m}(p)` for `0 <= j, p <= m`, via the symmetry relation applied
/// around the basic reduction.
pub fn reduce_transposed(m: i64, j: i64, p: i64) -> Result<ExactInteger> {
    if m < 1 || j < 0 || j > m || p < 0 || p > m {
        return Err(Error::ArgumentOutOfRange(format!(
            "transposed reduction needs 0 <= j, p <= m, got m = {m}, j = {j}, p = {p}"
        )));
    }
    let mut sum = ExactInteger::zero();
    for l in (p % 2..=p).step_by(2) {
        sum += pow2(l as u64) * choose(m - l, (p - l) / 2) * choose(m, l) * krawtchouk_conv(m, j, l);
    }
    let prefactor = to_rational(&choose(2 * m, 2 * j)) / to_rational(&(choose(2 * m, p) * choose(m, j)));
    into_integer(prefactor * to_rational(&sum), "transposed reduction")
}

/// The double sum `sum_{p=0}^{2m} sum_l 2^l binom(m-l, (p-l)/2) K_l^m(j)`,
/// evaluated term by term. It is checked against `2^m sum_l K_l^m(j)`
/// before being returned; the common value is 0.
pub fn cancellation_sum(m: i64, j: i64) -> Result<ExactInteger> {
    if j < 1 || j > m {
        return Err(Error::ArgumentOutOfRange(format!(
            "cancellation needs 1 <= j <= m, got m = {m}, j = {j}"
        )));
    }
    let mut double = ExactInteger::zero();
    for p in 0..=2 * m {
        for l in (p % 2..=p).step_by(2) {
            double += theorem1_term(m, p, l, j);
        }
    }
    let column: ExactInteger = (0..=m).map(|l| krawtchouk_conv(m, l, j)).sum();
    let collapsed = pow2(m as u64) * column;
    if double != collapsed {
        return Err(Error::IdentityViolation {
            identity: "cancellation",
            lhs: double.to_string(),
            rhs: collapsed.to_string(),
        });
    }
    Ok(double)
}

/// `K_p^{4m}(4j)` by applying the basic reduction twice, written as the
/// explicit double sum over `k <= l <= p` of equal parity.
pub fn reduce_iterated_twice(m: i64, p: i64, j: i64) -> Result<ExactInteger> {
    if m < 1 || p < 0 || p > 4 * m {
        return Err(Error::DegreeOutOfRange {
            order: 4 * m,
            degree: p,
        });
    }
    let mut acc = ExactInteger::zero();
    for l in (p % 2..=p).step_by(2) {
        let outer = choose(2 * m - l, (p - l) / 2);
        if outer.is_zero() {
            continue;
        }
        for k in (p % 2..=l).step_by(2) {
            let inner = choose(m - k, (l - k) / 2);
            if inner.is_zero() {
                continue;
            }
            acc += pow2((k + l) as u64) * &outer * inner * krawtchouk_conv(m, k, j);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{binomial, int};
    use crate::krawtchouk::krawtchouk_direct;

    #[test]
    fn f_and_rho() {
        assert_eq!(f_exponent(3, 4), 1);
        assert_eq!(f_exponent(4, 3), 0);
        assert_eq!(f_exponent(5, 5), 0);
        assert_eq!(rho_bound(6, 4), 2);
        assert_eq!(rho_bound(4, 4), 4);
        assert_eq!(rho_bound(3, 4), 3);
    }

    #[test]
    fn theorem1_examples() {
        assert_eq!(reduce_theorem1(4, 4, 1).unwrap(), int(-10));
        assert_eq!(reduce_theorem1(4, 4, 3).unwrap(), int(-10));
        assert_eq!(reduce_theorem1(4, 2, 2).unwrap(), int(-4));
        for m in 0..=12 {
            for p in 0..=2 * m {
                assert_eq!(reduce_theorem1(m, p, 0).unwrap(), binomial(2 * m, p));
            }
        }
        assert!(reduce_theorem1(3, 7, 0).is_err());
    }

    #[test]
    fn theorem1_sweep_and_bound() {
        for m in 1..=12 {
            for p in 0..=2 * m {
                for j in 0..=m {
                    let direct = krawtchouk_direct(2 * m, p, 2 * j).unwrap();
                    assert_eq!(reduce_theorem1(m, p, j).unwrap(), direct);
                    assert_eq!(reduce_theorem1_bounded(m, p, j).unwrap(), direct);
                }
            }
        }
    }

    #[test]
    fn outside_arguments_follow_convention() {
        assert!(reduce_theorem1(3, 2, 4).unwrap().is_zero());
        assert!(reduce_theorem1(3, 2, -1).unwrap().is_zero());
    }

    #[test]
    fn split_examples() {
        assert_eq!(reduce_theorem1_split(4, 2, Parity::Even, 1).unwrap(), int(-10));
        assert_eq!(reduce_theorem1_split(4, 1, Parity::Even, 2).unwrap(), int(-4));
        assert_eq!(reduce_theorem1_split(4, 1, Parity::Odd, 0).unwrap(), int(56));
        assert!(matches!(
            reduce_theorem1_split(4, 4, Parity::Odd, 0),
            Err(Error::RangeViolation(_))
        ));
        for m in 1..=10 {
            for j in 0..=m {
                for q in 0..=m {
                    assert_eq!(
                        reduce_theorem1_split(m, q, Parity::Even, j).unwrap(),
                        reduce_theorem1(m, 2 * q, j).unwrap()
                    );
                    if q < m {
                        assert_eq!(
                            reduce_theorem1_split(m, q, Parity::Odd, j).unwrap(),
                            reduce_theorem1(m, 2 * q + 1, j).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn transposed() {
        assert_eq!(reduce_transposed(4, 1, 3).unwrap(), int(-2));
        assert_eq!(reduce_transposed(4, 2, 4).unwrap(), int(6));
        for m in 1..=12 {
            for j in 0..=m {
                assert_eq!(reduce_transposed(m, j, 0).unwrap(), binomial(2 * m, 2 * j));
                for p in 0..=m {
                    assert_eq!(
                        reduce_transposed(m, j, p).unwrap(),
                        krawtchouk_direct(2 * m, 2 * j, p).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn cancellation() {
        assert!(cancellation_sum(4, 3).unwrap().is_zero());
        assert!(cancellation_sum(1, 1).unwrap().is_zero());
        assert!(cancellation_sum(8, 5).unwrap().is_zero());
        assert!(cancellation_sum(4, 0).is_err());
        assert!(cancellation_sum(4, 5).is_err());
    }

    #[test]
    fn iterated_twice() {
        // K_4^8(4) with m = 2, j = 1 and K_2^8(4) likewise.
        assert_eq!(reduce_iterated_twice(2, 4, 1).unwrap(), int(6));
        assert_eq!(reduce_iterated_twice(2, 2, 1).unwrap(), int(-4));
        for m in 1..=6 {
            for p in 0..=4 * m {
                for j in 0..=m {
                    assert_eq!(
                        reduce_iterated_twice(m, p, j).unwrap(),
                        krawtchouk_direct(4 * m, p, 4 * j).unwrap()
                    );
                }
            }
        }
    }
}
