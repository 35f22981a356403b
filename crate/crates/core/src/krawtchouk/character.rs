//! Exterior-power characters of SO(2m) at torus elements of order two.
//!
//! The element `x_B` has angle `pi` in its first `j` blocks and `0` in the
//! remaining `m - j`, so every cosine is `-1` or `+1`. The characters are then
//! evaluated by enumerating index subsets literally; this module is an
//! independent oracle, not a fast path.

use itertools::Itertools;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{choose, pow2, to_rational, ExactInteger, ExactRational};
use crate::error::{Error, Result};

/// Largest half-order accepted by the explicit enumeration.
pub const CHARACTER_ENUMERATION_LIMIT: i64 = 20;

fn check_limits(m: i64, j: i64) -> Result<()> {
    if m > CHARACTER_ENUMERATION_LIMIT {
        return Err(Error::EnumerationLimit {
            m,
            limit: CHARACTER_ENUMERATION_LIMIT,
        });
    }
    if m < 1 {
        return Err(Error::ArgumentOutOfRange(format!("half-order must be >= 1, got {m}")));
    }
    if j < 0 || j > m {
        return Err(Error::ArgumentOutOfRange(format!("block count {j} outside 0..={m}")));
    }
    Ok(())
}

/// Sum over all `l`-subsets `J` of `{0..m}` of the product of cosines, i.e.
/// `(-1)^{|J ∩ {0..j}|}`.
fn cosine_subset_sum(m: i64, l: i64, j: i64) -> i64 {
    (0..m)
        .combinations(l as usize)
        .map(|subset| {
            let flipped = subset.iter().filter(|&&i| i < j).count();
            if flipped % 2 == 0 {
                1
            } else {
                -1
            }
        })
        .sum()
}

/// `chi_p(x_B)` for `0 <= p <= 2m`; degrees above `m` go through duality.
pub fn character_order2(m: i64, p: i64, j: i64) -> Result<ExactInteger> {
    check_limits(m, j)?;
    if p < 0 || p > 2 * m {
        return Err(Error::DegreeOutOfRange {
            order: 2 * m,
            degree: p,
        });
    }
    let p = if p > m { 2 * m - p } else { p };
    let mut acc = ExactInteger::zero();
    for l in (p % 2..=p).step_by(2) {
        let weight = pow2(l as u64) * choose(m - l, (p - l) / 2);
        if weight.is_zero() {
            continue;
        }
        acc += weight * cosine_subset_sum(m, l, j);
    }
    Ok(acc)
}

/// The two half-spin pieces `chi_m^+` and `chi_m^-` at `x_B`.
///
/// Every sine vanishes at an order-two element, so both pieces are
/// `chi_m / 2`.
pub fn character_half_split(m: i64, j: i64) -> Result<(ExactRational, ExactRational)> {
    if j < 1 {
        return Err(Error::ArgumentOutOfRange(format!("block count must be >= 1, got {j}")));
    }
    check_limits(m, j)?;
    let full = character_order2(m, m, j)?;
    if full.is_odd() {
        return Err(Error::NonIntegral {
            context: "half-spin split",
            value: format!("{full}/2"),
        });
    }
    let half = to_rational(&full) / to_rational(&ExactInteger::from(2));
    Ok((half.clone(), half))
}

/// Character of the full exterior algebra, `sum_p chi_p(x_B)`.
pub fn character_total(m: i64, j: i64) -> Result<ExactInteger> {
    check_limits(m, j)?;
    let mut acc = ExactInteger::zero();
    for p in 0..=2 * m {
        acc += character_order2(m, p, j)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{binomial, int, ratio};
    use crate::krawtchouk::krawtchouk_direct;

    #[test]
    fn examples() {
        assert_eq!(character_order2(4, 2, 2).unwrap(), int(-4));
        for m in 1..=6 {
            for p in 0..=2 * m {
                assert_eq!(character_order2(m, p, 0).unwrap(), binomial(2 * m, p));
            }
        }
    }

    #[test]
    fn matches_krawtchouk_up_to_10() {
        for m in 1..=10 {
            for p in 0..=2 * m {
                for j in 0..=m {
                    assert_eq!(
                        character_order2(m, p, j).unwrap(),
                        krawtchouk_direct(2 * m, p, 2 * j).unwrap(),
                        "m={m} p={p} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn total_character_vanishes_off_identity() {
        for m in 1..=8 {
            assert_eq!(character_total(m, 0).unwrap(), pow2(2 * m as u64));
            for j in 1..=m {
                assert!(character_total(m, j).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn half_split() {
        assert_eq!(character_half_split(2, 1).unwrap().0, ratio(-1, 1));
        assert_eq!(character_half_split(4, 2).unwrap(), (ratio(3, 1), ratio(3, 1)));
        assert_eq!(character_half_split(3, 3).unwrap().1, ratio(-10, 1));
        assert!(character_half_split(3, 0).is_err());
    }

    #[test]
    fn limits() {
        assert_eq!(
            character_order2(21, 0, 0),
            Err(Error::EnumerationLimit { m: 21, limit: 20 })
        );
        assert!(character_order2(20, 3, 7).is_ok());
        assert!(character_order2(3, 7, 0).is_err());
    }
}
