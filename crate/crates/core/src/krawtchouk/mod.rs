//! Binary Krawtchouk polynomials
//! `K_p^n(x) = sum_j (-1)^j binom(x, j) binom(n - x, p - j)` evaluated exactly.
//!
//! The evaluator accepts any integer argument `x` (generalized binomials).
//! Identity code that needs the "zero outside `0..=n`" convention uses
//! [`krawtchouk_conv`].

mod character;
mod table;

pub use character::{character_half_split, character_order2, character_total, CHARACTER_ENUMERATION_LIMIT};
pub use table::{build_table, printed_table_one, KrawtchoukTable};

use num_traits::Zero;

use crate::arith::{binomial, into_integer, ratio, sign_pow, to_rational, ExactInteger};
use crate::error::{Error, Result};

fn check_degree(n: i64, p: i64) -> Result<()> {
    if p < 0 || p > n {
        Err(Error::DegreeOutOfRange { order: n, degree: p })
    } else {
        Ok(())
    }
}

/// `K_p^n(x)` straight from the defining sum.
pub fn krawtchouk_direct(n: i64, p: i64, x: i64) -> Result<ExactInteger> {
    check_degree(n, p)?;
    let mut acc = ExactInteger::zero();
    for j in 0..=p {
        let term = binomial(x, j) * binomial(n - x, p - j);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// `K_p^n(x)` with the identity convention: zero when `p` or `x` lies
/// outside `0..=n`.
pub fn krawtchouk_conv(n: i64, p: i64, x: i64) -> ExactInteger {
    if n < 0 || p < 0 || p > n || x < 0 || x > n {
        return ExactInteger::zero();
    }
    krawtchouk_direct(n, p, x).expect("degree checked")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedPoint {
    AtZero,
    AtOne,
    AtN,
}

/// Closed forms at `x = 0`, `x = 1` and `x = n`.
pub fn krawtchouk_closed(n: i64, p: i64, which: ClosedPoint) -> Result<ExactInteger> {
    check_degree(n, p)?;
    let b = binomial(n, p);
    match which {
        ClosedPoint::AtZero => Ok(b),
        ClosedPoint::AtN => Ok(b * sign_pow(p)),
        ClosedPoint::AtOne => {
            if n < 1 {
                return Err(Error::ArgumentOutOfRange(format!("K_p^n(1) needs n >= 1, got n = {n}")));
            }
            let factor = ratio(n - 2 * p, n);
            into_integer(factor * to_rational(&b), "K_p^n(1) closed form")
        }
    }
}

/// `K_p^n(2) = binom(n-2, p) - 2 binom(n-2, p-1) + binom(n-2, p-2)`.
pub fn krawtchouk_at_two(n: i64, p: i64) -> Result<ExactInteger> {
    if n < 2 {
        return Err(Error::ArgumentOutOfRange(format!("K_p^n(2) needs n >= 2, got n = {n}")));
    }
    check_degree(n, p)?;
    Ok(binomial(n - 2, p) - binomial(n - 2, p - 1) * 2 + binomial(n - 2, p - 2))
}

/// Value at the midpoint `x = n/2`: zero for odd `k`, `(-1)^(k/2) binom(n/2, k/2)`
/// for even `k`.
pub fn krawtchouk_half(n: i64, k: i64) -> Result<ExactInteger> {
    if n % 2 != 0 {
        return Err(Error::OrderNotEven(n));
    }
    check_degree(n, k)?;
    if k % 2 == 1 {
        Ok(ExactInteger::zero())
    } else {
        Ok(binomial(n / 2, k / 2) * sign_pow(k / 2))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    /// `K_k^n(n-k) = K_{n-k}^n(k)`; only applies at `j = n - k`.
    Reflect,
    /// `K_k^n(j) = (-1)^j K_{n-k}^n(j)`.
    SignFlip,
    /// `binom(n, j) K_k^n(j) = binom(n, k) K_j^n(k)`.
    Cross,
}

/// Computes `K_k^n(j)` from its symmetric partner.
pub fn krawtchouk_via_symmetry(n: i64, k: i64, j: i64, relation: Symmetry) -> Result<ExactInteger> {
    check_degree(n, k)?;
    if j < 0 || j > n {
        return Err(Error::ArgumentOutOfRange(format!("argument {j} outside 0..={n}")));
    }
    match relation {
        Symmetry::Reflect => {
            if j != n - k {
                return Err(Error::Precondition(format!(
                    "reflection relates K_k^n(n-k) only; got k = {k}, j = {j}, n = {n}"
                )));
            }
            krawtchouk_direct(n, n - k, k)
        }
        Symmetry::SignFlip => Ok(krawtchouk_direct(n, n - k, j)? * sign_pow(j)),
        Symmetry::Cross => {
            let partner = krawtchouk_direct(n, j, k)?;
            let value = to_rational(&(binomial(n, k) * partner)) / to_rational(&binomial(n, j));
            into_integer(value, "cross symmetry")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use proptest::prelude::*;

    #[test]
    fn direct_examples() {
        assert_eq!(krawtchouk_direct(8, 2, 4).unwrap(), int(-4));
        assert_eq!(krawtchouk_direct(4, 2, 2).unwrap(), int(-2));
        for n in 0..6 {
            for x in -5..10 {
                assert_eq!(krawtchouk_direct(n, 0, x).unwrap(), int(1));
                if n >= 1 {
                    assert_eq!(krawtchouk_direct(n, 1, x).unwrap(), int(n - 2 * x));
                }
            }
        }
    }

    #[test]
    fn direct_rejects_bad_degree() {
        assert_eq!(
            krawtchouk_direct(4, 5, 0),
            Err(Error::DegreeOutOfRange { order: 4, degree: 5 })
        );
        assert!(krawtchouk_direct(4, -1, 0).is_err());
    }

    #[test]
    fn polynomial_is_not_truncated_outside_range() {
        // K_1^4(x) = 4 - 2x keeps going past x = n.
        assert_eq!(krawtchouk_direct(4, 1, 7).unwrap(), int(-10));
        assert_eq!(krawtchouk_conv(4, 1, 7), int(0));
        assert_eq!(krawtchouk_conv(4, 1, -1), int(0));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(krawtchouk_closed(4, 1, ClosedPoint::AtZero).unwrap(), int(4));
        assert_eq!(krawtchouk_closed(4, 1, ClosedPoint::AtOne).unwrap(), int(2));
        assert_eq!(krawtchouk_closed(4, 1, ClosedPoint::AtN).unwrap(), int(-4));
        assert_eq!(krawtchouk_closed(6, 3, ClosedPoint::AtZero).unwrap(), int(20));
        assert_eq!(krawtchouk_closed(9, 0, ClosedPoint::AtOne).unwrap(), int(1));
        assert!(krawtchouk_closed(0, 0, ClosedPoint::AtOne).is_err());
    }

    #[test]
    fn closed_forms_agree_with_definition() {
        for n in 1..=40 {
            for p in 0..=n {
                assert_eq!(
                    krawtchouk_closed(n, p, ClosedPoint::AtZero).unwrap(),
                    krawtchouk_direct(n, p, 0).unwrap()
                );
                assert_eq!(
                    krawtchouk_closed(n, p, ClosedPoint::AtOne).unwrap(),
                    krawtchouk_direct(n, p, 1).unwrap()
                );
                assert_eq!(
                    krawtchouk_closed(n, p, ClosedPoint::AtN).unwrap(),
                    krawtchouk_direct(n, p, n).unwrap()
                );
            }
        }
    }

    #[test]
    fn at_two_examples() {
        assert_eq!(krawtchouk_at_two(8, 4).unwrap(), int(-10));
        assert_eq!(krawtchouk_at_two(4, 2).unwrap(), int(-2));
        // K_m^{2m}(2) = binom(2m, m) / (1 - 2m)
        for m in 1..=20 {
            let c = binomial(2 * m, m);
            assert_eq!(krawtchouk_at_two(2 * m, m).unwrap() * (1 - 2 * m), c);
        }
        assert!(krawtchouk_at_two(1, 0).is_err());
    }

    #[test]
    fn half_examples() {
        assert_eq!(krawtchouk_half(8, 4).unwrap(), int(6));
        assert_eq!(krawtchouk_half(6, 3).unwrap(), int(0));
        assert_eq!(krawtchouk_half(4, 2).unwrap(), int(-2));
        assert_eq!(krawtchouk_half(7, 2), Err(Error::OrderNotEven(7)));
    }

    #[test]
    fn at_two_and_half_agree_with_definition_up_to_64() {
        for n in 2..=64 {
            for p in 0..=n {
                assert_eq!(krawtchouk_at_two(n, p).unwrap(), krawtchouk_direct(n, p, 2).unwrap());
            }
        }
        for n in (0..=64).step_by(2) {
            for k in 0..=n {
                assert_eq!(
                    krawtchouk_half(n, k).unwrap(),
                    krawtchouk_direct(n, k, n / 2).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(krawtchouk_via_symmetry(8, 2, 4, Symmetry::SignFlip).unwrap(), int(-4));
        assert_eq!(krawtchouk_via_symmetry(7, 3, 4, Symmetry::Reflect).unwrap(), int(3));
        for n in 0..10 {
            for k in 0..=n {
                assert_eq!(
                    krawtchouk_via_symmetry(n, k, 0, Symmetry::Cross).unwrap(),
                    binomial(n, k)
                );
            }
        }
        assert!(matches!(
            krawtchouk_via_symmetry(7, 3, 2, Symmetry::Reflect),
            Err(Error::Precondition(_))
        ));
    }

    proptest! {
        #[test]
        fn symmetry_relations_hold(n in 0i64..=32, a in 0i64..=32, b in 0i64..=32) {
            let (k, j) = (a % (n + 1), b % (n + 1));
            let direct = krawtchouk_direct(n, k, j).unwrap();
            prop_assert_eq!(&krawtchouk_via_symmetry(n, k, j, Symmetry::SignFlip).unwrap(), &direct);
            prop_assert_eq!(&krawtchouk_via_symmetry(n, k, j, Symmetry::Cross).unwrap(), &direct);
            prop_assert_eq!(
                binomial(n, j) * &direct,
                binomial(n, k) * krawtchouk_direct(n, j, k).unwrap()
            );
            prop_assert_eq!(
                krawtchouk_direct(n, k, n - k).unwrap(),
                krawtchouk_direct(n, n - k, k).unwrap()
            );
        }
    }

    #[test]
    fn column_and_odd_row_sums_vanish_up_to_32() {
        for n in 1..=32 {
            for j in 1..=n {
                let s: ExactInteger = (0..=n).map(|p| krawtchouk_direct(n, p, j).unwrap()).sum();
                assert!(s.is_zero(), "column n={n} j={j}");
            }
            for p in (1..=n).step_by(2) {
                let s: ExactInteger = (0..=n).map(|j| krawtchouk_direct(n, p, j).unwrap()).sum();
                assert!(s.is_zero(), "row n={n} p={p}");
            }
        }
    }
}
