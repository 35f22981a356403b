//! Doubling formulas for binomial coefficients: the chain sums for
//! `binom(2^r m, p)`, the exact rational sums for `binom(2m + e, 2q + e')`
//! in terms of `binom(m, q)`, their Stirling expansion, and the resulting
//! products of consecutive odd or even numbers.

mod kit;

pub use kit::{kit, FactorialKit};

use num_traits::Zero;

use crate::arith::{choose, into_integer, pow2, ratio, to_rational, ExactInteger, ExactRational};
use crate::error::{Error, Result};
use crate::reduction::{f_exponent, Parity};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumForm {
    /// `sum 4^j binom(m - 2j, q - j) binom(m, 2j)` and its odd analogue.
    First,
    /// `sum 4^j binom(m, q + j) binom(q + j, 2j)` and its odd analogue.
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// `binom(2m, 2q)`
    B1,
    /// `binom(2m, 2q + 1)`
    B2,
    /// `binom(2m + 1, 2q)`
    B3,
    /// `binom(2m + 1, 2q + 1)`
    B4,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::B1, Variant::B2, Variant::B3, Variant::B4];

    /// The binomial this variant evaluates, `(top, bottom)`.
    pub fn target(self, m: i64, q: i64) -> (i64, i64) {
        match self {
            Variant::B1 => (2 * m, 2 * q),
            Variant::B2 => (2 * m, 2 * q + 1),
            Variant::B3 => (2 * m + 1, 2 * q),
            Variant::B4 => (2 * m + 1, 2 * q + 1),
        }
    }
}

fn check_pair(m: i64, q: i64) -> Result<()> {
    if q < 0 || q > m {
        Err(Error::RangeViolation(format!("need 0 <= q <= m, got q = {q}, m = {m}")))
    } else {
        Ok(())
    }
}

fn check_odd(m: i64, q: i64) -> Result<()> {
    check_pair(m, q)?;
    if q == m {
        Err(Error::RangeViolation(format!("odd case needs q < m, got q = m = {m}")))
    } else {
        Ok(())
    }
}

/// `binom(2m, 2q)` (even) or `binom(2m, 2q + 1)` (odd) as a sum over
/// products of binomials of order `m`.
pub fn double_binomial(m: i64, q: i64, parity: Parity, form: SumForm) -> Result<ExactInteger> {
    match parity {
        Parity::Even => check_pair(m, q)?,
        Parity::Odd => check_odd(m, q)?,
    }
    let mut acc = ExactInteger::zero();
    for j in 0..=q {
        let four_j = pow2(2 * j as u64);
        acc += match (parity, form) {
            (Parity::Even, SumForm::First) => four_j * choose(m - 2 * j, q - j) * choose(m, 2 * j),
            (Parity::Even, SumForm::Second) => four_j * choose(m, q + j) * choose(q + j, 2 * j),
            (Parity::Odd, SumForm::First) => four_j * choose(m - 2 * j - 1, q - j) * choose(m, 2 * j + 1),
            (Parity::Odd, SumForm::Second) => four_j * choose(m, q + j + 1) * choose(q + j + 1, 2 * j + 1),
        };
    }
    if parity == Parity::Odd {
        acc *= 2;
    }
    Ok(acc)
}

/// `binom(2^r m, p)` through the `min(r, s)`-fold chain sum with binomial
/// leaves `binom(2^{f(s,r)} m, p_nu)`.
pub fn power_reduce_binomial(m: i64, p: i64, r: u32, s: u32) -> Result<ExactInteger> {
    use crate::reduction::{GeneralParams, ReductionOptions};
    let params = GeneralParams { m, p, r, s, j: 0 };
    let nu = crate::reduction::check_general(&params, false)?;
    let leaf_order = m << f_exponent(s as i64, r as i64);
    let options = ReductionOptions {
        term_cap: 0,
        ..ReductionOptions::default()
    };
    let trace = crate::reduction::chain_trace(params, nu, options, |q| choose(leaf_order, q));
    Ok(trace.total)
}

/// The single-level form `sum 2^l binom(2^{r-1} m - l, (p - l)/2) binom(2^{r-1} m, l)`.
pub fn comb4_single_sum(m: i64, p: i64, r: u32) -> Result<ExactInteger> {
    if m < 1 || !(1..62).contains(&r) {
        return Err(Error::ArgumentOutOfRange(format!(
            "need m, r >= 1, got m = {m}, r = {r}"
        )));
    }
    let half = m << (r - 1);
    if p < 0 || p > 2 * half {
        return Err(Error::DegreeOutOfRange {
            order: 2 * half,
            degree: p,
        });
    }
    let mut acc = ExactInteger::zero();
    for l in (p % 2..=p).step_by(2) {
        acc += pow2(l as u64) * choose(half - l, (p - l) / 2) * choose(half, l);
    }
    Ok(acc)
}

/// `2^j / (j! (2j + shift)!!)` with `shift` in `{-1, 1}`.
fn weight(j: i64, shift: i64) -> ExactRational {
    let k = kit();
    ratio(
        pow2(j as u64),
        k.factorial(j as u64) * k.double_factorial(2 * j + shift),
    )
}

/// `sum_{j=0}^q 2^j / (j! (2j + shift)!!) (q)_j (b)_j` in the rationals.
fn pochhammer_sum(q: i64, b: i64, shift: i64) -> ExactRational {
    let k = kit();
    let mut acc = ExactRational::zero();
    for j in 0..=q {
        let product = k.falling(q, j as u64) * k.falling(b, j as u64);
        if product.is_zero() {
            continue;
        }
        acc += weight(j, shift) * to_rational(&product);
    }
    acc
}

/// The four rational-sum formulas relating `binom(2m + e, 2q + e')` to
/// `binom(m, q)`. Integrality is asserted only after the prefactor is
/// applied.
pub fn pochhammer_binomial(m: i64, q: i64, variant: Variant) -> Result<ExactInteger> {
    match variant {
        Variant::B2 => check_odd(m, q)?,
        _ => check_pair(m, q)?,
    }
    let base = to_rational(&choose(m, q));
    let value = match variant {
        Variant::B1 => base * pochhammer_sum(q, m - q, -1),
        Variant::B2 => to_rational(&ExactInteger::from(2 * (m - q))) * base * pochhammer_sum(q, m - q - 1, 1),
        Variant::B3 => to_rational(&ExactInteger::from(2 * q + 1)) * base * pochhammer_sum(q, m - q, 1),
        Variant::B4 => to_rational(&ExactInteger::from(2 * (m - q) + 1)) * base * pochhammer_sum(q, m - q, 1),
    };
    into_integer(value, "pochhammer binomial")
}

/// `binom(2m, 2q)` with each falling factorial expanded through unsigned
/// Stirling numbers of the first kind.
pub fn stirling_binomial(m: i64, q: i64) -> Result<ExactInteger> {
    check_pair(m, q)?;
    let k = kit();
    k.ensure_stirling_convention();
    let a = ExactInteger::from(q);
    let b = ExactInteger::from(m - q);
    let mut sum = ExactRational::zero();
    for j in 0..=q {
        let ju = j as u64;
        let mut inner = ExactInteger::zero();
        for kk in 0..=ju {
            let left = k.stirling_first_unsigned(ju, kk) * a.pow(kk as u32);
            for l in 0..=ju {
                let term = &left * k.stirling_first_unsigned(ju, l) * b.pow(l as u32);
                if (kk + l) % 2 == 0 {
                    inner += term;
                } else {
                    inner -= term;
                }
            }
        }
        sum += weight(j, -1) * to_rational(&inner);
    }
    into_integer(to_rational(&choose(m, q)) * sum, "stirling binomial")
}

fn check_product_range(q: i64, m: i64) -> Result<()> {
    if q < 0 || q > m - 1 {
        Err(Error::RangeViolation(format!(
            "need 0 <= q <= m - 1, got q = {q}, m = {m}"
        )))
    } else {
        Ok(())
    }
}

/// `N = (2q+1)(2q+3)...(2m-1)` from the rational sum with the `(2j-1)!!`
/// weights.
pub fn consecutive_odd_product(q: i64, m: i64) -> Result<ExactInteger> {
    check_product_range(q, m)?;
    let prefactor = to_rational(&kit().double_factorial(2 * (m - q) - 1));
    into_integer(prefactor * pochhammer_sum(q, m - q, -1), "odd product")
}

/// `M = (2q)(2q+2)...(2m-2) = (2m-1)! / ((2q-1)! N)`.
///
/// `q = 0` is rejected: the product then contains the factor 0 and the
/// quotient would need `(-1)!`.
pub fn consecutive_even_product(q: i64, m: i64) -> Result<ExactInteger> {
    check_product_range(q, m)?;
    if q == 0 {
        return Err(Error::RangeViolation(
            "even product needs q >= 1 (the quotient involves (2q - 1)!)".into(),
        ));
    }
    let k = kit();
    let n = consecutive_odd_product(q, m)?;
    let value = ratio(k.factorial(2 * m as u64 - 1), k.factorial(2 * q as u64 - 1) * n);
    into_integer(value, "even product")
}

/// The double-factorial quotient forms of `binom(2m, 2q)` and
/// `binom(2m, 2q + 1)`.
pub fn double_factorial_form(m: i64, q: i64, parity: Parity) -> Result<ExactInteger> {
    let k = kit();
    let value = match parity {
        Parity::Even => {
            check_pair(m, q)?;
            to_rational(&(choose(m, q) * k.double_factorial(2 * m - 1)))
                / to_rational(&(k.double_factorial(2 * q - 1) * k.double_factorial(2 * (m - q) - 1)))
        }
        Parity::Odd => {
            check_odd(m, q)?;
            to_rational(&(choose(m, q) * (2 * (m - q)) * k.double_factorial(2 * m - 1)))
                / to_rational(&(k.double_factorial(2 * q + 1) * k.double_factorial(2 * (m - q) - 1)))
        }
    };
    into_integer(value, "double factorial form")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{binomial, int};

    #[test]
    fn double_binomial_examples() {
        assert_eq!(double_binomial(4, 2, Parity::Even, SumForm::First).unwrap(), int(70));
        assert_eq!(double_binomial(4, 1, Parity::Odd, SumForm::First).unwrap(), int(56));
        for m in 0..6 {
            assert_eq!(double_binomial(m, 0, Parity::Even, SumForm::Second).unwrap(), int(1));
        }
        assert!(double_binomial(3, 3, Parity::Odd, SumForm::First).is_err());
        assert!(double_binomial(3, 4, Parity::Even, SumForm::First).is_err());
    }

    #[test]
    fn all_routes_agree_to_40() {
        for m in 0..=40i64 {
            for q in 0..=m {
                let even = binomial(2 * m, 2 * q);
                for form in [SumForm::First, SumForm::Second] {
                    assert_eq!(double_binomial(m, q, Parity::Even, form).unwrap(), even);
                    if q < m {
                        assert_eq!(
                            double_binomial(m, q, Parity::Odd, form).unwrap(),
                            binomial(2 * m, 2 * q + 1)
                        );
                    }
                }
                for v in Variant::ALL {
                    if v == Variant::B2 && q == m {
                        continue;
                    }
                    let (top, bottom) = v.target(m, q);
                    assert_eq!(
                        pochhammer_binomial(m, q, v).unwrap(),
                        binomial(top, bottom),
                        "{v:?} m={m} q={q}"
                    );
                }
                assert_eq!(stirling_binomial(m, q).unwrap(), even);
                assert_eq!(double_factorial_form(m, q, Parity::Even).unwrap(), even);
                if q < m {
                    assert_eq!(
                        double_factorial_form(m, q, Parity::Odd).unwrap(),
                        binomial(2 * m, 2 * q + 1)
                    );
                }
            }
        }
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer_binomial(4, 2, Variant::B1).unwrap(), int(70));
        assert_eq!(pochhammer_binomial(2, 1, Variant::B3).unwrap(), int(10));
        assert_eq!(pochhammer_binomial(7, 0, Variant::B1).unwrap(), int(1));
        assert!(pochhammer_binomial(3, 3, Variant::B2).is_err());
    }

    #[test]
    fn power_reduction() {
        assert_eq!(power_reduce_binomial(1, 4, 3, 1).unwrap(), int(70));
        assert_eq!(power_reduce_binomial(3, 6, 2, 2).unwrap(), int(924));
        assert_eq!(power_reduce_binomial(5, 0, 3, 2).unwrap(), int(1));
        for m in 1..=5i64 {
            for r in 1..=3u32 {
                let n = m << r;
                for p in 0..=n {
                    let direct = binomial(n, p);
                    assert_eq!(comb4_single_sum(m, p, r).unwrap(), direct);
                    for s in 1..=3u32 {
                        assert_eq!(power_reduce_binomial(m, p, r, s).unwrap(), direct);
                    }
                }
            }
        }
    }

    #[test]
    fn products() {
        assert_eq!(consecutive_odd_product(6, 11).unwrap(), int(1322685));
        assert_eq!(consecutive_even_product(6, 11).unwrap(), int(967680));
        for m in 1..=40i64 {
            assert_eq!(consecutive_odd_product(m - 1, m).unwrap(), int(2 * m - 1));
            if m >= 2 {
                assert_eq!(consecutive_even_product(m - 1, m).unwrap(), int(2 * m - 2));
            }
            for q in 1..m {
                let odd: ExactInteger = (q..m).map(|j| int(2 * j + 1)).product();
                let even: ExactInteger = (q..m).map(|j| int(2 * j)).product();
                assert_eq!(consecutive_odd_product(q, m).unwrap(), odd);
                assert_eq!(consecutive_even_product(q, m).unwrap(), even);
            }
        }
        assert!(consecutive_even_product(0, 3).is_err());
        assert!(consecutive_odd_product(3, 3).is_err());
    }
}
