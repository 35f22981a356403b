//! Central binomial coefficients `c_m = binom(2m, m)` by several independent
//! routes, and their link with Krawtchouk values at the midpoint.
//!
//! Every recursive route reads its inputs `c_0..c_q` from the shared
//! [`SequenceCache`], which is filled from the closed form only, so a route
//! is never checked against its own output.

mod cache;
pub mod catalan;

pub use cache::{sequences, SequenceCache};
pub use catalan::{
    amdeberhan_printed, callan_odd_printed, catalan, catalan_congruence, catalan_power_congruence, hurtado_printed,
    mersenne_parity, mersenne_parity_claim, mod4_claim, mod4_classify, motzkin, motzkin_inverse_check, CatalanClaim,
    CatalanFamily, CatalanParity, CatalanRoute, MotzkinCheck,
};

use num_traits::Zero;

use crate::arith::{
    choose, into_integer, pascal_row, pow2, ratio, sum_rationals, to_rational, ExactInteger, ExactRational,
};
use crate::binomial::kit;
use crate::error::{Error, Result};
use crate::krawtchouk::krawtchouk_conv;
use crate::reduction::Parity;

/// Which family of binomials the self-recursion for `c_q` is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// `binom(2q, 2j)`
    EvenBinomials,
    /// `binom(2q + 1, 2j + 1)`
    OddBinomials,
}

fn check_nonnegative(name: &str, v: i64) -> Result<()> {
    if v < 0 {
        Err(Error::ArgumentOutOfRange(format!("{name} must be >= 0, got {v}")))
    } else {
        Ok(())
    }
}

fn check_positive(name: &str, v: i64) -> Result<()> {
    if v < 1 {
        Err(Error::ArgumentOutOfRange(format!("{name} must be >= 1, got {v}")))
    } else {
        Ok(())
    }
}

fn cached(k: i64) -> ExactInteger {
    sequences().central(k as usize)
}

pub fn central_direct(m: i64) -> Result<ExactInteger> {
    check_nonnegative("m", m)?;
    Ok(choose(2 * m, m))
}

/// The single sum over `l ≡ m (mod 2)` obtained from the power-of-two
/// binomial formula, in its integer form, its factorial form, and its
/// parity-split double-factorial form. All three must agree.
pub fn central_sum(m: i64) -> Result<ExactInteger> {
    check_nonnegative("m", m)?;
    let k = kit();
    let mut integer_form = ExactInteger::zero();
    let mut factorial_terms = Vec::new();
    for l in (m % 2..=m).step_by(2) {
        let half = (m - l) / 2;
        integer_form += pow2(l as u64) * choose(m - l, half) * choose(m, l);
        let h = k.factorial(half as u64);
        factorial_terms.push(ExactRational::new_raw(pow2(l as u64), k.factorial(l as u64) * &h * &h));
    }
    let factorial_form = into_integer(
        sum_rationals(factorial_terms) * to_rational(&k.factorial(m as u64)),
        "central sum",
    )?;

    let q = m / 2;
    let split = sum_rationals((0..=q).map(|j| {
        let dbl = if m % 2 == 0 {
            k.double_factorial(2 * j - 1)
        } else {
            k.double_factorial(2 * j + 1)
        };
        let h = k.factorial((q - j) as u64);
        ExactRational::new_raw(pow2(j as u64), k.factorial(j as u64) * dbl * &h * &h)
    }));
    let lead = if m % 2 == 0 {
        k.factorial(m as u64)
    } else {
        2 * k.factorial(m as u64)
    };
    let split = into_integer(split * to_rational(&lead), "central sum (parity split)")?;

    for (name, other) in [("factorial form", &factorial_form), ("parity split", &split)] {
        if *other != integer_form {
            return Err(Error::IdentityViolation {
                identity: if name == "factorial form" {
                    "central sum factorial form"
                } else {
                    "central sum parity split"
                },
                lhs: integer_form.to_string(),
                rhs: other.to_string(),
            });
        }
    }
    Ok(integer_form)
}

/// `c_{2q}` or `c_{2q+1}` from `c_0..c_q`.
pub fn central_half_recursion(q: i64, parity: Parity) -> Result<ExactInteger> {
    check_nonnegative("q", q)?;
    let mut acc = ExactInteger::zero();
    match parity {
        Parity::Even => {
            let row = pascal_row(2 * q);
            for j in 0..=q {
                acc += pow2(2 * j as u64) * &row[2 * j as usize] * cached(q - j);
            }
        }
        Parity::Odd => {
            let row = pascal_row(2 * q + 1);
            for j in 0..=q {
                acc += pow2(2 * j as u64) * &row[2 * j as usize + 1] * cached(q - j);
            }
            acc *= 2;
        }
    }
    Ok(acc)
}

/// `c_{2q} = c_q sum_j 2^j (q)_j^2 / (j! (2j-1)!!)`, checked against the
/// expansion of `(q)_j^2` in unsigned Stirling numbers.
pub fn central_reduce_4q(q: i64) -> Result<ExactInteger> {
    check_nonnegative("q", q)?;
    let k = kit();
    k.ensure_stirling_convention();
    let mut falling_terms = Vec::new();
    let mut stirling_terms = Vec::new();
    let qq = ExactInteger::from(q);
    for j in 0..=q as u64 {
        let denominator = k.factorial(j) * k.double_factorial(2 * j as i64 - 1);
        let falling = k.falling(q, j);
        falling_terms.push(ExactRational::new_raw(
            pow2(j) * &falling * &falling,
            denominator.clone(),
        ));
        // (q)_j = sum_i (-1)^{j-i} s(j, i) q^i, by Horner from the top.
        let mut expansion = ExactInteger::zero();
        for i in (0..=j).rev() {
            expansion *= &qq;
            let s = k.stirling_first_unsigned(j, i);
            if (j - i) % 2 == 0 {
                expansion += s;
            } else {
                expansion -= s;
            }
        }
        stirling_terms.push(ExactRational::new_raw(pow2(j) * &expansion * &expansion, denominator));
    }
    let falling_sum = sum_rationals(falling_terms);
    let stirling_sum = sum_rationals(stirling_terms);
    if falling_sum != stirling_sum {
        return Err(Error::IdentityViolation {
            identity: "central doubling Stirling expansion",
            lhs: falling_sum.to_string(),
            rhs: stirling_sum.to_string(),
        });
    }
    into_integer(falling_sum * to_rational(&cached(q)), "central doubling")
}

/// The rational prefactor and the integer sum of the alternative recursion,
/// kept apart so a worked example can be compared piece by piece.
pub fn central_alt_parts(q: i64, parity: Parity) -> Result<(ExactRational, ExactInteger)> {
    let mut sum = ExactInteger::zero();
    match parity {
        Parity::Even => {
            if q < 1 {
                return Err(Error::RangeViolation(format!(
                    "even alternative recursion needs q >= 1, got {q}"
                )));
            }
            let row = pascal_row(2 * q);
            for j in 1..=q {
                sum += pow2(2 * j as u64) * j * &row[2 * j as usize] * cached(q - j);
            }
            Ok((ratio(4 * q - 1, 2 * q * q), sum))
        }
        Parity::Odd => {
            check_nonnegative("q", q)?;
            let row = pascal_row(2 * q + 1);
            for j in 0..=q {
                sum += pow2(2 * j as u64) * (2 * j + 1) * &row[2 * j as usize + 1] * cached(q - j);
            }
            Ok((ratio(2 * (4 * q + 1), (2 * q + 1) * (2 * q + 1)), sum))
        }
    }
}

/// `c_{2q}` (needs `q >= 1`) or `c_{2q+1}` from the alternative recursion.
pub fn central_alt_recursion(q: i64, parity: Parity) -> Result<ExactInteger> {
    let (prefactor, sum) = central_alt_parts(q, parity)?;
    into_integer(prefactor * to_rational(&sum), "central alternative recursion")
}

fn self_recursion_terms(q: i64, flavor: Flavor, coefficient: impl Fn(i64) -> ExactRational) -> ExactRational {
    let top = match flavor {
        Flavor::EvenBinomials => 2 * q,
        Flavor::OddBinomials => 2 * q + 1,
    };
    let row = pascal_row(top);
    sum_rationals((1..=q).map(|j| {
        let bottom = match flavor {
            Flavor::EvenBinomials => 2 * j,
            Flavor::OddBinomials => 2 * j + 1,
        } as usize;
        let weight = pow2(2 * j as u64) * &row[bottom] * cached(q - j);
        let (num, den) = coefficient(j).into_raw();
        ExactRational::new_raw(num * weight, den)
    }))
}

/// `c_q` from `c_0..c_{q-1}`:
///
/// * even binomials: coefficient `(4q-1) j / (2q^2) - 1`;
/// * odd binomials: coefficient `[(4q+1)(2j+1) - (2q+1)^2] / (4 q^2 (2q+1))`.
pub fn central_self_recursion(q: i64, flavor: Flavor) -> Result<ExactInteger> {
    check_positive("q", q)?;
    let value = match flavor {
        Flavor::EvenBinomials => self_recursion_terms(q, flavor, |j| {
            ratio((4 * q - 1) * j, 2 * q * q) - ExactRational::from_integer(1.into())
        }),
        Flavor::OddBinomials => self_recursion_terms(q, flavor, |j| {
            ratio(
                (4 * q + 1) * (2 * j + 1) - (2 * q + 1) * (2 * q + 1),
                4 * q * q * (2 * q + 1),
            )
        }),
    };
    into_integer(value, "central self-recursion")
}

/// The self-recursion with the coefficients as originally printed:
/// `(4q-1) j / (2q^2 + 1) - 1` and `(4q+1) j / (2q^2) - 1`. Returned as a
/// rational; it is not expected to equal `c_q`.
pub fn central_self_recursion_printed(q: i64, flavor: Flavor) -> Result<ExactRational> {
    check_positive("q", q)?;
    let one = ExactRational::from_integer(1.into());
    Ok(match flavor {
        Flavor::EvenBinomials => self_recursion_terms(q, flavor, |j| ratio((4 * q - 1) * j, 2 * q * q + 1) - &one),
        Flavor::OddBinomials => self_recursion_terms(q, flavor, |j| ratio((4 * q + 1) * j, 2 * q * q) - &one),
    })
}

/// `sum_{t=1}^{q} 4^t c_{q-t} K_{2t}^{2q}(q)`.
pub fn central_kraw_sum(q: i64) -> Result<ExactInteger> {
    check_positive("q", q)?;
    let mut acc = ExactInteger::zero();
    for t in 1..=q {
        acc += pow2(2 * t as u64) * cached(q - t) * krawtchouk_conv(2 * q, 2 * t, q);
    }
    Ok(acc)
}

/// For even `q` the midpoint sum, which must vanish; for odd `q` the value
/// `-sum_t 2^{2t-1} c_{q-t} K_{2t}^{2q}(q)`, which must equal `c_q`.
pub fn central_kraw(q: i64) -> Result<ExactInteger> {
    let sum = central_kraw_sum(q)?;
    if q % 2 == 0 {
        if !sum.is_zero() {
            return Err(Error::IdentityViolation {
                identity: "midpoint cancellation",
                lhs: sum.to_string(),
                rhs: "0".into(),
            });
        }
        Ok(sum)
    } else {
        // sum_t 2^{2t-1}(...) is half of the 4^t sum.
        let value = -(sum / ExactInteger::from(2));
        let expected = cached(q);
        if value != expected {
            return Err(Error::IdentityViolation {
                identity: "midpoint recursion",
                lhs: value.to_string(),
                rhs: expected.to_string(),
            });
        }
        Ok(value)
    }
}

/// Routes producing `c_m` for a single index `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CentralRoute {
    Direct,
    Sum,
    HalfRecursion,
    Reduce4q,
    AltRecursion,
    SelfEven,
    SelfOdd,
}

impl CentralRoute {
    pub const ALL: [CentralRoute; 7] = [
        CentralRoute::Direct,
        CentralRoute::Sum,
        CentralRoute::HalfRecursion,
        CentralRoute::Reduce4q,
        CentralRoute::AltRecursion,
        CentralRoute::SelfEven,
        CentralRoute::SelfOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CentralRoute::Direct => "direct",
            CentralRoute::Sum => "sum",
            CentralRoute::HalfRecursion => "half",
            CentralRoute::Reduce4q => "reduce4q",
            CentralRoute::AltRecursion => "alt",
            CentralRoute::SelfEven => "self-even",
            CentralRoute::SelfOdd => "self-odd",
        }
    }
}

impl std::str::FromStr for CentralRoute {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CentralRoute::ALL
            .iter()
            .copied()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "central route",
                name: s.to_string(),
            })
    }
}

/// `c_m` by one route. Half-index routes pick the parity of `m`; the
/// doubling route only reaches even `m`.
pub fn central(m: i64, route: CentralRoute) -> Result<ExactInteger> {
    check_nonnegative("m", m)?;
    let (q, parity) = if m % 2 == 0 {
        (m / 2, Parity::Even)
    } else {
        (m / 2, Parity::Odd)
    };
    match route {
        CentralRoute::Direct => central_direct(m),
        CentralRoute::Sum => central_sum(m),
        CentralRoute::HalfRecursion => central_half_recursion(q, parity),
        CentralRoute::Reduce4q => {
            if parity == Parity::Odd {
                return Err(Error::RangeViolation(format!("doubling route needs even m, got {m}")));
            }
            central_reduce_4q(q)
        }
        CentralRoute::AltRecursion => central_alt_recursion(q, parity),
        CentralRoute::SelfEven => central_self_recursion(m, Flavor::EvenBinomials),
        CentralRoute::SelfOdd => central_self_recursion(m, Flavor::OddBinomials),
    }
}
