//! 2-adic valuations of factorials and binomials, and the predicted residues
//! of `binom(2^r m, 2^r q)` and `binom(2^r m, 2^r q + 1)` modulo powers of two.

mod claims;

pub use claims::{ClaimExpression, ClaimOutcome, CongruenceClaim};

use crate::arith::{choose, ExactInteger, ExactRational};
use crate::error::{Error, Result};

/// `nu_2(k!)` by de Polignac: `sum_{i >= 1} floor(k / 2^i)`.
pub fn epsilon(k: u64) -> u64 {
    let mut acc = 0;
    let mut rest = k;
    while rest > 1 {
        rest >>= 1;
        acc += rest;
    }
    acc
}

/// `eps(m) - eps(q) - eps(m - q)`, the exponent of 2 in `binom(m, q)`.
pub fn epsilon_pair(m: i64, q: i64) -> Result<u64> {
    if q < 0 || q > m {
        return Err(Error::RangeViolation(format!("need 0 <= q <= m, got q = {q}, m = {m}")));
    }
    let (m, q) = (m as u64, q as u64);
    Ok(epsilon(m) - epsilon(q) - epsilon(m - q))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClauseOutcome {
    Pass,
    Fail,
    NotApplicable,
}

impl ClauseOutcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            ClauseOutcome::Pass
        } else {
            ClauseOutcome::Fail
        }
    }
}

/// Outcome of the four elementary properties of `eps` at one point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct EpsilonLemmaReport {
    /// `eps(k) <= k - 1`, with equality exactly at powers of two.
    pub bound: ClauseOutcome,
    /// `eps(2^r m) = eps(m) + (2^r - 1) m` for odd `m`.
    pub scaling: ClauseOutcome,
    /// `eps(2^r + 1) = eps(2^r - 1) + r`.
    pub around_power: ClauseOutcome,
    /// `eps(k + 2) >= eps(k) + 1` and `eps(k + 1) >= eps(k)`.
    pub monotone: ClauseOutcome,
}

impl EpsilonLemmaReport {
    pub fn all_pass(&self) -> bool {
        [self.bound, self.scaling, self.around_power, self.monotone]
            .iter()
            .all(|c| *c != ClauseOutcome::Fail)
    }
}

pub fn epsilon_lemma_check(k: u64, r: u32, m_odd: u64) -> EpsilonLemmaReport {
    let bound = if k == 0 {
        ClauseOutcome::NotApplicable
    } else {
        let e = epsilon(k);
        ClauseOutcome::from_bool(e < k && ((e == k - 1) == k.is_power_of_two()))
    };
    let scaling = if m_odd % 2 == 0 || r >= 40 {
        ClauseOutcome::NotApplicable
    } else {
        let pow = 1u64 << r;
        ClauseOutcome::from_bool(epsilon(pow * m_odd) == epsilon(m_odd) + (pow - 1) * m_odd)
    };
    let around_power = if r >= 62 {
        ClauseOutcome::NotApplicable
    } else {
        let pow = 1u64 << r;
        ClauseOutcome::from_bool(epsilon(pow + 1) == epsilon(pow - 1) + r as u64)
    };
    let monotone = ClauseOutcome::from_bool(epsilon(k + 2) > epsilon(k) && epsilon(k + 1) >= epsilon(k));
    EpsilonLemmaReport {
        bound,
        scaling,
        around_power,
        monotone,
    }
}

fn check_pair(m: i64, q: i64) -> Result<()> {
    if q < 0 || q > m {
        Err(Error::RangeViolation(format!("need 0 <= q <= m, got q = {q}, m = {m}")))
    } else {
        Ok(())
    }
}

fn log2_of_modulus(modulus: u64) -> Result<u32> {
    if modulus.is_power_of_two() && modulus >= 2 {
        Ok(modulus.trailing_zeros())
    } else {
        Err(Error::UnsupportedClaim(format!(
            "modulus {modulus} is not a power of two >= 2"
        )))
    }
}

fn scaled(m: i64, q: i64, r: u32, offset: u8) -> ClaimExpression {
    ClaimExpression::ScaledBinomial { m, q, r, offset }
}

/// Residues from the small-modulus table: modulus 2 and 4 for any `r >= 1`,
/// 8 and 16 with the stated correction factors; offset 1 only for
/// `1 <= r <= 3`, plus the single-doubling rule modulo 8 at `r = 1`.
pub fn predict_scaled_congruence(m: i64, q: i64, r: u32, offset: u8, modulus: u64) -> Result<CongruenceClaim> {
    check_pair(m, q)?;
    let log2 = log2_of_modulus(modulus)?;
    if r < 1 {
        return Err(Error::UnsupportedClaim("scaling exponent r must be >= 1".into()));
    }
    let base = choose(m, q);
    let qm = ExactInteger::from(q) * (m - q);
    let predicted = match (offset, log2) {
        (0, 1 | 2) => base,
        (0, 3) => base * (ExactInteger::from(1) + 2 * &qm),
        (0, 4) if r == 1 => base * (ExactInteger::from(1) + 2 * &qm),
        (0, 4) => base * (ExactInteger::from(1) + 10 * &qm),
        (1, _) if r <= 3 && log2 <= r => ExactInteger::from(0),
        (1, _) if r <= 3 && log2 == r + 1 => (ExactInteger::from(1) << r) * (m - q) * base,
        (1, 3) if r == 1 => ExactInteger::from(2 * (m - q)) * base,
        _ => {
            return Err(Error::UnsupportedClaim(format!(
                "no stated rule for offset {offset}, r = {r}, modulus {modulus}"
            )))
        }
    };
    Ok(CongruenceClaim::new(scaled(m, q, r, offset), log2, predicted))
}

/// The two valuation-based claims for offset 0 or 1.
pub fn predict_epsilon_congruence(m: i64, q: i64, r: u32, offset: u8) -> Result<(CongruenceClaim, CongruenceClaim)> {
    if q < 1 || q > m || r < 1 || offset > 1 {
        return Err(Error::RangeViolation(format!(
            "need 1 <= q <= m, r >= 1, offset in {{0, 1}}; got m = {m}, q = {q}, r = {r}, offset = {offset}"
        )));
    }
    let e = epsilon_pair(m, q)? as u32;
    let expr = scaled(m, q, r, offset);
    let base = choose(m, q);
    Ok(if offset == 0 {
        (
            CongruenceClaim::new(expr.clone(), e, ExactInteger::from(0)),
            CongruenceClaim::new(expr, e + 1, base),
        )
    } else {
        (
            CongruenceClaim::new(expr.clone(), e, base),
            CongruenceClaim::new(expr, e + r, ExactInteger::from(0)),
        )
    })
}

/// `binom(2^r m, 2^r q + s) ≡ binom(m, q)(1 - delta_{s,t}) mod 2^{eps(m,q) + t}`.
pub fn predict_consolidated(m: i64, q: i64, r: u32, s: u8, t: u8) -> Result<CongruenceClaim> {
    if q < 1 || q > m || r < 1 || s > 1 || t > 1 {
        return Err(Error::RangeViolation(format!(
            "need 1 <= q <= m, r >= 1, s, t in {{0, 1}}; got m = {m}, q = {q}, r = {r}, s = {s}, t = {t}"
        )));
    }
    let e = epsilon_pair(m, q)? as u32;
    let predicted = if s == t { ExactInteger::from(0) } else { choose(m, q) };
    Ok(CongruenceClaim::new(scaled(m, q, r, s), e + t as u32, predicted))
}

/// Parity rule: `binom(2^r m, 2^r q) ≡ binom(m, q)` and
/// `binom(2^r m, 2^r q + 1) ≡ 0` modulo 2.
pub fn predict_parity(m: i64, q: i64, r: u32, offset: u8) -> Result<CongruenceClaim> {
    check_pair(m, q)?;
    if r < 1 || offset > 1 {
        return Err(Error::RangeViolation("need r >= 1 and offset in {0, 1}".into()));
    }
    let predicted = if offset == 0 {
        choose(m, q)
    } else {
        ExactInteger::from(0)
    };
    Ok(CongruenceClaim::new(scaled(m, q, r, offset), 1, predicted))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MersenneShape {
    /// `(2^t + 1, 2^{t-1} - 1)`
    A1,
    /// `(2^t + 1, 2^{t-1} - 2)`
    A2,
    /// `(2^t, 2^{t-1} - 2)`
    A3,
    /// `(2^t, 2^{t-1} - 1)`
    B,
}

impl MersenneShape {
    pub const ALL: [MersenneShape; 4] = [
        MersenneShape::A1,
        MersenneShape::A2,
        MersenneShape::A3,
        MersenneShape::B,
    ];

    pub fn pair(self, t: u32) -> (i64, i64) {
        let mt = 1i64 << t;
        let qt = (1i64 << (t - 1)) - 1;
        match self {
            MersenneShape::A1 => (mt + 1, qt),
            MersenneShape::A2 => (mt + 1, qt - 1),
            MersenneShape::A3 => (mt, qt - 1),
            MersenneShape::B => (mt, qt),
        }
    }
}

/// The claims for the pairs built from `m_t = 2^t`, `q_t = 2^{t-1} - 1`:
/// shapes a1..a3 predict `0 mod 2^{t-1}` and `binom(m, q) mod 2^t`; shape b
/// predicts `0 mod 2^t` and `binom(m, q) mod 2^{t+1}`.
pub fn predict_mersenne_family(r: u32, t: u32, shape: MersenneShape) -> Result<(CongruenceClaim, CongruenceClaim)> {
    if r < 1 || !(1..=40).contains(&t) {
        return Err(Error::RangeViolation(format!(
            "need r >= 1 and 1 <= t <= 40, got r = {r}, t = {t}"
        )));
    }
    let (m, q) = shape.pair(t);
    if q < 0 {
        return Err(Error::RangeViolation(format!("shape {shape:?} needs t >= 2 (q = {q})")));
    }
    let low = if shape == MersenneShape::B { t } else { t - 1 };
    let expr = scaled(m, q, r, 0);
    Ok((
        CongruenceClaim::new(expr.clone(), low, ExactInteger::from(0)),
        CongruenceClaim::new(expr, low + 1, choose(m, q)),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionalKind {
    /// `binom(2m, 2q)` modulo 32 and 64.
    EvenCase,
    /// `binom(2m, 2q + 1)` modulo 16 and 32.
    OddCase,
}

/// The higher-modulus single-doubling rules, valid under divisibility-by-3
/// side conditions that make the `2/3` coefficient integral.
pub fn predict_conditional_mod32(m: i64, q: i64, kind: ConditionalKind) -> Result<Vec<CongruenceClaim>> {
    check_pair(m, q)?;
    let base = choose(m, q);
    let two_thirds = ExactRational::new(2.into(), 3.into());
    let (offset, moduli, value) = match kind {
        ConditionalKind::EvenCase => {
            let ok = [q, m - q].iter().any(|v| matches!(v.rem_euclid(3), 0 | 1));
            if !ok {
                return Err(Error::Precondition(format!(
                    "even case needs q or m - q ≡ 0, 1 (mod 3); got m = {m}, q = {q}"
                )));
            }
            let correction =
                two_thirds * ExactRational::from_integer(ExactInteger::from(q) * (q - 1) * (m - q) * (m - q - 1));
            let bracket =
                ExactRational::from_integer(ExactInteger::from(1) + 2 * ExactInteger::from(q) * (m - q)) + correction;
            (0u8, [5u32, 6], ExactRational::from_integer(base) * bracket)
        }
        ConditionalKind::OddCase => {
            if q >= m {
                return Err(Error::RangeViolation("odd case needs q < m".into()));
            }
            if q % 3 != 0 && (m - q - 1) % 3 != 0 {
                return Err(Error::Precondition(format!(
                    "odd case needs 3 | q or 3 | m - q - 1; got m = {m}, q = {q}"
                )));
            }
            let bracket = ExactRational::from_integer(ExactInteger::from(1))
                + two_thirds * ExactRational::from_integer(ExactInteger::from(q) * (m - q - 1));
            let prefactor = ExactInteger::from(2 * (m - q)) * base;
            (1u8, [4u32, 5], ExactRational::from_integer(prefactor) * bracket)
        }
    };
    let predicted = crate::arith::into_integer(value, "conditional congruence coefficient")?;
    Ok(moduli
        .iter()
        .map(|&log2| CongruenceClaim::new(scaled(m, q, 1, offset), log2, predicted.clone()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, nu2};
    use crate::binomial::kit;

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon(8), 7);
        assert_eq!(epsilon(1), 0);
        assert_eq!(epsilon(0), 0);
        assert_eq!(epsilon(6), 4);
        assert_eq!(epsilon(6), epsilon(3) + 3);
        for k in 0..5000u64 {
            assert_eq!(epsilon(2 * k), epsilon(2 * k + 1));
            assert_eq!(epsilon(2 * k), epsilon(k) + k);
        }
    }

    #[test]
    fn epsilon_matches_factorial_valuation() {
        for k in 0..=500u64 {
            assert_eq!(Some(epsilon(k)), nu2(&kit().factorial(k)), "k={k}");
        }
    }

    #[test]
    fn pair_matches_binomial_valuation() {
        assert_eq!(epsilon_pair(8, 3).unwrap(), 3);
        assert_eq!(epsilon_pair(8, 0).unwrap(), 0);
        for m in 0..=300i64 {
            for q in 0..=m {
                assert_eq!(Some(epsilon_pair(m, q).unwrap()), nu2(&choose(m, q)));
            }
        }
        assert!(epsilon_pair(3, 4).is_err());
    }

    #[test]
    fn lemma_clauses() {
        let rep = epsilon_lemma_check(8, 3, 3);
        assert_eq!(rep.bound, ClauseOutcome::Pass);
        assert_eq!(epsilon(24), 22);
        assert_eq!(rep.scaling, ClauseOutcome::Pass);
        assert_eq!(epsilon(17), epsilon(15) + 4);
        assert_eq!(epsilon_lemma_check(5, 4, 1).around_power, ClauseOutcome::Pass);
        // At r = 0 the third clause would read eps(2) = eps(0), which is false.
        assert_eq!(epsilon_lemma_check(5, 0, 1).around_power, ClauseOutcome::Fail);
        for k in 0..=2000u64 {
            for r in 1..=10u32 {
                assert!(epsilon_lemma_check(k, r, 2 * (k % 50) + 1).all_pass(), "k={k} r={r}");
            }
        }
    }

    #[test]
    fn scaled_examples() {
        let c = predict_scaled_congruence(3, 1, 4, 0, 8).unwrap();
        assert_eq!(c.predicted, int(7));
        assert!(c.verify().holds);
        assert_eq!(predict_scaled_congruence(3, 1, 4, 0, 16).unwrap().predicted, int(15));
        assert_eq!(predict_scaled_congruence(3, 1, 4, 0, 4).unwrap().predicted, int(3));
        let c = predict_scaled_congruence(7, 2, 3, 1, 16).unwrap();
        assert_eq!(c.predicted, int(8));
        assert!(c.verify().holds);
        assert_eq!(predict_scaled_congruence(7, 2, 3, 1, 8).unwrap().predicted, int(0));
        assert!(matches!(
            predict_scaled_congruence(7, 2, 4, 1, 16),
            Err(Error::UnsupportedClaim(_))
        ));
        assert!(predict_scaled_congruence(7, 2, 2, 0, 32).is_err());
        assert!(predict_scaled_congruence(7, 2, 2, 0, 12).is_err());
    }

    #[test]
    fn epsilon_claims() {
        let (a, b) = predict_epsilon_congruence(8, 3, 1, 0).unwrap();
        assert_eq!((a.log2_modulus, a.predicted.clone()), (3, int(0)));
        assert_eq!((b.log2_modulus, b.predicted.clone()), (4, int(8)));
        assert!(a.verify().holds && b.verify().holds);
        let (a, b) = predict_epsilon_congruence(8, 3, 2, 1).unwrap();
        assert_eq!((a.log2_modulus, b.log2_modulus), (3, 5));
        assert!(a.verify().holds && b.verify().holds);
    }

    #[test]
    fn mersenne_examples() {
        let (a, b) = predict_mersenne_family(1, 2, MersenneShape::B).unwrap();
        assert_eq!(a.exact_value(), int(28));
        assert!(a.verify().holds);
        assert_eq!(b.predicted, int(4));
        assert!(b.verify().holds);
        assert_eq!(MersenneShape::A1.pair(3), (9, 3));
        let (a, b) = predict_mersenne_family(2, 3, MersenneShape::A1).unwrap();
        assert_eq!((a.log2_modulus, b.log2_modulus), (2, 3));
        assert!(a.verify().holds && b.verify().holds);
        assert!(predict_mersenne_family(1, 1, MersenneShape::A2).is_err());
    }

    #[test]
    fn conditional_examples() {
        for c in predict_conditional_mod32(5, 3, ConditionalKind::EvenCase).unwrap() {
            assert!(c.verify().holds);
        }
        let c = predict_conditional_mod32(7, 0, ConditionalKind::EvenCase).unwrap();
        assert_eq!(c[0].predicted, int(1));
        for c in predict_conditional_mod32(7, 3, ConditionalKind::OddCase).unwrap() {
            assert!(c.verify().holds);
        }
        assert!(matches!(
            predict_conditional_mod32(7, 2, ConditionalKind::EvenCase),
            Err(Error::Precondition(_))
        ));
    }
}
