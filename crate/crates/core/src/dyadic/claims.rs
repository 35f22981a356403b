use serde::Serialize;

use crate::arith::{choose, residue_pow2, ExactInteger};

/// The integer a congruence claim talks about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ClaimExpression {
    /// `binom(2^r m, 2^r q + offset)`
    ScaledBinomial { m: i64, q: i64, r: u32, offset: u8 },
    /// `cofactor * C_index`, with the cofactor kept on the left rather than
    /// divided out (it need not be invertible modulo `2^t`).
    ScaledCatalan {
        #[serde(serialize_with = "as_decimal")]
        cofactor: ExactInteger,
        index: u64,
    },
}

fn as_decimal<S: serde::Serializer>(v: &ExactInteger, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl ClaimExpression {
    /// Exact value, computed from scratch.
    pub fn exact_value(&self) -> ExactInteger {
        match self {
            ClaimExpression::ScaledBinomial { m, q, r, offset } => choose(m << r, (q << r) + *offset as i64),
            ClaimExpression::ScaledCatalan { cofactor, index } => {
                cofactor * crate::central::sequences().catalan(*index as usize)
            }
        }
    }
}

/// "`expression ≡ predicted (mod 2^log2_modulus)`", with `predicted`
/// normalized into `[0, 2^log2_modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceClaim {
    pub expression: ClaimExpression,
    pub log2_modulus: u32,
    #[serde(serialize_with = "as_decimal")]
    pub predicted: ExactInteger,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub holds: bool,
    pub actual: ExactInteger,
}

impl CongruenceClaim {
    pub fn new(expression: ClaimExpression, log2_modulus: u32, predicted: ExactInteger) -> Self {
        let predicted = residue_pow2(&predicted, log2_modulus);
        CongruenceClaim {
            expression,
            log2_modulus,
            predicted,
        }
    }

    pub fn modulus(&self) -> ExactInteger {
        ExactInteger::from(1) << self.log2_modulus
    }

    pub fn exact_value(&self) -> ExactInteger {
        self.expression.exact_value()
    }

    /// Checks the claim against the exact value of its expression.
    pub fn verify(&self) -> ClaimOutcome {
        self.verify_with(&self.exact_value())
    }

    /// Checks the claim against a caller-supplied exact value of the
    /// expression (for sweeps that already hold a whole Pascal row).
    pub fn verify_with(&self, exact: &ExactInteger) -> ClaimOutcome {
        let actual = residue_pow2(exact, self.log2_modulus);
        ClaimOutcome {
            holds: actual == self.predicted,
            actual,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn normalization_and_values() {
        let c = CongruenceClaim::new(
            ClaimExpression::ScaledBinomial {
                m: 3,
                q: 1,
                r: 4,
                offset: 0,
            },
            4,
            int(-1),
        );
        assert_eq!(c.predicted, int(15));
        assert_eq!(c.exact_value(), "2254848913647".parse::<ExactInteger>().unwrap());
        assert!(c.verify().holds);
        let c = CongruenceClaim::new(
            ClaimExpression::ScaledCatalan {
                cofactor: int(5),
                index: 4,
            },
            2,
            int(2),
        );
        assert_eq!(c.exact_value(), int(70));
        assert!(c.verify().holds);
        let c = CongruenceClaim::new(
            ClaimExpression::ScaledBinomial {
                m: 7,
                q: 2,
                r: 3,
                offset: 1,
            },
            4,
            int(8),
        );
        assert_eq!(c.exact_value(), "97997533741800".parse::<ExactInteger>().unwrap());
        assert!(c.verify().holds);
        assert_eq!(c.modulus(), int(16));
    }

    #[test]
    fn modulus_one_is_vacuous() {
        let c = CongruenceClaim::new(
            ClaimExpression::ScaledBinomial {
                m: 5,
                q: 1,
                r: 2,
                offset: 0,
            },
            0,
            int(5),
        );
        assert_eq!(c.predicted, int(0));
        assert!(c.verify().holds);
    }
}
