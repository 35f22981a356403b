//! The built-in identities. Each one pairs a formula under test with an
//! independent oracle (usually the defining sum or a closed form).

use std::cell::RefCell;
use std::sync::OnceLock;

use num_traits::Zero;

use super::{DomainFn, EvalFn, Evaluation, Expectation, Identity, LimitFn, Param, RouteSet};
use crate::arith::{choose, nu2, pow2, ratio, to_rational, ExactInteger, ExactRational};
use crate::binomial::{
    comb4_single_sum, consecutive_even_product, consecutive_odd_product, double_binomial, double_factorial_form, kit,
    pochhammer_binomial, power_reduce_binomial, stirling_binomial, SumForm, Variant,
};
use crate::central::{
    amdeberhan_printed, callan_odd_printed, catalan, catalan_congruence, catalan_power_congruence, central,
    central_alt_parts, central_direct, central_kraw_sum, central_self_recursion, central_self_recursion_printed,
    hurtado_printed, mersenne_parity_claim, mod4_claim, motzkin_inverse_check, sequences, CatalanFamily, CatalanRoute,
    CentralRoute, Flavor,
};
use crate::dyadic::{
    epsilon, epsilon_lemma_check, epsilon_pair, predict_conditional_mod32, predict_consolidated,
    predict_epsilon_congruence, predict_mersenne_family, predict_parity, predict_scaled_congruence, ClaimExpression,
    ConditionalKind, CongruenceClaim, MersenneShape,
};
use crate::error::{Error, Result};
use crate::krawtchouk::{
    character_half_split, character_order2, character_total, krawtchouk_at_two, krawtchouk_closed, krawtchouk_direct,
    krawtchouk_half, krawtchouk_via_symmetry, printed_table_one, ClosedPoint, Symmetry,
};
use crate::reduction::{
    cancellation_sum, reduce_general, reduce_iterated_twice, reduce_theorem1, reduce_theorem1_bounded,
    reduce_theorem1_split, reduce_transposed, Parity,
};

pub const SUITES: [&str; 8] = [
    "table1",
    "thm-2.2",
    "thm-3.1",
    "sec4-binomials",
    "sec4-congruences",
    "sec5-central",
    "sec6-catalan",
    "paper-typos",
];

const TYPOS: &[&str] = &["paper-typos"];

/// Every registered identity, in a fixed order.
pub fn identities() -> &'static [Identity] {
    static ALL: OnceLock<Vec<Identity>> = OnceLock::new();
    ALL.get_or_init(build)
}

pub fn identity(id: &str) -> Result<&'static Identity> {
    identities().iter().find(|i| i.id == id).ok_or_else(|| Error::Unknown {
        kind: "identity",
        name: id.to_string(),
    })
}

fn unlimited(_: usize, _: &[i64]) -> i64 {
    i64::MAX
}

fn everywhere(_: &[i64]) -> bool {
    true
}

fn def(
    id: &'static str,
    suites: &'static [&'static str],
    summary: &'static str,
    params: &[(&'static str, i64, i64)],
    eval: EvalFn,
) -> Identity {
    Identity {
        id,
        suites,
        summary,
        params: params.iter().map(|&(name, lo, hi)| Param { name, lo, hi }).collect(),
        expected: Expectation::Pass,
        routes: None,
        limit: unlimited,
        domain: everywhere,
        eval,
    }
}

impl Identity {
    fn limited(mut self, limit: LimitFn) -> Self {
        self.limit = limit;
        self
    }

    fn within(mut self, domain: DomainFn) -> Self {
        self.domain = domain;
        self
    }

    fn expect_failure(mut self) -> Self {
        self.expected = Expectation::Fail;
        self
    }

    fn routed(mut self, routes: RouteSet) -> Self {
        self.routes = Some(routes);
        self
    }
}

fn same(lhs: impl std::fmt::Display, rhs: impl std::fmt::Display) -> Result<Evaluation> {
    Ok(Evaluation::compare(lhs, rhs))
}

fn parity(v: i64) -> Parity {
    if v == 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

fn big(v: i64) -> ExactInteger {
    ExactInteger::from(v)
}

thread_local! {
    static LAST_VALUE: RefCell<Option<(ClaimExpression, ExactInteger)>> = const { RefCell::new(None) };
}

/// Exact value of a claim's expression. Neighbouring points of a sweep
/// usually share it (only the modulus changes), so the last one is kept.
fn claim_value(expr: &ClaimExpression) -> ExactInteger {
    LAST_VALUE.with(|slot| {
        let mut slot = slot.borrow_mut();
        if let Some((e, v)) = slot.as_ref() {
            if e == expr {
                return v.clone();
            }
        }
        let v = expr.exact_value();
        *slot = Some((expr.clone(), v.clone()));
        v
    })
}

/// Compares the actual residue with the predicted one.
fn check_claim(claim: &CongruenceClaim) -> Result<Evaluation> {
    let outcome = claim.verify_with(&claim_value(&claim.expression));
    same(outcome.actual, &claim.predicted)
}

fn pick<T: Clone>(pair: (T, T), which: i64) -> T {
    if which == 0 {
        pair.0
    } else {
        pair.1
    }
}

// Parameter limits shared by several identities.

fn up_to_first(idx: usize, v: &[i64]) -> i64 {
    match idx {
        0 => i64::MAX,
        _ => v[0],
    }
}

fn reduction_box(idx: usize, v: &[i64]) -> i64 {
    match idx {
        1 => 2 * v[0],
        2 => v[0],
        _ => i64::MAX,
    }
}

fn is_odd_first(v: &[i64]) -> bool {
    v[0] % 2 != 0
}

fn is_even_first(v: &[i64]) -> bool {
    v[0] % 2 == 0
}

fn odd_case_needs_room(v: &[i64]) -> bool {
    // (m, q, parity, ..): the odd case needs q < m.
    v[2] == 0 || v[1] < v[0]
}

// Parameters m, r, s, p, j for the general reduction.
fn general_box(idx: usize, v: &[i64]) -> i64 {
    match idx {
        3 => v[0] << v[1],
        4 => (v[0] << v[1]) >> v[2],
        _ => i64::MAX,
    }
}

fn printed_entry(n: i64, p: i64, j: i64) -> i64 {
    let tables = printed_table_one();
    tables[(n - 1) as usize].1[p as usize][j as usize]
}

const MISPRINT: (i64, i64, i64) = (6, 5, 4);

/// Points where the low claim of the Mersenne family does not hold:
/// `(t, shape)` with `t = 1` for shape b and `t = 2` for shapes a1..a3.
fn mersenne_low_defect(t: i64, shape: i64) -> bool {
    matches!((t, shape), (1, 3) | (2, 0..=2))
}

const SHAPES: [MersenneShape; 4] = MersenneShape::ALL;

const CENTRAL_ROUTES: &[&str] = &["direct", "sum", "half", "reduce4q", "alt", "self-even", "self-odd"];
const CATALAN_ROUTES: &[&str] = &[
    "direct",
    "ratio",
    "difference",
    "prop61",
    "alt62",
    "touchard",
    "callan",
    "hurtado",
    "amdeberhan",
];

fn central_route(name: &str, m: i64) -> Result<Evaluation> {
    let route: CentralRoute = name.parse()?;
    match central(m, route) {
        Ok(v) => Ok(Evaluation::Compare {
            lhs: v.to_string(),
            rhs: String::new(),
        }),
        Err(Error::RangeViolation(why)) | Err(Error::ArgumentOutOfRange(why)) => Ok(Evaluation::Skip(why)),
        Err(e) => Err(e),
    }
}

fn catalan_route(name: &str, n: i64) -> Result<Evaluation> {
    let route: CatalanRoute = name.parse()?;
    match catalan(n, route) {
        Ok(v) => Ok(Evaluation::Compare {
            lhs: v.to_string(),
            rhs: String::new(),
        }),
        Err(Error::RangeViolation(why)) => Ok(Evaluation::Skip(why)),
        Err(e) => Err(e),
    }
}

/// Evaluates both routes; either one being out of range skips the point.
fn two_routes(routes: Option<(&str, &str)>, one: fn(&str, i64) -> Result<Evaluation>, x: i64) -> Result<Evaluation> {
    let (a, b) = routes.ok_or_else(|| Error::Precondition("route pair required".into()))?;
    let lhs = match one(a, x)? {
        Evaluation::Compare { lhs, .. } => lhs,
        skip => return Ok(skip),
    };
    let rhs = match one(b, x)? {
        Evaluation::Compare { lhs, .. } => lhs,
        skip => return Ok(skip),
    };
    Ok(Evaluation::Compare { lhs, rhs })
}

fn catalan_family_claims(v: &[i64], family: CatalanFamily) -> Result<Evaluation> {
    let (n, log2, which) = (v[0], v[1] as u32, v[2] as usize);
    let claims = catalan_congruence(n, 1 << log2, family)?;
    match claims.get(which) {
        Some(c) => check_claim(&c.claim),
        None => Ok(Evaluation::Skip(format!(
            "only {} rules at modulus 2^{log2}",
            claims.len()
        ))),
    }
}

/// Leaf values `K_2^6(5)` and `K_6^6(5)` of the order-48 worked example,
/// as printed.
const LEAVES_PRINTED: [(i64, i64); 2] = [(2, 2), (6, 1)];

/// Terms of the worked evaluation of `C_8` through the alternative
/// weighted sum, as printed (the `k = 3` term uses `C_2` for `C_1`).
/// `4^k k (5 - k) binom(8, 2k) C_{4-k}` for `k = 1..4`.
fn alt_sum_terms_c8() -> Vec<ExactInteger> {
    (1..=4i64)
        .map(|k| pow2(2 * k as u64) * k * (5 - k) * choose(8, 2 * k) * sequences().catalan((4 - k) as usize))
        .collect()
}

const C8_ALT_PRINTED_TERMS: [i64; 4] = [2240, 13440, 21504, 1024];

fn build() -> Vec<Identity> {
    vec![
        // Reference matrices.
        def(
            "table-1",
            &["table1"],
            "printed reference matrices of K_p^n(j) for n <= 8 equal the defining sum",
            &[("n", 1, 8), ("p", 0, 8), ("j", 0, 8)],
            |v, _| same(printed_entry(v[0], v[1], v[2]), krawtchouk_direct(v[0], v[1], v[2])?),
        )
        .limited(up_to_first)
        .within(|v| (v[0], v[1], v[2]) != MISPRINT),
        def(
            "table-1-misprint",
            TYPOS,
            "printed entry n = 6, p = 5, j = 4 (printed 2)",
            &[("n", 6, 6), ("p", 5, 5), ("j", 4, 4)],
            |v, _| same(printed_entry(v[0], v[1], v[2]), krawtchouk_direct(v[0], v[1], v[2])?),
        )
        .expect_failure(),
        def(
            "table-1-invariants",
            &["table1"],
            "row, column and edge invariants of K_p^n(j) for n <= 64",
            &[("n", 0, 64)],
            |v, _| {
                let violations = crate::krawtchouk::build_table(v[0]).invariant_violations();
                same(violations.len(), 0)
            },
        ),
        // Single doubling.
        def(
            "thm-2.2",
            &["thm-2.2"],
            "K_p^{2m}(2j) = sum_l 2^l binom(m-l, (p-l)/2) K_l^m(j)",
            &[("m", 0, 16), ("p", 0, 32), ("j", 0, 16)],
            |v, _| {
                same(
                    reduce_theorem1(v[0], v[1], v[2])?,
                    krawtchouk_direct(2 * v[0], v[1], 2 * v[2])?,
                )
            },
        )
        .limited(reduction_box),
        def(
            "remark-2.4",
            &["thm-2.2"],
            "the doubling sum truncated at rho = min{p, mu_p(m), 2m - p}",
            &[("m", 0, 16), ("p", 0, 32), ("j", 0, 16)],
            |v, _| {
                same(
                    reduce_theorem1_bounded(v[0], v[1], v[2])?,
                    krawtchouk_direct(2 * v[0], v[1], 2 * v[2])?,
                )
            },
        )
        .limited(reduction_box),
        def(
            "eq-kraw1b",
            &["thm-2.2"],
            "parity-split doubling sums for degrees 2q and 2q + 1",
            &[("m", 0, 16), ("q", 0, 16), ("parity", 0, 1), ("j", 0, 16)],
            |v, _| {
                let (m, q, par, j) = (v[0], v[1], v[2], v[3]);
                same(
                    reduce_theorem1_split(m, q, parity(par), j)?,
                    krawtchouk_direct(2 * m, 2 * q + par, 2 * j)?,
                )
            },
        )
        .limited(|idx, v| match idx {
            1 | 3 => v[0],
            _ => i64::MAX,
        })
        .within(odd_case_needs_room),
        def(
            "cor-2.3",
            &["thm-2.2"],
            "K_{2j}^{2m}(p) through the transposed doubling sum",
            &[("m", 0, 16), ("j", 0, 16), ("p", 0, 16)],
            |v, _| {
                same(
                    reduce_transposed(v[0], v[1], v[2])?,
                    krawtchouk_direct(2 * v[0], 2 * v[1], v[2])?,
                )
            },
        )
        .limited(up_to_first),
        def(
            "cor-2.5",
            &["thm-2.2"],
            "sum over p of the doubling sums of K_p^{2m}(2j) vanishes for j >= 1",
            &[("m", 1, 16), ("j", 1, 16)],
            |v, _| same(cancellation_sum(v[0], v[1])?, 0),
        )
        .limited(up_to_first),
        def(
            "eq-pr3",
            &["thm-2.2"],
            "column sums sum_p K_p^n(j) vanish for 1 <= j <= n",
            &[("n", 1, 32), ("j", 1, 32)],
            |v, _| {
                let mut acc = ExactInteger::zero();
                for p in 0..=v[0] {
                    acc += krawtchouk_direct(v[0], p, v[1])?;
                }
                same(acc, 0)
            },
        )
        .limited(up_to_first),
        def(
            "eq-odd-rows",
            &["thm-2.2"],
            "row sums sum_j K_p^n(j) vanish for odd p",
            &[("n", 1, 32), ("p", 1, 32)],
            |v, _| {
                let mut acc = ExactInteger::zero();
                for j in 0..=v[0] {
                    acc += krawtchouk_direct(v[0], v[1], j)?;
                }
                same(acc, 0)
            },
        )
        .limited(up_to_first)
        .within(|v| v[1] % 2 == 1),
        def(
            "eq-chipx",
            &["thm-2.2"],
            "character of the p-th exterior power at an order-two torus element equals K_p^{2m}(2j)",
            &[("m", 0, 10), ("p", 0, 20), ("j", 0, 10)],
            |v, _| {
                same(
                    character_order2(v[0], v[1], v[2])?,
                    krawtchouk_direct(2 * v[0], v[1], 2 * v[2])?,
                )
            },
        )
        .limited(reduction_box),
        def(
            "eq-chimpm",
            &["thm-2.2"],
            "the two half-spin pieces at an order-two element are both chi_m / 2",
            &[("m", 1, 10), ("j", 1, 10)],
            |v, _| {
                let (plus, minus) = character_half_split(v[0], v[1])?;
                let half = ratio(krawtchouk_direct(2 * v[0], v[0], 2 * v[1])?, 2);
                same(format!("{plus},{minus}"), format!("{half},{half}"))
            },
        )
        .limited(up_to_first),
        def(
            "remark-2.1",
            &["thm-2.2"],
            "full exterior character: 4^m at the identity, 0 at order-two elements",
            &[("m", 0, 10), ("j", 0, 10)],
            |v, _| {
                let expected = if v[1] == 0 { pow2(2 * v[0] as u64) } else { big(0) };
                same(character_total(v[0], v[1])?, expected)
            },
        )
        .limited(up_to_first),
        def(
            "eq-sym",
            &["thm-2.2"],
            "reflection, sign-flip and cross symmetry of K_k^n(j)",
            &[("n", 0, 32), ("k", 0, 32), ("j", 0, 32), ("relation", 0, 2)],
            |v, _| {
                let rel = [Symmetry::Reflect, Symmetry::SignFlip, Symmetry::Cross][v[3] as usize];
                same(
                    krawtchouk_via_symmetry(v[0], v[1], v[2], rel)?,
                    krawtchouk_direct(v[0], v[1], v[2])?,
                )
            },
        )
        .limited(|idx, v| if idx == 1 || idx == 2 { v[0] } else { i64::MAX })
        .within(|v| v[3] != 0 || v[2] == v[0] - v[1]),
        def(
            "eq-special-values",
            &["thm-2.2"],
            "closed forms of K_p^n at x = 0, 1, n",
            &[("n", 0, 64), ("p", 0, 64), ("point", 0, 2)],
            |v, _| {
                let (n, p) = (v[0], v[1]);
                let (which, x) = match v[2] {
                    0 => (ClosedPoint::AtZero, 0),
                    1 => (ClosedPoint::AtOne, 1),
                    _ => (ClosedPoint::AtN, n),
                };
                same(krawtchouk_closed(n, p, which)?, krawtchouk_direct(n, p, x)?)
            },
        )
        .limited(|idx, v| if idx == 1 { v[0] } else { i64::MAX })
        .within(|v| v[2] != 1 || v[0] >= 1),
        def(
            "eq-k-at-two",
            &["thm-2.2"],
            "K_p^n(2) = binom(n-2, p) - 2 binom(n-2, p-1) + binom(n-2, p-2)",
            &[("n", 2, 64), ("p", 0, 64)],
            |v, _| same(krawtchouk_at_two(v[0], v[1])?, krawtchouk_direct(v[0], v[1], 2)?),
        )
        .limited(up_to_first),
        def(
            "eq-half-value",
            &["thm-2.2"],
            "K_k^n(n/2) is 0 for odd k and (-1)^{k/2} binom(n/2, k/2) for even k",
            &[("n", 0, 64), ("k", 0, 64)],
            |v, _| same(krawtchouk_half(v[0], v[1])?, krawtchouk_direct(v[0], v[1], v[0] / 2)?),
        )
        .limited(up_to_first)
        .within(is_even_first),
        // Repeated doubling.
        def(
            "thm-3.1",
            &["thm-3.1"],
            "K_p^{2^r m}(2^s j) through the min(r, s)-fold chain sum (pruned)",
            &[("m", 1, 5), ("r", 1, 4), ("s", 1, 4), ("p", 0, 80), ("j", 0, 80)],
            |v, _| {
                let (m, r, s, p, j) = (v[0], v[1] as u32, v[2] as u32, v[3], v[4]);
                same(
                    reduce_general(m, p, r, s, j, true)?.total,
                    krawtchouk_direct(m << r, p, j << s)?,
                )
            },
        )
        .limited(general_box)
        .within(is_odd_first),
        def(
            "remark-3.2",
            &["thm-3.1"],
            "pruned and unpruned chain sums agree",
            &[("m", 1, 5), ("r", 1, 4), ("s", 1, 4), ("p", 0, 80), ("j", 0, 80)],
            |v, _| {
                let (m, r, s, p, j) = (v[0], v[1] as u32, v[2] as u32, v[3], v[4]);
                same(
                    reduce_general(m, p, r, s, j, true)?.total,
                    reduce_general(m, p, r, s, j, false)?.total,
                )
            },
        )
        .limited(general_box)
        .within(is_odd_first),
        def(
            "eq-iter1",
            &["thm-3.1"],
            "K_p^{4m}(4j) as the explicit double sum",
            &[("m", 0, 8), ("p", 0, 32), ("j", 0, 8)],
            |v, _| {
                same(
                    reduce_iterated_twice(v[0], v[1], v[2])?,
                    krawtchouk_direct(4 * v[0], v[1], 4 * v[2])?,
                )
            },
        )
        .limited(|idx, v| match idx {
            1 => 4 * v[0],
            2 => v[0],
            _ => i64::MAX,
        }),
        def(
            "example-k6-48-40",
            &["thm-3.1"],
            "worked order-48 instance: K_6^48(40) by the 3-fold chain sum, leaves K_2^6(5) = 5, K_6^6(5) = -1",
            &[],
            |_, _| {
                let total = reduce_general(3, 6, 4, 3, 5, true)?.total;
                let leaves = [krawtchouk_direct(6, 2, 5)?, krawtchouk_direct(6, 6, 5)?];
                same(
                    format!("{total},{},{}", leaves[0], leaves[1]),
                    format!("{},5,-1", krawtchouk_direct(48, 6, 40)?),
                )
            },
        ),
        def(
            "example-k6-48-40-leaves-printed",
            TYPOS,
            "leaf values of the order-48 worked example as printed (2 and 1)",
            &[("p", 2, 6)],
            |v, _| {
                let printed = LEAVES_PRINTED
                    .iter()
                    .find(|(p, _)| *p == v[0])
                    .map(|(_, value)| *value)
                    .ok_or_else(|| Error::Precondition("no printed leaf at this degree".into()))?;
                same(printed, krawtchouk_direct(6, v[0], 5)?)
            },
        )
        .within(|v| v[0] == 2 || v[0] == 6)
        .expect_failure(),
        // Binomial doubling formulas.
        def(
            "eq-comb1",
            &["sec4-binomials"],
            "binom(2m, 2q) and binom(2m, 2q+1) as sums over binomials of order m",
            &[("m", 0, 40), ("q", 0, 40), ("parity", 0, 1), ("form", 0, 1)],
            |v, _| {
                let form = if v[3] == 0 { SumForm::First } else { SumForm::Second };
                same(
                    double_binomial(v[0], v[1], parity(v[2]), form)?,
                    choose(2 * v[0], 2 * v[1] + v[2]),
                )
            },
        )
        .limited(up_to_first)
        .within(odd_case_needs_room),
        def(
            "eq-comb3",
            &["sec4-binomials"],
            "binom(2^r m, p) through the min(r, s)-fold chain sum",
            &[("m", 1, 5), ("r", 1, 4), ("s", 1, 4), ("p", 0, 80)],
            |v, _| {
                let (m, r, s, p) = (v[0], v[1] as u32, v[2] as u32, v[3]);
                same(power_reduce_binomial(m, p, r, s)?, choose(m << r, p))
            },
        )
        .limited(|idx, v| if idx == 3 { v[0] << v[1] } else { i64::MAX }),
        def(
            "eq-comb4",
            &["sec4-binomials"],
            "binom(2^r m, p) = sum_l 2^l binom(2^{r-1} m - l, (p-l)/2) binom(2^{r-1} m, l)",
            &[("m", 1, 40), ("r", 1, 3), ("p", 0, 320)],
            |v, _| same(comb4_single_sum(v[0], v[2], v[1] as u32)?, choose(v[0] << v[1], v[2])),
        )
        .limited(|idx, v| if idx == 2 { v[0] << v[1] } else { i64::MAX }),
        def(
            "thm-4.3",
            &["sec4-binomials"],
            "binom(2m + e, 2q + e') from binom(m, q) through rational Pochhammer sums",
            &[("m", 0, 40), ("q", 0, 40), ("variant", 0, 3)],
            |v, _| {
                let variant = Variant::ALL[v[2] as usize];
                let (top, bottom) = variant.target(v[0], v[1]);
                same(pochhammer_binomial(v[0], v[1], variant)?, choose(top, bottom))
            },
        )
        .limited(|idx, v| if idx == 1 { v[0] } else { i64::MAX })
        .within(|v| !(v[2] == 1 && v[1] == v[0])),
        def(
            "eq-stirling",
            &["sec4-binomials"],
            "binom(2m, 2q) with falling factorials expanded in Stirling numbers",
            &[("m", 0, 40), ("q", 0, 40)],
            |v, _| same(stirling_binomial(v[0], v[1])?, choose(2 * v[0], 2 * v[1])),
        )
        .limited(up_to_first),
        def(
            "eq-factorizations",
            &["sec4-binomials"],
            "(2j)! = 2^j j! (2j-1)!! and (2j+1)! = 2^j j! (2j+1)!!",
            &[("j", 0, 200), ("odd", 0, 1)],
            |v, _| {
                let (j, odd) = (v[0], v[1]);
                let k = kit();
                let lhs = k.factorial((2 * j + odd) as u64);
                let rhs = pow2(j as u64) * k.factorial(j as u64) * k.double_factorial(2 * j - 1 + 2 * odd);
                same(lhs, rhs)
            },
        ),
        def(
            "cor-4.4",
            &["sec4-binomials"],
            "products of consecutive odd and even numbers from the rational sums",
            &[("q", 0, 40), ("m", 0, 40), ("even", 0, 1)],
            |v, _| {
                let (q, m, even) = (v[0], v[1], v[2]);
                if even == 0 {
                    let direct: ExactInteger = (q..m).map(|i| big(2 * i + 1)).product();
                    same(consecutive_odd_product(q, m)?, direct)
                } else {
                    let direct: ExactInteger = (q..m).map(|i| big(2 * i)).product();
                    same(consecutive_even_product(q, m)?, direct)
                }
            },
        )
        .limited(|idx, _| if idx == 1 { 40 } else { i64::MAX })
        .within(|v| v[1] >= v[0] && (v[2] == 0 || v[0] >= 1)),
        def(
            "eq-double-factorial",
            &["sec4-binomials"],
            "binom(2m, 2q) and binom(2m, 2q+1) as double-factorial quotients",
            &[("m", 0, 40), ("q", 0, 40), ("parity", 0, 1)],
            |v, _| {
                same(
                    double_factorial_form(v[0], v[1], parity(v[2]))?,
                    choose(2 * v[0], 2 * v[1] + v[2]),
                )
            },
        )
        .limited(up_to_first)
        .within(odd_case_needs_room),
        // 2-adic congruences.
        def(
            "prop-4.5",
            &["sec4-congruences"],
            "binom(2^r m, 2^r q + offset) modulo 2, 4, 8, 16",
            &[
                ("m", 0, 64),
                ("q", 0, 64),
                ("r", 1, 6),
                ("offset", 0, 1),
                ("log2", 1, 4),
            ],
            |v, _| {
                let claim = predict_scaled_congruence(v[0], v[1], v[2] as u32, v[3] as u8, 1 << v[4])?;
                check_claim(&claim)
            },
        )
        .limited(up_to_first)
        .within(|v| {
            let (r, offset, log2) = (v[2], v[3], v[4]);
            offset == 0 || (r <= 3 && (log2 <= r + 1 || (r == 1 && log2 == 3)))
        }),
        def(
            "prop-4.8",
            &["sec4-congruences"],
            "binom(2^r m, 2^r q + offset) modulo 2^{eps(m,q)} and the next power",
            &[
                ("m", 1, 64),
                ("q", 1, 64),
                ("r", 1, 6),
                ("offset", 0, 1),
                ("which", 0, 1),
            ],
            |v, _| {
                let pair = predict_epsilon_congruence(v[0], v[1], v[2] as u32, v[3] as u8)?;
                check_claim(&pick(pair, v[4]))
            },
        )
        .limited(up_to_first),
        def(
            "eq-binoweird",
            &["sec4-congruences"],
            "binom(2^r m, 2^r q + s) = binom(m, q)(1 - delta_{s,t}) mod 2^{eps(m,q) + t}",
            &[("m", 1, 64), ("q", 1, 64), ("r", 1, 6), ("s", 0, 1), ("t", 0, 1)],
            |v, _| check_claim(&predict_consolidated(v[0], v[1], v[2] as u32, v[3] as u8, v[4] as u8)?),
        )
        .limited(up_to_first),
        def(
            "eq-bino1",
            &["sec4-congruences"],
            "binom(2^r m, 2^r q) = binom(m, q) and binom(2^r m, 2^r q + 1) = 0 mod 2",
            &[("m", 0, 128), ("q", 0, 128), ("r", 1, 3), ("offset", 0, 1)],
            |v, _| check_claim(&predict_parity(v[0], v[1], v[2] as u32, v[3] as u8)?),
        )
        .limited(up_to_first),
        def(
            "prop-4.9",
            &["sec4-congruences"],
            "scaled binomials at m_t = 2^t (+1), q_t = 2^{t-1} - 1 (-1)",
            &[("r", 1, 6), ("t", 1, 6), ("shape", 0, 3), ("which", 0, 1)],
            |v, _| {
                let pair = predict_mersenne_family(v[0] as u32, v[1] as u32, SHAPES[v[2] as usize])?;
                check_claim(&pick(pair, v[3]))
            },
        )
        .within(|v| !(v[3] == 0 && mersenne_low_defect(v[1], v[2]))),
        def(
            "prop-4.9-small-t",
            TYPOS,
            "low claim of the Mersenne family at t = 1 (shape b) and t = 2 (shapes a1..a3)",
            &[("r", 1, 6), ("t", 1, 2), ("shape", 0, 3)],
            |v, _| {
                let pair = predict_mersenne_family(v[0] as u32, v[1] as u32, SHAPES[v[2] as usize])?;
                check_claim(&pair.0)
            },
        )
        .within(|v| mersenne_low_defect(v[1], v[2]))
        .expect_failure(),
        def(
            "remark-mod32",
            &["sec4-congruences"],
            "single-doubling rules modulo 32/64 (even) and 16/32 (odd) under mod-3 side conditions",
            &[("m", 0, 64), ("q", 0, 64), ("odd", 0, 1), ("which", 0, 1)],
            |v, _| {
                let kind = if v[2] == 0 {
                    ConditionalKind::EvenCase
                } else {
                    ConditionalKind::OddCase
                };
                let claims = predict_conditional_mod32(v[0], v[1], kind)?;
                check_claim(&claims[v[3] as usize])
            },
        )
        .limited(up_to_first),
        def(
            "eq-ek",
            &["sec4-congruences"],
            "eps(k) = sum floor(k / 2^i) is the 2-adic valuation of k!",
            &[("k", 0, 500)],
            |v, _| {
                let k = v[0] as u64;
                same(epsilon(k), nu2(&kit().factorial(k)).unwrap_or(0))
            },
        ),
        def(
            "eq-relations",
            &["sec4-congruences"],
            "eps(2k) = eps(2k + 1) = eps(k) + k",
            &[("k", 0, 5000)],
            |v, _| {
                let k = v[0] as u64;
                same(format!("{},{}", epsilon(2 * k), epsilon(2 * k + 1)), {
                    let e = epsilon(k) + k;
                    format!("{e},{e}")
                })
            },
        ),
        def(
            "eq-emq",
            &["sec4-congruences"],
            "eps(m) - eps(q) - eps(m - q) is the 2-adic valuation of binom(m, q)",
            &[("m", 0, 200), ("q", 0, 200)],
            |v, _| {
                let val = nu2(&choose(v[0], v[1])).unwrap_or(0);
                same(epsilon_pair(v[0], v[1])?, val)
            },
        )
        .limited(up_to_first),
        def(
            "lemma-4.7",
            &["sec4-congruences"],
            "bound, scaling, values around 2^r and monotonicity of eps",
            &[("k", 0, 300), ("r", 1, 20), ("m", 1, 31)],
            |v, _| {
                let report = epsilon_lemma_check(v[0] as u64, v[1] as u32, v[2] as u64);
                same(report.all_pass(), true)
            },
        )
        .within(|v| v[2] % 2 == 1),
        def(
            "lemma-4.7c-r0",
            TYPOS,
            "eps(2^r + 1) = eps(2^r - 1) + r read at r = 0",
            &[("r", 0, 0)],
            |v, _| {
                let r = v[0] as u32;
                same(epsilon((1u64 << r) + 1), epsilon((1u64 << r) - 1) + r as u64)
            },
        )
        .expect_failure(),
        // Central binomials.
        def(
            "central-routes",
            &["sec5-central"],
            "c_m = binom(2m, m) by every route",
            &[("m", 0, 400)],
            |v, routes| two_routes(routes, central_route, v[0]),
        )
        .routed(RouteSet {
            names: CENTRAL_ROUTES,
            reference: "direct",
        }),
        def(
            "example-c8-alt",
            &["sec5-central"],
            "c_8 through the alternative recursion: prefactor 15/32, sum 27456",
            &[],
            |_, _| {
                let (prefactor, sum) = central_alt_parts(4, Parity::Even)?;
                let value = &prefactor * to_rational(&sum);
                same(format!("{prefactor},{sum},{value}"), "15/32,27456,12870")
            },
        ),
        def(
            "lemma-5.4",
            &["sec5-central"],
            "K_{2q}^{4q}(2q) = (-1)^q c_q and K_{2q+1}^{4q+2}(2q+1) = 0",
            &[("q", 0, 60), ("parity", 0, 1)],
            |v, _| {
                let (q, par) = (v[0], v[1]);
                let n = 4 * q + 2 * par;
                let expected = if par == 1 {
                    big(0)
                } else if q % 2 == 0 {
                    sequences().central(q as usize)
                } else {
                    -sequences().central(q as usize)
                };
                same(krawtchouk_direct(n, 2 * q + par, n / 2)?, expected)
            },
        ),
        def(
            "prop-5.5-even",
            &["sec5-central"],
            "sum_t 4^t c_{q-t} K_{2t}^{2q}(q) vanishes for even q",
            &[("q", 2, 60)],
            |v, _| same(central_kraw_sum(v[0])?, 0),
        )
        .within(is_even_first),
        def(
            "prop-5.5-odd",
            &["sec5-central"],
            "-sum_t 2^{2t-1} c_{q-t} K_{2t}^{2q}(q) = c_q for odd q",
            &[("q", 1, 59)],
            |v, _| same(-ratio(central_kraw_sum(v[0])?, 2), central_direct(v[0])?),
        )
        .within(is_odd_first),
        def(
            "prop-5.5-odd-printed",
            TYPOS,
            "the odd-q midpoint sum read as c_{2q}",
            &[("q", 1, 59)],
            |v, _| same(-ratio(central_kraw_sum(v[0])?, 2), central_direct(2 * v[0])?),
        )
        .within(is_odd_first)
        .expect_failure(),
        def(
            "cor-5.3-even",
            &["sec5-central", "paper-typos"],
            "c_q from c_0..c_{q-1} with binom(2q, 2j) weights (denominator 2q^2)",
            &[("q", 1, 200)],
            |v, _| {
                same(
                    central_self_recursion(v[0], Flavor::EvenBinomials)?,
                    central_direct(v[0])?,
                )
            },
        ),
        def(
            "cor-5.3-odd",
            &["sec5-central", "paper-typos"],
            "c_q from c_0..c_{q-1} with binom(2q+1, 2j+1) weights",
            &[("q", 1, 200)],
            |v, _| {
                same(
                    central_self_recursion(v[0], Flavor::OddBinomials)?,
                    central_direct(v[0])?,
                )
            },
        ),
        def(
            "cor-5.3-even-printed",
            TYPOS,
            "even self-recursion with denominator 2q^2 + 1 as printed",
            &[("q", 1, 200)],
            |v, _| {
                same(
                    central_self_recursion_printed(v[0], Flavor::EvenBinomials)?,
                    central_direct(v[0])?,
                )
            },
        )
        .expect_failure(),
        def(
            "cor-5.3-odd-printed",
            TYPOS,
            "odd self-recursion with coefficient (4q+1)j/(2q^2) - 1 as printed",
            &[("q", 1, 200)],
            |v, _| {
                same(
                    central_self_recursion_printed(v[0], Flavor::OddBinomials)?,
                    central_direct(v[0])?,
                )
            },
        )
        .expect_failure(),
        // Catalan numbers.
        def(
            "catalan-routes",
            &["sec6-catalan"],
            "C_n by every route",
            &[("n", 0, 400)],
            |v, routes| two_routes(routes, catalan_route, v[0]),
        )
        .routed(RouteSet {
            names: CATALAN_ROUTES,
            reference: "direct",
        }),
        def(
            "example-c8",
            &["sec6-catalan"],
            "C_8 = 1430 by the weighted sum, the alternative sum, Touchard and Callan",
            &[("route", 0, 3)],
            |v, _| {
                let route = [
                    CatalanRoute::Prop61,
                    CatalanRoute::Alt62,
                    CatalanRoute::Touchard,
                    CatalanRoute::Callan,
                ][v[0] as usize];
                same(catalan(8, route)?, 1430)
            },
        ),
        def(
            "example-c8-alt-corrected",
            &["sec6-catalan", "paper-typos"],
            "worked alternative sum for C_8 with C_1 in the k = 3 term",
            &[],
            |_, _| {
                let terms = alt_sum_terms_c8();
                let total: ExactInteger = terms.iter().sum();
                let shown = terms.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("+");
                same(
                    format!("{shown}={}", ratio(5 * total, 96)),
                    format!("2240+13440+10752+1024={}", sequences().catalan(8)),
                )
            },
        ),
        def(
            "example-c8-alt-printed",
            TYPOS,
            "worked alternative sum for C_8 as printed (5/96 * 38208)",
            &[],
            |_, _| {
                let total: i64 = C8_ALT_PRINTED_TERMS.iter().sum();
                same(ratio(5 * total, 96), sequences().catalan(8))
            },
        )
        .expect_failure(),
        def(
            "hurtado-printed",
            TYPOS,
            "Hurtado-Noy sum with 2^{n-2k} as printed, read as C_{n+1}",
            &[("n", 0, 60)],
            |v, _| same(hurtado_printed(v[0])?, sequences().catalan(v[0] as usize + 1)),
        )
        .expect_failure(),
        def(
            "amdeberhan-printed",
            TYPOS,
            "Amdeberhan sum as printed, read as C_n",
            &[("n", 1, 60)],
            |v, _| same(amdeberhan_printed(v[0])?, sequences().catalan(v[0] as usize)),
        )
        .expect_failure(),
        def(
            "hurtado-corrected",
            &["sec6-catalan", "paper-typos"],
            "Hurtado-Noy sum with 2^{n-2k-1}, equal to C_{n+1}",
            &[("n", 2, 400)],
            |v, _| {
                same(
                    catalan(v[0], CatalanRoute::Hurtado)?,
                    sequences().catalan(v[0] as usize),
                )
            },
        ),
        def(
            "amdeberhan-corrected",
            &["sec6-catalan", "paper-typos"],
            "Amdeberhan sum at parameter n, equal to C_{n+1}",
            &[("n", 1, 60)],
            |v, _| {
                let printed: ExactRational = amdeberhan_printed(v[0])?;
                same(printed, sequences().catalan(v[0] as usize + 1))
            },
        ),
        def(
            "eq-touch-cong",
            &["sec6-catalan"],
            "C_{2n}, C_{2n+1} modulo 2, 4, 8 from Touchard",
            &[("n", 1, 4096), ("log2", 1, 3), ("rule", 0, 1)],
            |v, _| catalan_family_claims(v, CatalanFamily::Touchard),
        ),
        def(
            "eq-touch-cong2",
            &["sec6-catalan"],
            "C_{2n}, C_{2n+1} modulo 16 from Touchard",
            &[("n", 1, 4096), ("log2", 4, 4), ("rule", 0, 1)],
            |v, _| catalan_family_claims(v, CatalanFamily::Touchard),
        ),
        def(
            "eq-callan-cong",
            &["sec6-catalan"],
            "Callan-derived congruences modulo 2, 4, 8, 16 (odd rule in corrected form)",
            &[("n", 1, 4096), ("log2", 1, 4), ("rule", 0, 2)],
            |v, _| catalan_family_claims(v, CatalanFamily::Callan),
        )
        .within(|v| v[2] < 2 || v[1] == 2),
        def(
            "callan-odd-printed",
            TYPOS,
            "odd-index Callan rule modulo 8 and 16 as printed, at witness indices",
            &[("n", 1, 5), ("log2", 3, 4)],
            |v, _| check_claim(&callan_odd_printed(v[0], 1 << v[1])?.claim),
        )
        .within(is_odd_first)
        .expect_failure(),
        def(
            "prop-6.1-cong",
            &["sec6-catalan"],
            "congruences from the weighted sums modulo 2, 4, 8, 16",
            &[("n", 1, 4096), ("log2", 1, 4), ("rule", 0, 1)],
            |v, _| catalan_family_claims(v, CatalanFamily::Prop61),
        ),
        def(
            "eq-cong-ck-j",
            &["sec6-catalan"],
            "C_{2^k l + j} mod 2 is 0 for j < 2^k - 1 and C_l for j = 2^k - 1",
            &[("k", 1, 12), ("l", 1, 4096), ("j", 1, 4095)],
            |v, _| check_claim(&catalan_power_congruence(v[0] as u32, v[1], v[2])?),
        )
        .limited(|idx, v| match idx {
            1 => 4096 >> v[0],
            2 => ((1i64 << v[0]) - 1).min(4096 - (v[1] << v[0])),
            _ => i64::MAX,
        }),
        def(
            "mersenne-parity",
            &["sec6-catalan"],
            "C_n is odd exactly when n = 2^a - 1",
            &[("n", 0, 16384)],
            |v, _| check_claim(&mersenne_parity_claim(v[0] as u64)),
        ),
        def(
            "remark-6.2",
            &["sec6-catalan"],
            "C_n mod 4 from the binary shape of n + 1",
            &[("n", 0, 4096)],
            |v, _| check_claim(&mod4_claim(v[0] as u64)),
        ),
        def(
            "motzkin-inverse",
            &["sec6-catalan"],
            "sum_k binom(n, k) M_k = C_{n+1}",
            &[("n", 0, 300)],
            |v, _| {
                let check = motzkin_inverse_check(v[0])?;
                same(check.transform, check.catalan)
            },
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{Status, SweepSpec};

    #[test]
    fn lookup() {
        assert_eq!(identity("thm-2.2").unwrap().id, "thm-2.2");
        assert!(matches!(identity("nope"), Err(Error::Unknown { .. })));
    }

    #[test]
    fn misprint_point_is_isolated() {
        let r = SweepSpec::new("table-1-misprint").run().unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].status, Status::Fail);
        assert_eq!((r[0].lhs.as_str(), r[0].rhs.as_str()), ("2", "-2"));
        assert!(!r[0].is_unexpected());
    }

    #[test]
    fn catalan_route_pairs_skip_below_minimum() {
        let r = SweepSpec::new("catalan-routes")
            .with_range("n", 1, 1)
            .with_routes("direct", "callan")
            .run()
            .unwrap();
        assert_eq!(r[0].status, Status::SkippedPrecondition);
    }
}
