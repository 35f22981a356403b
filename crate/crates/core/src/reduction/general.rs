//! The `nu`-fold reduction of `K_p^{2^r m}(2^s j)`, `nu = min(r, s)`.
//!
//! Each summand is indexed by a chain `p >= p_1 >= ... >= p_nu >= 0` of the
//! parity of `p` and contributes
//! `2^{p_1+...+p_nu} prod_k binom(2^{r-k} m - p_k, (p_{k-1} - p_k)/2) * leaf`.
//! Chains are visited in lexicographic order of `(p_1, ..., p_nu)`.

use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use super::{f_exponent, rho_bound};
use crate::arith::{choose, pow2, ExactInteger};
use crate::error::{Error, Result};
use crate::krawtchouk::krawtchouk_conv;

/// Default number of terms kept in a trace before only the total is tracked.
pub const DEFAULT_TERM_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GeneralParams {
    pub m: i64,
    pub p: i64,
    pub r: u32,
    pub s: u32,
    pub j: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionOptions {
    /// Restrict each level to the indices that can give a nonzero summand.
    pub pruned: bool,
    /// Reject `p < 2(nu - 1)` instead of flagging it.
    pub strict: bool,
    /// Maximum number of terms retained in the trace.
    pub term_cap: usize,
}

impl Default for ReductionOptions {
    fn default() -> Self {
        ReductionOptions {
            pruned: false,
            strict: false,
            term_cap: DEFAULT_TERM_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionTerm {
    pub indices: Vec<i64>,
    pub power: u64,
    #[serde(serialize_with = "as_decimal")]
    pub coefficient_product: ExactInteger,
    #[serde(serialize_with = "as_decimal")]
    pub leaf_value: ExactInteger,
}

impl ReductionTerm {
    pub fn value(&self) -> ExactInteger {
        pow2(self.power) * &self.coefficient_product * &self.leaf_value
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub parameters: GeneralParams,
    pub terms: Vec<ReductionTerm>,
    #[serde(serialize_with = "as_decimal")]
    pub total: ExactInteger,
    /// Number of chains visited, including any beyond the cap.
    pub term_count: u64,
    /// True when `terms` holds fewer entries than `term_count`.
    pub truncated: bool,
    /// Set when `p < 2(nu - 1)`.
    pub below_nu_bound: bool,
    /// Set when no chain was enumerated at all.
    pub empty: bool,
}

fn as_decimal<S: serde::Serializer>(v: &ExactInteger, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// The index set of a chain sum: top degree `p`, `depth` levels, and level
/// `k` living in order `2 * 2^{r-k} m`.
#[derive(Debug, Clone, Copy)]
pub struct ChainSpec {
    pub m: i64,
    pub p: i64,
    pub r: u32,
    pub depth: u32,
    pub pruned: bool,
}

struct Walker<'a, F> {
    spec: ChainSpec,
    halves: Vec<i64>,
    binomials: HashMap<(i64, i64), ExactInteger>,
    chain: Vec<i64>,
    visit: &'a mut F,
}

impl<F: FnMut(&[i64], u64, &ExactInteger)> Walker<'_, F> {
    fn coefficient(&mut self, n: i64, k: i64) -> ExactInteger {
        self.binomials.entry((n, k)).or_insert_with(|| choose(n, k)).clone()
    }

    fn descend(&mut self, level: usize, parent: i64, power: u64, product: ExactInteger) {
        if level > self.spec.depth as usize {
            (self.visit)(&self.chain, power, &product);
            return;
        }
        // Order of the Krawtchouk value being reduced at this level is 2 * half.
        let half = self.halves[level];
        let upper = if self.spec.pruned {
            if parent > 2 * half {
                return;
            }
            rho_bound(parent, half)
        } else {
            parent
        };
        let mut child = self.spec.p % 2;
        while child <= upper {
            let c = self.coefficient(half - child, (parent - child) / 2);
            let next = &product * c;
            self.chain.push(child);
            self.descend(level + 1, child, power + child as u64, next);
            self.chain.pop();
            child += 2;
        }
    }
}

/// Visits every chain of `spec` in lexicographic order, passing the chain,
/// the exponent of 2 and the product of the level binomials.
pub fn enumerate_chains<F>(spec: ChainSpec, mut visit: F)
where
    F: FnMut(&[i64], u64, &ExactInteger),
{
    let halves = (0..=spec.depth).map(|k| spec.m << (spec.r - k.min(spec.r))).collect();
    let mut walker = Walker {
        spec,
        halves,
        binomials: HashMap::new(),
        chain: Vec::with_capacity(spec.depth as usize),
        visit: &mut visit,
    };
    walker.descend(1, spec.p, 0, ExactInteger::from(1));
}

/// Runs the chain sum with an arbitrary leaf function of `p_nu`.
pub(crate) fn chain_trace<L>(
    parameters: GeneralParams,
    depth: u32,
    options: ReductionOptions,
    leaf: L,
) -> ReductionTrace
where
    L: Fn(i64) -> ExactInteger,
{
    let spec = ChainSpec {
        m: parameters.m,
        p: parameters.p,
        r: parameters.r,
        depth,
        pruned: options.pruned,
    };
    let mut leaves: Vec<Option<ExactInteger>> = vec![None; parameters.p as usize + 1];
    let mut terms = Vec::new();
    let mut total = ExactInteger::zero();
    let mut count = 0u64;
    enumerate_chains(spec, |chain, power, product| {
        count += 1;
        let last = *chain.last().unwrap_or(&parameters.p);
        let leaf_value = leaves[last as usize].get_or_insert_with(|| leaf(last)).clone();
        if !product.is_zero() && !leaf_value.is_zero() {
            total += pow2(power) * product * &leaf_value;
        }
        if terms.len() < options.term_cap {
            terms.push(ReductionTerm {
                indices: chain.to_vec(),
                power,
                coefficient_product: product.clone(),
                leaf_value,
            });
        }
    });
    let nu = depth as i64;
    ReductionTrace {
        parameters,
        truncated: (terms.len() as u64) < count,
        terms,
        total,
        term_count: count,
        below_nu_bound: parameters.p < 2 * (nu - 1),
        empty: count == 0,
    }
}

fn scaled(m: i64, e: u32, what: &str) -> Result<i64> {
    1i64.checked_shl(e)
        .filter(|_| e < 62)
        .and_then(|f| m.checked_mul(f))
        .ok_or_else(|| Error::ArgumentOutOfRange(format!("{what} = 2^{e} * {m} overflows")))
}

/// Validates the parameters shared by every chain sum; returns `nu`.
pub(crate) fn check_general(params: &GeneralParams, strict: bool) -> Result<u32> {
    let GeneralParams { m, p, r, s, j } = *params;
    if m < 1 || r < 1 || s < 1 {
        return Err(Error::ArgumentOutOfRange(format!(
            "need m, r, s >= 1, got m = {m}, r = {r}, s = {s}"
        )));
    }
    let order = scaled(m, r, "order")?;
    if p < 0 || p > order {
        return Err(Error::DegreeOutOfRange { order, degree: p });
    }
    let argument = scaled(j, s, "argument")?;
    if j < 0 || argument > order {
        return Err(Error::ArgumentOutOfRange(format!(
            "argument 2^{s} * {j} outside 0..={order}"
        )));
    }
    let nu = r.min(s);
    if strict && p < 2 * (nu as i64 - 1) {
        return Err(Error::Precondition(format!(
            "p = {p} is below 2(nu - 1) = {}",
            2 * (nu as i64 - 1)
        )));
    }
    Ok(nu)
}

/// `K_p^{2^r m}(2^s j)` through the `nu`-fold chain sum, with full trace.
pub fn reduce_general_with(params: GeneralParams, options: ReductionOptions) -> Result<ReductionTrace> {
    let nu = check_general(&params, options.strict)?;
    let GeneralParams { m, r, s, j, .. } = params;
    let leaf_order = m << f_exponent(s as i64, r as i64);
    let leaf_argument = j << f_exponent(r as i64, s as i64);
    Ok(chain_trace(params, nu, options, |q| {
        krawtchouk_conv(leaf_order, q, leaf_argument)
    }))
}

pub fn reduce_general(m: i64, p: i64, r: u32, s: u32, j: i64, pruned: bool) -> Result<ReductionTrace> {
    reduce_general_with(
        GeneralParams { m, p, r, s, j },
        ReductionOptions {
            pruned,
            ..ReductionOptions::default()
        },
    )
}
