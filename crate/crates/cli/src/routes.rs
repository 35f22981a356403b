//! Route dispatch shared by `eval` and `bench`.

use krawkit::binomial::{double_binomial, pochhammer_binomial, stirling_binomial, SumForm, Variant};
use krawkit::central::{catalan, central, motzkin, CatalanRoute, CentralRoute};
use krawkit::krawtchouk::krawtchouk_conv;
use krawkit::reduction::{
    reduce_general_with, reduce_theorem1, GeneralParams, Parity, ReductionOptions, ReductionTrace,
};
use krawkit::{choose, krawtchouk_direct, Error, ExactInteger, Result};

pub const KRAW_ROUTES: [&str; 4] = ["direct", "conv", "thm1", "general"];
pub const BINOM_ROUTES: [&str; 4] = ["direct", "pochhammer", "stirling", "double"];

fn unknown(kind: &'static str, name: &str) -> Error {
    Error::Unknown {
        kind,
        name: name.to_string(),
    }
}

fn halve(v: i64, what: &str) -> Result<i64> {
    if v % 2 != 0 {
        return Err(Error::ArgumentOutOfRange(format!(
            "{what} must be even for this route, got {v}"
        )));
    }
    Ok(v / 2)
}

/// Splits `n = 2^r m` and `x = 2^s j` with the largest possible exponents,
/// unless they are given. A zero argument takes `s = r`.
pub fn general_params(n: i64, p: i64, x: i64, r: Option<u32>, s: Option<u32>) -> Result<GeneralParams> {
    if n < 1 || x < 0 {
        return Err(Error::ArgumentOutOfRange(format!(
            "need n >= 1 and x >= 0, got n = {n}, x = {x}"
        )));
    }
    let r = r.unwrap_or(n.trailing_zeros());
    let s = s.unwrap_or(if x == 0 { r } else { x.trailing_zeros() });
    let (m, j) = (n >> r.min(62), x >> s.min(62));
    if m << r != n || j << s != x {
        return Err(Error::ArgumentOutOfRange(format!(
            "n = {n} or x = {x} is not divisible by 2^{r} or 2^{s}"
        )));
    }
    Ok(GeneralParams { m, p, r, s, j })
}

pub fn kraw_trace(params: GeneralParams, term_cap: usize) -> Result<ReductionTrace> {
    reduce_general_with(
        params,
        ReductionOptions {
            term_cap,
            ..ReductionOptions::default()
        },
    )
}

pub fn kraw(route: &str, n: i64, p: i64, x: i64) -> Result<ExactInteger> {
    match route {
        "direct" => krawtchouk_direct(n, p, x),
        "conv" => {
            krawtchouk_direct(n, p, x)?;
            Ok(krawtchouk_conv(n, p, x))
        }
        "thm1" => reduce_theorem1(halve(n, "n")?, p, halve(x, "x")?),
        "general" => Ok(kraw_trace(general_params(n, p, x, None, None)?, 0)?.total),
        other => Err(unknown("kraw route", other)),
    }
}

pub fn binom(route: &str, n: i64, k: i64) -> Result<ExactInteger> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::ArgumentOutOfRange(format!(
            "need 0 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    let (m, q) = (n / 2, k / 2);
    match route {
        "direct" => Ok(choose(n, k)),
        "pochhammer" => {
            let variant = match (n % 2, k % 2) {
                (0, 0) => Variant::B1,
                (0, _) => Variant::B2,
                (_, 0) => Variant::B3,
                _ => Variant::B4,
            };
            pochhammer_binomial(m, q, variant)
        }
        "stirling" => stirling_binomial(halve(n, "n")?, halve(k, "k")?),
        "double" => {
            let parity = if k % 2 == 0 { Parity::Even } else { Parity::Odd };
            double_binomial(halve(n, "n")?, q, parity, SumForm::First)
        }
        other => Err(unknown("binom route", other)),
    }
}

pub fn catalan_by(route: &str, n: i64) -> Result<ExactInteger> {
    catalan(n, route.parse::<CatalanRoute>()?)
}

pub fn central_by(route: &str, m: i64) -> Result<ExactInteger> {
    central(m, route.parse::<CentralRoute>()?)
}

pub fn motzkin_by(route: &str, n: i64) -> Result<ExactInteger> {
    match route {
        "direct" => motzkin(n),
        other => Err(unknown("motzkin route", other)),
    }
}
