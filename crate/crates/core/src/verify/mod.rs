//! Identity sweeps: every registered identity is evaluated on a finite box
//! of parameters against an independent exact oracle, producing one
//! [`IdentityReport`] per point in a canonical order.

mod registry;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub use registry::{identities, identity, SUITES};

/// Largest number of parameter points a single sweep may enumerate.
pub const MAX_POINTS: u64 = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedPrecondition,
}

/// What a sweep expects of an identity. Identities transcribing a printed
/// form that is known to be wrong are registered as `Fail`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityReport {
    pub identity_id: String,
    pub parameters: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub routes: Option<[String; 2]>,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
    pub expected: Expectation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl IdentityReport {
    /// A pass where a failure was registered, or the reverse. Skipped points
    /// are never unexpected.
    pub fn is_unexpected(&self) -> bool {
        matches!(
            (self.status, self.expected),
            (Status::Pass, Expectation::Fail) | (Status::Fail, Expectation::Pass)
        )
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

/// The outcome of evaluating one identity at one point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evaluation {
    Compare { lhs: String, rhs: String },
    Skip(String),
}

impl Evaluation {
    pub fn compare(lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Evaluation::Compare {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Param {
    pub name: &'static str,
    pub lo: i64,
    pub hi: i64,
}

pub(crate) type EvalFn = fn(&[i64], Option<(&str, &str)>) -> Result<Evaluation>;
pub(crate) type LimitFn = fn(usize, &[i64]) -> i64;
pub(crate) type DomainFn = fn(&[i64]) -> bool;

/// Route selectors for identities that compare two evaluation routes.
#[derive(Debug, Clone, Copy)]
pub struct RouteSet {
    pub names: &'static [&'static str],
    /// The reference route every other route is compared against by default.
    pub reference: &'static str,
}

pub struct Identity {
    pub id: &'static str,
    pub suites: &'static [&'static str],
    pub summary: &'static str,
    pub params: Vec<Param>,
    pub expected: Expectation,
    pub routes: Option<RouteSet>,
    pub(crate) limit: LimitFn,
    pub(crate) domain: DomainFn,
    pub(crate) eval: EvalFn,
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity")
            .field("id", &self.id)
            .field("suites", &self.suites)
            .field("params", &self.params)
            .field("expected", &self.expected)
            .finish()
    }
}

impl Identity {
    pub fn in_suite(&self, suite: &str) -> bool {
        suite == "all" || self.suites.contains(&suite)
    }

    /// Evaluates a single point, mapping errors onto report statuses.
    pub fn evaluate(&self, values: &[i64], routes: Option<(&str, &str)>) -> IdentityReport {
        let parameters = self
            .params
            .iter()
            .zip(values)
            .map(|(p, v)| (p.name.to_string(), *v))
            .collect();
        let (lhs, rhs, status, note) = match (self.eval)(values, routes) {
            Ok(Evaluation::Compare { lhs, rhs }) => {
                let status = if lhs == rhs { Status::Pass } else { Status::Fail };
                (lhs, rhs, status, None)
            }
            Ok(Evaluation::Skip(reason)) => (String::new(), String::new(), Status::SkippedPrecondition, Some(reason)),
            Err(Error::IdentityViolation { identity, lhs, rhs }) => (
                lhs,
                rhs,
                Status::Fail,
                Some(format!("internal check failed: {identity}")),
            ),
            Err(e) if e.is_internal() => (String::new(), String::new(), Status::Fail, Some(e.to_string())),
            Err(e) => (
                String::new(),
                String::new(),
                Status::SkippedPrecondition,
                Some(e.to_string()),
            ),
        };
        IdentityReport {
            identity_id: self.id.to_string(),
            parameters,
            routes: routes.map(|(a, b)| [a.to_string(), b.to_string()]),
            lhs,
            rhs,
            status,
            expected: self.expected,
            note,
        }
    }
}

/// An identity and the parameter box to sweep it over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepSpec {
    pub identity_id: String,
    /// Inclusive bounds per parameter; parameters not listed use the
    /// registered defaults.
    pub ranges: BTreeMap<String, (i64, i64)>,
    pub route_a: Option<String>,
    pub route_b: Option<String>,
}

impl SweepSpec {
    pub fn new(identity_id: impl Into<String>) -> Self {
        SweepSpec {
            identity_id: identity_id.into(),
            ranges: BTreeMap::new(),
            route_a: None,
            route_b: None,
        }
    }

    pub fn with_range(mut self, name: &str, lo: i64, hi: i64) -> Self {
        self.ranges.insert(name.to_string(), (lo, hi));
        self
    }

    pub fn with_routes(mut self, a: &str, b: &str) -> Self {
        self.route_a = Some(a.to_string());
        self.route_b = Some(b.to_string());
        self
    }

    /// Validates the sweep and resolves its identity and effective bounds.
    pub fn resolve(&self) -> Result<(&'static Identity, Vec<(i64, i64)>)> {
        let identity = identity(&self.identity_id)?;
        for name in self.ranges.keys() {
            if !identity.params.iter().any(|p| p.name == name) {
                return Err(Error::ArgumentOutOfRange(format!(
                    "identity {} has no parameter {name}",
                    identity.id
                )));
            }
        }
        let mut bounds = Vec::with_capacity(identity.params.len());
        for p in &identity.params {
            let (lo, hi) = self.ranges.get(p.name).copied().unwrap_or((p.lo, p.hi));
            if lo > hi {
                return Err(Error::ArgumentOutOfRange(format!(
                    "empty range {lo}..={hi} for {}",
                    p.name
                )));
            }
            bounds.push((lo, hi));
        }
        let given = [&self.route_a, &self.route_b];
        match (identity.routes, given) {
            (None, [None, None]) => {}
            (None, _) => {
                return Err(Error::ArgumentOutOfRange(format!(
                    "identity {} takes no routes",
                    identity.id
                )));
            }
            (Some(set), _) => {
                for r in given.into_iter().flatten() {
                    if !set.names.contains(&r.as_str()) {
                        return Err(Error::Unknown {
                            kind: "route",
                            name: r.clone(),
                        });
                    }
                }
            }
        }
        Ok((identity, bounds))
    }

    /// Route pairs to evaluate at every point.
    fn route_pairs(&self, identity: &Identity) -> Vec<Option<(String, String)>> {
        match identity.routes {
            None => vec![None],
            Some(set) => {
                let a = self.route_a.clone().unwrap_or_else(|| set.reference.to_string());
                match &self.route_b {
                    Some(b) => vec![Some((a, b.clone()))],
                    None => set
                        .names
                        .iter()
                        .filter(|n| **n != a)
                        .map(|n| Some((a.clone(), n.to_string())))
                        .collect(),
                }
            }
        }
    }

    /// Parameter points in lexicographic order of the declared parameters.
    pub fn points(&self) -> Result<Vec<Vec<i64>>> {
        let (identity, bounds) = self.resolve()?;
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(bounds.len());
        if !enumerate(identity, &bounds, &mut current, &mut out) {
            return Err(Error::ArgumentOutOfRange(format!(
                "sweep of {} exceeds {MAX_POINTS} points",
                identity.id
            )));
        }
        Ok(out)
    }

    /// Evaluates every point, in parallel, returning reports in canonical
    /// order.
    pub fn run(&self) -> Result<Vec<IdentityReport>> {
        let (identity, _) = self.resolve()?;
        let points = self.points()?;
        let pairs = self.route_pairs(identity);
        let jobs: Vec<_> = points.iter().flat_map(|p| pairs.iter().map(move |r| (p, r))).collect();
        Ok(jobs
            .par_iter()
            .map(|(values, routes)| identity.evaluate(values, routes.as_ref().map(|(a, b)| (a.as_str(), b.as_str()))))
            .collect())
    }
}

/// Depth-first walk of the box, clipped by the identity's own limits.
/// Returns false once the point budget is exhausted.
fn enumerate(identity: &Identity, bounds: &[(i64, i64)], current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) -> bool {
    let idx = current.len();
    if idx == bounds.len() {
        if (identity.domain)(current) {
            if out.len() as u64 >= MAX_POINTS {
                return false;
            }
            out.push(current.clone());
        }
        return true;
    }
    let (lo, hi) = bounds[idx];
    let hi = hi.min((identity.limit)(idx, current));
    let mut v = lo;
    while v <= hi {
        current.push(v);
        let ok = enumerate(identity, bounds, current, out);
        current.pop();
        if !ok {
            return false;
        }
        v += 1;
    }
    true
}

/// Counts of a finished sweep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub unexpected: usize,
}

impl Summary {
    pub fn of(reports: &[IdentityReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            s.total += 1;
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::SkippedPrecondition => s.skipped += 1,
            }
            if r.is_unexpected() {
                s.unexpected += 1;
            }
        }
        s
    }
}

/// The sweeps that make up a named suite, with default ranges and any
/// overrides applied to parameters of the same name.
pub fn suite(name: &str, overrides: &BTreeMap<String, (i64, i64)>) -> Result<Vec<SweepSpec>> {
    if name != "all" && !SUITES.contains(&name) {
        return Err(Error::Unknown {
            kind: "suite",
            name: name.to_string(),
        });
    }
    Ok(identities()
        .iter()
        .filter(|i| i.in_suite(name))
        .map(|i| {
            let mut spec = SweepSpec::new(i.id);
            for p in &i.params {
                if let Some(r) = overrides.get(p.name) {
                    spec.ranges.insert(p.name.to_string(), *r);
                }
            }
            spec
        })
        .collect())
}

/// Runs a whole suite; reports are grouped by identity in registry order.
pub fn run_suite(name: &str, overrides: &BTreeMap<String, (i64, i64)>) -> Result<Vec<IdentityReport>> {
    let mut all = Vec::new();
    for spec in suite(name, overrides)? {
        all.extend(spec.run()?);
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_suites_known() {
        let mut seen = std::collections::HashSet::new();
        for i in identities() {
            assert!(seen.insert(i.id), "duplicate id {}", i.id);
            assert!(!i.suites.is_empty(), "{} has no suite", i.id);
            for s in i.suites {
                assert!(SUITES.contains(s), "{} names unknown suite {s}", i.id);
            }
        }
        for s in SUITES {
            assert!(identities().iter().any(|i| i.in_suite(s)), "suite {s} is empty");
        }
    }

    #[test]
    fn canonical_order_and_determinism() {
        let spec = SweepSpec::new("thm-2.2").with_range("m", 0, 3);
        let a = spec.run().unwrap();
        let b = spec.run().unwrap();
        assert_eq!(a, b);
        let pts: Vec<_> = a
            .iter()
            .map(|r| (r.parameters["m"], r.parameters["p"], r.parameters["j"]))
            .collect();
        let mut sorted = pts.clone();
        sorted.sort();
        assert_eq!(pts, sorted);
        assert!(a.iter().all(|r| r.status == Status::Pass));
    }

    #[test]
    fn bad_specs() {
        assert!(SweepSpec::new("no-such").run().is_err());
        assert!(SweepSpec::new("thm-2.2").with_range("zz", 0, 1).run().is_err());
        assert!(SweepSpec::new("thm-2.2").with_range("m", 3, 1).run().is_err());
        assert!(SweepSpec::new("thm-2.2").with_routes("direct", "sum").run().is_err());
        assert!(SweepSpec::new("central-routes")
            .with_routes("direct", "nope")
            .run()
            .is_err());
        assert!(suite("nope", &BTreeMap::new()).is_err());
    }

    #[test]
    fn route_pairs_default_to_reference() {
        let r = SweepSpec::new("central-routes").with_range("m", 4, 4).run().unwrap();
        assert_eq!(r.len(), 6);
        assert!(r.iter().all(|x| x.routes.as_ref().unwrap()[0] == "direct"));
        let r = SweepSpec::new("central-routes")
            .with_range("m", 4, 4)
            .with_routes("alt", "half")
            .run()
            .unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].status, Status::Pass);
    }

    #[test]
    fn json_shape() {
        let r = &SweepSpec::new("cor-2.5")
            .with_range("m", 4, 4)
            .with_range("j", 3, 3)
            .run()
            .unwrap()[0];
        let v: serde_json::Value = serde_json::from_str(&r.to_json_line()).unwrap();
        assert_eq!(v["identityId"], "cor-2.5");
        assert_eq!(v["parameters"]["m"], 4);
        assert_eq!(v["status"], "pass");
        assert_eq!(v["lhs"], "0");
    }
}
