use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use krawkit::verify::{identities, identity, suite, IdentityReport, Summary, SweepSpec};

use crate::{Failure, Outcome, EXIT_UNEXPECTED};

#[derive(clap::Args)]
pub struct VerifyArgs {
    /// Built-in suite, or `all`.
    #[arg(long, conflicts_with = "identity")]
    suite: Option<String>,
    /// A single registered identity.
    #[arg(long)]
    identity: Option<String>,
    /// List the identities that would run instead of running them.
    #[arg(long)]
    list: bool,
    /// Upper bound for every parameter named `m`.
    #[arg(long)]
    m_max: Option<i64>,
    /// Inclusive range for one parameter, as `name=lo..hi` or `name=v`.
    #[arg(long = "set", value_parser = parse_range)]
    set: Vec<(String, (i64, i64))>,
    #[arg(long, requires = "identity")]
    route_a: Option<String>,
    #[arg(long, requires = "identity")]
    route_b: Option<String>,
    /// Write jsonl here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<(String, (i64, i64)), String> {
    let (name, range) = s.split_once('=').ok_or("expected name=lo..hi")?;
    let bound = |v: &str| v.trim().parse::<i64>().map_err(|e| format!("bad bound {v:?}: {e}"));
    let (lo, hi) = match range.split_once("..") {
        Some((lo, hi)) => (bound(lo)?, bound(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let v = bound(range)?;
            (v, v)
        }
    };
    Ok((name.trim().to_string(), (lo, hi)))
}

/// Sweeps selected by the arguments, with overrides applied.
fn specs(args: &VerifyArgs) -> Result<Vec<SweepSpec>, Failure> {
    let overrides: BTreeMap<String, (i64, i64)> = args.set.iter().cloned().collect();
    let mut specs = match (&args.identity, &args.suite) {
        (Some(id), _) => {
            let known = identity(id)?;
            let mut spec = SweepSpec::new(id.clone());
            spec.ranges = overrides.clone();
            spec.route_a = args.route_a.clone();
            spec.route_b = args.route_b.clone();
            if known.routes.is_none() && (spec.route_a.is_some() || spec.route_b.is_some()) {
                return Err(Failure::usage(format!("identity {id} takes no routes")));
            }
            vec![spec]
        }
        (None, Some(name)) => suite(name, &overrides)?,
        (None, None) if args.list => suite("all", &overrides)?,
        (None, None) => return Err(Failure::usage("give --suite or --identity")),
    };
    if let Some(hi) = args.m_max {
        for spec in &mut specs {
            if let Some(p) = identity(&spec.identity_id)?.params.iter().find(|p| p.name == "m") {
                let lo = spec.ranges.get("m").map_or(p.lo, |r| r.0);
                spec.ranges.insert("m".into(), (lo, hi));
            }
        }
    }
    Ok(specs)
}

fn list(specs: &[SweepSpec]) -> Outcome {
    let by_id: BTreeMap<&str, _> = identities().iter().map(|i| (i.id, i)).collect();
    let mut out = io::stdout().lock();
    for spec in specs {
        let i = by_id[spec.identity_id.as_str()];
        let params: Vec<String> = i
            .params
            .iter()
            .map(|p| format!("{}={}..{}", p.name, p.lo, p.hi))
            .collect();
        writeln!(
            out,
            "{}\t{}\t{}\texpect {:?}\t{}",
            i.id,
            i.suites.join(","),
            params.join(" "),
            i.expected,
            i.summary
        )
        .map_err(Failure::internal)?;
    }
    writeln!(out, "{} identities", specs.len()).map_err(Failure::internal)
}

fn emit(sink: &mut dyn Write, reports: &[IdentityReport]) -> io::Result<()> {
    for r in reports {
        writeln!(sink, "{}", r.to_json_line())?;
    }
    Ok(())
}

pub fn run(args: VerifyArgs) -> Outcome {
    let specs = specs(&args)?;
    if args.list {
        return list(&specs);
    }
    for spec in &specs {
        spec.resolve()?;
    }
    let mut sink: Box<dyn Write> = match &args.output {
        Some(path) => {
            Box::new(BufWriter::new(File::create(path).map_err(|e| {
                Failure::usage(format!("cannot write {}: {e}", path.display()))
            })?))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let mut total = Summary::default();
    for spec in &specs {
        let reports = spec.run()?;
        emit(&mut sink, &reports).map_err(Failure::internal)?;
        let s = Summary::of(&reports);
        eprintln!(
            "{:<40} {:>8} points {:>8} pass {:>6} fail {:>6} skipped {:>4} unexpected",
            spec.identity_id, s.total, s.pass, s.fail, s.skipped, s.unexpected
        );
        total.total += s.total;
        total.pass += s.pass;
        total.fail += s.fail;
        total.skipped += s.skipped;
        total.unexpected += s.unexpected;
    }
    sink.flush().map_err(Failure::internal)?;
    eprintln!(
        "total: {} points, {} pass, {} fail, {} skipped, {} unexpected",
        total.total, total.pass, total.fail, total.skipped, total.unexpected
    );
    if total.unexpected > 0 {
        Err(Failure {
            code: EXIT_UNEXPECTED,
            message: format!("{} unexpected results", total.unexpected),
        })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::parse_range;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("m=1..5"), Ok(("m".into(), (1, 5))));
        assert_eq!(parse_range("q=3"), Ok(("q".into(), (3, 3))));
        assert_eq!(parse_range("n=-2..=4"), Ok(("n".into(), (-2, 4))));
        assert!(parse_range("m").is_err());
        assert!(parse_range("m=a..b").is_err());
    }
}
