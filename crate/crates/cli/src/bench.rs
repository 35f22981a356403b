use std::hint::black_box;
use std::time::Instant;

use clap::ValueEnum;
use krawkit::central::{CatalanRoute, CentralRoute};
use krawkit::{ExactInteger, Result};

use crate::routes;
use crate::{Failure, Outcome};

#[derive(Clone, Copy, ValueEnum)]
pub enum BenchQuantity {
    Kraw,
    Catalan,
    Central,
    Binom,
}

#[derive(clap::Args)]
pub struct BenchArgs {
    quantity: BenchQuantity,
    /// Two routes, as `a-vs-b`.
    pair: String,
    /// Largest index timed.
    #[arg(long = "n", visible_alias = "m", allow_negative_numbers = true)]
    max: i64,
    #[arg(long, default_value_t = 0)]
    min: i64,
    #[arg(long, default_value_t = 1)]
    step: i64,
}

/// Every evaluation point behind one row of the table.
fn points(quantity: BenchQuantity, index: i64) -> Vec<[i64; 3]> {
    match quantity {
        BenchQuantity::Kraw => (0..=2 * index)
            .flat_map(|p| (0..=index).map(move |j| [2 * index, p, 2 * j]))
            .collect(),
        BenchQuantity::Binom => (0..=index).map(|q| [2 * index, 2 * q, 0]).collect(),
        BenchQuantity::Catalan | BenchQuantity::Central => vec![[index, 0, 0]],
    }
}

fn evaluate(quantity: BenchQuantity, route: &str, pt: [i64; 3]) -> Result<ExactInteger> {
    match quantity {
        BenchQuantity::Kraw => routes::kraw(route, pt[0], pt[1], pt[2]),
        BenchQuantity::Binom => routes::binom(route, pt[0], pt[1]),
        BenchQuantity::Catalan => routes::catalan_by(route, pt[0]),
        BenchQuantity::Central => routes::central_by(route, pt[0]),
    }
}

fn check_route(quantity: BenchQuantity, route: &str) -> std::result::Result<(), Failure> {
    let known = match quantity {
        BenchQuantity::Kraw => routes::KRAW_ROUTES.contains(&route),
        BenchQuantity::Binom => routes::BINOM_ROUTES.contains(&route),
        BenchQuantity::Catalan => route.parse::<CatalanRoute>().is_ok(),
        BenchQuantity::Central => route.parse::<CentralRoute>().is_ok(),
    };
    if known {
        Ok(())
    } else {
        Err(Failure::usage(format!("unknown route {route:?}")))
    }
}

/// Nanoseconds per point, or `None` when the route does not reach the index.
fn time(
    quantity: BenchQuantity,
    route: &str,
    pts: &[[i64; 3]],
) -> std::result::Result<Option<(f64, Vec<ExactInteger>)>, Failure> {
    let start = Instant::now();
    let mut values = Vec::with_capacity(pts.len());
    for &pt in pts {
        match evaluate(quantity, route, pt) {
            Ok(v) => values.push(black_box(v)),
            Err(e) if e.is_internal() => return Err(e.into()),
            Err(_) => return Ok(None),
        }
    }
    let nanos = start.elapsed().as_nanos() as f64 / pts.len() as f64;
    Ok(Some((nanos, values)))
}

pub fn run(args: BenchArgs) -> Outcome {
    let (a, b) = args
        .pair
        .split_once("-vs-")
        .ok_or_else(|| Failure::usage(format!("route pair must look like a-vs-b, got {:?}", args.pair)))?;
    check_route(args.quantity, a)?;
    check_route(args.quantity, b)?;
    if args.min < 0 || args.max < args.min || args.step < 1 {
        return Err(Failure::usage(format!(
            "bad range {}..={} step {}",
            args.min, args.max, args.step
        )));
    }
    println!("index,points,{a}_ns_per_point,{b}_ns_per_point");
    let fmt = |t: &Option<(f64, Vec<ExactInteger>)>| t.as_ref().map_or(String::new(), |(ns, _)| format!("{ns:.0}"));
    for index in (args.min..=args.max).step_by(args.step as usize) {
        let pts = points(args.quantity, index);
        let ta = time(args.quantity, a, &pts)?;
        let tb = time(args.quantity, b, &pts)?;
        if let (Some((_, va)), Some((_, vb))) = (&ta, &tb) {
            if va != vb {
                return Err(Failure::internal(format!(
                    "routes {a} and {b} disagree at index {index}"
                )));
            }
        }
        println!("{index},{},{},{}", pts.len(), fmt(&ta), fmt(&tb));
    }
    Ok(())
}
