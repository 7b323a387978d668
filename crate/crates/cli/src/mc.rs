use serde_json::{json, Value};

use levy_shuffle::brownian_sim::{
    estimate_charfn, estimate_expected_signature, estimate_moments, McConfig, McEstimate, DEFAULT_CHARFN_STEPS,
    DEFAULT_STEPS,
};
use levy_shuffle::moments::TimeScale;

use crate::args::{McArgs, McKind};
use crate::output::{emit, Format, Table};
use crate::{Failure, Limits};

fn reject(flag: &str, kind: &str) -> Failure {
    Failure::Usage(format!("{flag} does not apply to --kind {kind}"))
}

fn validate(args: &McArgs, limits: &Limits) -> Result<(), Failure> {
    if args.samples > limits.max_samples {
        return Err(Failure::Usage(format!(
            "--samples {} exceeds the limit {}; raise it with --max-samples",
            args.samples, limits.max_samples
        )));
    }
    match args.kind {
        McKind::Moments => {
            if args.z.is_some() {
                return Err(reject("--z", "moments"));
            }
            if args.level.is_some() {
                return Err(reject("--level", "moments"));
            }
            if let Some(n) = args.n.iter().flatten().find(|&&n| n > limits.max_n) {
                return Err(Failure::Usage(format!("moment order {n} exceeds the limit {}", limits.max_n)));
            }
        }
        McKind::Charfn => {
            for (given, flag) in [
                (args.n.is_some(), "--n"),
                (args.level.is_some(), "--level"),
                (args.time.is_some(), "--T (charfn runs at T = 2pi)"),
            ] {
                if given {
                    return Err(reject(flag, "charfn"));
                }
            }
        }
        McKind::Signature => {
            if args.n.is_some() {
                return Err(reject("--n", "signature"));
            }
            if args.z.is_some() {
                return Err(reject("--z", "signature"));
            }
            let level = args.level.unwrap_or(2);
            if level > limits.max_level {
                return Err(Failure::Usage(format!(
                    "--level {level} exceeds the limit {}; raise it with --max-level",
                    limits.max_level
                )));
            }
        }
    }
    Ok(())
}

fn fmt_option(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn rows(estimates: &[McEstimate], format: Format) -> (Table, Value) {
    let mut table = Table::new([
        "target",
        "estimate",
        "std_error",
        "samples",
        "steps",
        "seed",
        "workers",
        "reference_value",
        "sigma_distance",
    ]);
    let mut json_rows = Vec::new();
    for e in estimates {
        let (estimate, std_error, sigma) = if format == Format::Table {
            (
                format!("{:.6}", e.estimate),
                format!("{:.6}", e.std_error),
                e.sigma_distance().map(|s| format!("{s:.2}")).unwrap_or_default(),
            )
        } else {
            (e.estimate.to_string(), e.std_error.to_string(), fmt_option(e.sigma_distance()))
        };
        table.push(vec![
            e.target.clone(),
            estimate,
            std_error,
            e.samples.to_string(),
            e.steps.to_string(),
            e.seed.to_string(),
            e.workers.to_string(),
            fmt_option(e.reference_value),
            sigma,
        ]);
        let mut row = json!(e);
        row["sigma_distance"] = json!(e.sigma_distance());
        json_rows.push(row);
    }
    (table, Value::Array(json_rows))
}

pub fn run(args: &McArgs, limits: &Limits, format: Format) -> Result<(), Failure> {
    validate(args, limits)?;
    let default_steps = match args.kind {
        McKind::Charfn => DEFAULT_CHARFN_STEPS,
        _ => DEFAULT_STEPS,
    };
    let workers = args
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let time = match args.kind {
        McKind::Charfn => "2pi".parse().expect("valid time"),
        _ => args.time.clone().unwrap_or_else(TimeScale::unit),
    };
    let config = McConfig::new(args.samples, args.steps.unwrap_or(default_steps), args.seed)
        .with_time(time.to_f64())
        .with_workers(workers)
        .with_antithetic(args.antithetic);
    eprintln!("mc config: {}", json!(config));

    let estimates: Vec<McEstimate> = match args.kind {
        McKind::Moments => estimate_moments(args.n.as_deref().unwrap_or(&[2]), &config)?,
        McKind::Charfn => estimate_charfn(args.z.as_deref().unwrap_or(&[0.25]), &config)?
            .into_iter()
            .flat_map(|c| [c.real, c.imaginary])
            .collect(),
        McKind::Signature => {
            let est = estimate_expected_signature(args.level.unwrap_or(2), &config)?;
            if format == Format::Table && est.level >= 2 {
                let mean = est.mean();
                let m = mean.coefficients(2);
                println!("level-2 mean:\n  [{:.6}, {:.6}]\n  [{:.6}, {:.6}]\n", m[0], m[1], m[2], m[3]);
            }
            est.entries
        }
    };
    let (table, body) = rows(&estimates, format);
    emit(format, &table, &body);
    Ok(())
}
