//! The `bench` subcommand: wall time per ternary method and degree.

use std::io::{self, Write};
use std::time::{Duration, Instant};

use invcount_core::invariant_counts::{count, CountError};
use invcount_core::{Form, Method, WorkBudget};

use crate::CliError;

/// Fastest of `repeat` runs, or `None` when the method hits the work limit.
pub fn time_method(method: Method, d: u32, n: u32, repeat: u32, work_limit: u64) -> Result<Option<Duration>, CliError> {
    let mut best: Option<Duration> = None;
    for _ in 0..repeat {
        let start = Instant::now();
        match count(Form::Ternary, method, d, n, &mut WorkBudget::new(work_limit)) {
            Ok(_) => {}
            Err(CountError::WorkLimit(_)) => return Ok(None),
            Err(e) => return Err(e.into()),
        }
        let took = start.elapsed();
        best = Some(best.map_or(took, |b| b.min(took)));
    }
    Ok(best)
}

/// Writes `method,n,millis` rows for every degree `0..=max` and every ternary method.
pub fn run(d: u32, max: u32, repeat: u32, work_limit: u64, out: &mut dyn Write) -> Result<(), CliError> {
    writeln!(out, "method,n,millis")?;
    for n in 0..=max {
        for method in Method::TERNARY {
            let cell = match time_method(method, d, n, repeat, work_limit)? {
                Some(t) => format!("{:.3}", t.as_secs_f64() * 1e3),
                None => "NA".to_owned(),
            };
            writeln!(out, "{method},{n},{cell}")?;
        }
    }
    out.flush().map_err(|e: io::Error| e.into())
}
