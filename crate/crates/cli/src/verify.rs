//! The `verify` subcommand: cross-method agreement, the five-point
//! functional sweep, weight-table totals and the published series.

use std::fmt;
use std::io::{self, Write};

use invcount_core::invariant_counts::{self, poincare_series, CountError};
use invcount_core::sl3_reps::e_lambda;
use invcount_core::weight_count::{weight_table_work, weight_table_within};
use invcount_core::{BigUint, Form, HighestWeight, Method, WorkBudget};

use crate::reference;

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub d_max: u32,
    pub n_max: u32,
    pub lambda_max: u32,
    pub work_limit: u64,
}

type Series = Vec<(u32, BigUint)>;

/// The functions under test; swapped out to check that failures are caught.
#[derive(Clone, Copy)]
pub struct Backend {
    pub ternary_series: fn(Method, u32, u32, &mut WorkBudget) -> Result<Series, CountError>,
    pub peel: fn(u32, u32, &mut WorkBudget) -> Result<BigUint, CountError>,
    pub gamma_omega: fn(u32, u32) -> BigUint,
    pub gamma_qbinom: fn(u32, u32) -> BigUint,
    pub e_lambda: fn(HighestWeight) -> i64,
}

impl Default for Backend {
    fn default() -> Self {
        Self {
            ternary_series: |m, d, max, b| poincare_series(Form::Ternary, d, max, m, b),
            peel: invariant_counts::nu_ternary_peel,
            gamma_omega: invariant_counts::gamma_binary,
            gamma_qbinom: invariant_counts::gamma_binary_qbinom,
            e_lambda,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}", self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn write(&self, out: &mut dyn Write) -> io::Result<()> {
        for c in &self.checks {
            writeln!(out, "{c}")?;
        }
        writeln!(out, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }

    fn push(&mut self, name: String, outcome: Result<String, String>) {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(CheckResult { name, passed, detail });
    }
}

pub fn run_checks(cfg: &VerifyConfig) -> Report {
    run_checks_with(cfg, &Backend::default())
}

pub fn run_checks_with(cfg: &VerifyConfig, be: &Backend) -> Report {
    let mut report = Report::default();
    let VerifyConfig {
        d_max,
        n_max,
        lambda_max,
        work_limit,
    } = *cfg;

    report.push(format!("trivial functional sweep (m, k <= {lambda_max})"), {
        let mut bad = None;
        'outer: for m in 0..=lambda_max {
            for k in 0..=lambda_max {
                let got = (be.e_lambda)(HighestWeight::new(m, k));
                let want = i64::from((m, k) == (0, 0));
                if got != want {
                    bad = Some(format!("E({m},{k}) = {got}, expected {want}"));
                    break 'outer;
                }
            }
        }
        bad.map_or(Ok(String::new()), Err)
    });

    report.push(format!("binary omega = qbinom (d <= {d_max}, n <= {n_max})"), {
        let mut bad = None;
        'outer: for d in 0..=d_max {
            for n in 0..=n_max {
                let (a, b) = ((be.gamma_omega)(d, n), (be.gamma_qbinom)(d, n));
                if a != b {
                    bad = Some(format!("d={d} n={n}: omega {a}, qbinom {b}"));
                    break 'outer;
                }
            }
        }
        bad.map_or(Ok(String::new()), Err)
    });

    let mut counting = Vec::new();
    report.push(format!("ternary counting = genfunc = pqbinom (d <= {d_max}, n <= {n_max})"), {
        let mut bad = None;
        'outer: for d in 1..=d_max {
            let mut runs = Vec::new();
            for m in [Method::Counting, Method::Genfunc, Method::Pqbinom] {
                match (be.ternary_series)(m, d, n_max, &mut WorkBudget::new(work_limit)) {
                    Ok(s) => runs.push((m, s)),
                    Err(e) => {
                        bad = Some(format!("d={d} {m}: {e}"));
                        break 'outer;
                    }
                }
            }
            let (_, base) = &runs[0];
            for (m, s) in &runs[1..] {
                if let Some(((n, a), (_, b))) = base.iter().zip(s).find(|(x, y)| x != y) {
                    bad = Some(format!("d={d} n={n}: counting {a}, {m} {b}"));
                    break 'outer;
                }
            }
            counting.push((d, runs.swap_remove(0).1));
        }
        bad.map_or(Ok(String::new()), Err)
    });

    report.push(format!("ternary peel = counting (d <= {d_max}, n <= {n_max})"), {
        let (mut bad, mut skipped, mut ran) = (None, 0u32, 0u32);
        'outer: for (d, series) in &counting {
            for (n, want) in series {
                match (be.peel)(*d, *n, &mut WorkBudget::new(work_limit)) {
                    Ok(got) if got == *want => ran += 1,
                    Ok(got) => {
                        bad = Some(format!("d={d} n={n}: peel {got}, counting {want}"));
                        break 'outer;
                    }
                    Err(CountError::WorkLimit(_)) => skipped += 1,
                    Err(e) => {
                        bad = Some(format!("d={d} n={n}: {e}"));
                        break 'outer;
                    }
                }
            }
        }
        bad.map_or(Ok(format!("{ran} compared, {skipped} over work limit")), Err)
    });

    report.push(format!("weight-table totals (d <= {d_max}, n <= {n_max})"), {
        let mut bad = None;
        let mut skipped = 0u32;
        'outer: for d in 0..=d_max {
            let vars = u64::from((d + 1) * (d + 2) / 2);
            for n in 0..=n_max {
                if weight_table_work(d, n) > work_limit {
                    skipped += 1;
                    continue;
                }
                let table = weight_table_within(d, n, &mut WorkBudget::unlimited()).expect("unlimited budget");
                let want = multiset(vars, u64::from(n));
                if table.total() != want {
                    bad = Some(format!("d={d} n={n}: total {}, expected {want}", table.total()));
                    break 'outer;
                }
            }
        }
        bad.map_or(Ok(format!("{skipped} over work limit")), Err)
    });

    for published in reference::TERNARY_SERIES.iter().filter(|s| s.d <= d_max) {
        let top = published.max_degree.min(n_max);
        let Some((_, series)) = counting.iter().find(|(d, _)| *d == published.d) else {
            continue;
        };
        report.push(format!("published series d={} (n <= {top})", published.d), {
            series
                .iter()
                .filter(|(n, _)| *n <= top)
                .find_map(|(n, got)| {
                    let want = BigUint::from(published.expected(*n).expect("within published range"));
                    (*got != want).then(|| format!("n={n}: got {got}, published {want}"))
                })
                .map_or(Ok(String::new()), Err)
        });
    }

    report
}

/// `C(n + vars − 1, n)`.
fn multiset(vars: u64, n: u64) -> BigUint {
    if vars == 0 {
        return BigUint::from(u64::from(n == 0));
    }
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * (vars - 1 + k) / k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            d_max: 3,
            n_max: 6,
            lambda_max: 6,
            work_limit: invcount_core::DEFAULT_WORK_LIMIT,
        }
    }

    #[test]
    fn genuine_build_passes() {
        let r = run_checks(&small());
        assert!(r.passed(), "{:?}", r.first_failure());
    }

    #[test]
    fn corrupted_genfunc_is_caught() {
        let be = Backend {
            ternary_series: |m, d, max, b| {
                let mut s = poincare_series(Form::Ternary, d, max, m, b)?;
                if m == Method::Genfunc && d == 3 {
                    s[4].1 += 1u32;
                }
                Ok(s)
            },
            ..Backend::default()
        };
        let r = run_checks_with(&small(), &be);
        let fail = r.first_failure().expect("mutation must be detected");
        assert_eq!(fail.detail, "d=3 n=4: counting 1, genfunc 2");
    }

    #[test]
    fn corrupted_functional_is_caught() {
        let be = Backend {
            e_lambda: |l| e_lambda(l) + i64::from(l == HighestWeight::new(2, 5)),
            ..Backend::default()
        };
        let r = run_checks_with(&small(), &be);
        assert_eq!(r.first_failure().unwrap().detail, "E(2,5) = 1, expected 0");
    }

    #[test]
    fn multiset_coefficients() {
        assert_eq!(multiset(10, 2), BigUint::from(55u32));
        assert_eq!(multiset(3, 2), BigUint::from(6u32));
        assert_eq!(multiset(1, 7), BigUint::from(1u32));
    }
}
