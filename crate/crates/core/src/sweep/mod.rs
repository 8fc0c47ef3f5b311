//! Parameter-grid sweeps over the identity registry.
//!
//! Cells are evaluated on a rayon pool and sorted afterwards, so the emitted
//! report does not depend on the number of threads.

use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::exact::Rat;
use crate::identities::{alpha_samples, eval_identity, lookup, Param, ParamSet, VerificationReport};

/// Values to try for each parameter. Only the parameters an identity uses
/// are expanded.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Grid {
    pub m: Vec<i64>,
    pub n: Vec<i64>,
    pub r: Vec<i64>,
    pub p: Vec<i64>,
    pub q: Vec<i64>,
    pub alpha: Vec<Rat>,
    pub x: Vec<Rat>,
}

impl Grid {
    fn values(&self, param: Param) -> Vec<Rat> {
        let ints = |v: &[i64]| v.iter().map(|&k| Rat::from(k)).collect();
        match param {
            Param::M => ints(&self.m),
            Param::N => ints(&self.n),
            Param::R => ints(&self.r),
            Param::P => ints(&self.p),
            Param::Q => ints(&self.q),
            Param::Alpha => self.alpha.clone(),
            Param::X => self.x.clone(),
        }
    }

    /// Cartesian product over `params`, in parameter order.
    pub fn cells(&self, params: &[Param]) -> Vec<ParamSet> {
        let mut cells = vec![ParamSet::new()];
        for &p in params {
            let values = self.values(p);
            cells = cells
                .into_iter()
                .flat_map(|cell| {
                    values.iter().map(move |v| {
                        let mut c = cell.clone();
                        c.set(p, v.clone()).expect("grid values match parameter kinds");
                        c
                    })
                })
                .collect();
        }
        cells
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepJob {
    pub id: String,
    pub grid: Grid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub jobs: Vec<SweepJob>,
    pub threads: usize,
    pub format: OutputFormat,
    pub timings: bool,
}

impl SweepConfig {
    /// The same grid for every id.
    pub fn uniform(ids: &[&str], grid: Grid) -> Self {
        SweepConfig {
            jobs: ids
                .iter()
                .map(|id| SweepJob {
                    id: id.to_string(),
                    grid: grid.clone(),
                })
                .collect(),
            threads: 1,
            format: OutputFormat::Text,
            timings: false,
        }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }
}

fn range(lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi).collect()
}

/// The CI sweep: every registry-level acceptance grid.
pub fn default_plan() -> SweepConfig {
    let alphas = alpha_samples();
    let xs = vec![Rat::from(1), Rat::from(2), crate::exact::rat(5, 2), Rat::from(7)];
    let mn = |lo, hi| Grid {
        m: range(lo, hi),
        n: range(lo, hi),
        ..Grid::default()
    };
    let mut jobs = Vec::new();
    let mut add = |ids: &[&str], grid: Grid| {
        for id in ids {
            jobs.push(SweepJob {
                id: id.to_string(),
                grid: grid.clone(),
            });
        }
    };
    add(
        &["thm1", "kxyalpha", "telescope"],
        Grid {
            alpha: alphas.clone(),
            ..mn(0, 30)
        },
    );
    add(&["S3"], mn(1, 40));
    add(&["S4"], mn(2, 40));
    add(
        &["thm2"],
        Grid {
            r: range(0, 5),
            alpha: alphas.clone(),
            ..mn(0, 20)
        },
    );
    add(
        &["thm1-3f2"],
        Grid {
            alpha: alphas,
            ..mn(1, 12)
        },
    );
    let pq = Grid {
        p: range(1, 4),
        q: range(1, 4),
        r: range(1, 4),
        ..mn(1, 10)
    };
    add(
        &[
            "cor1",
            "cor1-exchanged",
            "chu-full",
            "chu-negative",
            "chu-reflected",
            "cor1-pochhammer",
            "pqrsum",
            "pm-r-1",
            "pm-r-2",
            "pm-r-3",
            "cor4",
            "cor5",
            "cor6",
            "cor5-r2",
            "cor5-r1",
            "cor6-r1",
        ],
        pq,
    );
    add(&["cor2"], Grid { x: xs, ..mn(1, 10) });
    add(&["cor3"], mn(1, 15));
    add(
        &["thm3", "doub-xab"],
        Grid {
            x: vec![Rat::from(0), Rat::from(1), crate::exact::rat(5, 2)],
            ..mn(1, 10)
        },
    );
    SweepConfig {
        jobs,
        threads: 1,
        format: OutputFormat::Json,
        timings: false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass(VerificationReport),
    Fail(VerificationReport),
    /// Out of domain or degenerate; carries the reason.
    Skip(String),
    Error(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRecord {
    pub identity: String,
    pub params: ParamSet,
    pub outcome: Outcome,
}

#[derive(Serialize)]
struct NoteJson<'a> {
    identity: &'a str,
    params: &'a ParamSet,
    status: &'a str,
    reason: &'a str,
}

impl SweepRecord {
    pub fn to_json(&self, timings: bool) -> String {
        let (status, reason) = match &self.outcome {
            Outcome::Pass(r) | Outcome::Fail(r) => return r.to_json(timings),
            Outcome::Skip(why) => ("skip", why),
            Outcome::Error(why) => ("error", why),
        };
        serde_json::to_string(&NoteJson {
            identity: &self.identity,
            params: &self.params,
            status,
            reason,
        })
        .expect("record serializes")
    }

    pub fn to_text(&self) -> String {
        match &self.outcome {
            Outcome::Pass(r) | Outcome::Fail(r) => r.to_string(),
            Outcome::Skip(why) => format!("{} [{}] skipped: out-of-domain: {why}", self.identity, self.params),
            Outcome::Error(why) => format!("{} [{}] error: {why}", self.identity, self.params),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub error: usize,
}

impl Summary {
    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skip + self.error
    }

    pub fn ok(&self) -> bool {
        self.fail == 0 && self.error == 0
    }
}

#[derive(Debug, Clone)]
pub struct SweepResult {
    pub records: Vec<SweepRecord>,
    pub summary: Summary,
}

fn evaluate(id: &str, params: ParamSet) -> SweepRecord {
    let outcome = match eval_identity(id, &params) {
        Ok(rep) if rep.equal => Outcome::Pass(rep),
        Ok(rep) => Outcome::Fail(rep),
        Err(e @ (Error::Degenerate(_) | Error::Domain(_) | Error::PipelinePole(_))) => {
            Outcome::Skip(e.to_string())
        }
        Err(e) => Outcome::Error(e.to_string()),
    };
    SweepRecord {
        identity: id.to_string(),
        params,
        outcome,
    }
}

/// Runs every cell of every job. Per-cell failures become records; only an
/// unusable thread count aborts.
pub fn run_sweep(config: &SweepConfig) -> io::Result<SweepResult> {
    let mut cells = Vec::new();
    let mut records = Vec::new();
    for job in &config.jobs {
        match lookup(&job.id) {
            Ok(desc) => {
                for cell in job.grid.cells(desc.params) {
                    cells.push((desc.id, cell));
                }
            }
            Err(e) => records.push(SweepRecord {
                identity: job.id.clone(),
                params: ParamSet::new(),
                outcome: Outcome::Error(e.to_string()),
            }),
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads.max(1))
        .build()
        .map_err(io::Error::other)?;
    let evaluated: Vec<SweepRecord> =
        pool.install(|| cells.into_par_iter().map(|(id, ps)| evaluate(id, ps)).collect());
    records.extend(evaluated);
    records.sort_by(|a, b| (&a.identity, &a.params).cmp(&(&b.identity, &b.params)));
    records.dedup_by(|a, b| a.identity == b.identity && a.params == b.params);

    let mut summary = Summary::default();
    for r in &records {
        match r.outcome {
            Outcome::Pass(_) => summary.pass += 1,
            Outcome::Fail(_) => summary.fail += 1,
            Outcome::Skip(_) => summary.skip += 1,
            Outcome::Error(_) => summary.error += 1,
        }
    }
    Ok(SweepResult { records, summary })
}

/// One line per record, then the summary line.
pub fn write_report(result: &SweepResult, format: OutputFormat, timings: bool, out: &mut dyn Write) -> io::Result<()> {
    for r in &result.records {
        match format {
            OutputFormat::Json => writeln!(out, "{}", r.to_json(timings))?,
            OutputFormat::Text => writeln!(out, "{}", r.to_text())?,
        }
    }
    let s = &result.summary;
    match format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(s).expect("summary serializes")),
        OutputFormat::Text => writeln!(out, "pass {} fail {} skip {} error {}", s.pass, s.fail, s.skip, s.error),
    }
}
