//! Command-line front end. `run` takes the argument list and two sinks so
//! it can be driven from tests without spawning a process.

use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::exact::Rat;
use crate::identities::{eval_identity, registry, Param, ParamSet};
use crate::series;
use crate::sweep::{default_plan, run_sweep, write_report, Grid, OutputFormat, SweepConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// An integer or an inclusive range `a..b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSpan(pub Vec<i64>);

impl FromStr for IntSpan {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("bad integer {t:?}: {e}"));
        match s.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (parse(lo)?, parse(hi.trim_start_matches('='))?);
                if lo > hi {
                    return Err(format!("empty range {s}"));
                }
                Ok(IntSpan((lo..=hi).collect()))
            }
            None => Ok(IntSpan(vec![parse(s)?])),
        }
    }
}

#[derive(Debug, Args, Default)]
pub struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub m: Vec<IntSpan>,
    #[arg(long, allow_hyphen_values = true)]
    pub n: Vec<IntSpan>,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Vec<IntSpan>,
    #[arg(long, allow_hyphen_values = true)]
    pub p: Vec<IntSpan>,
    #[arg(long, allow_hyphen_values = true)]
    pub q: Vec<IntSpan>,
    /// Rational, e.g. 1/2; repeat for a list.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Vec<Rat>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Vec<Rat>,
}

fn flatten(spans: &[IntSpan]) -> Vec<i64> {
    spans.iter().flat_map(|s| s.0.iter().copied()).collect()
}

impl ParamArgs {
    fn grid(&self) -> Grid {
        Grid {
            m: flatten(&self.m),
            n: flatten(&self.n),
            r: flatten(&self.r),
            p: flatten(&self.p),
            q: flatten(&self.q),
            alpha: self.alpha.clone(),
            x: self.x.clone(),
        }
    }

    /// A single parameter point; lists are rejected.
    fn point(&self) -> Result<ParamSet, String> {
        let grid = self.grid();
        let mut ps = ParamSet::new();
        for p in Param::ALL {
            let cells = grid.cells(&[p]);
            match cells.len() {
                0 => {}
                1 => {
                    let v = cells[0].get(p).expect("cell holds the value");
                    ps.set(p, v).map_err(|e| e.to_string())?;
                }
                _ => return Err(format!("--{p} takes a single value for verify")),
            }
        }
        Ok(ps)
    }
}

#[derive(Debug, Parser)]
#[command(name = "binomsum", about = "Exact verification of binomial double-sum identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    Revert,
    #[value(name = "F")]
    F,
    #[value(name = "Gr")]
    Gr,
    Pde,
    Routine,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate both sides of one identity at one parameter point.
    Verify {
        id: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        timings: bool,
    },
    /// Evaluate identities over a parameter grid.
    Sweep {
        ids: Vec<String>,
        #[command(flatten)]
        params: ParamArgs,
        /// Run the full acceptance grid; ignores ids and parameter flags.
        #[arg(long = "default")]
        default_plan: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
        /// Record wall-clock time per cell (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Dump or check generating-function series.
    Series {
        kind: SeriesKind,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        alpha: Rat,
        #[arg(long, default_value_t = 0)]
        r: i64,
        /// Truncation order.
        #[arg(long, alias = "N", default_value_t = 16)]
        order: i64,
    },
    /// Print the identity catalog.
    List,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify {
            id,
            params,
            json,
            timings,
        } => cmd_verify(&id, &params, json, timings, out, err),
        Command::Sweep {
            ids,
            params,
            default_plan: use_default,
            jobs,
            json,
            timings,
        } => {
            let mut config = if use_default {
                default_plan()
            } else {
                let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
                SweepConfig::uniform(&ids, params.grid())
            };
            config.threads = jobs.max(1);
            config.format = if json { OutputFormat::Json } else { OutputFormat::Text };
            config.timings = timings;
            cmd_sweep(&config, out, err)
        }
        Command::Series { kind, alpha, r, order } => cmd_series(kind, &alpha, r, order, out, err),
        Command::List => cmd_list(out),
    };
    let _ = out.flush();
    result
}

pub fn cmd_verify(id: &str, params: &ParamArgs, json: bool, timings: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let ps = match params.point() {
        Ok(ps) => ps,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_ERROR;
        }
    };
    match eval_identity(id, &ps) {
        Ok(rep) => {
            let _ = if json {
                writeln!(out, "{}", rep.to_json(timings))
            } else {
                writeln!(out, "{rep}")
            };
            if rep.equal {
                EXIT_OK
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

pub fn cmd_sweep(config: &SweepConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if config.jobs.is_empty() {
        let _ = writeln!(err, "error: no identities given (name some ids or pass --default)");
        return EXIT_ERROR;
    }
    let result = match run_sweep(config) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_ERROR;
        }
    };
    if let Err(e) = write_report(&result, config.format, config.timings, out) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_ERROR;
    }
    if result.summary.ok() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

pub fn cmd_series(kind: SeriesKind, alpha: &Rat, r: i64, order: i64, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let lines = match kind {
        SeriesKind::Revert => series::revert_u(alpha, order.max(1)).map(|t| t.dump_lines(1)),
        SeriesKind::F => series::f_closed_form(alpha, order).map(|f| f.dump_lines((0, 0))),
        SeriesKind::Gr => {
            if r < 0 {
                Err(crate::Error::Domain(format!("r = {r} < 0")))
            } else {
                series::g_r_series(alpha, r, order).map(|g| g.dump_lines((-r, -r)))
            }
        }
        SeriesKind::Pde => series::pde_check(alpha, order).map(pass_fail),
        SeriesKind::Routine => series::routine_identity_check(alpha, r).map(pass_fail),
    };
    match lines {
        Ok(lines) => {
            for l in &lines {
                let _ = writeln!(out, "{l}");
            }
            if lines.len() == 1 && lines[0] == "fail" {
                EXIT_FAIL
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn pass_fail(ok: bool) -> Vec<String> {
    vec![if ok { "pass" } else { "fail" }.to_string()]
}

pub fn cmd_list(out: &mut dyn Write) -> i32 {
    for d in registry() {
        let params: Vec<&str> = d.params.iter().map(|p| p.name()).collect();
        let _ = writeln!(out, "{:<16} {:<16} {:<28} {}", d.id, params.join(","), d.anchor, d.summary);
    }
    EXIT_OK
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("binomsum").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn spans() {
        assert_eq!("3".parse::<IntSpan>().unwrap().0, vec![3]);
        assert_eq!("-1..2".parse::<IntSpan>().unwrap().0, vec![-1, 0, 1, 2]);
        assert!("4..2".parse::<IntSpan>().is_err());
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = run_str(&["verify", "S3", "--m", "2", "--n", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("lhs=3 rhs=3"));
        let (code, _, err) = run_str(&["verify", "thm1", "--m", "1", "--n", "1", "--alpha", "-1"]);
        assert_eq!(code, 2);
        assert!(err.contains("alpha = -1 outside domain"));
        assert_eq!(run_str(&["verify", "bogus"]).0, 2);
        assert_eq!(run_str(&["verify", "S3", "--m", "1..2", "--n", "1"]).0, 2);
    }

    #[test]
    fn series_revert_dump() {
        let (code, out, _) = run_str(&["series", "revert", "--alpha", "1", "--N", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1 1\n2 2\n3 5\n4 14\n");
    }

    #[test]
    fn bad_flags_exit_2() {
        assert_eq!(run_str(&["verify", "S3", "--m", "x"]).0, 2);
        assert_eq!(run_str(&["sweep"]).0, 2);
    }
}
