//! A parallel grid sweep with a JSON report on stdout.

use std::io;

use binomsum::exact::rat;
use binomsum::sweep::{run_sweep, write_report, Grid, OutputFormat, SweepConfig};

fn main() -> io::Result<()> {
    let grid = Grid {
        m: (0..=4).collect(),
        n: (0..=4).collect(),
        r: vec![0, 1],
        alpha: vec![rat(1, 1), rat(2, 3)],
        ..Grid::default()
    };
    let config = SweepConfig::uniform(&["thm1", "thm2", "S4"], grid).with_threads(4);
    let result = run_sweep(&config)?;
    write_report(&result, OutputFormat::Json, false, &mut io::stdout().lock())?;
    eprintln!("{} cells, ok = {}", result.summary.total(), result.summary.ok());
    Ok(())
}
