//! CSV files of Bloch points.
//!
//! Layout: a `# seed=<n>` comment line, the header `x,y,z`, then one row per
//! point in `{:.16e}` notation (17 significant digits, so parsing recovers
//! every bit). Lines end in LF. Lines starting with `#` are ignored on read.

use std::io::{Read, Write};

use qubit_indirect::BlochPoint;

use crate::error::{CliError, CliResult};

pub fn write_points<W: Write>(out: W, seed: Option<u64>, points: &[BlochPoint]) -> CliResult<()> {
    let io_err = |source| CliError::Io {
        context: "writing CSV".into(),
        source,
    };
    let mut out = out;
    if let Some(seed) = seed {
        writeln!(out, "# seed={seed}").map_err(io_err)?;
    }
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    let csv_err = |e: csv::Error| CliError::Io {
        context: "writing CSV".into(),
        source: e.into(),
    };
    w.write_record(["x", "y", "z"]).map_err(csv_err)?;
    for p in points {
        w.write_record([p.x, p.y, p.z].map(|v| format!("{v:.16e}")))
            .map_err(csv_err)?;
    }
    w.flush().map_err(io_err)
}

pub fn read_points<R: Read>(input: R) -> CliResult<Vec<BlochPoint>> {
    let mut r = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(input);
    let headers = r.headers().map_err(CliError::config)?;
    if headers != vec!["x", "y", "z"] {
        return Err(CliError::Config(format!("expected header x,y,z, got {headers:?}")));
    }
    r.records()
        .map(|rec| {
            let rec = rec.map_err(CliError::config)?;
            let v: Vec<f64> = rec
                .iter()
                .map(|f| f.parse::<f64>().map_err(CliError::config))
                .collect::<CliResult<_>>()?;
            match v[..] {
                [x, y, z] => Ok(BlochPoint { x, y, z }),
                _ => Err(CliError::Config("row must have three fields".into())),
            }
        })
        .collect()
}

/// Seed recorded in the leading comment, if any.
pub fn read_seed(text: &str) -> Option<u64> {
    text.lines()
        .take_while(|l| l.starts_with('#'))
        .find_map(|l| l.trim_start_matches('#').trim().strip_prefix("seed=")?.parse().ok())
}
