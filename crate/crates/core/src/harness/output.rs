use super::{HarnessError, RunRecord, SummaryRow};
use std::io::{Read, Write};
use std::path::Path;

pub const RECORD_HEADER: [&str; 8] = [
    "experiment",
    "method",
    "repeat",
    "iter",
    "elapsed_s",
    "residual",
    "dist_to_sol",
    "bregman_dist",
];

pub const SUMMARY_HEADER: [&str; 8] = ["experiment", "method", "at", "min", "q25", "median", "q75", "max"];

/// 17 significant digits, enough to round-trip any `f64`.
fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

pub fn write_records<W: Write>(records: &[RunRecord], w: W) -> Result<(), HarnessError> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(RECORD_HEADER)?;
    for r in records {
        out.write_record([
            r.experiment.clone(),
            r.method.clone(),
            r.repeat.to_string(),
            r.iter.to_string(),
            fmt_opt(r.elapsed_s),
            fmt_f64(r.residual),
            fmt_opt(r.dist_to_sol),
            fmt_opt(r.bregman_dist),
        ])?;
    }
    out.flush()?;
    Ok(())
}

pub fn emit_csv(records: &[RunRecord], path: impl AsRef<Path>) -> Result<(), HarnessError> {
    let f = std::fs::File::create(path)?;
    write_records(records, std::io::BufWriter::new(f))
}

fn parse_opt(s: &str) -> Result<Option<f64>, HarnessError> {
    if s.is_empty() {
        Ok(None)
    } else {
        s.parse()
            .map(Some)
            .map_err(|e| HarnessError::Parse(format!("`{s}`: {e}")))
    }
}

fn parse<T: std::str::FromStr>(s: &str) -> Result<T, HarnessError>
where
    T::Err: std::fmt::Display,
{
    s.parse().map_err(|e| HarnessError::Parse(format!("`{s}`: {e}")))
}

pub fn read_records<R: Read>(r: R) -> Result<Vec<RunRecord>, HarnessError> {
    let mut rdr = csv::Reader::from_reader(r);
    if rdr.headers()?.iter().ne(RECORD_HEADER) {
        return Err(HarnessError::Parse("unexpected header".into()));
    }
    rdr.records()
        .map(|row| {
            let row = row?;
            Ok(RunRecord {
                experiment: row[0].to_owned(),
                method: row[1].to_owned(),
                repeat: parse(&row[2])?,
                iter: parse(&row[3])?,
                elapsed_s: parse_opt(&row[4])?,
                residual: parse(&row[5])?,
                dist_to_sol: parse_opt(&row[6])?,
                bregman_dist: parse_opt(&row[7])?,
            })
        })
        .collect()
}

pub fn write_summary<W: Write>(rows: &[SummaryRow], w: W) -> Result<(), HarnessError> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(SUMMARY_HEADER)?;
    for s in rows {
        let q = s.residual;
        out.write_record([
            s.experiment.clone(),
            s.method.clone(),
            fmt_f64(s.at),
            fmt_f64(q.min),
            fmt_f64(q.q25),
            fmt_f64(q.median),
            fmt_f64(q.q75),
            fmt_f64(q.max),
        ])?;
    }
    out.flush()?;
    Ok(())
}
