//! Batch comparison of knot-table pairs.
//!
//! Pairs CSV: `left_name,m1,n1,right_name,m2,n2`. Report CSV:
//! `left,right,m1,n1,m2,n2,det1,det2,outcome,rule`, one row per input pair in
//! input order. Rows that cannot be evaluated get outcome `ERROR` and the
//! message in the `rule` column.

use std::collections::BTreeMap;
use std::io::Read;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::alexander::knot_determinant;
use crate::distinguish::verdict_from_determinants;
use crate::error::Error;
use crate::knot::table::KnotTable;

pub const PAIRS_HEADER: [&str; 6] = ["left_name", "m1", "n1", "right_name", "m2", "n2"];
pub const REPORT_HEADER: [&str; 10] = [
    "left", "right", "m1", "n1", "m2", "n2", "det1", "det2", "outcome", "rule",
];

/// One side of a comparison: a table name and its `(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    pub name: String,
    pub m: i64,
    pub n: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairJob {
    pub left: Side,
    pub right: Side,
}

/// A pairs-file row: either a job or the reason it could not be read.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRow {
    pub line: u64,
    pub raw: Vec<String>,
    pub job: Result<PairJob, String>,
}

/// Reads a pairs file. Malformed rows are kept (with their line number) so
/// that processing can continue; a bad header is fatal.
pub fn read_pairs<R: Read>(r: R) -> Result<Vec<PairRow>, Error> {
    let mut rdr = csv::ReaderBuilder::new()
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(r);
    let headers = rdr.headers()?.clone();
    if headers.len() != PAIRS_HEADER.len() || headers.iter().zip(PAIRS_HEADER).any(|(h, e)| h != e) {
        return Err(Error::Table(format!(
            "expected pairs header '{}', found '{}'",
            PAIRS_HEADER.join(","),
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec?;
        let line = rec.position().map_or(0, |p| p.line());
        let raw: Vec<String> = rec.iter().map(str::to_string).collect();
        let job = parse_job(&raw);
        out.push(PairRow { line, raw, job });
    }
    Ok(out)
}

fn parse_job(raw: &[String]) -> Result<PairJob, String> {
    if raw.len() != 6 {
        return Err(format!("expected 6 fields, found {}", raw.len()));
    }
    let int = |i: usize| -> Result<i64, String> {
        raw[i]
            .parse()
            .map_err(|_| format!("{} is not an integer: '{}'", PAIRS_HEADER[i], raw[i]))
    };
    Ok(PairJob {
        left: Side {
            name: raw[0].clone(),
            m: int(1)?,
            n: int(2)?,
        },
        right: Side {
            name: raw[3].clone(),
            m: int(4)?,
            n: int(5)?,
        },
    })
}

#[derive(Clone, Debug)]
pub struct BatchReport {
    /// Complete CSV report, header included.
    pub csv: Vec<u8>,
    /// `line N: message` for each row that failed.
    pub errors: Vec<String>,
    pub rows: usize,
}

impl BatchReport {
    pub fn has_errors(&self) -> bool {
        !self.errors.is_empty()
    }
}

/// Evaluates every pair on a pool of `jobs` threads. The report bytes do not
/// depend on `jobs`.
pub fn run_batch(table: &KnotTable, pairs: &[PairRow], jobs: usize) -> Result<BatchReport, Error> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start {jobs} worker threads: {e}")))?;
    pool.install(|| evaluate(table, pairs))
}

fn evaluate(table: &KnotTable, pairs: &[PairRow]) -> Result<BatchReport, Error> {
    // Determinants of every referenced knot, computed once each.
    let mut names: Vec<&str> = pairs
        .iter()
        .filter_map(|r| r.job.as_ref().ok())
        .flat_map(|j| [j.left.name.as_str(), j.right.name.as_str()])
        .filter(|n| table.get(n).is_some())
        .collect();
    names.sort_unstable();
    names.dedup();
    let dets: BTreeMap<&str, Result<BigInt, String>> = names
        .par_iter()
        .map(|&name| {
            let entry = table.get(name).expect("filtered above");
            let det = entry
                .code
                .to_diagram()
                .and_then(|d| knot_determinant(&d.wirtinger()))
                .map_err(|e| format!("knot '{name}': {e}"));
            (name, det)
        })
        .collect();

    let rows: Vec<Result<Vec<String>, String>> = pairs
        .par_iter()
        .map(|row| {
            let job = row.job.as_ref().map_err(Clone::clone)?;
            let det = |name: &str| -> Result<BigInt, String> {
                match dets.get(name) {
                    Some(d) => d.clone(),
                    None => Err(format!("unknown knot '{name}'")),
                }
            };
            let (d1, d2) = (det(&job.left.name)?, det(&job.right.name)?);
            let v = verdict_from_determinants(d1.clone(), job.left.m, job.left.n, d2.clone(), job.right.m, job.right.n)
                .map_err(|e| e.to_string())?;
            Ok(vec![
                job.left.name.clone(),
                job.right.name.clone(),
                job.left.m.to_string(),
                job.left.n.to_string(),
                job.right.m.to_string(),
                job.right.n.to_string(),
                d1.to_string(),
                d2.to_string(),
                v.outcome.as_str().to_string(),
                v.rule.as_str().to_string(),
            ])
        })
        .collect();

    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(REPORT_HEADER)?;
    let mut errors = Vec::new();
    for (row, result) in pairs.iter().zip(rows) {
        match result {
            Ok(rec) => w.write_record(&rec)?,
            Err(msg) => {
                errors.push(format!("line {}: {msg}", row.line));
                let field = |i: usize| row.raw.get(i).cloned().unwrap_or_default();
                w.write_record([
                    field(0),
                    field(3),
                    field(1),
                    field(2),
                    field(4),
                    field(5),
                    String::new(),
                    String::new(),
                    "ERROR".into(),
                    msg,
                ])?;
            }
        }
    }
    let csv = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(BatchReport {
        csv,
        errors,
        rows: pairs.len(),
    })
}
