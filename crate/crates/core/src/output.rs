//! CSV and JSON records written by the command-line tool.

use std::io::Write;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::montecarlo::EstimateResult;
use crate::oracle::ExactCountRow;

pub const SCHEMA_VERSION: &str = "1";

pub const ESTIMATE_CSV_HEADER: &str =
    "n,mode,trials,seed,solvable_count,p_solvable,moe95,connected_count,p_connected,elapsed_ms";
pub const EXACT_CSV_HEADER: &str = "n,total,solvable,connected,connected_solvable";
pub const CHECK_CSV_HEADER: &str = "line,n,universally_solvable,connected,graph6";

/// Top-level JSON document.
#[derive(Serialize)]
pub struct OutputRecord<'a> {
    pub schema_version: &'static str,
    #[serde(flatten)]
    pub payload: Payload<'a>,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload<'a> {
    Estimate {
        #[serde(flatten)]
        result: &'a EstimateResult,
        elapsed_ms: u128,
    },
    Exact {
        rows: &'a [ExactCountRow],
    },
    Graphs {
        n: usize,
        seed: u64,
        connected: bool,
        graphs: Vec<GraphRecord>,
    },
    Gn {
        computed: bool,
        values: Vec<GnRecord>,
    },
    Check {
        records: &'a [CheckRecord],
        summary: CheckSummary,
    },
}

/// Sampled graph; edges are 1-based.
#[derive(Clone, Debug, Serialize)]
pub struct GraphRecord {
    pub index: u64,
    pub graph6: String,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GnRecord {
    pub n: usize,
    #[serde(serialize_with = "decimal")]
    pub g_n: BigUint,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub line: usize,
    pub n: usize,
    pub universally_solvable: bool,
    pub connected: bool,
    pub graph6: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub graphs: u64,
    pub solvable: u64,
    pub connected: u64,
    pub connected_solvable: u64,
}

impl CheckSummary {
    pub fn from_records(records: &[CheckRecord]) -> Self {
        let mut s = CheckSummary::default();
        for r in records {
            s.graphs += 1;
            s.solvable += r.universally_solvable as u64;
            s.connected += r.connected as u64;
            s.connected_solvable += (r.universally_solvable && r.connected) as u64;
        }
        s
    }
}

fn decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn write_json<W: Write + ?Sized>(out: &mut W, payload: Payload<'_>) -> Result<()> {
    let record = OutputRecord {
        schema_version: SCHEMA_VERSION,
        payload,
    };
    serde_json::to_writer_pretty(&mut *out, &record)
        .map_err(|e| Error::internal(format!("json encoding: {e}")))?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct EstimateCsvRow<'a> {
    n: usize,
    mode: &'a str,
    trials: u64,
    seed: u64,
    solvable_count: u64,
    p_solvable: f64,
    moe95: f64,
    connected_count: Option<u64>,
    p_connected: Option<f64>,
    elapsed_ms: u128,
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().has_headers(true).from_writer(out)
}

fn csv_err(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::internal(format!("csv encoding: {other:?}")),
    }
}

pub fn write_estimate_csv<W: Write>(out: W, r: &EstimateResult) -> Result<()> {
    let mut w = csv_writer(out);
    w.serialize(EstimateCsvRow {
        n: r.request.n,
        mode: r.request.mode.as_str(),
        trials: r.request.trials,
        seed: r.request.seed,
        solvable_count: r.solvable_count,
        p_solvable: r.p_solvable,
        moe95: r.moe95,
        connected_count: r.connected_count,
        p_connected: r.p_connected,
        elapsed_ms: r.elapsed.as_millis(),
    })
    .map_err(csv_err)?;
    w.flush()?;
    Ok(())
}

pub fn write_exact_csv<W: Write>(out: W, rows: &[ExactCountRow]) -> Result<()> {
    let mut w = csv_writer(out);
    for r in rows {
        w.serialize(r).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_check_csv<W: Write>(out: W, records: &[CheckRecord]) -> Result<()> {
    let mut w = csv_writer(out);
    for r in records {
        w.serialize(r).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}
