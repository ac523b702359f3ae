//! CSV and JSON emitters with a pinned schema.

use std::io;

use serde::Serialize;

use crate::harness::{BaselineSummary, TrialRecord, TrialSummary};

/// The one CSV schema external tooling can rely on.
pub const CSV_HEADER: [&str; 11] = [
    "trial",
    "generator",
    "n",
    "c",
    "strategy",
    "seed",
    "outcome",
    "rounds",
    "simulated_parity_tests",
    "ordinary_tests",
    "correct",
];

/// Write records as CSV: the pinned header, then one row per trial, `\n`
/// terminated. An empty batch emits the header line only.
pub fn write_records_csv<W: io::Write>(writer: W, records: &[TrialRecord]) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(writer);
    w.write_record(CSV_HEADER)?;
    for record in records {
        w.serialize(record)?;
    }
    w.flush()?;
    Ok(())
}

pub fn records_csv_string(records: &[TrialRecord]) -> String {
    let mut buf = Vec::new();
    write_records_csv(&mut buf, records).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("CSV output is UTF-8")
}

/// Combined bench output for the JSON format.
#[derive(Debug, Serialize)]
pub struct BenchReport<'a> {
    pub records: &'a [TrialRecord],
    pub summary: &'a TrialSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub baseline: Option<&'a BaselineSummary>,
}

pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialization cannot fail")
}

pub fn to_json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialization cannot fail")
}
