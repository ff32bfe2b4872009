//! Adapters behind the `maxsym` binary. Every command is a pure function from
//! its arguments to rendered output plus an exit status.

pub mod commands;
pub mod family;
pub mod verify;

use clap::ValueEnum;
use serde::Serialize;

pub use commands::{classify, glue, order, OrderSource, Rendered, Status, UsageError};
pub use family::GroupFamily;
pub use verify::{run_checks, suite, verify_paper, verify_with, CheckRecord, CheckSpec, VerificationReport};

/// Environment variable overriding the default coset budget.
pub const BUDGET_ENV: &str = "MAXSYM_COSET_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

pub(crate) fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

pub(crate) fn to_csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(vec![]);
    for row in rows {
        w.serialize(row).expect("report rows serialize");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is utf-8")
}
