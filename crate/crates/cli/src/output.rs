//! Rendering of command results as JSON, CSV or markdown.
//!
//! Integers that can outgrow 64 bits are carried as decimal strings in every
//! format. JSON documents keep struct field order, so identical invocations
//! print identical bytes.

use serde::Serialize;

use crate::args::Format;

pub const SCHEMA: &str = "rscount/1";

#[derive(Debug, Serialize)]
pub struct Document<'a, T: Serialize> {
    pub schema: &'static str,
    pub command: &'a str,
    pub result: &'a T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
}

#[derive(Debug, Serialize)]
pub struct Meta {
    pub tool: &'static str,
    pub version: &'static str,
    pub args: Vec<String>,
}

impl Meta {
    pub fn current() -> Self {
        Meta {
            tool: "rscount",
            version: env!("CARGO_PKG_VERSION"),
            args: std::env::args().skip(1).collect(),
        }
    }
}

/// Flat tabular view of a result, used for CSV and markdown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    /// A single record rendered as `field,value` pairs.
    pub fn key_value(pairs: Vec<(&str, String)>) -> Self {
        let mut t = Table::new(&["field", "value"]);
        for (k, v) in pairs {
            t.push(vec![k.to_string(), v]);
        }
        t
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(vec![]);
        w.write_record(&self.headers).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    pub fn to_markdown(&self) -> String {
        let line = |cells: &[String]| format!("| {} |\n", cells.join(" | "));
        let mut out = line(&self.headers);
        out.push_str(&line(&vec!["---".to_string(); self.headers.len()]));
        for row in &self.rows {
            let escaped: Vec<String> = row.iter().map(|c| c.replace('|', "\\|")).collect();
            out.push_str(&line(&escaped));
        }
        out
    }
}

/// A command result that knows its tabular form.
pub trait Report: Serialize {
    fn table(&self) -> Table;
}

pub fn render<T: Report>(command: &str, result: &T, format: Format, meta: bool) -> String {
    match format {
        Format::Json => {
            let doc = Document {
                schema: SCHEMA,
                command,
                result,
                meta: meta.then(Meta::current),
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable result");
            s.push('\n');
            s
        }
        Format::Csv => result.table().to_csv(),
        Format::Markdown => result.table().to_markdown(),
    }
}
