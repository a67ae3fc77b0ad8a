//! Suite reports and their JSON, CSV and Markdown renderings.

use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::ser::Serialize;
use serde::{Deserialize, Serialize as SerializeDerive};

pub const SCHEMA_VERSION: &str = env!("CARGO_PKG_VERSION");

/// A scalar, or a Monte Carlo estimate.
#[derive(Debug, Clone, Copy, PartialEq, SerializeDerive, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Estimate { mean: f64, stderr: f64 },
    Scalar(f64),
}

impl Value {
    pub fn central(&self) -> f64 {
        match *self {
            Value::Scalar(x) => x,
            Value::Estimate { mean, .. } => mean,
        }
    }
}

#[derive(Debug, Clone, PartialEq, SerializeDerive, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub group: String,
    pub component_index: Option<usize>,
    pub spin: Option<usize>,
    pub form_label: Option<String>,
    pub value: Option<Value>,
    pub grad_norm: Option<f64>,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
    pub pass: bool,
    pub runtime_ms: u64,
    /// False for rows with nothing to check (no form within reach).
    pub checked: bool,
    /// The quantities and thresholds `pass` is computed from.
    pub metrics: BTreeMap<String, f64>,
    pub claim: String,
}

impl SuiteReport {
    pub fn new(suite: &str, group: impl Into<String>, claim: &str) -> Self {
        SuiteReport {
            suite: suite.into(),
            group: group.into(),
            component_index: None,
            spin: None,
            form_label: None,
            value: None,
            grad_norm: None,
            samples: None,
            seed: None,
            pass: false,
            runtime_ms: 0,
            checked: true,
            metrics: BTreeMap::new(),
            claim: claim.into(),
        }
    }

    pub fn metric(mut self, key: &str, value: f64) -> Self {
        self.metrics.insert(key.into(), value);
        self
    }
}

#[derive(Debug, Clone, PartialEq, SerializeDerive, Deserialize)]
pub struct Document {
    pub version: String,
    pub suites: Vec<SuiteReport>,
}

impl Document {
    pub fn new(suites: Vec<SuiteReport>) -> Self {
        Document { version: SCHEMA_VERSION.into(), suites }
    }

    pub fn pass(&self) -> bool {
        self.suites.iter().all(|s| s.pass)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Md,
}

/// Writes floats with 17 significant digits.
struct FixedDigits;

impl serde_json::ser::Formatter for FixedDigits {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{}", fmt_f64(value))
    }
}

fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn to_json(doc: &Document) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FixedDigits);
    doc.serialize(&mut ser).expect("reports serialize");
    buf.push(b'\n');
    String::from_utf8(buf).expect("JSON is UTF-8")
}

pub fn from_json(s: &str) -> serde_json::Result<Document> {
    serde_json::from_str(s)
}

pub const CSV_HEADER: [&str; 15] = [
    "suite",
    "group",
    "component_index",
    "spin",
    "form_label",
    "value",
    "stderr",
    "grad_norm",
    "samples",
    "seed",
    "pass",
    "runtime_ms",
    "checked",
    "metrics",
    "claim",
];

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn metrics_text(m: &BTreeMap<String, f64>) -> String {
    m.iter().map(|(k, v)| format!("{k}={}", fmt_f64(*v))).collect::<Vec<_>>().join(";")
}

pub fn to_csv(doc: &Document) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for s in &doc.suites {
        let (value, stderr) = match s.value {
            Some(Value::Scalar(x)) => (fmt_f64(x), String::new()),
            Some(Value::Estimate { mean, stderr }) => (fmt_f64(mean), fmt_f64(stderr)),
            None => (String::new(), String::new()),
        };
        w.write_record([
            s.suite.clone(),
            s.group.clone(),
            opt(s.component_index),
            opt(s.spin),
            s.form_label.clone().unwrap_or_default(),
            value,
            stderr,
            s.grad_norm.map(fmt_f64).unwrap_or_default(),
            opt(s.samples),
            opt(s.seed),
            s.pass.to_string(),
            s.runtime_ms.to_string(),
            s.checked.to_string(),
            metrics_text(&s.metrics),
            s.claim.clone(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV is UTF-8")
}

fn short(x: f64) -> String {
    format!("{x:.4e}")
}

pub fn to_markdown(doc: &Document) -> String {
    let mut out = String::new();
    out.push_str(&format!("# Evidence report (schema {})\n\n", doc.version));
    out.push_str("| suite | group | V | spin | form | value | grad | result | claim |\n");
    out.push_str("|---|---|---|---|---|---|---|---|---|\n");
    for s in &doc.suites {
        let value = match s.value {
            Some(Value::Scalar(x)) => short(x),
            Some(Value::Estimate { mean, stderr }) => format!("{} ± {}", short(mean), short(stderr)),
            None => "-".into(),
        };
        let result = match (s.checked, s.pass) {
            (false, _) => "unchecked",
            (true, true) => "pass",
            (true, false) => "FAIL",
        };
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} |\n",
            s.suite,
            s.group,
            s.component_index.map_or("-".into(), |i| i.to_string()),
            s.spin.map_or("-".into(), |i| i.to_string()),
            s.form_label.as_deref().unwrap_or("-"),
            value,
            s.grad_norm.map_or("-".into(), short),
            result,
            s.claim,
        ));
    }
    out
}

pub fn render(doc: &Document, format: Format) -> String {
    match format {
        Format::Json => to_json(doc),
        Format::Csv => to_csv(doc),
        Format::Md => to_markdown(doc),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Document {
        let mut a = SuiteReport::new("average", "so(4)", "sign-definite integrand").metric("violations", 0.0);
        a.value = Some(Value::Estimate { mean: 0.25, stderr: 1.0 / 3.0 });
        a.samples = Some(10);
        a.pass = true;
        let mut b = SuiteReport::new("critical", "su(3)", "critical point");
        b.value = Some(Value::Scalar(-1.5e-300));
        b.grad_norm = Some(0.1 + 0.2);
        Document::new(vec![a, b])
    }

    #[test]
    fn json_round_trips_exactly() {
        let doc = sample();
        let text = to_json(&doc);
        assert!(text.contains("3.3333333333333331e-1"), "{text}");
        assert_eq!(from_json(&text).unwrap(), doc);
        assert!(!doc.pass());
    }

    #[test]
    fn csv_and_markdown_have_one_row_per_suite() {
        let doc = sample();
        let csv = to_csv(&doc);
        assert_eq!(csv.lines().count(), 3);
        assert!(csv.starts_with("suite,group,component_index"));
        let md = to_markdown(&doc);
        assert!(md.contains("| average | so(4) |") && md.contains("FAIL") && md.contains("sign-definite integrand"));
    }
}
