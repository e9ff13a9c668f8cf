//! JSON, CSV and plain-text renderings of a [`CohomologyReport`].
//!
//! The JSON document is
//!
//! ```text
//! {"p": 5, "algebra": "sl3", "module": {"family": "simple", "weight": [3, 1]},
//!  "cohomology": [{"degree": 1, "dim": 3, "weights": {"[5,0]": 1, ...},
//!                  "factors": [{"weight": [1, 0], "twist": 1, "mult": 1}],
//!                  "residual": {}}, ...]}
//! ```
//!
//! Every map is ordered, so output is byte-identical across runs.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cohom::{CohomologyReport, DegreeReport, Factor};
use crate::liealg::{AlgebraKind, Weight};
use crate::repr::{ModuleFamily, ModuleLabel};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed report: {0}")]
    Field(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            other => Err(format!("unknown format `{other}` (expected json, csv or text)")),
        }
    }
}

/// Inclusive degree range; parses `3`, `2..5`, `2..=5` or `2-5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeRange {
    pub start: usize,
    pub end: usize,
}

impl DegreeRange {
    pub fn all(top: usize) -> Self {
        DegreeRange { start: 0, end: top }
    }

    pub fn contains(&self, n: usize) -> bool {
        (self.start..=self.end).contains(&n)
    }
}

impl FromStr for DegreeRange {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("invalid degree range `{s}`");
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let (start, end) = if let Some((a, b)) = s.split_once("..=") {
            (num(a)?, num(b)?)
        } else if let Some((a, b)) = s.split_once("..") {
            (num(a)?, num(b)?)
        } else if let Some((a, b)) = s.split_once('-') {
            (num(a)?, num(b)?)
        } else {
            let n = num(s)?;
            (n, n)
        };
        if start > end {
            return Err(bad());
        }
        Ok(DegreeRange { start, end })
    }
}

fn weight_key(w: Weight) -> String {
    format!("[{},{}]", w.a, w.b)
}

fn parse_weight_key(k: &str) -> Result<Weight, ReportError> {
    let bad = || ReportError::Field(format!("weight key `{k}`"));
    let inner = k
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(bad)?;
    let (a, b) = inner.split_once(',').ok_or_else(bad)?;
    Ok(Weight::new(
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

#[derive(Serialize, Deserialize)]
struct JsonReport {
    p: u32,
    algebra: AlgebraKind,
    module: JsonModule,
    cohomology: Vec<JsonDegree>,
}

#[derive(Serialize, Deserialize)]
struct JsonModule {
    family: ModuleFamily,
    weight: [i64; 2],
}

#[derive(Serialize, Deserialize)]
struct JsonDegree {
    degree: usize,
    dim: usize,
    weights: BTreeMap<String, usize>,
    factors: Vec<JsonFactor>,
    residual: BTreeMap<String, usize>,
}

#[derive(Serialize, Deserialize)]
struct JsonFactor {
    weight: [i64; 2],
    twist: u32,
    mult: usize,
}

fn keyed(map: &BTreeMap<Weight, usize>) -> BTreeMap<String, usize> {
    map.iter().map(|(w, m)| (weight_key(*w), *m)).collect()
}

fn unkeyed(map: &BTreeMap<String, usize>) -> Result<BTreeMap<Weight, usize>, ReportError> {
    map.iter()
        .map(|(k, m)| Ok((parse_weight_key(k)?, *m)))
        .collect()
}

fn selected(
    report: &CohomologyReport,
    degrees: Option<DegreeRange>,
    only_nonzero: bool,
) -> impl Iterator<Item = &DegreeReport> {
    report
        .degrees
        .iter()
        .filter(move |d| degrees.is_none_or(|r| r.contains(d.degree)))
        .filter(move |d| !only_nonzero || d.dim > 0)
}

pub fn to_json(report: &CohomologyReport, degrees: Option<DegreeRange>, only_nonzero: bool) -> String {
    let doc = JsonReport {
        p: report.p,
        algebra: report.algebra,
        module: JsonModule {
            family: report.module.family,
            weight: [report.module.weight.a, report.module.weight.b],
        },
        cohomology: selected(report, degrees, only_nonzero)
            .map(|d| JsonDegree {
                degree: d.degree,
                dim: d.dim,
                weights: keyed(&d.weights),
                factors: d
                    .factors
                    .iter()
                    .map(|f| JsonFactor {
                        weight: [f.weight.a, f.weight.b],
                        twist: f.twist,
                        mult: f.mult,
                    })
                    .collect(),
                residual: keyed(&d.residual),
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("report serialises");
    out.push('\n');
    out
}

/// Inverse of [`to_json`] for a document holding every degree.
pub fn from_json(text: &str) -> Result<CohomologyReport, ReportError> {
    let doc: JsonReport = serde_json::from_str(text)?;
    let degrees = doc
        .cohomology
        .iter()
        .map(|d| {
            Ok(DegreeReport {
                degree: d.degree,
                dim: d.dim,
                weights: unkeyed(&d.weights)?,
                factors: d
                    .factors
                    .iter()
                    .map(|f| Factor {
                        weight: Weight::new(f.weight[0], f.weight[1]),
                        twist: f.twist,
                        mult: f.mult,
                    })
                    .collect(),
                residual: unkeyed(&d.residual)?,
            })
        })
        .collect::<Result<Vec<_>, ReportError>>()?;
    if degrees.iter().enumerate().any(|(n, d)| d.degree != n) {
        return Err(ReportError::Field("degrees must run 0, 1, 2, ...".into()));
    }
    Ok(CohomologyReport {
        p: doc.p,
        algebra: doc.algebra,
        module: ModuleLabel {
            family: doc.module.family,
            weight: Weight::new(doc.module.weight[0], doc.module.weight[1]),
        },
        degrees,
    })
}

/// `L(1,1)^(1)`, with `k` for the trivial module.
pub fn factor_name(f: &Factor) -> String {
    let base = if f.weight == Weight::ZERO {
        "k".to_string()
    } else if f.twist == 0 {
        format!("L({},{})", f.weight.a, f.weight.b)
    } else {
        format!("L({},{})^({})", f.weight.a, f.weight.b, f.twist)
    };
    if f.mult == 1 {
        base
    } else {
        format!("{}{}", f.mult, base)
    }
}

/// `2L(1,1)^(1) + k`, `0` for zero, with any residual appended.
pub fn factor_summary(d: &DegreeReport) -> String {
    let mut parts: Vec<String> = d.factors.iter().map(factor_name).collect();
    if !d.residual.is_empty() {
        let res: Vec<String> = d
            .residual
            .iter()
            .map(|(w, m)| format!("{}:{}", weight_key(*w), m))
            .collect();
        parts.push(format!("residual{{{}}}", res.join(" ")));
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// One row per `(degree, weight)`; a degree with zero cohomology gets one row
/// with empty weight columns.
pub fn to_csv(report: &CohomologyReport, degrees: Option<DegreeRange>, only_nonzero: bool) -> String {
    let mut out = String::from("degree,weight_a,weight_b,mult,dim,factors\n");
    for d in selected(report, degrees, only_nonzero) {
        let summary = factor_summary(d);
        if d.weights.is_empty() {
            let _ = writeln!(out, "{},,,0,{},{}", d.degree, d.dim, summary);
        }
        for (w, m) in &d.weights {
            let _ = writeln!(out, "{},{},{},{},{},{}", d.degree, w.a, w.b, m, d.dim, summary);
        }
    }
    out
}

pub fn to_text(report: &CohomologyReport, degrees: Option<DegreeRange>, only_nonzero: bool) -> String {
    let mut out = format!(
        "H^n({}, {}) over F_{}\n{:>3}  {:>4}  factors\n",
        report.algebra, report.module, report.p, "n", "dim"
    );
    for d in selected(report, degrees, only_nonzero) {
        let _ = writeln!(out, "{:>3}  {:>4}  {}", d.degree, d.dim, factor_summary(d));
    }
    out
}

pub fn render(
    report: &CohomologyReport,
    format: OutputFormat,
    degrees: Option<DegreeRange>,
    only_nonzero: bool,
) -> String {
    match format {
        OutputFormat::Json => to_json(report, degrees, only_nonzero),
        OutputFormat::Csv => to_csv(report, degrees, only_nonzero),
        OutputFormat::Text => to_text(report, degrees, only_nonzero),
    }
}
