//! CSV reports.
//!
//! Noise sweeps: `model,domain,target,fraction,repetition,accuracy`, where
//! `repetition` is an integer or `mean` and accuracy has four decimals.
//!
//! SCM sweeps:
//! `setting,eps,beta1_analytic,beta2_analytic,lambda,beta1_mc,beta2_mc,se1,se2`
//! in plain decimal notation with 12 significant digits; absent values are
//! empty fields.

use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;
use std::str::FromStr;

use spurious_core::scm::{NoiseSetting, SweepRow};

use crate::error::{LabError, Result};

pub const RESULT_HEADER: [&str; 6] = ["model", "domain", "target", "fraction", "repetition", "accuracy"];
pub const SCM_HEADER: [&str; 9] = [
    "setting",
    "eps",
    "beta1_analytic",
    "beta2_analytic",
    "lambda",
    "beta1_mc",
    "beta2_mc",
    "se1",
    "se2",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Repetition {
    Index(usize),
    Mean,
}

impl fmt::Display for Repetition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Repetition::Index(i) => write!(f, "{i}"),
            Repetition::Mean => f.write_str("mean"),
        }
    }
}

impl FromStr for Repetition {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "mean" {
            return Ok(Repetition::Mean);
        }
        s.parse()
            .map(Repetition::Index)
            .map_err(|_| format!("repetition must be an integer or `mean`, got `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub model: String,
    pub domain: String,
    pub target: String,
    pub fraction: f64,
    pub repetition: Repetition,
    pub accuracy: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ResultTable {
    pub rows: Vec<ResultRow>,
}

impl ResultTable {
    /// Mean-row accuracy for one cell, if present.
    pub fn mean(&self, domain: &str, target: &str, fraction: f64) -> Option<f64> {
        self.rows
            .iter()
            .find(|r| {
                r.repetition == Repetition::Mean && r.domain == domain && r.target == target && r.fraction == fraction
            })
            .map(|r| r.accuracy)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(RESULT_HEADER)?;
        for r in &self.rows {
            w.write_record([
                r.model.clone(),
                r.domain.clone(),
                r.target.clone(),
                r.fraction.to_string(),
                r.repetition.to_string(),
                format!("{:.4}", r.accuracy),
            ])?;
        }
        w.flush().map_err(csv::Error::from)?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is utf-8"))
    }

    pub fn read_csv<R: Read>(input: R) -> Result<Self> {
        let mut r = csv::Reader::from_reader(input);
        if r.headers()?.iter().ne(RESULT_HEADER) {
            return Err(LabError::Validation(format!(
                "unexpected header {:?}",
                r.headers()?.iter().collect::<Vec<_>>()
            )));
        }
        let mut rows = Vec::new();
        for rec in r.records() {
            let rec = rec?;
            let field = |i: usize| rec.get(i).unwrap_or_default();
            let num = |i: usize| {
                field(i)
                    .parse::<f64>()
                    .map_err(|_| LabError::Validation(format!("bad number `{}`", field(i))))
            };
            rows.push(ResultRow {
                model: field(0).into(),
                domain: field(1).into(),
                target: field(2).into(),
                fraction: num(3)?,
                repetition: field(4).parse().map_err(LabError::Validation)?,
                accuracy: num(5)?,
            });
        }
        Ok(Self { rows })
    }
}

/// Writes `table` to `path`.
pub fn emit_csv(table: &ResultTable, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let f = File::create(path).map_err(|e| LabError::io(path, e))?;
    table.write_csv(BufWriter::new(f)).map_err(|e| match e {
        LabError::Csv(c) if c.is_io_error() => match c.into_kind() {
            csv::ErrorKind::Io(io) => LabError::io(path, io),
            other => LabError::Validation(format!("{other:?}")),
        },
        other => other,
    })
}

/// Plain decimal notation with 12 significant digits.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_nan() {
            "NaN".into()
        } else if x == 0.0 {
            "0".into()
        } else {
            x.to_string()
        };
    }
    let decimals = |exp: i32| (11 - exp).max(0) as usize;
    let exp = x.abs().log10().floor() as i32;
    let s = format!("{:.*}", decimals(exp), x);
    // rounding can carry into a new leading digit (9.99...95 -> 10.0...)
    let rounded: f64 = s.parse().expect("formatted float parses");
    if rounded.abs() >= 10f64.powi(exp + 1) {
        format!("{:.*}", decimals(exp + 1), x)
    } else {
        s
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(format_sig12).unwrap_or_default()
}

/// Serializes SCM sweep rows.
pub fn write_scm_csv<W: Write>(setting: NoiseSetting, rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SCM_HEADER)?;
    for r in rows {
        let mc = r.empirical;
        w.write_record([
            setting.name().to_string(),
            format_sig12(r.eps),
            format_sig12(r.analytic.beta1),
            format_sig12(r.analytic.beta2),
            opt(r.analytic.lambda),
            opt(mc.map(|m| m.beta1)),
            opt(mc.map(|m| m.beta2)),
            opt(mc.and_then(|m| m.se1)),
            opt(mc.and_then(|m| m.se2)),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}
