//! Linear model dump: a plain text file for inspecting feature weights.
//!
//! ```text
//! # bias<TAB>-0.0123
//! # index<TAB>token<TAB>weight
//! 0<TAB>the<TAB>0.0012
//! 1<TAB>great<TAB>1.9043
//! ```
//!
//! One line per vocabulary entry in index order; weights use Rust's
//! shortest round-trip float formatting.

use std::io::{self, BufRead, Write};

use spurious_core::corpus::Vocabulary;
use spurious_core::textmodel::LinearModel;

pub fn write_linear_dump<W: Write>(model: &LinearModel, vocab: &Vocabulary, mut out: W) -> io::Result<()> {
    writeln!(out, "# bias\t{}", model.bias)?;
    writeln!(out, "# index\ttoken\tweight")?;
    for (token, i, _) in vocab.iter() {
        writeln!(out, "{i}\t{token}\t{}", model.weights[i])?;
    }
    out.flush()
}

/// A parsed dump: the bias and `(index, token, weight)` rows.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearDump {
    pub bias: f64,
    pub rows: Vec<(usize, String, f64)>,
}

impl LinearDump {
    /// Rows sorted by descending absolute weight.
    pub fn top(&self, k: usize) -> Vec<&(usize, String, f64)> {
        let mut rows: Vec<_> = self.rows.iter().collect();
        rows.sort_by(|a, b| b.2.abs().total_cmp(&a.2.abs()).then(a.0.cmp(&b.0)));
        rows.truncate(k);
        rows
    }
}

pub fn read_linear_dump<R: BufRead>(input: R) -> io::Result<LinearDump> {
    let bad = |msg: String| io::Error::new(io::ErrorKind::InvalidData, msg);
    let mut bias = None;
    let mut rows = Vec::new();
    for line in input.lines() {
        let line = line?;
        if let Some(rest) = line.strip_prefix("# bias\t") {
            bias = Some(rest.parse().map_err(|_| bad(format!("bad bias `{rest}`")))?);
            continue;
        }
        if line.starts_with('#') || line.is_empty() {
            continue;
        }
        let mut parts = line.splitn(3, '\t');
        let (Some(i), Some(t), Some(w)) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad(format!("expected three tab-separated fields: `{line}`")));
        };
        let i = i.parse().map_err(|_| bad(format!("bad index `{i}`")))?;
        let w = w.parse().map_err(|_| bad(format!("bad weight `{w}`")))?;
        rows.push((i, t.to_string(), w));
    }
    Ok(LinearDump {
        bias: bias.ok_or_else(|| bad("missing bias line".into()))?,
        rows,
    })
}
