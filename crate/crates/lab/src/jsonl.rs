//! Corpus files: one JSON object per line,
//! `{"id": str, "label": str, "tokens": [str], "rationale_mask": [0|1]}`.

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use spurious_core::corpus::{Corpus, Document};

use crate::error::{LabError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocumentRecord {
    pub id: String,
    pub label: String,
    pub tokens: Vec<String>,
    pub rationale_mask: Vec<u8>,
}

impl From<&Document> for DocumentRecord {
    fn from(d: &Document) -> Self {
        Self {
            id: d.id.clone(),
            label: d.label.clone(),
            tokens: d.tokens.clone(),
            rationale_mask: d.rationale_mask.iter().map(|&m| u8::from(m)).collect(),
        }
    }
}

impl DocumentRecord {
    fn into_document(self) -> std::result::Result<Document, String> {
        if let Some(bad) = self.rationale_mask.iter().find(|m| **m > 1) {
            return Err(format!("rationale_mask entries must be 0 or 1, found {bad}"));
        }
        let mask = self.rationale_mask.iter().map(|&m| m == 1).collect();
        Document::new(self.id, self.label, self.tokens, mask).map_err(|e| e.to_string())
    }
}

/// Parses a corpus from any reader; `path` is only used in error messages.
pub fn read_jsonl<R: BufRead>(reader: R, path: &Path) -> Result<Corpus> {
    let parse_err = |line: usize, message: String| LabError::Parse {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut docs = Vec::new();
    let mut ids = HashSet::new();
    let mut labels = std::collections::BTreeSet::new();
    for (i, line) in reader.lines().enumerate() {
        let lineno = i + 1;
        let line = line.map_err(|e| LabError::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: DocumentRecord =
            serde_json::from_str(&line).map_err(|e| parse_err(lineno, format!("malformed record: {e}")))?;
        let doc = rec.into_document().map_err(|m| parse_err(lineno, m))?;
        if !ids.insert(doc.id.clone()) {
            return Err(parse_err(lineno, format!("duplicate document id `{}`", doc.id)));
        }
        labels.insert(doc.label.clone());
        if labels.len() > 2 {
            return Err(parse_err(lineno, format!("more than two labels: {labels:?}")));
        }
        docs.push(doc);
    }
    if docs.is_empty() {
        return Err(LabError::Validation(format!("{}: corpus is empty", path.display())));
    }
    Ok(Corpus::new(docs)?)
}

pub fn load_jsonl(path: impl AsRef<Path>) -> Result<Corpus> {
    let path = path.as_ref();
    let f = File::open(path).map_err(|e| LabError::io(path, e))?;
    read_jsonl(BufReader::new(f), path)
}

pub fn write_jsonl<W: Write>(corpus: &Corpus, mut out: W) -> std::io::Result<()> {
    for d in corpus.docs() {
        serde_json::to_writer(&mut out, &DocumentRecord::from(d))?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

pub fn save_jsonl(corpus: &Corpus, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let f = File::create(path).map_err(|e| LabError::io(path, e))?;
    write_jsonl(corpus, BufWriter::new(f)).map_err(|e| LabError::io(path, e))
}
