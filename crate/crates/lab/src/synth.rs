//! Config-file and command-line form of the planted corpus generator.

use std::path::Path;

use serde::{Deserialize, Serialize};
use spurious_core::planted::{generate_planted_corpus, PlantedCorpora, PlantedCorpusSpec};

use crate::error::{LabError, Result};
use crate::jsonl::save_jsonl;

/// Mirror of [`PlantedCorpusSpec`]; missing keys take the calibration values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SynthConfig {
    pub n_train: usize,
    pub n_id_test: usize,
    pub n_ood_test: usize,
    pub n_causal_tokens: usize,
    pub n_spurious_tokens: usize,
    pub n_filler_tokens: usize,
    pub causal_strength: f64,
    pub confound_strength: f64,
    pub doc_length: usize,
    pub seed: u64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        PlantedCorpusSpec::calibration().into()
    }
}

impl From<PlantedCorpusSpec> for SynthConfig {
    fn from(s: PlantedCorpusSpec) -> Self {
        Self {
            n_train: s.n_train,
            n_id_test: s.n_id_test,
            n_ood_test: s.n_ood_test,
            n_causal_tokens: s.n_causal_tokens,
            n_spurious_tokens: s.n_spurious_tokens,
            n_filler_tokens: s.n_filler_tokens,
            causal_strength: s.causal_strength,
            confound_strength: s.confound_strength,
            doc_length: s.doc_length,
            seed: s.seed,
        }
    }
}

impl From<SynthConfig> for PlantedCorpusSpec {
    fn from(s: SynthConfig) -> Self {
        Self {
            n_train: s.n_train,
            n_id_test: s.n_id_test,
            n_ood_test: s.n_ood_test,
            n_causal_tokens: s.n_causal_tokens,
            n_spurious_tokens: s.n_spurious_tokens,
            n_filler_tokens: s.n_filler_tokens,
            causal_strength: s.causal_strength,
            confound_strength: s.confound_strength,
            doc_length: s.doc_length,
            seed: s.seed,
        }
    }
}

pub const SPLIT_FILES: [&str; 3] = ["train.jsonl", "id_test.jsonl", "ood_test.jsonl"];

/// Generates the three splits and writes them to `dir` as
/// `train.jsonl`, `id_test.jsonl` and `ood_test.jsonl`.
pub fn write_planted(spec: &PlantedCorpusSpec, dir: &Path) -> Result<PlantedCorpora> {
    let corpora = generate_planted_corpus(spec)?;
    std::fs::create_dir_all(dir).map_err(|e| LabError::io(dir, e))?;
    for (name, c) in SPLIT_FILES
        .iter()
        .zip([&corpora.train, &corpora.id_test, &corpora.ood_test])
    {
        save_jsonl(c, dir.join(name))?;
    }
    Ok(corpora)
}
