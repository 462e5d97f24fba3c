//! Rationale-noise sweeps: corrupt the training corpus, retrain, evaluate
//! on clean held-out corpora.
//!
//! Each cell `(target, fraction, repetition)` is independent:
//!
//! 1. the clean training corpus is corrupted with
//!    `NoiseSpec { target, fraction, seed: mix_all(base_seed, [target, fraction_index, repetition]) }`,
//!    drawing replacements from the clean training vocabulary;
//! 2. a vocabulary and TF-IDF model are refit on the corrupted corpus and a
//!    classifier is trained with seed `mix_all(base_seed, [MODEL_STREAM, repetition])`;
//! 3. the classifier is scored on every evaluation corpus, none of which is
//!    ever corrupted.
//!
//! The model seed does not depend on the target or fraction, so every
//! target's fraction-0 cell reproduces the uncorrupted baseline exactly.

use std::path::PathBuf;

use indexmap::IndexMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use spurious_core::corpus::{build_vocabulary, enforce_balanced_split, Corpus, Vocabulary};
use spurious_core::noiser::{corrupt_corpus, NoiseSpec, NoiseTarget};
use spurious_core::rng::mix_all;
use spurious_core::textmodel::{
    evaluate, fit_tfidf, train_linear, train_naive_bayes, transform, Classifier, LabelMap, LinearHyper, LinearModel,
    NaiveBayesModel, TfidfModel,
};

use crate::error::{LabError, Result};
use crate::jsonl::load_jsonl;
use crate::report::{Repetition, ResultRow, ResultTable};

/// Coordinate reserved for model seeds; noise seeds use target codes 1 and 2.
const MODEL_STREAM: u64 = u64::MAX;
/// Coordinate for the evaluation-set balancing stream.
const BALANCE_STREAM: u64 = u64::MAX - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum TargetSelection {
    Rationale,
    NonRationale,
    Both,
}

impl TargetSelection {
    pub fn targets(self) -> Vec<NoiseTarget> {
        match self {
            TargetSelection::Rationale => vec![NoiseTarget::Rationale],
            TargetSelection::NonRationale => vec![NoiseTarget::NonRationale],
            TargetSelection::Both => vec![NoiseTarget::Rationale, NoiseTarget::NonRationale],
        }
    }
}

fn target_code(t: NoiseTarget) -> u64 {
    match t {
        NoiseTarget::Rationale => 1,
        NoiseTarget::NonRationale => 2,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    LinearSvm,
    NaiveBayes,
}

impl ModelKind {
    pub fn name(self) -> &'static str {
        match self {
            ModelKind::LinearSvm => "linear-svm",
            ModelKind::NaiveBayes => "naive-bayes",
        }
    }
}

pub fn default_fractions() -> Vec<f64> {
    (0..=10).map(|i| i as f64 / 10.0).collect()
}

fn default_repetitions() -> usize {
    5
}

fn default_target() -> TargetSelection {
    TargetSelection::Both
}

fn default_model() -> ModelKind {
    ModelKind::LinearSvm
}

fn default_svm_c() -> f64 {
    LinearHyper::default().c
}

fn default_svm_epochs() -> usize {
    LinearHyper::default().epochs
}

fn default_nb_alpha() -> f64 {
    1.0
}

/// Sweep configuration. Field names double as config-file keys.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub train_path: PathBuf,
    /// Evaluation corpora by domain name; the first is the in-sample test.
    pub eval_paths: IndexMap<String, PathBuf>,
    #[serde(default = "default_target")]
    pub target: TargetSelection,
    #[serde(default = "default_fractions")]
    pub fractions: Vec<f64>,
    #[serde(default = "default_repetitions")]
    pub repetitions: usize,
    #[serde(default = "default_model")]
    pub model: ModelKind,
    #[serde(default)]
    pub vocab_cap: Option<usize>,
    #[serde(default)]
    pub base_seed: u64,
    #[serde(default = "default_svm_c")]
    pub svm_c: f64,
    #[serde(default = "default_svm_epochs")]
    pub svm_epochs: usize,
    #[serde(default = "default_nb_alpha")]
    pub nb_alpha: f64,
    /// Downsample each evaluation corpus to a 50:50 label split.
    #[serde(default)]
    pub balance_eval: bool,
}

impl ExperimentConfig {
    pub fn new(train_path: impl Into<PathBuf>, eval_paths: IndexMap<String, PathBuf>) -> Self {
        Self {
            train_path: train_path.into(),
            eval_paths,
            target: default_target(),
            fractions: default_fractions(),
            repetitions: default_repetitions(),
            model: default_model(),
            vocab_cap: None,
            base_seed: 0,
            svm_c: default_svm_c(),
            svm_epochs: default_svm_epochs(),
            nb_alpha: default_nb_alpha(),
            balance_eval: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.eval_paths.is_empty() {
            return Err(LabError::Validation(
                "at least one evaluation corpus is required".into(),
            ));
        }
        self.validate_sweep()
    }

    /// Checks everything except the corpus paths.
    pub fn validate_sweep(&self) -> Result<()> {
        let bad = |m: String| Err(LabError::Validation(m));
        if self.fractions.is_empty() {
            return bad("fractions must not be empty".into());
        }
        if let Some(f) = self.fractions.iter().find(|f| !(0.0..=1.0).contains(*f)) {
            return bad(format!("fraction {f} outside [0, 1]"));
        }
        if self.fractions.windows(2).any(|w| w[1] <= w[0]) {
            return bad(format!("fractions must be sorted and unique: {:?}", self.fractions));
        }
        if self.repetitions == 0 {
            return bad("repetitions must be at least 1".into());
        }
        if !(self.svm_c.is_finite() && self.svm_c > 0.0) || self.svm_epochs == 0 {
            return bad("svm_c must be positive and svm_epochs at least 1".into());
        }
        if !(self.nb_alpha.is_finite() && self.nb_alpha > 0.0) {
            return bad("nb_alpha must be positive".into());
        }
        if self.vocab_cap == Some(0) {
            return bad("vocab_cap must be positive".into());
        }
        Ok(())
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| LabError::Validation(format!("config: {e}")))
    }
}

/// A trained classifier with the features it was trained on.
#[derive(Debug, Clone)]
pub enum FittedModel {
    Svm { tfidf: TfidfModel, model: LinearModel },
    Bayes { tfidf: TfidfModel, model: NaiveBayesModel },
}

impl FittedModel {
    pub fn tfidf(&self) -> &TfidfModel {
        match self {
            FittedModel::Svm { tfidf, .. } | FittedModel::Bayes { tfidf, .. } => tfidf,
        }
    }

    pub fn classifier(&self) -> &dyn Classifier {
        match self {
            FittedModel::Svm { model, .. } => model,
            FittedModel::Bayes { model, .. } => model,
        }
    }

    pub fn accuracy(&self, labels: &LabelMap, c: &Corpus) -> Result<f64> {
        Ok(evaluate(self.classifier(), self.tfidf(), labels, c)?)
    }
}

/// Fits vocabulary, TF-IDF and the configured classifier on `train`.
pub fn fit_model(cfg: &ExperimentConfig, train: &Corpus, labels: &LabelMap, seed: u64) -> Result<FittedModel> {
    let vocab = build_vocabulary(train, cfg.vocab_cap)?;
    let tfidf = fit_tfidf(train, &vocab)?;
    Ok(match cfg.model {
        ModelKind::LinearSvm => {
            let xs: Vec<_> = train.docs().iter().map(|d| transform(&tfidf, d)).collect();
            let ys = train
                .docs()
                .iter()
                .map(|d| labels.sign(&d.label))
                .collect::<spurious_core::Result<Vec<_>>>()?;
            let hyper = LinearHyper {
                c: cfg.svm_c,
                epochs: cfg.svm_epochs,
                seed,
            };
            let model = train_linear(&xs, &ys, vocab.len(), &hyper)?;
            FittedModel::Svm { tfidf, model }
        }
        ModelKind::NaiveBayes => {
            let model = train_naive_bayes(train, &vocab, labels, cfg.nb_alpha)?;
            FittedModel::Bayes { tfidf, model }
        }
    })
}

/// Model trained on the clean corpus with repetition 0's seed.
pub fn fit_baseline(cfg: &ExperimentConfig, train: &Corpus) -> Result<FittedModel> {
    let labels = LabelMap::from_corpus(train)?;
    fit_model(cfg, train, &labels, mix_all(cfg.base_seed, &[MODEL_STREAM, 0]))
}

struct Cell {
    target: NoiseTarget,
    fraction_index: usize,
    repetition: usize,
}

fn run_cell(
    cfg: &ExperimentConfig,
    train: &Corpus,
    noise_vocab: &Vocabulary,
    labels: &LabelMap,
    evals: &[(String, Corpus)],
    cell: &Cell,
) -> Result<Vec<f64>> {
    let seed = mix_all(
        cfg.base_seed,
        &[
            target_code(cell.target),
            cell.fraction_index as u64,
            cell.repetition as u64,
        ],
    );
    let spec = NoiseSpec::new(cell.target, cfg.fractions[cell.fraction_index], seed)?;
    let corrupted = corrupt_corpus(train, &spec, noise_vocab)?;
    let model_seed = mix_all(cfg.base_seed, &[MODEL_STREAM, cell.repetition as u64]);
    let fitted = fit_model(cfg, &corrupted, labels, model_seed)?;
    evals.iter().map(|(_, c)| fitted.accuracy(labels, c)).collect()
}

/// Runs a sweep over already-loaded corpora. `evals` keeps its order in the
/// output; the first entry is conventionally the in-sample test set.
pub fn run_noise_sweep_on(cfg: &ExperimentConfig, train: &Corpus, evals: &[(String, Corpus)]) -> Result<ResultTable> {
    cfg.validate_sweep()?;
    if evals.is_empty() {
        return Err(LabError::Validation(
            "at least one evaluation corpus is required".into(),
        ));
    }
    let labels = LabelMap::from_corpus(train)?;
    for (domain, c) in evals {
        if let Some(l) = c.labels().iter().find(|l| labels.sign(l).is_err()) {
            return Err(LabError::Validation(format!(
                "evaluation corpus `{domain}` has label `{l}` not present in training data"
            )));
        }
    }
    let evals: Vec<(String, Corpus)> = if cfg.balance_eval {
        evals
            .iter()
            .enumerate()
            .map(|(i, (d, c))| {
                Ok((
                    d.clone(),
                    enforce_balanced_split(c, mix_all(cfg.base_seed, &[BALANCE_STREAM, i as u64]))?,
                ))
            })
            .collect::<Result<_>>()?
    } else {
        evals.to_vec()
    };
    let noise_vocab = build_vocabulary(train, cfg.vocab_cap)?;

    let targets = cfg.target.targets();
    let cells: Vec<Cell> = targets
        .iter()
        .flat_map(|&target| {
            (0..cfg.fractions.len()).flat_map(move |fraction_index| {
                (0..cfg.repetitions).map(move |repetition| Cell {
                    target,
                    fraction_index,
                    repetition,
                })
            })
        })
        .collect();
    let accuracies: Vec<Vec<f64>> = cells
        .par_iter()
        .map(|cell| run_cell(cfg, train, &noise_vocab, &labels, &evals, cell))
        .collect::<Result<_>>()?;

    let mut rows = Vec::with_capacity(cells.len() * evals.len() + cells.len() / cfg.repetitions * evals.len());
    for (ti, &target) in targets.iter().enumerate() {
        for (fi, &fraction) in cfg.fractions.iter().enumerate() {
            let base = (ti * cfg.fractions.len() + fi) * cfg.repetitions;
            for (di, (domain, _)) in evals.iter().enumerate() {
                let row = |repetition, accuracy| ResultRow {
                    model: cfg.model.name().into(),
                    domain: domain.clone(),
                    target: target.name().into(),
                    fraction,
                    repetition,
                    accuracy,
                };
                let mut sum = 0.0;
                for r in 0..cfg.repetitions {
                    let acc = accuracies[base + r][di];
                    sum += acc;
                    rows.push(row(Repetition::Index(r), acc));
                }
                rows.push(row(Repetition::Mean, sum / cfg.repetitions as f64));
            }
        }
    }
    Ok(ResultTable { rows })
}

/// Loads the configured corpora and runs the sweep.
pub fn run_noise_sweep(cfg: &ExperimentConfig) -> Result<ResultTable> {
    cfg.validate()?;
    let train = load_jsonl(&cfg.train_path)?;
    let evals = cfg
        .eval_paths
        .iter()
        .map(|(d, p)| Ok((d.clone(), load_jsonl(p)?)))
        .collect::<Result<Vec<_>>>()?;
    run_noise_sweep_on(cfg, &train, &evals)
}
