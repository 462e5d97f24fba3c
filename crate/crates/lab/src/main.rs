use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use spurious_core::corpus::equal_mass_fraction;
use spurious_core::scm::MonteCarlo;
use spurious_lab::dump::write_linear_dump;
use spurious_lab::jsonl::load_jsonl;
use spurious_lab::noise_sweep::{
    fit_baseline, run_noise_sweep_on, ExperimentConfig, FittedModel, ModelKind, TargetSelection,
};
use spurious_lab::report::emit_csv;
use spurious_lab::scm_sweep::{parse_setting, run_scm_sweep, ScmSweepConfig};
use spurious_lab::synth::{write_planted, SynthConfig};
use spurious_lab::{LabError, Result};
use toml::{Table, Value};

/// Measurement-noise experiments on structural causal models and text classifiers.
#[derive(Debug, Parser)]
#[command(name = "spurious-lab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analytic (and optionally Monte Carlo) OLS estimates over a grid of noise variances.
    ScmSweep(ScmSweepArgs),
    /// Corrupt rationale or non-rationale tokens, retrain, and evaluate on clean corpora.
    NoiseSweep(NoiseSweepArgs),
    /// Write a synthetic corpus with a planted confounder.
    SynthGen(SynthGenArgs),
    /// Print the non-rationale fraction whose corrupted mass matches all rationales.
    EqualMass(EqualMassArgs),
}

#[derive(Debug, Args)]
struct ScmSweepArgs {
    /// TOML file with keys `setting`, `eps_grid`, `mc_n`, `mc_seed` and a `[params]` table.
    #[arg(long)]
    config: Option<PathBuf>,
    /// causal-x1, anticausal-x1 or anticausal-x2.
    #[arg(long)]
    setting: Option<String>,
    /// Comma-separated noise variances, non-decreasing.
    #[arg(long = "eps", value_delimiter = ',', num_args = 1..)]
    eps_grid: Option<Vec<f64>>,
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    c: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    d: Option<f64>,
    #[arg(long)]
    var_uz: Option<f64>,
    #[arg(long)]
    var_uq: Option<f64>,
    #[arg(long)]
    var_uy: Option<f64>,
    #[arg(long)]
    var_ux1: Option<f64>,
    #[arg(long)]
    var_ux2: Option<f64>,
    /// Monte Carlo sample size; omit for analytic columns only.
    #[arg(long)]
    mc_n: Option<usize>,
    #[arg(long)]
    mc_seed: Option<u64>,
    /// Output CSV; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct NoiseSweepArgs {
    /// TOML file whose keys mirror the flag names (with underscores).
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    train: Option<PathBuf>,
    /// Evaluation corpus as `name=path`; repeat in output order.
    #[arg(long = "eval", value_parser = parse_named_path)]
    eval: Vec<(String, PathBuf)>,
    #[arg(long, value_enum)]
    target: Option<TargetSelection>,
    /// Comma-separated fractions in [0, 1], sorted and unique.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    fractions: Option<Vec<f64>>,
    #[arg(long)]
    repetitions: Option<usize>,
    #[arg(long, value_enum)]
    model: Option<ModelKind>,
    #[arg(long)]
    vocab_cap: Option<usize>,
    #[arg(long)]
    base_seed: Option<u64>,
    #[arg(long)]
    svm_c: Option<f64>,
    #[arg(long)]
    svm_epochs: Option<usize>,
    #[arg(long)]
    nb_alpha: Option<f64>,
    /// Downsample evaluation corpora to equal label counts.
    #[arg(long)]
    balance_eval: bool,
    /// Output CSV; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the clean-data linear model's weights here.
    #[arg(long)]
    dump_model: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SynthGenArgs {
    /// TOML file whose keys mirror the flag names (with underscores).
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    out_dir: PathBuf,
    #[arg(long)]
    n_train: Option<usize>,
    #[arg(long)]
    n_id_test: Option<usize>,
    #[arg(long)]
    n_ood_test: Option<usize>,
    #[arg(long)]
    n_causal_tokens: Option<usize>,
    #[arg(long)]
    n_spurious_tokens: Option<usize>,
    #[arg(long)]
    n_filler_tokens: Option<usize>,
    #[arg(long)]
    causal_strength: Option<f64>,
    #[arg(long)]
    confound_strength: Option<f64>,
    #[arg(long)]
    doc_length: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Args)]
struct EqualMassArgs {
    #[arg(long)]
    corpus: PathBuf,
}

fn parse_named_path(s: &str) -> std::result::Result<(String, PathBuf), String> {
    match s.split_once('=') {
        Some((name, path)) if !name.is_empty() && !path.is_empty() => Ok((name.to_string(), PathBuf::from(path))),
        _ => Err(format!("expected name=path, got `{s}`")),
    }
}

fn read_config(path: Option<&Path>) -> Result<Table> {
    let Some(path) = path else {
        return Ok(Table::new());
    };
    let text = std::fs::read_to_string(path).map_err(|e| LabError::io(path, e))?;
    text.parse::<Table>()
        .map_err(|e| LabError::Validation(format!("{}: {e}", path.display())))
}

fn set<T: Into<Value>>(table: &mut Table, key: &str, value: Option<T>) {
    if let Some(v) = value {
        table.insert(key.to_string(), v.into());
    }
}

fn set_int<T: TryInto<i64> + Copy + std::fmt::Display>(table: &mut Table, key: &str, value: Option<T>) -> Result<()> {
    if let Some(v) = value {
        let i = v
            .try_into()
            .map_err(|_| LabError::Validation(format!("--{} {v} is out of range", key.replace('_', "-"))))?;
        table.insert(key.to_string(), Value::Integer(i));
    }
    Ok(())
}

fn path_value(p: &Path) -> Value {
    Value::String(p.to_string_lossy().into_owned())
}

fn finish<T: DeserializeOwned>(table: Table, what: &str) -> Result<T> {
    table
        .try_into()
        .map_err(|e| LabError::Validation(format!("{what}: {e}")))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| LabError::io(path, e))
}

fn write_text(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => {
            let mut w = create(p)?;
            w.write_all(text.as_bytes())
                .and_then(|_| w.flush())
                .map_err(|e| LabError::io(p, e))
        }
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| LabError::io("<stdout>", e)),
    }
}

fn scm_sweep(args: ScmSweepArgs) -> Result<()> {
    let mut table = read_config(args.config.as_deref())?;
    set(&mut table, "setting", args.setting);
    set(&mut table, "eps_grid", args.eps_grid);
    set_int(&mut table, "mc_n", args.mc_n)?;
    set_int(&mut table, "mc_seed", args.mc_seed)?;
    let params = table.entry("params").or_insert_with(|| Value::Table(Table::new()));
    let Value::Table(params) = params else {
        return Err(LabError::Validation("config: `params` must be a table".into()));
    };
    for (key, v) in [
        ("a", args.a),
        ("b", args.b),
        ("c", args.c),
        ("d", args.d),
        ("var_uz", args.var_uz),
        ("var_uq", args.var_uq),
        ("var_uy", args.var_uy),
        ("var_ux1", args.var_ux1),
        ("var_ux2", args.var_ux2),
    ] {
        set(params, key, v);
    }
    let cfg: ScmSweepConfig = finish(table, "scm-sweep config")?;
    let setting = parse_setting(
        cfg.setting
            .as_deref()
            .ok_or_else(|| LabError::Validation("--setting is required".into()))?,
    )?;
    let grid = cfg
        .eps_grid
        .ok_or_else(|| LabError::Validation("--eps is required".into()))?;
    let params = cfg.params.resolve(setting)?;
    let mc = match (cfg.mc_n, cfg.mc_seed) {
        (Some(n), seed) => Some(MonteCarlo {
            n,
            seed: seed.unwrap_or(0),
        }),
        (None, Some(_)) => return Err(LabError::Validation("--mc-seed needs --mc-n".into())),
        (None, None) => None,
    };
    let csv = run_scm_sweep(setting, &params, &grid, mc)?;
    write_text(args.out.as_deref(), &csv)
}

fn noise_sweep(args: NoiseSweepArgs) -> Result<()> {
    let mut table = read_config(args.config.as_deref())?;
    set(&mut table, "train_path", args.train.as_deref().map(path_value));
    if !args.eval.is_empty() {
        let evals: Table = args.eval.iter().map(|(n, p)| (n.clone(), path_value(p))).collect();
        table.insert("eval_paths".into(), Value::Table(evals));
    }
    set(&mut table, "target", args.target.map(|t| kebab(&t)));
    set(&mut table, "fractions", args.fractions);
    set_int(&mut table, "repetitions", args.repetitions)?;
    set(&mut table, "model", args.model.map(|m| m.name()));
    set_int(&mut table, "vocab_cap", args.vocab_cap)?;
    set_int(&mut table, "base_seed", args.base_seed)?;
    set(&mut table, "svm_c", args.svm_c);
    set_int(&mut table, "svm_epochs", args.svm_epochs)?;
    set(&mut table, "nb_alpha", args.nb_alpha);
    if args.balance_eval {
        table.insert("balance_eval".into(), Value::Boolean(true));
    }
    if !table.contains_key("train_path") {
        return Err(LabError::Validation("--train is required".into()));
    }
    if !table.contains_key("eval_paths") {
        return Err(LabError::Validation("at least one --eval name=path is required".into()));
    }
    let cfg: ExperimentConfig = finish(table, "noise-sweep config")?;
    cfg.validate()?;
    if args.dump_model.is_some() && cfg.model != ModelKind::LinearSvm {
        return Err(LabError::Validation("--dump-model needs --model linear-svm".into()));
    }

    let train = load_jsonl(&cfg.train_path)?;
    let evals = cfg
        .eval_paths
        .iter()
        .map(|(d, p)| Ok((d.clone(), load_jsonl(p)?)))
        .collect::<Result<Vec<_>>>()?;
    match equal_mass_fraction(&train) {
        Ok(f) => eprintln!("equal-mass fraction: {f:.4}"),
        Err(e) => eprintln!("equal-mass fraction: undefined ({e})"),
    }
    let result = run_noise_sweep_on(&cfg, &train, &evals)?;
    match &args.out {
        Some(p) => emit_csv(&result, p)?,
        None => write_text(None, &result.to_csv_string()?)?,
    }
    if let Some(path) = &args.dump_model {
        if let FittedModel::Svm { tfidf, model } = fit_baseline(&cfg, &train)? {
            let w = create(path)?;
            write_linear_dump(&model, &tfidf.vocab, w).map_err(|e| LabError::io(path, e))?;
        }
    }
    Ok(())
}

fn kebab<T: serde::Serialize>(v: &T) -> Value {
    Value::try_from(v).expect("unit enum serializes to a string")
}

fn synth_gen(args: SynthGenArgs) -> Result<()> {
    let mut table = read_config(args.config.as_deref())?;
    set_int(&mut table, "n_train", args.n_train)?;
    set_int(&mut table, "n_id_test", args.n_id_test)?;
    set_int(&mut table, "n_ood_test", args.n_ood_test)?;
    set_int(&mut table, "n_causal_tokens", args.n_causal_tokens)?;
    set_int(&mut table, "n_spurious_tokens", args.n_spurious_tokens)?;
    set_int(&mut table, "n_filler_tokens", args.n_filler_tokens)?;
    set(&mut table, "causal_strength", args.causal_strength);
    set(&mut table, "confound_strength", args.confound_strength);
    set_int(&mut table, "doc_length", args.doc_length)?;
    set_int(&mut table, "seed", args.seed)?;
    let cfg: SynthConfig = finish(table, "synth-gen config")?;
    let c = write_planted(&cfg.into(), &args.out_dir)?;
    eprintln!(
        "wrote {} train, {} in-domain and {} out-of-domain documents to {}",
        c.train.len(),
        c.id_test.len(),
        c.ood_test.len(),
        args.out_dir.display()
    );
    Ok(())
}

fn equal_mass(args: EqualMassArgs) -> Result<()> {
    let corpus = load_jsonl(&args.corpus)?;
    let f = equal_mass_fraction(&corpus)?;
    write_text(None, &format!("{f}\n"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::ScmSweep(a) => scm_sweep(a),
        Command::NoiseSweep(a) => noise_sweep(a),
        Command::SynthGen(a) => synth_gen(a),
        Command::EqualMass(a) => equal_mass(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
