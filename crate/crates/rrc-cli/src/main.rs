//! `rrc` command-line tool: train, classify, sample, evaluate, curate,
//! and apply overrides to reciprocal-rank language models.
//!
//! Exit codes: 0 success, 1 usage error, 2 data/model error.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rrc_core::{
    apply_overrides, classify, harvest, load_model_with, read_overrides, run_experiment,
    sample_chunks, save_model, to_overrides, train_with_stats, write_overrides, ClassifierModel,
    CorpusSpec, Outcome, ScoringParams, DEFAULT_CAPACITY,
};

/// Sentinel printed for abstentions; not a valid ISO-639-1 code.
const ABSTAIN: &str = "??";

#[derive(Parser)]
#[command(name = "rrc", version, about = "Reciprocal-rank language identifier")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ScoringArgs {
    /// Presence weight added per matched word
    #[arg(long, short = 'P', default_value_t = rrc_core::DEFAULT_PRESENCE_WEIGHT)]
    presence_weight: f64,
    /// Damping constant inside the rank square root
    #[arg(long, short = 'D', default_value_t = rrc_core::DEFAULT_DAMPING)]
    damping: f64,
    /// Character cutoff ratio in (0, 1]
    #[arg(long, default_value_t = rrc_core::DEFAULT_CHAR_CUTOFF_RATIO)]
    cutoff: f64,
}

impl ScoringArgs {
    fn params(&self) -> ScoringParams {
        ScoringParams {
            presence_weight: self.presence_weight,
            damping: self.damping,
            char_cutoff_ratio: self.cutoff,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum ClassifyMode {
    /// Print the winning code or "??"
    Winner,
    /// Print the winning code and its score
    Score,
    /// Print all surviving `code:score` pairs
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Build a model from a corpus directory (one subdirectory per language)
    Train {
        /// Corpus directory: <dir>/<LL>/*.txt
        #[arg(long)]
        corpus: PathBuf,
        /// Output model directory
        #[arg(long)]
        model: PathBuf,
        /// Maximum ranks kept per language
        #[arg(long, default_value_t = DEFAULT_CAPACITY)]
        capacity: usize,
    },
    /// Classify lines from a file or standard input
    Classify {
        #[arg(long)]
        model: PathBuf,
        /// Input file; standard input when omitted
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "winner")]
        mode: ClassifyMode,
        #[command(flatten)]
        scoring: ScoringArgs,
    },
    /// Split a text file into whitespace-delimited chunks
    Sample {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        target_size: usize,
    },
    /// Chunk a test corpus, classify it, and write a report
    Evaluate {
        #[arg(long)]
        model: PathBuf,
        /// Test corpus directory: <dir>/<LL>/*.txt
        #[arg(long)]
        test_corpus: PathBuf,
        #[arg(long)]
        target_size: usize,
        /// Report path; the tabular version is written next to it as <path>.tsv
        #[arg(long)]
        report: PathBuf,
        /// Count abstention as an extra class in the macro denominator
        #[arg(long)]
        macro_abstain_class: bool,
        #[command(flatten)]
        scoring: ScoringArgs,
    },
    /// Harvest candidate words from classified texts into an overrides file
    Curate {
        #[arg(long)]
        model: PathBuf,
        /// File of texts, one per line
        #[arg(long)]
        texts: PathBuf,
        #[arg(long, default_value_t = rrc_core::DEFAULT_TOP_N)]
        top_n: usize,
        /// Output overrides.tsv path
        #[arg(long)]
        output: PathBuf,
        #[command(flatten)]
        scoring: ScoringArgs,
    },
    /// Merge an overrides file into a model directory
    ApplyOverrides {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        overrides: PathBuf,
        /// Output model directory
        #[arg(long)]
        output: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(RunError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(RunError::Data(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

enum RunError {
    Usage(String),
    Data(rrc_core::Error),
}

impl From<rrc_core::Error> for RunError {
    fn from(e: rrc_core::Error) -> Self {
        RunError::Data(e)
    }
}

fn run(command: Command) -> Result<(), RunError> {
    match command {
        Command::Train {
            corpus,
            model,
            capacity,
        } => cmd_train(&corpus, &model, capacity),
        Command::Classify {
            model,
            input,
            mode,
            scoring,
        } => cmd_classify(&model, input.as_deref(), mode, scoring.params()),
        Command::Sample { input, target_size } => cmd_sample(&input, target_size),
        Command::Evaluate {
            model,
            test_corpus,
            target_size,
            report,
            macro_abstain_class,
            scoring,
        } => cmd_evaluate(
            &model,
            &test_corpus,
            target_size,
            &report,
            macro_abstain_class,
            scoring.params(),
        ),
        Command::Curate {
            model,
            texts,
            top_n,
            output,
            scoring,
        } => cmd_curate(&model, &texts, top_n, &output, scoring.params()),
        Command::ApplyOverrides {
            model,
            overrides,
            output,
        } => cmd_apply_overrides(&model, &overrides, &output),
    }
}

/// Collect <dir>/<LL>/* into per-language file lists. Every subdirectory
/// whose name looks like a language code must contain at least one file.
fn scan_corpus_dir(dir: &Path) -> Result<BTreeMap<String, Vec<PathBuf>>, RunError> {
    let mut files: BTreeMap<String, Vec<PathBuf>> = BTreeMap::new();
    let entries =
        fs::read_dir(dir).map_err(|e| RunError::Data(rrc_core::Error::io(dir, e)))?;
    for entry in entries {
        let entry = entry.map_err(|e| RunError::Data(rrc_core::Error::io(dir, e)))?;
        let path = entry.path();
        if !path.is_dir() {
            continue;
        }
        let Some(lang) = path.file_name().and_then(|n| n.to_str()) else {
            continue;
        };
        let mut lang_files: Vec<PathBuf> = fs::read_dir(&path)
            .map_err(|e| RunError::Data(rrc_core::Error::io(&path, e)))?
            .filter_map(|e| e.ok())
            .map(|e| e.path())
            .filter(|p| p.is_file())
            .collect();
        lang_files.sort();
        files.insert(lang.to_string(), lang_files);
    }
    if files.is_empty() {
        return Err(RunError::Usage(format!(
            "no language subdirectories found in {}",
            dir.display()
        )));
    }
    Ok(files)
}

fn cmd_train(corpus: &Path, model_dir: &Path, capacity: usize) -> Result<(), RunError> {
    let files = scan_corpus_dir(corpus)?;
    let mut spec = CorpusSpec::new(files);
    spec.capacity = capacity;
    let (model, stats) = train_with_stats(&spec)?;
    save_model(&model, model_dir)?;
    for (lang, (tokens, chars)) in &stats.per_language {
        println!("{lang}: {tokens} word tokens, {chars} characters");
    }
    Ok(())
}

fn load(model_dir: &Path, params: ScoringParams) -> Result<ClassifierModel, RunError> {
    params
        .validate()
        .map_err(|e| RunError::Usage(e.to_string()))?;
    Ok(load_model_with(model_dir, params, DEFAULT_CAPACITY)?)
}

fn cmd_classify(
    model_dir: &Path,
    input: Option<&Path>,
    mode: ClassifyMode,
    params: ScoringParams,
) -> Result<(), RunError> {
    let model = load(model_dir, params)?;
    let reader: Box<dyn BufRead> = match input {
        Some(path) => Box::new(io::BufReader::new(
            fs::File::open(path).map_err(|e| RunError::Data(rrc_core::Error::io(path, e)))?,
        )),
        None => Box::new(io::BufReader::new(io::stdin())),
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for line in reader.lines() {
        let line = line.map_err(|e| {
            RunError::Data(rrc_core::Error::io(input.unwrap_or(Path::new("<stdin>")), e))
        })?;
        let prediction = classify(&line, &model);
        let rendered = match mode {
            ClassifyMode::Winner => match &prediction.outcome {
                Outcome::Winner { language, .. } => language.clone(),
                Outcome::Abstain(_) => ABSTAIN.to_string(),
            },
            ClassifyMode::Score => match &prediction.outcome {
                Outcome::Winner { language, score } => format!("{language}\t{score:.6}"),
                Outcome::Abstain(_) => ABSTAIN.to_string(),
            },
            ClassifyMode::All => prediction
                .breakdown
                .iter()
                .map(|s| format!("{}:{:.6}", s.language, s.combined))
                .collect::<Vec<_>>()
                .join(" "),
        };
        writeln!(out, "{rendered}").map_err(|e| {
            RunError::Data(rrc_core::Error::io(Path::new("<stdout>"), e))
        })?;
    }
    Ok(())
}

fn cmd_sample(input: &Path, target_size: usize) -> Result<(), RunError> {
    if target_size < 1 {
        return Err(RunError::Usage("target size must be at least 1".to_string()));
    }
    let text = fs::read_to_string(input)
        .map_err(|e| RunError::Data(rrc_core::Error::io(input, e)))?;
    for chunk in sample_chunks(&text, target_size) {
        println!("{chunk}");
    }
    Ok(())
}

fn cmd_evaluate(
    model_dir: &Path,
    test_corpus: &Path,
    target_size: usize,
    report_path: &Path,
    macro_abstain_class: bool,
    params: ScoringParams,
) -> Result<(), RunError> {
    if target_size < 1 {
        return Err(RunError::Usage("target size must be at least 1".to_string()));
    }
    let model = load(model_dir, params)?;
    let files = scan_corpus_dir(test_corpus)?;
    let report = run_experiment(&model, &files, target_size, macro_abstain_class)?;
    fs::write(report_path, report.render_text())
        .map_err(|e| RunError::Data(rrc_core::Error::io(report_path, e)))?;
    let tsv_path = report_path.with_extension(match report_path.extension() {
        Some(ext) => format!("{}.tsv", ext.to_string_lossy()),
        None => "tsv".to_string(),
    });
    fs::write(&tsv_path, report.render_tsv())
        .map_err(|e| RunError::Data(rrc_core::Error::io(&tsv_path, e)))?;
    println!("accuracy: {:.2}", report.accuracy);
    println!("macro F1: {:.2}", report.macro_avg.f1);
    Ok(())
}

fn cmd_curate(
    model_dir: &Path,
    texts_path: &Path,
    top_n: usize,
    output: &Path,
    params: ScoringParams,
) -> Result<(), RunError> {
    let model = load(model_dir, params)?;
    let text = fs::read_to_string(texts_path)
        .map_err(|e| RunError::Data(rrc_core::Error::io(texts_path, e)))?;
    let texts: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    let candidates = harvest(&texts, &model, top_n);
    let set = to_overrides(&candidates);
    write_overrides(&set, output)?;
    println!("{} candidate words written", set.len());
    Ok(())
}

fn cmd_apply_overrides(
    model_dir: &Path,
    overrides_path: &Path,
    output: &Path,
) -> Result<(), RunError> {
    let model = load(model_dir, ScoringParams::default())?;
    let overrides = read_overrides(overrides_path)?;
    let merged = apply_overrides(&model, &overrides)?;
    save_model(&merged, output)?;
    Ok(())
}
