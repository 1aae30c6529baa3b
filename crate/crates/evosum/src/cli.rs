//! Orchestration behind the `evosum` binary: train, eval, summarize, and the
//! experiment grid. Commands return structured reports; the binary renders
//! them, multiplying scores by 100 for display.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::corpus::{article_lines, load_corpus, tokenize, Sentence};
use crate::error::{Error, Result};
use crate::ga::{evolve, GaConfig, GenerationStats};
use crate::rouge::rouge1;
use crate::summarizer::{sentence_weight, summarize};
use crate::vocab::build_vocabulary;
use crate::weights::{load_weights, write_stats_csv};

/// Everything one training run needs: corpora, limits, GA parameters, and
/// output paths.
#[derive(Debug, Clone)]
pub struct RunManifest {
    pub config: GaConfig,
    pub train_dir: PathBuf,
    pub vocab_dir: PathBuf,
    pub train_limit: Option<usize>,
    pub vocab_limit: Option<usize>,
    pub weights_out: PathBuf,
    pub stats_out: PathBuf,
}

impl RunManifest {
    fn validate(&self) -> Result<()> {
        self.config.validate()?;
        for (name, limit) in [("train", self.train_limit), ("vocab", self.vocab_limit)] {
            if limit == Some(0) {
                return Err(Error::InvalidConfig(format!("{name} limit must be >= 1")));
            }
        }
        for dir in [&self.train_dir, &self.vocab_dir] {
            require_dir(dir)?;
        }
        Ok(())
    }
}

fn require_dir(dir: &Path) -> Result<()> {
    if dir.is_dir() {
        Ok(())
    } else {
        Err(Error::io(
            dir,
            std::io::Error::new(std::io::ErrorKind::NotFound, "directory not found"),
        ))
    }
}

#[derive(Debug, Clone)]
pub struct TrainReport {
    pub train_docs: usize,
    pub vocab_docs: usize,
    pub vocab_size: usize,
    /// Training fitness of the best individual, in [0, 1].
    pub best_fitness: f64,
}

/// Build the vocabulary, train, and write the weights and stats files.
/// Nothing is written unless the whole run succeeds up to that point.
pub fn train(
    manifest: &RunManifest,
    progress: impl FnMut(&GenerationStats),
) -> Result<TrainReport> {
    manifest.validate()?;
    let vocab_corpus = load_corpus(&manifest.vocab_dir, manifest.vocab_limit)?;
    let vocabulary = build_vocabulary(&vocab_corpus);
    let train_corpus = load_corpus(&manifest.train_dir, manifest.train_limit)?;
    if train_corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let model = evolve(&manifest.config, &train_corpus, &vocabulary, progress)?;
    model.save_weights(&manifest.weights_out)?;
    write_stats_csv(&manifest.stats_out, &model.stats)?;
    Ok(TrainReport {
        train_docs: train_corpus.len(),
        vocab_docs: vocab_corpus.len(),
        vocab_size: vocabulary.len(),
        best_fitness: model.best_fitness(),
    })
}

#[derive(Debug, Clone)]
pub struct EvalReport {
    pub documents: usize,
    /// Corpus mean of the averaged sub-metrics; equals training fitness when
    /// run on the training corpus.
    pub mean_score: f64,
    pub mean_precision: f64,
    pub mean_recall: f64,
    pub mean_f1: f64,
}

/// Score a saved model over a test corpus with its stored threshold.
pub fn eval(weights_path: &Path, test_dir: &Path, test_limit: Option<usize>) -> Result<EvalReport> {
    if test_limit == Some(0) {
        return Err(Error::InvalidConfig("test limit must be >= 1".into()));
    }
    require_dir(test_dir)?;
    let model = load_weights(weights_path)?;
    let documents = load_corpus(test_dir, test_limit)?;
    if documents.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let (mut score, mut precision, mut recall, mut f1) = (0.0, 0.0, 0.0, 0.0);
    for doc in &documents {
        let summary = summarize(doc, &model.weights, &model.vocabulary, model.threshold)?;
        let rouge = rouge1(summary.tokens(), doc.reference())?;
        score += rouge.mean();
        precision += rouge.precision;
        recall += rouge.recall;
        f1 += rouge.f1;
    }
    let n = documents.len() as f64;
    Ok(EvalReport {
        documents: documents.len(),
        mean_score: score / n,
        mean_precision: precision / n,
        mean_recall: recall / n,
        mean_f1: f1 / n,
    })
}

/// Extract the sentences of `input` whose weight passes the model's
/// threshold, returned as the original article lines in order. The input may
/// be a story file (highlights are ignored) or plain text.
pub fn summarize_file(weights_path: &Path, input: &Path) -> Result<Vec<String>> {
    let model = load_weights(weights_path)?;
    let raw = std::fs::read_to_string(input).map_err(|e| Error::io(input, e))?;
    let mut selected = Vec::new();
    for (index, line) in article_lines(&raw).into_iter().enumerate() {
        let sentence = Sentence::new(tokenize(line), index)?;
        if sentence_weight(&sentence, &model.weights, &model.vocabulary)? > model.threshold {
            selected.push(line.to_string());
        }
    }
    Ok(selected)
}

/// One experiment-grid cell: a training-set size and a vocabulary-corpus
/// size (`None` means the entire vocabulary directory).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridCell {
    pub train_limit: usize,
    pub vocab_limit: Option<usize>,
}

impl FromStr for GridCell {
    type Err = String;

    /// Parses `TRAINxVOCAB`, where `VOCAB` is a count or `all`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (train, vocab) = s
            .split_once('x')
            .ok_or_else(|| format!("expected TRAINxVOCAB, got `{s}`"))?;
        let train_limit: usize = train
            .parse()
            .map_err(|_| format!("invalid train size `{train}`"))?;
        let vocab_limit = if vocab == "all" {
            None
        } else {
            Some(
                vocab
                    .parse()
                    .map_err(|_| format!("invalid vocab size `{vocab}`"))?,
            )
        };
        if train_limit == 0 || vocab_limit == Some(0) {
            return Err(format!("cell sizes must be >= 1, got `{s}`"));
        }
        Ok(GridCell {
            train_limit,
            vocab_limit,
        })
    }
}

impl GridCell {
    fn label(&self) -> String {
        match self.vocab_limit {
            Some(v) => format!("t{}_v{}", self.train_limit, v),
            None => format!("t{}_vall", self.train_limit),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GridRow {
    pub train_size: usize,
    pub vocab_size: usize,
    /// Scores in [0, 1]; the summary CSV renders them x100.
    pub train_score: f64,
    pub test_score: f64,
}

/// Train and evaluate every cell, seeding cell `i` with `base seed + i`.
///
/// Per-cell weights and stats files land in `out_dir`, along with a
/// `summary.csv` whose columns are
/// `train_size,vocab_size,train_score,test_score`. Any failing cell aborts
/// the grid.
pub fn experiment_grid(
    base: &RunManifest,
    cells: &[GridCell],
    test_dir: &Path,
    test_limit: Option<usize>,
    out_dir: &Path,
    mut progress: impl FnMut(usize, &GenerationStats),
) -> Result<Vec<GridRow>> {
    std::fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
    let mut rows = Vec::with_capacity(cells.len());
    for (index, cell) in cells.iter().enumerate() {
        let mut manifest = base.clone();
        manifest.config.seed = base.config.seed.wrapping_add(index as u64);
        manifest.train_limit = Some(cell.train_limit);
        manifest.vocab_limit = cell.vocab_limit;
        manifest.weights_out = out_dir.join(format!("weights_{}.txt", cell.label()));
        manifest.stats_out = out_dir.join(format!("stats_{}.csv", cell.label()));
        let report = train(&manifest, |s| progress(index, s))?;
        let evaluated = eval(&manifest.weights_out, test_dir, test_limit)?;
        rows.push(GridRow {
            train_size: report.train_docs,
            vocab_size: report.vocab_docs,
            train_score: report.best_fitness,
            test_score: evaluated.mean_score,
        });
    }

    let mut csv = String::from("train_size,vocab_size,train_score,test_score\n");
    for row in &rows {
        let _ = writeln!(
            csv,
            "{},{},{:.2},{:.2}",
            row.train_size,
            row.vocab_size,
            row.train_score * 100.0,
            row.test_score * 100.0
        );
    }
    let summary_path = out_dir.join("summary.csv");
    std::fs::write(&summary_path, csv).map_err(|e| Error::io(&summary_path, e))?;
    Ok(rows)
}
