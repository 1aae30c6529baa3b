//! Weights-file and stats-file serialization.
//!
//! Weights files are UTF-8 text:
//!
//! ```text
//! evosum-weights v1
//! threshold 0.6
//! vocab_size 3
//! the<TAB>0.10584083413778897
//! cat<TAB>0.85
//! sat<TAB>0
//! ```
//!
//! Weights are written as the shortest decimal that round-trips to the same
//! binary value, so save -> load -> save is byte-identical. Stats files are
//! CSV with the header `generation,min,mean,max,best_so_far`.

use std::fmt::Write as _;
use std::path::Path;

use crate::corpus::Token;
use crate::error::{Error, Result};
use crate::ga::{GenerationStats, TrainedModel};
use crate::summarizer::Chromosome;
use crate::vocab::Vocabulary;

const MAGIC: &str = "evosum-weights v1";

/// A saved model: vocabulary, per-token weights, and the extraction
/// threshold it was trained with.
#[derive(Debug, Clone)]
pub struct WeightsFile {
    pub vocabulary: Vocabulary,
    pub weights: Chromosome,
    pub threshold: f64,
}

/// Serialize a vocabulary/weights pair.
pub fn save_weights(
    path: &Path,
    vocab: &Vocabulary,
    weights: &Chromosome,
    threshold: f64,
) -> Result<()> {
    if weights.len() != vocab.len() {
        return Err(Error::DimensionMismatch {
            expected: vocab.len(),
            actual: weights.len(),
        });
    }
    let mut out = String::new();
    let _ = writeln!(out, "{MAGIC}");
    let _ = writeln!(out, "threshold {threshold}");
    let _ = writeln!(out, "vocab_size {}", vocab.len());
    for (token, weight) in vocab.entries().iter().zip(weights.weights()) {
        let _ = writeln!(out, "{token}\t{weight}");
    }
    std::fs::write(path, out).map_err(|e| Error::io(path, e))
}

impl TrainedModel {
    /// Save the best individual alongside its vocabulary and threshold.
    pub fn save_weights(&self, path: &Path) -> Result<()> {
        save_weights(path, &self.vocabulary, &self.best, self.config.threshold)
    }
}

fn format_error(line: usize, message: impl Into<String>) -> Error {
    Error::WeightsFormat {
        line,
        message: message.into(),
    }
}

/// Load and validate a weights file.
pub fn load_weights(path: &Path) -> Result<WeightsFile> {
    let raw = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut lines = raw.lines().enumerate().map(|(i, l)| (i + 1, l));

    let (n, magic) = lines.next().ok_or_else(|| format_error(1, "empty file"))?;
    if magic != MAGIC {
        return Err(format_error(
            n,
            format!("expected `{MAGIC}`, found `{magic}`"),
        ));
    }

    let (n, line) = lines
        .next()
        .ok_or_else(|| format_error(2, "missing threshold line"))?;
    let threshold = line
        .strip_prefix("threshold ")
        .and_then(|v| v.parse::<f64>().ok())
        .ok_or_else(|| format_error(n, "expected `threshold <decimal>`"))?;
    if !(0.0..=1.0).contains(&threshold) {
        return Err(format_error(
            n,
            format!("threshold {threshold} outside [0, 1]"),
        ));
    }

    let (n, line) = lines
        .next()
        .ok_or_else(|| format_error(3, "missing vocab_size line"))?;
    let vocab_size = line
        .strip_prefix("vocab_size ")
        .and_then(|v| v.parse::<usize>().ok())
        .ok_or_else(|| format_error(n, "expected `vocab_size <count>`"))?;

    let mut entries = Vec::with_capacity(vocab_size);
    let mut weights = Vec::with_capacity(vocab_size);
    for (n, line) in lines {
        if entries.len() == vocab_size {
            return Err(format_error(
                n,
                format!("unexpected content after {vocab_size} entries"),
            ));
        }
        let (text, value) = line
            .split_once('\t')
            .ok_or_else(|| format_error(n, "expected `token<TAB>weight`"))?;
        let token =
            Token::new(text).map_err(|_| format_error(n, format!("invalid token `{text}`")))?;
        let weight: f64 = value
            .parse()
            .map_err(|_| format_error(n, format!("invalid weight `{value}`")))?;
        if !(0.0..=1.0).contains(&weight) {
            return Err(format_error(n, format!("weight {weight} outside [0, 1]")));
        }
        entries.push(token);
        weights.push(weight);
    }
    if entries.len() != vocab_size {
        return Err(format_error(
            3 + entries.len() + 1,
            format!("expected {vocab_size} entries, found {}", entries.len()),
        ));
    }
    let line_of = |i: usize| 4 + i;
    let vocabulary = Vocabulary::from_entries(entries.clone()).ok_or_else(|| {
        let duplicate = entries
            .iter()
            .enumerate()
            .position(|(i, t)| entries[..i].contains(t))
            .unwrap_or(0);
        format_error(
            line_of(duplicate),
            format!("duplicate token `{}`", entries[duplicate]),
        )
    })?;

    Ok(WeightsFile {
        vocabulary,
        weights: Chromosome::new(weights)?,
        threshold,
    })
}

/// Write per-generation statistics as CSV.
pub fn write_stats_csv(path: &Path, stats: &[GenerationStats]) -> Result<()> {
    let mut out = String::from("generation,min,mean,max,best_so_far\n");
    for s in stats {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            s.generation, s.min_fitness, s.mean_fitness, s.max_fitness, s.best_so_far
        );
    }
    std::fs::write(path, out).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::tokenize;
    use crate::corpus::Document;
    use crate::vocab::build_vocabulary;

    fn sample() -> (Vocabulary, Chromosome) {
        let doc = Document::new(
            "d",
            vec![tokenize("the cat sat on the mat .")],
            tokenize("a cat sat"),
        )
        .unwrap();
        let vocab = build_vocabulary(&[doc]);
        let weights: Vec<f64> = (0..vocab.len())
            .map(|i| (i as f64 * 0.137).fract())
            .collect();
        (vocab.clone(), Chromosome::new(weights).unwrap())
    }

    #[test]
    fn save_load_save_is_byte_identical() {
        let dir = tempfile::tempdir().unwrap();
        let (vocab, weights) = sample();
        let first = dir.path().join("w1.txt");
        let second = dir.path().join("w2.txt");
        save_weights(&first, &vocab, &weights, 0.6).unwrap();
        let loaded = load_weights(&first).unwrap();
        assert_eq!(loaded.threshold, 0.6);
        assert_eq!(loaded.weights, weights);
        assert_eq!(loaded.vocabulary.entries(), vocab.entries());
        save_weights(
            &second,
            &loaded.vocabulary,
            &loaded.weights,
            loaded.threshold,
        )
        .unwrap();
        assert_eq!(
            std::fs::read(&first).unwrap(),
            std::fs::read(&second).unwrap()
        );
    }

    #[test]
    fn save_rejects_dimension_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let (vocab, _) = sample();
        let short = Chromosome::new(vec![0.1]).unwrap();
        assert!(matches!(
            save_weights(&dir.path().join("w.txt"), &vocab, &short, 0.6),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    fn write_and_load(content: &str) -> Result<WeightsFile> {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("w.txt");
        std::fs::write(&path, content).unwrap();
        load_weights(&path)
    }

    fn format_line(result: Result<WeightsFile>) -> usize {
        match result {
            Err(Error::WeightsFormat { line, .. }) => line,
            other => panic!("expected WeightsFormat, got {other:?}"),
        }
    }

    #[test]
    fn load_reports_offending_line() {
        assert_eq!(format_line(write_and_load("bogus header\n")), 1);
        assert_eq!(
            format_line(write_and_load("evosum-weights v1\nthreshold abc\n")),
            2
        );
        assert_eq!(
            format_line(write_and_load(
                "evosum-weights v1\nthreshold 0.6\nvocab_size x\n"
            )),
            3
        );
        assert_eq!(
            format_line(write_and_load(
                "evosum-weights v1\nthreshold 0.6\nvocab_size 2\na\t0.5\nb 0.5\n"
            )),
            5
        );
        assert_eq!(
            format_line(write_and_load(
                "evosum-weights v1\nthreshold 0.6\nvocab_size 1\na\t1.5\n"
            )),
            4
        );
        assert_eq!(
            format_line(write_and_load(
                "evosum-weights v1\nthreshold 0.6\nvocab_size 2\na\t0.5\na\t0.5\n"
            )),
            5
        );
        // Entry count must match vocab_size in both directions.
        assert_eq!(
            format_line(write_and_load(
                "evosum-weights v1\nthreshold 0.6\nvocab_size 3\na\t0.5\nb\t0.5\n"
            )),
            6
        );
        assert_eq!(
            format_line(write_and_load(
                "evosum-weights v1\nthreshold 0.6\nvocab_size 1\na\t0.5\nb\t0.5\n"
            )),
            5
        );
    }

    #[test]
    fn load_rejects_out_of_range_threshold() {
        assert_eq!(
            format_line(write_and_load(
                "evosum-weights v1\nthreshold 1.5\nvocab_size 0\n"
            )),
            2
        );
    }

    #[test]
    fn stats_csv_has_expected_shape() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("stats.csv");
        let stats = vec![
            GenerationStats {
                generation: 0,
                min_fitness: 0.125,
                mean_fitness: 0.25,
                max_fitness: 0.5,
                best_so_far: 0.5,
            },
            GenerationStats {
                generation: 1,
                min_fitness: 0.25,
                mean_fitness: 0.375,
                max_fitness: 0.5,
                best_so_far: 0.5,
            },
        ];
        write_stats_csv(&path, &stats).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "generation,min,mean,max,best_so_far");
        assert_eq!(lines[1], "0,0.125,0.25,0.5,0.5");
        assert_eq!(lines.len(), 3);
    }
}
