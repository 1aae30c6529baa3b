//! ROUGE-1 over already-tokenized sequences, using clipped unigram counts.

use std::collections::HashMap;

use crate::corpus::Token;
use crate::error::{Error, Result};

/// Precision, recall, and F1, each in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RougeScore {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

impl RougeScore {
    /// Average of the three sub-metrics.
    pub fn mean(&self) -> f64 {
        (self.precision + self.recall + self.f1) / 3.0
    }
}

/// Occurrence counts per token; tokens that never occur are absent.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UnigramCounts {
    counts: HashMap<Token, usize>,
}

impl UnigramCounts {
    pub fn get(&self, token: &Token) -> usize {
        self.counts.get(token).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Token, usize)> {
        self.counts.iter().map(|(t, &n)| (t, n))
    }
}

pub fn unigram_counts(tokens: &[Token]) -> UnigramCounts {
    let mut counts = HashMap::new();
    for token in tokens {
        *counts.entry(token.clone()).or_insert(0) += 1;
    }
    UnigramCounts { counts }
}

/// ROUGE-1 of a candidate against a non-empty reference.
///
/// Overlap is the clipped unigram count sum. An empty candidate scores
/// (0, 0, 0) rather than dividing by zero.
pub fn rouge1(candidate: &[Token], reference: &[Token]) -> Result<RougeScore> {
    if reference.is_empty() {
        return Err(Error::EmptyReference);
    }
    if candidate.is_empty() {
        return Ok(RougeScore {
            precision: 0.0,
            recall: 0.0,
            f1: 0.0,
        });
    }
    let cand_counts = unigram_counts(candidate);
    let ref_counts = unigram_counts(reference);
    let overlap: usize = cand_counts
        .iter()
        .map(|(token, n)| n.min(ref_counts.get(token)))
        .sum();
    let precision = overlap as f64 / candidate.len() as f64;
    let recall = overlap as f64 / reference.len() as f64;
    let f1 = if precision + recall == 0.0 {
        0.0
    } else {
        2.0 * precision * recall / (precision + recall)
    };
    Ok(RougeScore {
        precision,
        recall,
        f1,
    })
}
