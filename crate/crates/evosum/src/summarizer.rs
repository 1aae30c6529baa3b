//! Sentence scoring and threshold extraction.

use crate::corpus::{Document, Sentence, Token};
use crate::error::{Error, Result};
use crate::vocab::Vocabulary;

/// One candidate solution: a weight in [0, 1] per vocabulary id.
#[derive(Debug, Clone, PartialEq)]
pub struct Chromosome {
    weights: Vec<f64>,
}

impl Chromosome {
    /// Validate that every weight lies in [0, 1].
    pub fn new(weights: Vec<f64>) -> Result<Chromosome> {
        for (index, &value) in weights.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::WeightOutOfRange { index, value });
            }
        }
        Ok(Chromosome { weights })
    }

    /// Construct without validation; callers guarantee the range invariant.
    pub(crate) fn from_weights_unchecked(weights: Vec<f64>) -> Chromosome {
        debug_assert!(weights.iter().all(|w| (0.0..=1.0).contains(w)));
        Chromosome { weights }
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub(crate) fn weights_mut(&mut self) -> &mut [f64] {
        &mut self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    fn check_dimension(&self, vocab: &Vocabulary) -> Result<()> {
        if self.len() != vocab.len() {
            return Err(Error::DimensionMismatch {
                expected: vocab.len(),
                actual: self.len(),
            });
        }
        Ok(())
    }
}

/// Sentences selected from one article, in article order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    selected: Vec<usize>,
    tokens: Vec<Token>,
}

impl Summary {
    /// Source indices of the selected sentences, strictly increasing.
    pub fn selected(&self) -> &[usize] {
        &self.selected
    }

    /// Concatenated tokens of the selected sentences.
    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn is_empty(&self) -> bool {
        self.selected.is_empty()
    }
}

/// Mean weight of a sentence's tokens. Tokens outside the vocabulary weigh
/// zero but still count toward the denominator.
pub fn sentence_weight(
    sentence: &Sentence,
    chromosome: &Chromosome,
    vocab: &Vocabulary,
) -> Result<f64> {
    chromosome.check_dimension(vocab)?;
    if sentence.tokens().is_empty() {
        return Err(Error::EmptySentence);
    }
    let sum: f64 = sentence
        .tokens()
        .iter()
        .map(|token| {
            vocab
                .lookup(token)
                .map_or(0.0, |id| chromosome.weights()[id])
        })
        .sum();
    Ok(sum / sentence.tokens().len() as f64)
}

/// Extract every sentence whose weight is strictly greater than `threshold`.
/// The summary may be empty.
pub fn summarize(
    document: &Document,
    chromosome: &Chromosome,
    vocab: &Vocabulary,
    threshold: f64,
) -> Result<Summary> {
    chromosome.check_dimension(vocab)?;
    let mut selected = Vec::new();
    let mut tokens = Vec::new();
    for sentence in document.sentences() {
        if sentence_weight(sentence, chromosome, vocab)? > threshold {
            selected.push(sentence.source_index());
            tokens.extend_from_slice(sentence.tokens());
        }
    }
    Ok(Summary { selected, tokens })
}
