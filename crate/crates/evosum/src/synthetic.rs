//! Deterministic synthetic corpora for demos and convergence checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::corpus::{Document, Token};

const SENTENCES_PER_DOC: usize = 6;
const TOKENS_PER_SENTENCE: usize = 6;
const FILLER_WORDS: usize = 24;

/// A planted-signal corpus: every reference contains the `beacon` token, and
/// exactly one article sentence per document carries it. That sentence's
/// tokens equal the reference, so selecting it (and nothing else) scores a
/// perfect ROUGE-1. The remaining sentences are filler drawn from a shared
/// pool that never overlaps any reference.
pub fn planted_signal_corpus(documents: usize, seed: u64) -> Vec<Document> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let filler: Vec<Token> = (0..FILLER_WORDS)
        .map(|i| Token::new(format!("filler{i:02}")).unwrap())
        .collect();

    (0..documents)
        .map(|d| {
            let signal_position = d % SENTENCES_PER_DOC;
            let mut signal_sentence = vec![Token::new("beacon").unwrap()];
            signal_sentence.extend(
                (0..TOKENS_PER_SENTENCE - 1)
                    .map(|k| Token::new(format!("topic{d:02}x{k}")).unwrap()),
            );

            let sentences: Vec<Vec<Token>> = (0..SENTENCES_PER_DOC)
                .map(|s| {
                    if s == signal_position {
                        signal_sentence.clone()
                    } else {
                        (0..TOKENS_PER_SENTENCE)
                            .map(|_| filler[rng.gen_range(0..filler.len())].clone())
                            .collect()
                    }
                })
                .collect();

            Document::new(
                format!("synthetic-{d:03}"),
                sentences,
                signal_sentence.clone(),
            )
            .unwrap()
        })
        .collect()
}
