//! Extractive summarization trained with a genetic algorithm.
//!
//! Each individual is a vector of per-vocabulary-token weights in [0, 1]. A
//! sentence's weight is the mean weight of its tokens (unknown tokens weigh
//! zero), sentences strictly above a threshold form the summary, and fitness
//! is the corpus mean of the averaged ROUGE-1 sub-metrics (precision,
//! recall, F1) against the reference summaries.
//!
//! The pipeline:
//!
//! 1. [`corpus`] parses `.story` files into tokenized documents.
//! 2. [`vocab`] assigns dense ids to tokens in first-occurrence order.
//! 3. [`summarizer`] scores sentences against a [`Chromosome`] and extracts
//!    those above the threshold.
//! 4. [`rouge`] scores a candidate summary against the reference.
//! 5. [`ga`] evolves a population of chromosomes with tournament selection,
//!    two-point crossover, and deletion mutation.
//!
//! Runs are reproducible: all randomness comes from one ChaCha8 stream
//! seeded by [`GaConfig::seed`], consumed in the fixed order documented in
//! [`ga`]. See the `examples/` directory for runnable walkthroughs of each
//! stage, and the `evosum` binary for the train/eval/summarize/grid
//! command-line workflow.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod ga;
pub mod rouge;
pub mod summarizer;
pub mod synthetic;
pub mod vocab;
pub mod weights;

pub use corpus::{load_corpus, parse_story, tokenize, Document, Sentence, Token};
pub use error::{Error, Result};
pub use ga::{
    deletion_mutation, evaluate_fitness, evaluate_population, evolve, init_population,
    tournament_select, two_point_crossover, GaConfig, GenerationStats, TrainedModel,
};
pub use rouge::{rouge1, unigram_counts, RougeScore, UnigramCounts};
pub use summarizer::{sentence_weight, summarize, Chromosome, Summary};
pub use vocab::{build_vocabulary, build_vocabulary_with, Vocabulary};
pub use weights::{load_weights, save_weights, write_stats_csv, WeightsFile};
