//! A full training run on a corpus with a planted signal sentence, plus a
//! round trip through the weights-file format.
//!
//! Run with: `cargo run --example train_synthetic`

use evosum::synthetic::planted_signal_corpus;
use evosum::{build_vocabulary, evaluate_fitness, evolve, load_weights, GaConfig, Token};

fn main() -> evosum::Result<()> {
    let corpus = planted_signal_corpus(20, 99);
    let vocab = build_vocabulary(&corpus);
    println!(
        "corpus: {} documents, vocabulary of {} tokens",
        corpus.len(),
        vocab.len()
    );

    let config = GaConfig {
        seed: 11,
        ..GaConfig::default()
    };
    let model = evolve(&config, &corpus, &vocab, |s| {
        println!(
            "gen {:>2}: min {:.3} mean {:.3} max {:.3} best {:.3}",
            s.generation, s.min_fitness, s.mean_fitness, s.max_fitness, s.best_so_far
        );
    })?;

    let initial = model.stats[0].best_so_far;
    println!(
        "\nbest fitness went from {initial:.3} to {:.3}",
        model.best_fitness()
    );

    // The planted token should have survived with a high weight.
    let beacon = Token::new("beacon").unwrap();
    let beacon_weight = model.best.weights()[vocab.lookup(&beacon).unwrap()];
    println!("weight of the planted `beacon` token: {beacon_weight:.3}");

    // Save, reload, and confirm the reloaded weights score identically.
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("weights.evosum");
    model.save_weights(&path)?;
    let reloaded = load_weights(&path)?;
    let refit = evaluate_fitness(
        &reloaded.weights,
        &corpus,
        &reloaded.vocabulary,
        reloaded.threshold,
    )?;
    println!(
        "reloaded weights from {} score {refit:.3} (same as trained: {})",
        path.display(),
        refit == model.best_fitness()
    );
    Ok(())
}
