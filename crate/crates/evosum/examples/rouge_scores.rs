//! ROUGE-1 scoring of candidate summaries against a reference.
//!
//! Run with: `cargo run --example rouge_scores`

use evosum::{rouge1, tokenize};

fn main() -> evosum::Result<()> {
    let reference = tokenize("the council approved the harbor expansion");
    let candidates = [
        "the council approved the harbor expansion",
        "the council approved a new budget",
        "harbor expansion approved",
        "completely unrelated words here",
        "",
    ];

    println!(
        "{:<45} {:>6} {:>6} {:>6} {:>6}",
        "candidate", "prec", "rec", "f1", "mean"
    );
    for text in candidates {
        let candidate = tokenize(text);
        let score = rouge1(&candidate, &reference)?;
        println!(
            "{:<45} {:>6.3} {:>6.3} {:>6.3} {:>6.3}",
            format!("{text:?}"),
            score.precision,
            score.recall,
            score.f1,
            score.mean()
        );
    }
    Ok(())
}
