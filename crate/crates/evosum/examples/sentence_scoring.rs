//! Sentence weighting and threshold extraction with hand-picked weights.
//!
//! Run with: `cargo run --example sentence_scoring`

use evosum::{build_vocabulary, parse_story, sentence_weight, summarize, Chromosome};

const STORY: &str = "\
storm damage closed the coastal road
repair crews worked through the night
the road reopened before the morning ferry
a detour stays in place for heavy trucks

@highlight

storm damage closed the coastal road

@highlight

the road reopened before the morning ferry
";

fn main() -> evosum::Result<()> {
    let doc = parse_story(STORY, "coastal-road")?;
    let vocab = build_vocabulary(std::slice::from_ref(&doc));

    // Reward the words of the reference summary; everything else drops out.
    let weights: Vec<f64> = vocab
        .entries()
        .iter()
        .map(|token| {
            if doc.reference().contains(token) {
                0.9
            } else {
                0.1
            }
        })
        .collect();
    let chromosome = Chromosome::new(weights)?;

    let threshold = 0.6;
    for sentence in doc.sentences() {
        let weight = sentence_weight(sentence, &chromosome, &vocab)?;
        let mark = if weight > threshold { "KEEP" } else { "drop" };
        let text: Vec<&str> = sentence.tokens().iter().map(|t| t.as_str()).collect();
        println!("{mark} {weight:.3}  {}", text.join(" "));
    }

    let summary = summarize(&doc, &chromosome, &vocab, threshold)?;
    println!("\nselected sentence indices: {:?}", summary.selected());
    Ok(())
}
