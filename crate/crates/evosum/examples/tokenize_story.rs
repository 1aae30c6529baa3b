//! Tokenization and story parsing.
//!
//! Run with: `cargo run --example tokenize_story`

use evosum::{parse_story, tokenize};

const STORY: &str = "\
The narrow-gauge railway reopened after a decade of silence.
Volunteers relaid eleven kilometres of track by hand.
Steam returned to the valley, and the whistle didn't go unnoticed.

@highlight

The narrow-gauge railway reopened

@highlight

Volunteers relaid the track by hand
";

fn main() -> evosum::Result<()> {
    for line in [
        "The cat sat.",
        "Don't stop, now!",
        "A well-known \"quote\" from the mayor's office...",
    ] {
        let tokens: Vec<String> = tokenize(line)
            .iter()
            .map(|t| t.as_str().to_string())
            .collect();
        println!("{line:?}");
        println!("  -> {tokens:?}");
    }

    let doc = parse_story(STORY, "railway")?;
    println!("\nstory `{}`:", doc.id());
    for sentence in doc.sentences() {
        let tokens: Vec<&str> = sentence.tokens().iter().map(|t| t.as_str()).collect();
        println!("  sentence {}: {tokens:?}", sentence.source_index());
    }
    let reference: Vec<&str> = doc.reference().iter().map(|t| t.as_str()).collect();
    println!("  reference: {reference:?}");
    Ok(())
}
