//! Story ingestion and tokenization.
//!
//! A corpus is a directory of `.story` files: article lines first, then one
//! or more blocks introduced by a line consisting of `@highlight`, whose
//! following text lines form the reference summary. Lines are the sentence
//! unit; no sentence-boundary detection is performed.
//!
//! Tokenization is rule-based and deterministic:
//!
//! 1. NFC-normalize the line.
//! 2. Lowercase it.
//! 3. Split on Unicode whitespace.
//! 4. Break each chunk before every apostrophe (U+0027) that is immediately
//!    followed by a letter, so clitics stay attached to the apostrophe
//!    (`don't` -> `don` + `'t`).
//! 5. In each resulting piece, detach the maximal leading and trailing runs
//!    of non-alphanumeric characters as individual single-character tokens.
//!    The leading scan does not detach a clitic apostrophe.
//!
//! The output re-tokenizes to itself: `tokenize(join(tokenize(s), " ")) ==
//! tokenize(s)`.

use std::fmt;
use std::path::Path;

use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};

/// A single lowercase token without internal whitespace.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Token(String);

impl Token {
    /// Validate and wrap a token string.
    pub fn new(text: impl Into<String>) -> Result<Token> {
        let text = text.into();
        let ok = !text.is_empty()
            && !text.chars().any(char::is_whitespace)
            && text == text.to_lowercase();
        if ok {
            Ok(Token(text))
        } else {
            Err(Error::InvalidToken(text))
        }
    }

    /// Wrap text that is already known to satisfy the token invariants.
    fn from_tokenizer(text: &str) -> Token {
        debug_assert!(Token::new(text).is_ok(), "tokenizer invariant: {text:?}");
        Token(text.to_string())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for Token {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// One article line, tokenized, with its 0-based position in the article.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    tokens: Vec<Token>,
    source_index: usize,
}

impl Sentence {
    /// A sentence must carry at least one token.
    pub fn new(tokens: Vec<Token>, source_index: usize) -> Result<Sentence> {
        if tokens.is_empty() {
            return Err(Error::EmptySentence);
        }
        Ok(Sentence {
            tokens,
            source_index,
        })
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn source_index(&self) -> usize {
        self.source_index
    }
}

/// An article (ordered sentences) paired with its tokenized reference summary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    id: String,
    sentences: Vec<Sentence>,
    reference: Vec<Token>,
}

impl Document {
    /// Build a document from per-sentence token lists; source indices are
    /// assigned contiguously from 0 in the given order.
    pub fn new(
        id: impl Into<String>,
        sentence_tokens: Vec<Vec<Token>>,
        reference: Vec<Token>,
    ) -> Result<Document> {
        if reference.is_empty() {
            return Err(Error::EmptyReference);
        }
        if sentence_tokens.is_empty() {
            return Err(Error::EmptyArticle);
        }
        let sentences = sentence_tokens
            .into_iter()
            .enumerate()
            .map(|(i, tokens)| Sentence::new(tokens, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Document {
            id: id.into(),
            sentences,
            reference,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn sentences(&self) -> &[Sentence] {
        &self.sentences
    }

    pub fn reference(&self) -> &[Token] {
        &self.reference
    }
}

/// Split a line into tokens. Deterministic; empty input yields no tokens.
pub fn tokenize(line: &str) -> Vec<Token> {
    let normalized: String = line.nfc().collect::<String>().to_lowercase();
    let mut out = Vec::new();
    for chunk in normalized.split_whitespace() {
        for piece in clitic_pieces(chunk) {
            detach_edges(piece, &mut out);
        }
    }
    out
}

/// Break before every U+0027 that is immediately followed by a letter.
fn clitic_pieces(chunk: &str) -> impl Iterator<Item = &str> {
    let breaks: Vec<usize> = chunk
        .char_indices()
        .filter(|&(i, c)| c == '\'' && starts_with_letter(&chunk[i + 1..]))
        .map(|(i, _)| i)
        .collect();
    let mut pieces = Vec::with_capacity(breaks.len() + 1);
    let mut start = 0;
    for b in breaks {
        if b > start {
            pieces.push(&chunk[start..b]);
        }
        start = b;
    }
    pieces.push(&chunk[start..]);
    pieces.into_iter()
}

fn starts_with_letter(s: &str) -> bool {
    s.chars().next().is_some_and(char::is_alphabetic)
}

/// Emit leading/trailing non-alphanumeric characters as single-char tokens
/// around the piece's core. A leading apostrophe that introduces a clitic
/// (`'t`) stays attached.
fn detach_edges(piece: &str, out: &mut Vec<Token>) {
    let chars: Vec<(usize, char)> = piece.char_indices().collect();
    let core_start = chars.iter().position(|&(i, c)| {
        c.is_alphanumeric() || (c == '\'' && starts_with_letter(&piece[i + 1..]))
    });
    let Some(start) = core_start else {
        // Nothing alphanumeric: every character stands alone.
        for &(i, c) in &chars {
            out.push(Token::from_tokenizer(&piece[i..i + c.len_utf8()]));
        }
        return;
    };
    // A core opened by a clitic apostrophe always contains the following
    // letter, so a last alphanumeric character exists in both cases.
    let end = chars
        .iter()
        .rposition(|&(_, c)| c.is_alphanumeric())
        .expect("core contains an alphanumeric character");
    for &(i, c) in &chars[..start] {
        out.push(Token::from_tokenizer(&piece[i..i + c.len_utf8()]));
    }
    let core_from = chars[start].0;
    let core_to = chars[end].0 + chars[end].1.len_utf8();
    out.push(Token::from_tokenizer(&piece[core_from..core_to]));
    for &(i, c) in &chars[end + 1..] {
        out.push(Token::from_tokenizer(&piece[i..i + c.len_utf8()]));
    }
}

/// Article lines of a story: trimmed, non-blank lines before the first
/// `@highlight` marker, in file order.
pub fn article_lines(raw: &str) -> Vec<&str> {
    raw.lines()
        .map(str::trim)
        .take_while(|line| *line != "@highlight")
        .filter(|line| !line.is_empty())
        .collect()
}

/// Parse one story file into a document.
///
/// Lines before the first `@highlight` marker become sentences; every
/// non-blank line after any marker (markers themselves excluded) contributes
/// its tokens to the reference, concatenated in file order.
pub fn parse_story(raw: &str, id: impl Into<String>) -> Result<Document> {
    let mut reference = Vec::new();
    let mut in_highlights = false;
    for line in raw.lines() {
        let line = line.trim();
        if line == "@highlight" {
            in_highlights = true;
            continue;
        }
        if in_highlights && !line.is_empty() {
            reference.extend(tokenize(line));
        }
    }
    if reference.is_empty() {
        return Err(Error::EmptyReference);
    }
    let sentences: Vec<Vec<Token>> = article_lines(raw).into_iter().map(tokenize).collect();
    Document::new(id, sentences, reference)
}

/// Load stories from a directory in lexicographic filename order.
///
/// Files that fail to parse are skipped with a warning and do not count
/// toward `limit`.
pub fn load_corpus(dir: &Path, limit: Option<usize>) -> Result<Vec<Document>> {
    let entries = std::fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    let mut files = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| Error::io(dir, e))?;
        let path = entry.path();
        if path.is_file() {
            files.push(path);
        }
    }
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));

    let max = limit.unwrap_or(usize::MAX);
    let mut documents = Vec::new();
    for path in files {
        if documents.len() >= max {
            break;
        }
        let id = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let parsed = std::fs::read_to_string(&path)
            .map_err(|e| Error::io(&path, e))
            .and_then(|raw| parse_story(&raw, id));
        match parsed {
            Ok(doc) => documents.push(doc),
            Err(err) => log::warn!("skipping {}: {err}", path.display()),
        }
    }
    Ok(documents)
}
