//! Token-to-id mapping built from a vocabulary corpus.

use std::collections::HashMap;

use crate::corpus::{Document, Token};

/// A bijection between token strings and dense ids `0..len`.
///
/// Tokens are numbered in first-occurrence order over the documents they
/// were built from, so ids stay stable when new documents are appended.
#[derive(Debug, Clone, Default)]
pub struct Vocabulary {
    entries: Vec<Token>,
    index: HashMap<String, usize>,
}

impl Vocabulary {
    /// Id of a token, if it was present at build time.
    pub fn lookup(&self, token: &Token) -> Option<usize> {
        self.index.get(token.as_str()).copied()
    }

    /// Token for an id assigned at build time.
    pub fn token(&self, id: usize) -> Option<&Token> {
        self.entries.get(id)
    }

    pub fn entries(&self) -> &[Token] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn insert_if_absent(&mut self, token: &Token) {
        if !self.index.contains_key(token.as_str()) {
            self.index
                .insert(token.as_str().to_string(), self.entries.len());
            self.entries.push(token.clone());
        }
    }

    /// Rebuild a vocabulary from an already-ordered entry list.
    ///
    /// Duplicate entries are rejected by returning `None`.
    pub(crate) fn from_entries(entries: Vec<Token>) -> Option<Vocabulary> {
        let mut index = HashMap::with_capacity(entries.len());
        for (id, token) in entries.iter().enumerate() {
            if index.insert(token.as_str().to_string(), id).is_some() {
                return None;
            }
        }
        Some(Vocabulary { entries, index })
    }
}

/// Collect every distinct token of the documents, in first-occurrence order.
/// Article sentences and reference summaries both contribute.
pub fn build_vocabulary(documents: &[Document]) -> Vocabulary {
    build_vocabulary_with(documents, true)
}

/// As [`build_vocabulary`], with reference summaries optionally excluded.
pub fn build_vocabulary_with(documents: &[Document], include_references: bool) -> Vocabulary {
    let mut vocab = Vocabulary::default();
    for doc in documents {
        for sentence in doc.sentences() {
            for token in sentence.tokens() {
                vocab.insert_if_absent(token);
            }
        }
        if include_references {
            for token in doc.reference() {
                vocab.insert_if_absent(token);
            }
        }
    }
    vocab
}
