//! Words over a two-letter alphabet with inverses, and the validation rules
//! for relator labels on graph-group edges.
//!
//! Text syntax: tokens joined by `.`, where a token is a vertex name
//! optionally suffixed `^-1`, e.g. `a.b.a^-1`.

use std::fmt;

use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("empty word")]
    Empty,
    #[error("word uses generator `{0}` which is not an endpoint of the edge")]
    ForeignGenerator(String),
    #[error("word uses only the generator `{0}`; both endpoints must occur")]
    SingleGenerator(String),
    #[error("word is not cyclically reduced")]
    NotCyclicallyReduced,
    #[error("forbidden relator form: one generator occurs as a single letter")]
    ForbiddenForm,
    #[error("invalid word token `{0}`")]
    BadToken(String),
}

/// One signed letter of a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub base: VertexId,
    /// True for the inverse generator, e.g. `a^-1`.
    pub inverse: bool,
}

impl Letter {
    pub fn new(base: VertexId, inverse: bool) -> Self {
        Letter { base, inverse }
    }

    pub fn inverted(&self) -> Letter {
        Letter {
            base: self.base.clone(),
            inverse: !self.inverse,
        }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.base == other.base && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.base)
        } else {
            write!(f, "{}", self.base)
        }
    }
}

/// A word in the free group on the vertex generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(Letter::inverted).collect())
    }

    /// Parses the dotted token syntax, e.g. `a.b.a^-1`.
    pub fn parse(text: &str) -> Result<Word, WordError> {
        let mut letters = Vec::new();
        for token in text.split('.') {
            let (name, inverse) = match token.strip_suffix("^-1") {
                Some(base) => (base, true),
                None => (token, false),
            };
            let base = VertexId::new(name).map_err(|_| WordError::BadToken(token.to_owned()))?;
            letters.push(Letter::new(base, inverse));
        }
        Ok(Word(letters))
    }

    /// The standard Artin relator of coefficient `m`: the alternating prefix
    /// `aba...` of length `m` followed by the inverse of `bab...`.
    pub fn artin_relator(a: &VertexId, b: &VertexId, m: u32) -> Word {
        let alternating = |first: &VertexId, second: &VertexId| -> Vec<Letter> {
            (0..m)
                .map(|i| {
                    let base = if i % 2 == 0 { first } else { second };
                    Letter::new(base.clone(), false)
                })
                .collect()
        };
        let mut letters = alternating(a, b);
        letters.extend(Word(alternating(b, a)).inverse().0);
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Deletes adjacent inverse pairs until none remain. The result is the
/// unique freely reduced representative.
pub fn free_reduce(w: &Word) -> Word {
    let mut stack: Vec<Letter> = Vec::with_capacity(w.len());
    for letter in w.letters() {
        if stack.last().is_some_and(|top| top.cancels(letter)) {
            stack.pop();
        } else {
            stack.push(letter.clone());
        }
    }
    Word(stack)
}

/// Freely reduces, then strips mutually inverse first/last letters until the
/// first letter is no longer the inverse of the last.
pub fn cyclic_reduce(w: &Word) -> Word {
    let reduced = free_reduce(w);
    let mut letters = reduced.0;
    let mut lo = 0;
    let mut hi = letters.len();
    while hi - lo >= 2 && letters[lo].cancels(&letters[hi - 1]) {
        lo += 1;
        hi -= 1;
    }
    letters.truncate(hi);
    letters.drain(..lo);
    Word(letters)
}

/// True iff `w` has the shape `x^k y^{±1} x^λ` for the two generators in
/// either role (k, λ possibly zero): equivalently, one generator occurs in
/// exactly one letter. Expects a cyclically reduced word.
pub fn is_forbidden_form(w: &Word) -> bool {
    let mut bases: Vec<&VertexId> = w.letters().iter().map(|l| &l.base).collect();
    bases.sort();
    bases.dedup();
    bases
        .iter()
        .any(|base| w.letters().iter().filter(|l| l.base == **base).count() == 1)
}

/// Full validation of a graph-group edge relator for the edge `[a, b]`:
/// non-empty, uses exactly the generators `a` and `b` (both of them), is
/// cyclically reduced as given, and avoids the forbidden `x^k y x^λ` shapes.
pub fn validate_edge_word(w: Word, a: &VertexId, b: &VertexId) -> Result<Word, WordError> {
    if w.is_empty() {
        return Err(WordError::Empty);
    }
    for letter in w.letters() {
        if letter.base != *a && letter.base != *b {
            return Err(WordError::ForeignGenerator(letter.base.as_str().to_owned()));
        }
    }
    if cyclic_reduce(&w) != w {
        return Err(WordError::NotCyclicallyReduced);
    }
    let uses_a = w.letters().iter().any(|l| l.base == *a);
    let uses_b = w.letters().iter().any(|l| l.base == *b);
    if !uses_a || !uses_b {
        let only = if uses_a { a } else { b };
        return Err(WordError::SingleGenerator(only.as_str().to_owned()));
    }
    if is_forbidden_form(&w) {
        return Err(WordError::ForbiddenForm);
    }
    Ok(w)
}
