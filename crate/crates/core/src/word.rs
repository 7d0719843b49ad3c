//! Letters, words, and their textual spelling.

use std::fmt;
use std::ops::Deref;

use crate::error::{ParseError, ParseErrorKind};
use crate::graph::DefiningGraph;

/// A generator or its inverse.
///
/// Generators are addressed by their 0-based position in the defining
/// graph's declaration order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    gen: u32,
    inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, positive: bool) -> Self {
        Letter {
            gen: gen as u32,
            inverse: !positive,
        }
    }

    pub fn pos(gen: usize) -> Self {
        Letter::new(gen, true)
    }

    pub fn neg(gen: usize) -> Self {
        Letter::new(gen, false)
    }

    #[inline]
    pub fn gen(self) -> usize {
        self.gen as usize
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        !self.inverse
    }

    /// `+1` or `-1`.
    #[inline]
    pub fn sign(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    #[inline]
    pub fn inverse(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

/// A finite sequence of letters. Reducedness is a property checked by the
/// algorithms, not an invariant of the type.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    /// Formal inverse: reversed order, every letter inverted.
    pub fn inverse(&self) -> Word {
        self.0.iter().rev().map(|l| l.inverse()).collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        Word(out)
    }

    /// Cyclic left rotation by `k` letters (`k` is taken modulo the length).
    pub fn rotate_left(&self, k: usize) -> Word {
        if self.is_empty() {
            return Word::new();
        }
        let mut v = self.0.clone();
        v.rotate_left(k % self.len());
        Word(v)
    }

    pub fn pow(&self, r: usize) -> Word {
        let mut out = Vec::with_capacity(self.len() * r);
        for _ in 0..r {
            out.extend_from_slice(&self.0);
        }
        Word(out)
    }

    /// Keeps only the letters whose generator satisfies `keep`.
    pub fn filter_gens(&self, keep: impl Fn(usize) -> bool) -> Word {
        self.0.iter().copied().filter(|l| keep(l.gen())).collect()
    }

    /// Validates every letter against `g`.
    pub fn check(&self, g: &DefiningGraph) -> Result<(), ParseError> {
        match self.0.iter().find(|l| l.gen() >= g.len()) {
            Some(l) => Err(ParseError::new(
                ParseErrorKind::UnknownGenerator,
                format!("#{}", l.gen()),
            )),
            None => Ok(()),
        }
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a Letter;
    type IntoIter = std::slice::Iter<'a, Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Parses whitespace-separated tokens `name` or `name^k` (`k` a nonzero
/// integer, expanded to `|k|` letters). A lone `1` is the empty word unless
/// some generator is named `1`.
pub fn parse_word(g: &DefiningGraph, text: &str) -> Result<Word, ParseError> {
    let mut out = Vec::new();
    for token in text.split_whitespace() {
        if token == "1" && g.index_of("1").is_none() {
            continue;
        }
        let (name, exp) = match token.split_once('^') {
            None => (token, 1i64),
            Some((name, exp)) => {
                let k: i64 = exp
                    .parse()
                    .map_err(|_| ParseError::new(ParseErrorKind::MalformedExponent, token))?;
                if k == 0 {
                    return Err(ParseError::new(ParseErrorKind::ZeroExponent, token));
                }
                (name, k)
            }
        };
        let gen = g
            .index_of(name)
            .ok_or_else(|| ParseError::new(ParseErrorKind::UnknownGenerator, name))?;
        let letter = Letter::new(gen, exp > 0);
        out.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
    }
    Ok(Word(out))
}

/// Canonical spelling: runs of equal letters collapse to `name^k`.
pub fn format_word(g: &DefiningGraph, w: &[Letter]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let l = w[i];
        let mut j = i + 1;
        while j < w.len() && w[j] == l {
            j += 1;
        }
        let run = (j - i) as i64 * l.sign() as i64;
        let name = g.name(l.gen());
        parts.push(if run == 1 {
            name.to_string()
        } else {
            format!("{name}^{run}")
        });
        i = j;
    }
    parts.join(" ")
}

/// One token per letter: `name` or `name^-1`.
pub fn format_letters(g: &DefiningGraph, w: &[Letter]) -> String {
    w.iter()
        .map(|l| letter_token(g, *l))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn letter_token(g: &DefiningGraph, l: Letter) -> String {
    if l.is_positive() {
        g.name(l.gen()).to_string()
    } else {
        format!("{}^-1", g.name(l.gen()))
    }
}

/// Display adapter pairing a word with the graph that names its letters.
pub struct Spelled<'a> {
    pub graph: &'a DefiningGraph,
    pub word: &'a [Letter],
}

impl fmt::Display for Spelled<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(self.graph, self.word))
    }
}
