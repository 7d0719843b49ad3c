//! Canonical generating sets of centralizers of cyclically reduced elements.

use crate::conjugacy::{cyclic_normal_factors, normal_form, CyclicNormalFactors};
use crate::graph::DefiningGraph;
use crate::matching;
use crate::word::{Letter, Word};

/// A root `z` with `z^power` equal, letter for letter, to a factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    pub root: Word,
    pub power: usize,
}

/// Minimal roots of the non-split factors plus the link generators:
/// generators outside every factor's support that commute with all of it.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CentralizerGens {
    pub roots: Vec<Root>,
    pub link_gens: Vec<usize>,
}

impl CentralizerGens {
    /// Every generator as a word: the roots, then one letter per link generator.
    pub fn generator_words(&self) -> Vec<Word> {
        self.roots
            .iter()
            .map(|r| r.root.clone())
            .chain(
                self.link_gens
                    .iter()
                    .map(|&g| Word::from_letters(vec![Letter::pos(g)])),
            )
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("minimal root of an empty factor")]
pub struct EmptyFactor;

/// Shortest `z` with `z^r = w` letter for letter. Cyclic normal forms show
/// their periodicity literally, so this is the primitive period of the word.
pub fn minimal_root(w: &[Letter]) -> Result<Root, EmptyFactor> {
    if w.is_empty() {
        return Err(EmptyFactor);
    }
    let t = matching::primitive_period(w);
    assert_eq!(w.len() % t, 0, "primitive period must divide the length");
    Ok(Root {
        root: Word::from_letters(w[..t].to_vec()),
        power: w.len() / t,
    })
}

pub fn centralizer_generators(g: &DefiningGraph, factors: &CyclicNormalFactors) -> CentralizerGens {
    let roots = factors
        .factors
        .iter()
        .map(|f| minimal_root(&f.word).expect("cyclic normal factors are non-empty"))
        .collect();
    let mut support = vec![false; g.len()];
    for f in &factors.factors {
        for &gen in &f.component {
            support[gen] = true;
        }
    }
    let occurring: Vec<usize> = (0..g.len()).filter(|&i| support[i]).collect();
    let link_gens = (0..g.len())
        .filter(|&i| !support[i] && occurring.iter().all(|&j| g.commutes(i, j)))
        .collect();
    CentralizerGens { roots, link_gens }
}

/// Centralizer of an arbitrary word, carried back from its cyclic normal
/// form `w̃ = c⁻¹ w c` along the conjugator `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Centralizer {
    pub factors: CyclicNormalFactors,
    pub gens: CentralizerGens,
    /// Product of the event letters; conjugates `w` onto the factors.
    pub conjugator: Word,
    /// Normal forms of `c z c⁻¹` for each generator `z` of `gens`.
    pub generators: Vec<Word>,
}

pub fn centralizer_of(g: &DefiningGraph, w: &[Letter]) -> Centralizer {
    let factors = cyclic_normal_factors(g, w);
    let gens = centralizer_generators(g, &factors);
    let conjugator: Word = factors.event_letters().collect();
    let back = conjugator.inverse();
    let generators = gens
        .generator_words()
        .iter()
        .map(|z| normal_form(g, &conjugator.concat(z).concat(&back)).into_word())
        .collect();
    Centralizer {
        factors,
        gens,
        conjugator,
        generators,
    }
}
