//! Normal forms, cyclic normal forms, and the conjugacy decision.

use std::ops::Deref;

use crate::graph::DefiningGraph;
use crate::matching;
use crate::piling::{CyclingEvent, Piling};
use crate::word::{Letter, Word};

const REALIZABLE: &str = "pilings built from words are realizable";

/// The unique reduced word, all of whose suffixes start with the largest
/// possible generator, representing a group element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm(Word);

impl NormalForm {
    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }
}

impl Deref for NormalForm {
    type Target = Word;

    fn deref(&self) -> &Word {
        &self.0
    }
}

pub fn normal_form(g: &DefiningGraph, w: &[Letter]) -> NormalForm {
    NormalForm(Piling::from_word(g, w).to_word().expect(REALIZABLE))
}

/// Word problem: does `w` represent the identity?
pub fn is_identity(g: &DefiningGraph, w: &[Letter]) -> bool {
    Piling::from_word(g, w).is_empty()
}

pub fn equal_in_group(g: &DefiningGraph, u: &[Letter], v: &[Letter]) -> bool {
    let mut p = Piling::from_word(g, u);
    for l in v.iter().rev() {
        p.push(l.inverse());
    }
    p.is_empty()
}

/// `w` equals its own normal form letter for letter.
pub fn is_normal(g: &DefiningGraph, w: &[Letter]) -> bool {
    normal_form(g, w).letters() == w
}

/// No cancellation while building the piling, and no cyclic reduction
/// applies to it.
pub fn is_cyclically_reduced(g: &DefiningGraph, w: &[Letter]) -> bool {
    let p = Piling::from_word(g, w);
    p.signed_count() == w.len() && p.is_cyclically_reduced()
}

/// Cyclically reduced, and every cyclic rotation is normal. Every rotation
/// is a factor of `ww`, and factors of normal words are normal, so it is
/// enough to check `ww`.
pub fn is_cyclic_normal(g: &DefiningGraph, w: &[Letter]) -> bool {
    if w.is_empty() {
        return true;
    }
    if !is_cyclically_reduced(g, w) {
        return false;
    }
    let mut ww = Vec::with_capacity(2 * w.len());
    ww.extend_from_slice(w);
    ww.extend_from_slice(w);
    is_normal(g, &ww)
}

/// Which part of the pipeline emitted an event.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EventScope {
    /// Cyclic reduction of the whole piling, before splitting.
    CyclicReduction,
    /// Pyramidalization of the factor at this index.
    Factor(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TaggedEvent {
    pub scope: EventScope,
    pub event: CyclingEvent,
}

/// A non-split factor in cyclic normal form and its support component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicFactor {
    /// Sorted generator indices of the component.
    pub component: Vec<usize>,
    pub word: Word,
}

/// Mutually commuting cyclic normal forms whose product is conjugate to
/// the input word, with the log of cyclings that produced them.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CyclicNormalFactors {
    pub factors: Vec<CyclicFactor>,
    /// Emission order: cyclic reductions, then each factor's cyclings.
    pub events: Vec<TaggedEvent>,
}

impl CyclicNormalFactors {
    /// Concatenation of the factor words.
    pub fn word(&self) -> Word {
        let mut out = Word::new();
        for f in &self.factors {
            out.extend_from(&f.word);
        }
        out
    }

    pub fn components(&self) -> Vec<&[usize]> {
        self.factors
            .iter()
            .map(|f| f.component.as_slice())
            .collect()
    }

    pub fn total_len(&self) -> usize {
        self.factors.iter().map(|f| f.word.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Letters of the event log, in replay order.
    pub fn event_letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.events.iter().map(|e| e.event.letter())
    }
}

/// Piling, cyclic reduction, split into components, pyramidalize each
/// component, and read each pyramid back as a word.
pub fn cyclic_normal_factors(g: &DefiningGraph, w: &[Letter]) -> CyclicNormalFactors {
    let mut p = Piling::from_word(g, w);
    let mut events: Vec<TaggedEvent> = p
        .cyclically_reduce()
        .expect(REALIZABLE)
        .into_iter()
        .map(|event| TaggedEvent {
            scope: EventScope::CyclicReduction,
            event,
        })
        .collect();
    let components: Vec<Vec<usize>> = p.support().components().to_vec();
    let parts = p.split_components().expect(REALIZABLE);
    let mut factors = Vec::with_capacity(parts.len());
    for (index, (mut part, component)) in parts.into_iter().zip(components).enumerate() {
        let pyramid = part
            .pyramidalize()
            .expect("split factors are non-split and cyclically reduced");
        events.extend(pyramid.events.into_iter().map(|event| TaggedEvent {
            scope: EventScope::Factor(index),
            event,
        }));
        factors.push(CyclicFactor {
            component,
            word: part.to_word().expect(REALIZABLE),
        });
    }
    CyclicNormalFactors { factors, events }
}

/// Smallest left rotation taking `u` to `v`, letter for letter.
pub fn cyclic_equal(u: &[Letter], v: &[Letter]) -> Option<usize> {
    matching::cyclic_shift(u, v)
}

/// Full outcome of a conjugacy query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyVerdict {
    pub conjugate: bool,
    pub left: CyclicNormalFactors,
    pub right: CyclicNormalFactors,
    /// Per factor, the rotation of the left factor that yields the right one;
    /// present only when the answer is yes.
    pub shifts: Option<Vec<usize>>,
}

pub fn decide_conjugacy(g: &DefiningGraph, w: &[Letter], v: &[Letter]) -> ConjugacyVerdict {
    let left = cyclic_normal_factors(g, w);
    let right = cyclic_normal_factors(g, v);
    let shifts = match_factors(&left, &right);
    ConjugacyVerdict {
        conjugate: shifts.is_some(),
        left,
        right,
        shifts,
    }
}

/// Component collections must coincide; then factors are compared as
/// cyclic words. Factors are listed in component order on both sides, so
/// matching by key is positional.
pub fn match_factors(
    left: &CyclicNormalFactors,
    right: &CyclicNormalFactors,
) -> Option<Vec<usize>> {
    if left.factors.len() != right.factors.len() {
        return None;
    }
    left.factors
        .iter()
        .zip(&right.factors)
        .map(|(a, b)| {
            if a.component != b.component {
                return None;
            }
            cyclic_equal(&a.word, &b.word)
        })
        .collect()
}

pub fn conjugate_in_raag(g: &DefiningGraph, w: &[Letter], v: &[Letter]) -> bool {
    decide_conjugacy(g, w, v).conjugate
}
