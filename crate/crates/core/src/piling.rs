//! Pilings: one stack of beads per generator.
//!
//! A letter `a_i^{±1}` is a *tile*: one signed bead on stack `i` and a zero
//! bead on every stack `j` whose generator does not commute with `a_i`.
//! Tiles are never stored, only their beads; the footprint is recomputed
//! from the defining graph whenever a tile is added or removed, so every
//! tile operation costs `O(deg)`.
//!
//! Stacks read bottom to top, the bottom being the front of the deque.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::PilingError;
use crate::graph::{DefiningGraph, SupportGraph};
use crate::word::{Letter, Word};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Bead {
    Plus,
    Minus,
    Zero,
}

impl Bead {
    #[inline]
    fn of(l: Letter) -> Bead {
        if l.is_positive() {
            Bead::Plus
        } else {
            Bead::Minus
        }
    }

    /// The letter a signed bead on stack `gen` stands for.
    #[inline]
    pub fn letter(self, gen: usize) -> Option<Letter> {
        match self {
            Bead::Plus => Some(Letter::pos(gen)),
            Bead::Minus => Some(Letter::neg(gen)),
            Bead::Zero => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Bead::Plus => '+',
            Bead::Minus => '-',
            Bead::Zero => '0',
        }
    }

    pub fn from_symbol(c: char) -> Option<Bead> {
        match c {
            '+' => Some(Bead::Plus),
            '-' => Some(Bead::Minus),
            '0' => Some(Bead::Zero),
            _ => None,
        }
    }
}

/// One step of base-vertex relevant work done on a piling.
///
/// Both kinds conjugate the represented element by their letter `l`
/// (`l · rest ↦ rest · l`, resp. `l · rest · l⁻¹ ↦ rest`), so a consumer
/// tracking a base point moves it along `l` in either case.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CyclingEvent {
    /// The bottom tile with this letter was moved to the top.
    Cycled(Letter),
    /// Bottom tile with this letter and the opposite top tile were removed.
    CyclicReduction(Letter),
}

impl CyclingEvent {
    #[inline]
    pub fn letter(self) -> Letter {
        match self {
            CyclingEvent::Cycled(l) | CyclingEvent::CyclicReduction(l) => l,
        }
    }
}

/// Result of [`Piling::pyramidalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pyramidalization {
    pub events: Vec<CyclingEvent>,
    /// Number of decompose-and-cycle passes that moved at least one tile.
    pub iterations: usize,
}

#[derive(Clone, Debug)]
pub struct Piling<'g> {
    graph: &'g DefiningGraph,
    stacks: Vec<VecDeque<Bead>>,
    signed: usize,
}

impl PartialEq for Piling<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.stacks == other.stacks
    }
}

impl Eq for Piling<'_> {}

impl<'g> Piling<'g> {
    pub fn empty(graph: &'g DefiningGraph) -> Self {
        Piling {
            graph,
            stacks: vec![VecDeque::new(); graph.len()],
            signed: 0,
        }
    }

    /// The piling of a word: left fold of [`push`](Self::push).
    pub fn from_word(graph: &'g DefiningGraph, w: &[Letter]) -> Self {
        let mut p = Piling::empty(graph);
        for &l in w {
            p.push(l);
        }
        p
    }

    /// An abstract piling; nothing checks that it is the image of a word.
    pub fn from_stacks(graph: &'g DefiningGraph, stacks: Vec<Vec<Bead>>) -> Self {
        assert_eq!(stacks.len(), graph.len(), "one stack per generator");
        let signed = stacks
            .iter()
            .flatten()
            .filter(|b| **b != Bead::Zero)
            .count();
        Piling {
            graph,
            stacks: stacks.into_iter().map(VecDeque::from).collect(),
            signed,
        }
    }

    #[inline]
    pub fn graph(&self) -> &'g DefiningGraph {
        self.graph
    }

    pub fn stack(&self, i: usize) -> &VecDeque<Bead> {
        &self.stacks[i]
    }

    pub fn is_empty(&self) -> bool {
        self.stacks.iter().all(|s| s.is_empty())
    }

    /// Number of `+`/`-` beads; equals the length of the normal form.
    #[inline]
    pub fn signed_count(&self) -> usize {
        self.signed
    }

    pub fn bead_count(&self) -> usize {
        self.stacks.iter().map(VecDeque::len).sum()
    }

    /// `true` when pushing `l` would cancel the top `l⁻¹` tile.
    #[inline]
    pub fn would_cancel(&self, l: Letter) -> bool {
        self.stacks[l.gen()].back() == Some(&Bead::of(l.inverse()))
    }

    /// Reads one more letter on top.
    pub fn push(&mut self, l: Letter) {
        let i = l.gen();
        if self.would_cancel(l) {
            self.stacks[i].pop_back();
            for &j in self.graph.neighbors(i) {
                let zero = self.stacks[j].pop_back();
                debug_assert_eq!(zero, Some(Bead::Zero));
            }
            self.signed -= 1;
        } else {
            self.stacks[i].push_back(Bead::of(l));
            for &j in self.graph.neighbors(i) {
                self.stacks[j].push_back(Bead::Zero);
            }
            self.signed += 1;
        }
    }

    /// Letter of the bottom `i`-tile, if stack `i` starts with a signed bead.
    #[inline]
    pub fn bottom_letter(&self, i: usize) -> Option<Letter> {
        self.stacks[i].front().and_then(|b| b.letter(i))
    }

    #[inline]
    pub fn top_letter(&self, i: usize) -> Option<Letter> {
        self.stacks[i].back().and_then(|b| b.letter(i))
    }

    /// Generators whose bottom tile can be removed right now.
    pub fn extractable(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.stacks.len()).filter(|&i| self.bottom_letter(i).is_some())
    }

    /// Removes the bottom `i`-tile and returns its letter.
    pub fn remove_bottom_tile(&mut self, i: usize) -> Result<Letter, PilingError> {
        let l = self.bottom_letter(i).ok_or(PilingError::NoBottomTile(i))?;
        let g = self.graph;
        if g.neighbors(i)
            .iter()
            .any(|&j| self.stacks[j].front() != Some(&Bead::Zero))
        {
            return Err(PilingError::Unrealizable(i));
        }
        self.stacks[i].pop_front();
        for &j in g.neighbors(i) {
            self.stacks[j].pop_front();
        }
        self.signed -= 1;
        Ok(l)
    }

    fn remove_top_tile(&mut self, i: usize) -> Result<Letter, PilingError> {
        let l = self.top_letter(i).ok_or(PilingError::NoBottomTile(i))?;
        let g = self.graph;
        if g.neighbors(i)
            .iter()
            .any(|&j| self.stacks[j].back() != Some(&Bead::Zero))
        {
            return Err(PilingError::Unrealizable(i));
        }
        self.stacks[i].pop_back();
        for &j in g.neighbors(i) {
            self.stacks[j].pop_back();
        }
        self.signed -= 1;
        Ok(l)
    }

    /// The normal form: repeatedly emit the largest extractable generator.
    pub fn to_word(&self) -> Result<Word, PilingError> {
        let mut scratch = self.clone();
        let mut out = Vec::with_capacity(self.signed);
        let mut ex = Extraction::new(&mut scratch, None);
        while let Some(l) = ex.next_tile()? {
            out.push(l);
        }
        if !scratch.is_empty() {
            return Err(PilingError::ExtractionStuck);
        }
        Ok(Word::from_letters(out))
    }

    /// Generators carrying at least one signed bead.
    pub fn support(&self) -> SupportGraph {
        let gens =
            (0..self.stacks.len()).filter(|&i| self.stacks[i].iter().any(|b| *b != Bead::Zero));
        SupportGraph::from_generators(self.graph, gens)
    }

    /// Smallest generator whose stack holds a signed bead.
    pub fn apex(&self) -> Option<usize> {
        (0..self.stacks.len()).find(|&i| self.stacks[i].iter().any(|b| *b != Bead::Zero))
    }

    /// Stacks admitting a cyclic reduction (start and end with opposite signs).
    pub fn cyclic_reduction_candidates(&self) -> Vec<usize> {
        (0..self.stacks.len())
            .filter(|&i| self.cyclically_reducible_at(i))
            .collect()
    }

    #[inline]
    fn cyclically_reducible_at(&self, i: usize) -> bool {
        match (self.bottom_letter(i), self.top_letter(i)) {
            (Some(b), Some(t)) => b == t.inverse(),
            _ => false,
        }
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        (0..self.stacks.len()).all(|i| !self.cyclically_reducible_at(i))
    }

    /// Removes the bottom and top `i`-tiles if they carry opposite signs.
    pub fn reduce_cyclically_at(&mut self, i: usize) -> Result<Option<CyclingEvent>, PilingError> {
        if !self.cyclically_reducible_at(i) {
            return Ok(None);
        }
        let l = self.remove_bottom_tile(i)?;
        self.remove_top_tile(i)?;
        Ok(Some(CyclingEvent::CyclicReduction(l)))
    }

    /// Applies cyclic reductions until none is possible. Each reduction only
    /// changes the ends of stack `i` and its neighbours, so only those are
    /// re-examined; total work is linear in the number of beads.
    pub fn cyclically_reduce(&mut self) -> Result<Vec<CyclingEvent>, PilingError> {
        let n = self.stacks.len();
        let g = self.graph;
        let mut queue: Vec<usize> = (0..n).rev().collect();
        let mut queued = vec![true; n];
        let mut events = Vec::new();
        while let Some(i) = queue.pop() {
            queued[i] = false;
            if let Some(ev) = self.reduce_cyclically_at(i)? {
                events.push(ev);
                for &j in std::iter::once(&i).chain(g.neighbors(i)) {
                    if !queued[j] {
                        queued[j] = true;
                        queue.push(j);
                    }
                }
            }
        }
        Ok(events)
    }

    /// Moves the bottom `i`-tile to the top. On a piling that is not
    /// cyclically reduced the moved tile may cancel against the top one.
    pub fn cycle_bottom(&mut self, i: usize) -> Result<CyclingEvent, PilingError> {
        let l = self.remove_bottom_tile(i)?;
        self.push(l);
        Ok(CyclingEvent::Cycled(l))
    }

    /// Splits off the 0-factor: the tiles extractable from the bottom without
    /// touching any apex bead, taken largest generator first.
    fn take_zero_factor(&mut self, apex: usize) -> Result<Vec<Letter>, PilingError> {
        let mut letters = Vec::new();
        let mut ex = Extraction::new(self, Some(apex));
        while let Some(l) = ex.next_tile()? {
            letters.push(l);
        }
        Ok(letters)
    }

    /// The unique factorization `p = p0 · p1` with `p1` pyramidal on the apex
    /// and `p0` free of apex beads.
    pub fn decompose(&self) -> Result<(Piling<'g>, Piling<'g>), PilingError> {
        let apex = self.apex().ok_or(PilingError::EmptyPiling)?;
        let mut upper = self.clone();
        let lower = upper.take_zero_factor(apex)?;
        Ok((Piling::from_word(self.graph, &lower), upper))
    }

    /// Every stack other than the apex stack is empty or starts with a zero.
    pub fn is_pyramidal(&self) -> bool {
        match self.apex() {
            None => false,
            Some(apex) => self.extractable().all(|i| i == apex),
        }
    }

    /// Cycles 0-factors to the top until the piling is pyramidal.
    ///
    /// Requires a non-empty, cyclically reduced, non-split piling. The number
    /// of passes is at most the eccentricity of the apex in the support graph.
    pub fn pyramidalize(&mut self) -> Result<Pyramidalization, PilingError> {
        let apex = self.apex().ok_or(PilingError::EmptyPiling)?;
        if let Some(&i) = self.cyclic_reduction_candidates().first() {
            return Err(PilingError::NotCyclicallyReduced(i));
        }
        let support = self.support();
        if !support.is_connected() {
            return Err(PilingError::SplitInput(support.components().len()));
        }
        let mut events = Vec::new();
        let mut iterations = 0;
        loop {
            let lower = self.take_zero_factor(apex)?;
            if lower.is_empty() {
                break;
            }
            iterations += 1;
            debug_assert!(iterations <= self.graph.len());
            for l in lower {
                self.push(l);
                events.push(CyclingEvent::Cycled(l));
            }
        }
        Ok(Pyramidalization { events, iterations })
    }

    /// One piling per connected component of the support graph, in component
    /// order (by minimal generator). The factors pairwise commute and their
    /// product is equivalent to `self`.
    pub fn split_components(&self) -> Result<Vec<Piling<'g>>, PilingError> {
        let word = self.to_word()?;
        let support = self.support();
        Ok(support
            .components()
            .iter()
            .map(|comp| {
                let part = word.filter_gens(|gen| comp.binary_search(&gen).is_ok());
                Piling::from_word(self.graph, &part)
            })
            .collect())
    }

    /// Parses the debug format written by `Display`: one line per generator,
    /// `name: beads` with beads spelled `+`, `-`, `0` bottom to top.
    pub fn parse_debug(graph: &'g DefiningGraph, text: &str) -> Option<Self> {
        let mut stacks = vec![Vec::new(); graph.len()];
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        for stack in stacks.iter_mut() {
            let (_, beads) = lines.next()?.split_once(':')?;
            for c in beads.trim().chars() {
                stack.push(Bead::from_symbol(c)?);
            }
        }
        Some(Piling::from_stacks(graph, stacks))
    }
}

impl fmt::Display for Piling<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, stack) in self.stacks.iter().enumerate() {
            let beads: String = stack.iter().map(|b| b.symbol()).collect();
            let line = format!("{}: {}", self.graph.name(i), beads);
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

/// Bottom-tile extraction that always takes the largest available
/// generator, keeping the available set up to date incrementally.
struct Extraction<'a, 'g> {
    piling: &'a mut Piling<'g>,
    available: BTreeSet<usize>,
    skip: Option<usize>,
}

impl<'a, 'g> Extraction<'a, 'g> {
    fn new(piling: &'a mut Piling<'g>, skip: Option<usize>) -> Self {
        let available = piling.extractable().filter(|&i| Some(i) != skip).collect();
        Extraction {
            piling,
            available,
            skip,
        }
    }

    fn refresh(&mut self, i: usize) {
        if Some(i) == self.skip {
            return;
        }
        if self.piling.bottom_letter(i).is_some() {
            self.available.insert(i);
        } else {
            self.available.remove(&i);
        }
    }

    fn next_tile(&mut self) -> Result<Option<Letter>, PilingError> {
        let Some(&i) = self.available.last() else {
            return Ok(None);
        };
        let l = self.piling.remove_bottom_tile(i)?;
        let g = self.piling.graph;
        self.refresh(i);
        for &j in g.neighbors(i) {
            self.refresh(j);
        }
        Ok(Some(l))
    }
}

pub fn pi_star<'g>(g: &'g DefiningGraph, w: &[Letter]) -> Piling<'g> {
    Piling::from_word(g, w)
}

pub fn sigma_star(p: &Piling<'_>) -> Result<Word, PilingError> {
    p.to_word()
}
