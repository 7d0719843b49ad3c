//! Brute-force reference deciders for small inputs. Nothing here touches
//! pilings, normal forms or the cube-complex lookup table; the only shared
//! pieces are the letter type, the commutation relation and the edge list.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::complex::{BasedWord, CubeComplexMap, VertexId};
use crate::error::OracleError;
use crate::graph::DefiningGraph;
use crate::word::Letter;

/// Default cap on the combined length of the inputs.
pub const DEFAULT_BOUND: usize = 16;
/// Cap on the number of distinct words or states any closure may hold.
pub const MAX_STATES: usize = 4_000_000;

/// A deduplicated set of letter sequences, closed under whatever moves
/// built it.
#[derive(Clone, Debug, Default)]
pub struct WordSet {
    words: HashSet<Vec<Letter>>,
}

impl WordSet {
    /// Everything reachable from `seed` by repeatedly applying `moves`.
    pub fn closure<F>(seed: Vec<Letter>, mut moves: F) -> Result<WordSet, OracleError>
    where
        F: FnMut(&[Letter], &mut Vec<Vec<Letter>>),
    {
        let mut words = HashSet::from([seed.clone()]);
        let mut frontier = vec![seed];
        let mut next = Vec::new();
        while let Some(w) = frontier.pop() {
            next.clear();
            moves(&w, &mut next);
            for n in next.drain(..) {
                if !words.contains(&n) {
                    if words.len() >= MAX_STATES {
                        return Err(OracleError::BoundExceeded {
                            size: words.len(),
                            bound: MAX_STATES,
                        });
                    }
                    words.insert(n.clone());
                    frontier.push(n);
                }
            }
        }
        Ok(WordSet { words })
    }

    pub fn contains(&self, w: &[Letter]) -> bool {
        self.words.contains(w)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Letter]> {
        self.words.iter().map(Vec::as_slice)
    }

    pub fn intersects(&self, other: &WordSet) -> bool {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.words.iter().any(|w| large.words.contains(w))
    }

    /// The members of least length.
    pub fn shortest(&self) -> WordSet {
        let min = self.words.iter().map(Vec::len).min().unwrap_or(0);
        WordSet {
            words: self
                .words
                .iter()
                .filter(|w| w.len() == min)
                .cloned()
                .collect(),
        }
    }
}

fn commute(g: &DefiningGraph, a: Letter, b: Letter) -> bool {
    a.gen() != b.gen() && g.commutes(a.gen(), b.gen())
}

/// Adjacent commutation swaps and adjacent inverse-pair cancellations.
fn local_moves(g: &DefiningGraph, w: &[Letter], out: &mut Vec<Vec<Letter>>) {
    for i in 0..w.len().saturating_sub(1) {
        let (a, b) = (w[i], w[i + 1]);
        if commute(g, a, b) {
            let mut n = w.to_vec();
            n.swap(i, i + 1);
            out.push(n);
        } else if b == a.inverse() {
            let mut n = Vec::with_capacity(w.len() - 2);
            n.extend_from_slice(&w[..i]);
            n.extend_from_slice(&w[i + 2..]);
            out.push(n);
        }
    }
}

fn check_bound(size: usize) -> Result<(), OracleError> {
    if size > DEFAULT_BOUND {
        Err(OracleError::BoundExceeded {
            size,
            bound: DEFAULT_BOUND,
        })
    } else {
        Ok(())
    }
}

/// The shortest words in the rewriting closure of `w`: every reduced word
/// for the same element.
pub fn reduced_forms(g: &DefiningGraph, w: &[Letter]) -> Result<WordSet, OracleError> {
    check_bound(w.len())?;
    Ok(WordSet::closure(w.to_vec(), |x, out| local_moves(g, x, out))?.shortest())
}

/// Equality in the group: the rewriting closures of the two words meet.
pub fn oracle_equal(g: &DefiningGraph, w: &[Letter], v: &[Letter]) -> Result<bool, OracleError> {
    check_bound(w.len() + v.len())?;
    let left = WordSet::closure(w.to_vec(), |x, out| local_moves(g, x, out))?;
    let right = WordSet::closure(v.to_vec(), |x, out| local_moves(g, x, out))?;
    Ok(left.intersects(&right))
}

/// Conjugacy in the group: close each word under cycling, commutation and
/// cancellation; the shortest members are the cyclically reduced
/// conjugates, which must coincide as sets.
pub fn oracle_conjugate(
    g: &DefiningGraph,
    w: &[Letter],
    v: &[Letter],
) -> Result<bool, OracleError> {
    check_bound(w.len() + v.len())?;
    let moves = |x: &[Letter], out: &mut Vec<Vec<Letter>>| {
        local_moves(g, x, out);
        if x.len() > 1 {
            let mut n = x.to_vec();
            n.rotate_left(1);
            out.push(n);
        }
    };
    let left = WordSet::closure(w.to_vec(), moves)?.shortest();
    let right = WordSet::closure(v.to_vec(), moves)?.shortest();
    Ok(left.intersects(&right))
}

/// Deletes subwords `a x a⁻¹` in which every letter of `x` commutes with
/// `a`, until none remain.
pub fn reduce(g: &DefiningGraph, w: &[Letter]) -> Vec<Letter> {
    let mut w = w.to_vec();
    'scan: loop {
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[j] == w[i].inverse() {
                    w.remove(j);
                    w.remove(i);
                    continue 'scan;
                }
                if !commute(g, w[i], w[j]) {
                    break;
                }
            }
        }
        return w;
    }
}

/// Lexicographically least word among all commutation rearrangements of
/// the reduced form; equal group elements give equal canonical words.
pub fn canonical(g: &DefiningGraph, w: &[Letter]) -> Vec<Letter> {
    let mut rest = reduce(g, w);
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for k in 0..rest.len() {
            if rest[..k].iter().all(|&p| commute(g, p, rest[k]))
                && best.is_none_or(|b| rest[k] < rest[b])
            {
                best = Some(k);
            }
        }
        out.push(rest.remove(best.expect("the first letter can always move to the front")));
    }
    out
}

fn conjugate_by(g: &DefiningGraph, w: &[Letter], l: Letter) -> Vec<Letter> {
    let mut n = Vec::with_capacity(w.len() + 2);
    n.push(l.inverse());
    n.extend_from_slice(w);
    n.push(l);
    canonical(g, &n)
}

/// Every `(vertex, u⁻¹ w u)` reachable from a fixed loop `base: w` by
/// extending the edge path `u` one edge at a time.
#[derive(Clone, Debug)]
pub struct ConjugatorSearch {
    reached: HashSet<(VertexId, Vec<Letter>)>,
}

impl ConjugatorSearch {
    /// Breadth-first over paths of length at most `max_conj_len`, dropping
    /// states whose conjugate is longer than `length_cap`.
    pub fn run(
        cx: &CubeComplexMap,
        g: &DefiningGraph,
        base: VertexId,
        word: &[Letter],
        max_conj_len: usize,
        length_cap: usize,
    ) -> Result<Self, OracleError> {
        let mut out: Vec<Vec<(Letter, VertexId)>> = vec![Vec::new(); cx.vertex_count()];
        for e in cx.edges() {
            out[e.src].push((Letter::pos(e.label), e.dst));
            out[e.dst].push((Letter::neg(e.label), e.src));
        }
        let start = (base, canonical(g, word));
        let mut reached = HashSet::from([start.clone()]);
        let mut frontier = VecDeque::from([(start, 0usize)]);
        let mut memo: HashMap<(Vec<Letter>, Letter), Vec<Letter>> = HashMap::new();
        while let Some(((y, c), depth)) = frontier.pop_front() {
            if depth == max_conj_len {
                continue;
            }
            for &(l, z) in &out[y] {
                let next = memo
                    .entry((c.clone(), l))
                    .or_insert_with(|| conjugate_by(g, &c, l))
                    .clone();
                if next.len() > length_cap {
                    continue;
                }
                let state = (z, next);
                if !reached.contains(&state) {
                    if reached.len() >= MAX_STATES {
                        return Err(OracleError::BoundExceeded {
                            size: reached.len(),
                            bound: MAX_STATES,
                        });
                    }
                    reached.insert(state.clone());
                    frontier.push_back((state, depth + 1));
                }
            }
        }
        Ok(ConjugatorSearch { reached })
    }

    /// Is there a found path `u` ending at `vertex` with `u⁻¹ w u = word`?
    pub fn reaches(&self, g: &DefiningGraph, vertex: VertexId, word: &[Letter]) -> bool {
        self.reaches_canonical(vertex, canonical(g, word))
    }

    /// As `reaches`, for a word already in `canonical` form.
    pub fn reaches_canonical(&self, vertex: VertexId, canonical_word: Vec<Letter>) -> bool {
        self.reached.contains(&(vertex, canonical_word))
    }

    pub fn state_count(&self) -> usize {
        self.reached.len()
    }
}

/// Is there an edge path `u` from the first base to the second, of length
/// at most `max_conj_len`, with `u · word2 · u⁻¹ = word1`? Intermediate
/// conjugates are capped at the longer loop's length plus two.
pub fn oracle_groupoid_conjugate(
    cx: &CubeComplexMap,
    g: &DefiningGraph,
    bw1: &BasedWord,
    bw2: &BasedWord,
    max_conj_len: usize,
) -> Result<bool, OracleError> {
    let cap = bw1.word().len().max(bw2.word().len()) + 2;
    let search = ConjugatorSearch::run(cx, g, bw1.base(), bw1.word(), max_conj_len, cap)?;
    Ok(search.reaches(g, bw2.base(), bw2.word()))
}
