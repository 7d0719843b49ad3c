//! Cubical maps `X → Y` into the Salvetti complex of a RAAG, coded as a
//! labelled, partially deterministic transition structure on the vertices
//! of `X`, and free homotopy of loops in `X`.
//!
//! Every edge of `X` carries the generator its image traverses, oriented
//! by pulling back the orientation of `Y`. Following a letter `a` from a
//! vertex walks an `a`-edge forwards, `a⁻¹` walks it backwards. Under the
//! local hypotheses (the lookup is deterministic, and commuting edge pairs
//! at a vertex span a square) a word traced from a vertex determines a
//! unique edge path, which is what makes words a faithful coding of paths.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::centralizer::{centralizer_generators, CentralizerGens};
use crate::conjugacy::{cyclic_normal_factors, match_factors, CyclicNormalFactors};
use crate::error::{ComplexError, ParseError, ParseErrorKind};
use crate::graph::DefiningGraph;
use crate::word::{letter_token, parse_word, Letter, Word};

pub type VertexId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub src: VertexId,
    pub dst: VertexId,
    pub label: usize,
}

impl Edge {
    /// Start vertex when traversed with the given orientation.
    fn tail(&self, positive: bool) -> VertexId {
        if positive {
            self.src
        } else {
            self.dst
        }
    }

    fn head(&self, positive: bool) -> VertexId {
        self.tail(!positive)
    }
}

/// Boundary of a square as four edge indices in cyclic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Square {
    pub edges: [usize; 4],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeterminismViolation {
    pub vertex: String,
    pub letter: String,
    pub edges: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelViolation {
    pub edge: String,
    pub label: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareViolation {
    pub square: usize,
    pub edges: Vec<String>,
    pub reason: String,
}

/// Two edge-ends at a vertex with commuting labels and no square between.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MissingCorner {
    pub vertex: String,
    pub first: String,
    pub second: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ConvexityCheck {
    /// No squares were supplied; convexity is the caller's assumption.
    NotChecked,
    Checked {
        malformed_squares: Vec<SquareViolation>,
        missing_corners: Vec<MissingCorner>,
    },
}

/// What `validate` verified. Global injectivity of the map of universal
/// covers is never certified here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub determinism: Vec<DeterminismViolation>,
    pub labels: Vec<LabelViolation>,
    pub convexity: ConvexityCheck,
    pub verified: Vec<&'static str>,
    pub assumed: Vec<&'static str>,
}

impl ValidationReport {
    /// Deterministic lookup with in-range labels; enough to run the deciders.
    pub fn is_locally_valid(&self) -> bool {
        self.determinism.is_empty() && self.labels.is_empty()
    }

    /// Locally valid and, if squares were given, every check on them passed.
    pub fn is_valid(&self) -> bool {
        self.is_locally_valid()
            && match &self.convexity {
                ConvexityCheck::NotChecked => true,
                ConvexityCheck::Checked {
                    malformed_squares,
                    missing_corners,
                } => malformed_squares.is_empty() && missing_corners.is_empty(),
            }
    }
}

#[derive(Clone, Debug)]
pub struct CubeComplexMap {
    vertices: Vec<String>,
    vertex_index: HashMap<String, VertexId>,
    edges: Vec<Edge>,
    squares: Option<Vec<Square>>,
    /// Two slots per generator label, `2 * gen + inverse`.
    slots: usize,
    delta: Vec<Option<VertexId>>,
    /// Edges competing for an already filled `(vertex, slot)`.
    conflicts: Vec<(VertexId, Letter, Vec<usize>)>,
}

#[inline]
fn slot(l: Letter) -> usize {
    2 * l.gen() + usize::from(!l.is_positive())
}

impl CubeComplexMap {
    /// Builds the map from vertex names, `(id, src, dst, label)` edges and
    /// optional squares given by boundary edge ids.
    pub fn new<S: AsRef<str>>(
        vertices: &[S],
        edges: &[(S, S, S, usize)],
        squares: Option<&[[S; 4]]>,
    ) -> Result<Self, ComplexError> {
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.as_ref().to_string(), i).is_some() {
                return Err(ComplexError::Duplicate {
                    what: "vertex",
                    name: v.as_ref().to_string(),
                });
            }
        }
        let lookup = |name: &str| {
            vertex_index
                .get(name)
                .copied()
                .ok_or_else(|| ParseError::new(ParseErrorKind::UnknownVertex, name))
        };
        let mut edge_index = HashMap::new();
        let mut built = Vec::with_capacity(edges.len());
        for (id, src, dst, label) in edges {
            let id = id.as_ref().to_string();
            if edge_index.insert(id.clone(), built.len()).is_some() {
                return Err(ComplexError::Duplicate {
                    what: "edge",
                    name: id,
                });
            }
            built.push(Edge {
                id,
                src: lookup(src.as_ref())?,
                dst: lookup(dst.as_ref())?,
                label: *label,
            });
        }
        let squares = match squares {
            None => None,
            Some(list) => {
                let mut out = Vec::with_capacity(list.len());
                for sq in list {
                    let mut idx = [0; 4];
                    for (k, id) in sq.iter().enumerate() {
                        idx[k] = *edge_index.get(id.as_ref()).ok_or_else(|| {
                            ParseError::new(ParseErrorKind::UnknownEdge, id.as_ref())
                        })?;
                    }
                    out.push(Square { edges: idx });
                }
                Some(out)
            }
        };
        let names = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        Ok(CubeComplexMap::assemble(
            names,
            vertex_index,
            built,
            squares,
        ))
    }

    fn assemble(
        vertices: Vec<String>,
        vertex_index: HashMap<String, VertexId>,
        edges: Vec<Edge>,
        squares: Option<Vec<Square>>,
    ) -> Self {
        let slots = 2 * edges.iter().map(|e| e.label + 1).max().unwrap_or(0);
        let mut delta = vec![None; vertices.len() * slots];
        let mut owner: Vec<Option<usize>> = vec![None; vertices.len() * slots];
        let mut conflicts: Vec<(VertexId, Letter, Vec<usize>)> = Vec::new();
        for (k, e) in edges.iter().enumerate() {
            for l in [Letter::pos(e.label), Letter::neg(e.label)] {
                let from = e.tail(l.is_positive());
                let to = e.head(l.is_positive());
                let cell = from * slots + slot(l);
                match owner[cell] {
                    None => {
                        owner[cell] = Some(k);
                        delta[cell] = Some(to);
                    }
                    Some(first) => match conflicts.iter_mut().find(|c| c.0 == from && c.1 == l) {
                        Some(c) => c.2.push(k),
                        None => conflicts.push((from, l, vec![first, k])),
                    },
                }
            }
        }
        CubeComplexMap {
            vertices,
            vertex_index,
            edges,
            squares,
            slots,
            delta,
            conflicts,
        }
    }

    /// Parses the complex format, resolving labels against `g`:
    ///
    /// ```text
    /// vertices x1 x2
    /// edge e1 x1 x1 a1
    /// square e1 e2 e3 e4   # optional, boundary order
    /// ```
    pub fn parse(g: &DefiningGraph, text: &str) -> Result<Self, ComplexError> {
        let mut vertices: Option<Vec<String>> = None;
        let mut edges: Vec<(String, String, String, usize)> = Vec::new();
        let mut squares: Vec<[String; 4]> = Vec::new();
        let mut any_square = false;
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let Some(&directive) = tokens.first() else {
                continue;
            };
            let args = &tokens[1..];
            let located = |kind, token: &str| ParseError::new(kind, token).at_line(lineno);
            match directive {
                "vertices" if vertices.is_none() => {
                    if args.is_empty() {
                        return Err(located(ParseErrorKind::MissingArgument, "vertices").into());
                    }
                    vertices = Some(args.iter().map(|s| s.to_string()).collect());
                }
                "edge" | "square" if vertices.is_none() => {
                    return Err(located(ParseErrorKind::MissingHeader, "vertices").into());
                }
                "edge" => {
                    let [id, src, dst, label] = args else {
                        return Err(located(ParseErrorKind::MissingArgument, line.trim()).into());
                    };
                    let names = vertices.as_ref().expect("checked above");
                    for v in [src, dst] {
                        if !names.iter().any(|n| n == v) {
                            return Err(located(ParseErrorKind::UnknownVertex, v).into());
                        }
                    }
                    let gen = g
                        .index_of(label)
                        .ok_or_else(|| located(ParseErrorKind::UnknownGenerator, label))?;
                    edges.push((id.to_string(), src.to_string(), dst.to_string(), gen));
                }
                "square" => {
                    let [a, b, c, d] = args else {
                        return Err(located(ParseErrorKind::MissingArgument, line.trim()).into());
                    };
                    for e in [a, b, c, d] {
                        if !edges.iter().any(|(id, ..)| id == e) {
                            return Err(located(ParseErrorKind::UnknownEdge, e).into());
                        }
                    }
                    any_square = true;
                    squares.push([a.to_string(), b.to_string(), c.to_string(), d.to_string()]);
                }
                other => {
                    return Err(located(ParseErrorKind::UnexpectedDirective, other).into());
                }
            }
        }
        let vertices =
            vertices.ok_or_else(|| ParseError::new(ParseErrorKind::MissingHeader, "vertices"))?;
        CubeComplexMap::new(&vertices, &edges, any_square.then_some(&squares[..]))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn squares(&self) -> Option<&[Square]> {
        self.squares.as_deref()
    }

    /// One step of the lookup table.
    #[inline]
    pub fn step(&self, x: VertexId, l: Letter) -> Option<VertexId> {
        let s = slot(l);
        if s >= self.slots {
            return None;
        }
        self.delta[x * self.slots + s]
    }

    /// End vertex of the path spelled by `w` from `x`, if every step exists.
    pub fn trace(&self, x: VertexId, w: &[Letter]) -> Option<VertexId> {
        w.iter().try_fold(x, |v, &l| self.step(v, l))
    }

    /// Letters with an edge leaving `x`.
    pub fn letters_at(&self, x: VertexId) -> Vec<Letter> {
        (0..self.slots)
            .filter(|s| self.delta[x * self.slots + s].is_some())
            .map(|s| Letter::new(s / 2, s % 2 == 0))
            .collect()
    }

    fn name_letter(&self, g: &DefiningGraph, l: Letter) -> String {
        if l.gen() < g.len() {
            letter_token(g, l)
        } else {
            format!("#{}{}", l.gen(), if l.is_positive() { "" } else { "^-1" })
        }
    }

    /// Checks local determinism, label range and, when squares are given,
    /// square shape and the convexity condition at every corner.
    pub fn validate(&self, g: &DefiningGraph) -> ValidationReport {
        let determinism = self
            .conflicts
            .iter()
            .map(|(v, l, edges)| DeterminismViolation {
                vertex: self.vertices[*v].clone(),
                letter: self.name_letter(g, *l),
                edges: edges.iter().map(|&k| self.edges[k].id.clone()).collect(),
            })
            .collect();
        let labels = self
            .edges
            .iter()
            .filter(|e| e.label >= g.len())
            .map(|e| LabelViolation {
                edge: e.id.clone(),
                label: e.label,
            })
            .collect();
        let mut verified = vec!["local determinism", "label range"];
        let mut assumed = vec!["injectivity of the map of universal covers"];
        let convexity = match &self.squares {
            None => {
                assumed.push("convexity");
                ConvexityCheck::NotChecked
            }
            Some(squares) => {
                verified.push("square boundaries");
                verified.push("convexity");
                self.check_convexity(g, squares)
            }
        };
        ValidationReport {
            determinism,
            labels,
            convexity,
            verified,
            assumed,
        }
    }

    fn check_convexity(&self, g: &DefiningGraph, squares: &[Square]) -> ConvexityCheck {
        let mut malformed = Vec::new();
        let mut corners: HashSet<(VertexId, Letter, Letter)> = HashSet::new();
        for (k, sq) in squares.iter().enumerate() {
            match self.orient_square(g, sq) {
                Ok(letters) => {
                    let tail = self.edges[sq.edges[0]].tail(letters[0].is_positive());
                    let mut at = tail;
                    for i in 0..4 {
                        let e = &self.edges[sq.edges[i]];
                        at = e.head(letters[i].is_positive());
                        let out = letters[(i + 1) % 4];
                        let back = letters[i].inverse();
                        corners.insert((at, out.min(back), out.max(back)));
                    }
                    debug_assert_eq!(at, tail);
                }
                Err(reason) => malformed.push(SquareViolation {
                    square: k,
                    edges: sq.edges.iter().map(|&e| self.edges[e].id.clone()).collect(),
                    reason: reason.to_string(),
                }),
            }
        }
        let mut missing = Vec::new();
        for x in 0..self.vertices.len() {
            let out = self.letters_at(x);
            for (i, &a) in out.iter().enumerate() {
                for &b in &out[i + 1..] {
                    let commuting =
                        a.gen() < g.len() && b.gen() < g.len() && g.letters_commute(a, b);
                    if commuting && !corners.contains(&(x, a.min(b), a.max(b))) {
                        missing.push(MissingCorner {
                            vertex: self.vertices[x].clone(),
                            first: self.name_letter(g, a),
                            second: self.name_letter(g, b),
                        });
                    }
                }
            }
        }
        ConvexityCheck::Checked {
            malformed_squares: malformed,
            missing_corners: missing,
        }
    }

    /// Finds orientations making the boundary a closed path reading
    /// `a b a⁻¹ b⁻¹` with `a`, `b` commuting.
    fn orient_square(&self, g: &DefiningGraph, sq: &Square) -> Result<[Letter; 4], &'static str> {
        let e: Vec<&Edge> = sq.edges.iter().map(|&k| &self.edges[k]).collect();
        let mut closes = false;
        let mut shaped = false;
        for mask in 0..16u8 {
            let pos = |i: usize| mask & (1 << i) == 0;
            let letters: [Letter; 4] = std::array::from_fn(|i| Letter::new(e[i].label, pos(i)));
            if !(0..4).all(|i| e[i].head(pos(i)) == e[(i + 1) % 4].tail(pos((i + 1) % 4))) {
                continue;
            }
            closes = true;
            if letters[2] != letters[0].inverse() || letters[3] != letters[1].inverse() {
                continue;
            }
            shaped = true;
            let (a, b) = (letters[0].gen(), letters[1].gen());
            if a < g.len() && b < g.len() && g.commutes(a, b) {
                return Ok(letters);
            }
        }
        Err(match (closes, shaped) {
            (false, _) => "boundary does not close",
            (true, false) => "opposite sides do not carry equal labels",
            (true, true) => "side labels do not commute",
        })
    }

    /// `Err` unless the lookup is deterministic and labels are in range.
    pub fn ensure_locally_valid(&self, g: &DefiningGraph) -> Result<(), ComplexError> {
        if let Some((v, l, _)) = self.conflicts.first() {
            return Err(ComplexError::Invalid(format!(
                "two edges leave {} with letter {}",
                self.vertices[*v],
                self.name_letter(g, *l)
            )));
        }
        if let Some(e) = self.edges.iter().find(|e| e.label >= g.len()) {
            return Err(ComplexError::Invalid(format!(
                "edge {} has label {} outside the presentation",
                e.id, e.label
            )));
        }
        Ok(())
    }
}

/// An edge path coded as its start vertex and the word it reads.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasedWord {
    base: VertexId,
    word: Word,
    end: VertexId,
}

impl BasedWord {
    pub fn new(cx: &CubeComplexMap, base: VertexId, word: Word) -> Result<Self, ComplexError> {
        let mut at = base;
        for (position, &l) in word.iter().enumerate() {
            at = cx
                .step(at, l)
                .ok_or_else(|| ComplexError::UntraceableLetter {
                    vertex: cx.vertex_name(at).to_string(),
                    position,
                })?;
        }
        Ok(BasedWord {
            base,
            word,
            end: at,
        })
    }

    /// Parses `vertex: word`.
    pub fn parse(cx: &CubeComplexMap, g: &DefiningGraph, text: &str) -> Result<Self, ComplexError> {
        let (vertex, word) = text
            .split_once(':')
            .ok_or_else(|| ParseError::new(ParseErrorKind::MalformedBasedWord, text))?;
        let vertex = vertex.trim();
        let base = cx
            .vertex(vertex)
            .ok_or_else(|| ParseError::new(ParseErrorKind::UnknownVertex, vertex))?;
        BasedWord::new(cx, base, parse_word(g, word)?)
    }

    pub fn base(&self) -> VertexId {
        self.base
    }

    pub fn end(&self) -> VertexId {
        self.end
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn is_loop(&self) -> bool {
        self.base == self.end
    }

    fn require_loop(&self, cx: &CubeComplexMap) -> Result<(), ComplexError> {
        if self.is_loop() {
            Ok(())
        } else {
            Err(ComplexError::NotALoop {
                base: cx.vertex_name(self.base).to_string(),
                end: cx.vertex_name(self.end).to_string(),
            })
        }
    }
}

/// Pushes the base vertex of a loop one edge along the loop.
pub fn based_cycle(cx: &CubeComplexMap, bw: &BasedWord) -> Result<BasedWord, ComplexError> {
    bw.require_loop(cx)?;
    let first = *bw.word.first().ok_or(ComplexError::EmptyLoop)?;
    let next = cx
        .step(bw.base, first)
        .ok_or_else(|| ComplexError::UntraceableLetter {
            vertex: cx.vertex_name(bw.base).to_string(),
            position: 0,
        })?;
    Ok(BasedWord {
        base: next,
        word: bw.word.rotate_left(1),
        end: next,
    })
}

/// A loop rewritten as mutually commuting cyclic normal forms, with the
/// base vertex carried along every cycling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedLoop {
    pub base: VertexId,
    pub factors: CyclicNormalFactors,
}

impl NormalizedLoop {
    pub fn word(&self) -> Word {
        self.factors.word()
    }
}

/// Moves `start` along each letter of `letters` in turn.
fn replay(
    cx: &CubeComplexMap,
    start: VertexId,
    letters: impl Iterator<Item = Letter>,
) -> Result<VertexId, ComplexError> {
    let mut base = start;
    for (index, l) in letters.enumerate() {
        base = cx
            .step(base, l)
            .ok_or_else(|| ComplexError::ReplayFailure {
                vertex: cx.vertex_name(base).to_string(),
                index,
            })?;
    }
    Ok(base)
}

/// Cyclic normal factors of the loop's word. Only cyclings (and cyclic
/// reductions, which are a cycling followed by a cancellation) move the
/// base vertex; commutations and cancellations leave it fixed.
pub fn normalize_based(
    cx: &CubeComplexMap,
    g: &DefiningGraph,
    bw: &BasedWord,
) -> Result<NormalizedLoop, ComplexError> {
    bw.require_loop(cx)?;
    let factors = cyclic_normal_factors(g, &bw.word);
    let base = replay(cx, bw.base, factors.event_letters())?;
    Ok(NormalizedLoop { base, factors })
}

/// Vertices reachable from `start` by tracing centralizer generators and
/// their inverses.
pub fn reach_by_centralizer(
    cx: &CubeComplexMap,
    start: VertexId,
    gens: &CentralizerGens,
) -> BTreeSet<VertexId> {
    let mut moves: Vec<Word> = Vec::new();
    for r in &gens.roots {
        moves.push(r.root.clone());
        moves.push(r.root.inverse());
    }
    for &a in &gens.link_gens {
        moves.push(Word::from_letters(vec![Letter::pos(a)]));
        moves.push(Word::from_letters(vec![Letter::neg(a)]));
    }
    let mut seen = BTreeSet::from([start]);
    let mut frontier = VecDeque::from([start]);
    while let Some(x) = frontier.pop_front() {
        for m in &moves {
            if let Some(y) = cx.trace(x, m) {
                if seen.insert(y) {
                    frontier.push_back(y);
                }
            }
        }
    }
    seen
}

/// Literal search for a preferred-form word `z_1^{p_1} … z_k^{p_k} ζ` of norm
/// at most `max_norm` tracing from `start` to `target`.
pub fn preferred_form_exists(
    cx: &CubeComplexMap,
    start: VertexId,
    target: VertexId,
    gens: &CentralizerGens,
    max_norm: usize,
) -> bool {
    fn powers(
        cx: &CubeComplexMap,
        gens: &CentralizerGens,
        k: usize,
        at: VertexId,
        budget: usize,
        target: VertexId,
    ) -> bool {
        if k == gens.roots.len() {
            return link_words(cx, &gens.link_gens, at, budget, target);
        }
        let z = &gens.roots[k].root;
        let zinv = z.inverse();
        if powers(cx, gens, k + 1, at, budget, target) {
            return true;
        }
        for step in [z, &zinv] {
            let mut x = at;
            for used in 1..=budget {
                match cx.trace(x, step) {
                    Some(y) => x = y,
                    None => break,
                }
                if powers(cx, gens, k + 1, x, budget - used, target) {
                    return true;
                }
            }
        }
        false
    }

    fn link_words(
        cx: &CubeComplexMap,
        link: &[usize],
        at: VertexId,
        budget: usize,
        target: VertexId,
    ) -> bool {
        if at == target {
            return true;
        }
        if budget == 0 {
            return false;
        }
        link.iter()
            .flat_map(|&a| [Letter::pos(a), Letter::neg(a)])
            .any(|l| match cx.step(at, l) {
                Some(y) => link_words(cx, link, y, budget - 1, target),
                None => false,
            })
    }

    powers(cx, gens, 0, start, max_norm, target)
}

/// How step 7 searches for a conjugating path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Vertex reachability under centralizer-generator moves.
    #[default]
    Reachability,
    /// Enumerate every preferred form of norm at most the vertex count.
    BoundedEnumeration,
}

/// Where a groupoid conjugacy decision was settled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    ComponentMismatch,
    FactorLengthMismatch,
    CyclicWordMismatch,
    CentralizerSearch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidVerdict {
    pub conjugate: bool,
    pub stage: Stage,
    pub first: NormalizedLoop,
    pub second: NormalizedLoop,
    /// Base of the first loop after aligning its factors with the second's.
    pub aligned_base: Option<VertexId>,
    pub centralizer: Option<CentralizerGens>,
    /// Vertices reachable from `aligned_base` (reachability strategy only).
    pub reachable: Vec<VertexId>,
}

pub fn decide_groupoid_conjugacy(
    cx: &CubeComplexMap,
    g: &DefiningGraph,
    bw1: &BasedWord,
    bw2: &BasedWord,
    strategy: Strategy,
) -> Result<GroupoidVerdict, ComplexError> {
    cx.ensure_locally_valid(g)?;
    let first = normalize_based(cx, g, bw1)?;
    let second = normalize_based(cx, g, bw2)?;
    let verdict = |conjugate, stage| GroupoidVerdict {
        conjugate,
        stage,
        first: first.clone(),
        second: second.clone(),
        aligned_base: None,
        centralizer: None,
        reachable: Vec::new(),
    };
    let (f1, f2) = (&first.factors, &second.factors);
    if f1.components() != f2.components() {
        return Ok(verdict(false, Stage::ComponentMismatch));
    }
    if f1
        .factors
        .iter()
        .zip(&f2.factors)
        .any(|(a, b)| a.word.len() != b.word.len())
    {
        return Ok(verdict(false, Stage::FactorLengthMismatch));
    }
    let Some(shifts) = match_factors(f1, f2) else {
        return Ok(verdict(false, Stage::CyclicWordMismatch));
    };
    // Factors commute, so each factor's prefix can be cycled in turn.
    let prefixes = f1
        .factors
        .iter()
        .zip(&shifts)
        .flat_map(|(f, &t)| f.word[..t].iter().copied());
    let aligned = replay(cx, first.base, prefixes)?;
    let gens = centralizer_generators(g, f2);
    let (conjugate, reachable) = match strategy {
        Strategy::Reachability => {
            let reach = reach_by_centralizer(cx, aligned, &gens);
            (reach.contains(&second.base), reach.into_iter().collect())
        }
        Strategy::BoundedEnumeration => (
            preferred_form_exists(cx, aligned, second.base, &gens, cx.vertex_count()),
            Vec::new(),
        ),
    };
    Ok(GroupoidVerdict {
        conjugate,
        stage: Stage::CentralizerSearch,
        aligned_base: Some(aligned),
        centralizer: Some(gens),
        reachable,
        first,
        second,
    })
}

/// Do the two loops represent freely homotopic loops in `X`?
pub fn groupoid_conjugate(
    cx: &CubeComplexMap,
    g: &DefiningGraph,
    bw1: &BasedWord,
    bw2: &BasedWord,
) -> Result<bool, ComplexError> {
    decide_groupoid_conjugacy(cx, g, bw1, bw2, Strategy::Reachability).map(|v| v.conjugate)
}
