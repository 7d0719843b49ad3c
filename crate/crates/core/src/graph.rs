//! Presentations of right-angled Artin groups and support graphs.
//!
//! A presentation is stored as its *non-commutation* graph: vertices are the
//! generators, and two distinct vertices are adjacent exactly when the
//! generators do not commute. Users declare the commuting pairs; everything
//! else is derived.

use std::collections::HashMap;

use crate::error::{GraphError, ParseError, ParseErrorKind};
use crate::word::Letter;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningGraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    /// Row-major N x N table, `true` = the generators do not commute.
    noncommute: Vec<bool>,
    /// Per generator, the generators it does not commute with, ascending.
    neighbors: Vec<Vec<usize>>,
}

impl DefiningGraph {
    /// Builds the graph from generator names and the list of commuting pairs.
    pub fn build<S: AsRef<str>>(names: &[S], commuting: &[(S, S)]) -> Result<Self, GraphError> {
        if names.is_empty() {
            return Err(GraphError::NoGenerators);
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.as_ref().to_string(), i).is_some() {
                return Err(GraphError::DuplicateName(name.as_ref().to_string()));
            }
        }
        let n = names.len();
        let mut commute = vec![false; n * n];
        for (a, b) in commuting {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = *index
                .get(a)
                .ok_or_else(|| GraphError::UnknownName(a.to_string()))?;
            let j = *index
                .get(b)
                .ok_or_else(|| GraphError::UnknownName(b.to_string()))?;
            if i == j {
                return Err(GraphError::SelfPair(a.to_string()));
            }
            commute[i * n + j] = true;
            commute[j * n + i] = true;
        }
        let noncommute: Vec<bool> = (0..n * n).map(|k| k / n != k % n && !commute[k]).collect();
        let neighbors = (0..n)
            .map(|i| (0..n).filter(|&j| noncommute[i * n + j]).collect())
            .collect();
        Ok(DefiningGraph {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
            index,
            noncommute,
            neighbors,
        })
    }

    /// Free group on `n` generators named `prefix1 .. prefixN`.
    pub fn free(prefix: &str, n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        DefiningGraph::build::<String>(&names, &[]).expect("generated names are distinct")
    }

    /// Free abelian group on `n` generators named `prefix1 .. prefixN`.
    pub fn free_abelian(prefix: &str, n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((names[i].clone(), names[j].clone()));
            }
        }
        DefiningGraph::build(&names, &pairs).expect("generated names are distinct")
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// `true` iff `i != j` and the generators commute. A generator is never
    /// reported as commuting with itself.
    #[inline]
    pub fn commutes(&self, i: usize, j: usize) -> bool {
        i != j && !self.noncommute[i * self.len() + j]
    }

    /// Range-checked [`commutes`](Self::commutes).
    pub fn try_commutes(&self, i: usize, j: usize) -> Result<bool, GraphError> {
        let n = self.len();
        for index in [i, j] {
            if index >= n {
                return Err(GraphError::IndexOutOfRange { index, n });
            }
        }
        Ok(self.commutes(i, j))
    }

    #[inline]
    pub fn letters_commute(&self, a: Letter, b: Letter) -> bool {
        self.commutes(a.gen(), b.gen())
    }

    #[inline]
    pub fn noncommutes(&self, i: usize, j: usize) -> bool {
        self.noncommute[i * self.len() + j]
    }

    /// Generators that do not commute with `i` (the zero-bead footprint of an
    /// `i`-tile).
    #[inline]
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    /// Non-commuting pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.noncommutes(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Commuting pairs `(i, j)` with `i < j`.
    pub fn commuting_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.commutes(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Parses the presentation format:
    ///
    /// ```text
    /// gens a1 a2 a3 a4
    /// commute a1 a4   # comments run to end of line
    /// ```
    pub fn parse_presentation(text: &str) -> Result<Self, ParseError> {
        let mut names: Option<(Vec<String>, usize)> = None;
        let mut pairs: Vec<(String, String, usize)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.split('#').next().unwrap_or("");
            let mut tokens = line.split_whitespace();
            let Some(directive) = tokens.next() else {
                continue;
            };
            match (directive, &names) {
                ("gens", None) => {
                    let list: Vec<String> = tokens.map(str::to_string).collect();
                    if list.is_empty() {
                        return Err(ParseError::new(ParseErrorKind::MissingArgument, "gens")
                            .at_line(lineno));
                    }
                    names = Some((list, lineno));
                }
                ("commute", Some(_)) => {
                    let args: Vec<&str> = tokens.collect();
                    if args.len() != 2 {
                        return Err(
                            ParseError::new(ParseErrorKind::MissingArgument, line.trim())
                                .at_line(lineno),
                        );
                    }
                    pairs.push((args[0].to_string(), args[1].to_string(), lineno));
                }
                ("commute", None) => {
                    return Err(
                        ParseError::new(ParseErrorKind::MissingHeader, "commute").at_line(lineno)
                    );
                }
                (other, _) => {
                    return Err(
                        ParseError::new(ParseErrorKind::UnexpectedDirective, other).at_line(lineno)
                    );
                }
            }
        }
        let (names, gens_line) =
            names.ok_or_else(|| ParseError::new(ParseErrorKind::MissingHeader, "gens"))?;
        let mut seen = HashMap::new();
        for n in &names {
            if seen.insert(n.as_str(), ()).is_some() {
                return Err(ParseError::new(ParseErrorKind::DuplicateName, n).at_line(gens_line));
            }
        }
        for (a, b, lineno) in &pairs {
            for name in [a, b] {
                if !seen.contains_key(name.as_str()) {
                    return Err(
                        ParseError::new(ParseErrorKind::UnknownGenerator, name).at_line(*lineno)
                    );
                }
            }
            if a == b {
                return Err(ParseError::new(ParseErrorKind::SelfPair, a).at_line(*lineno));
            }
        }
        let commuting: Vec<(String, String)> = pairs.into_iter().map(|(a, b, _)| (a, b)).collect();
        DefiningGraph::build(&names, &commuting)
            .map_err(|e| ParseError::new(ParseErrorKind::UnexpectedDirective, e.to_string()))
    }

    /// Serializes to the presentation format; declaration order is preserved.
    pub fn to_presentation(&self) -> String {
        let mut out = format!("gens {}\n", self.names.join(" "));
        for (i, j) in self.commuting_pairs() {
            out.push_str(&format!("commute {} {}\n", self.names[i], self.names[j]));
        }
        out
    }
}

/// The full subgraph of the defining graph spanned by a set of generators,
/// split into connected components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SupportGraph {
    vertices: Vec<usize>,
    components: Vec<Vec<usize>>,
}

impl SupportGraph {
    /// Support graph of an arbitrary generator set (duplicates are ignored).
    pub fn from_generators(g: &DefiningGraph, gens: impl IntoIterator<Item = usize>) -> Self {
        let mut present = vec![false; g.len()];
        for i in gens {
            present[i] = true;
        }
        let vertices: Vec<usize> = (0..g.len()).filter(|&i| present[i]).collect();
        let mut seen = vec![false; g.len()];
        let mut components = Vec::new();
        // Vertices are visited in ascending order, so components come out
        // sorted by their minimal generator.
        for &start in &vertices {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &u in g.neighbors(v) {
                    if present[u] && !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        SupportGraph {
            vertices,
            components,
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn contains(&self, gen: usize) -> bool {
        self.vertices.binary_search(&gen).is_ok()
    }

    /// Index of the component holding `gen`.
    pub fn component_of(&self, gen: usize) -> Option<usize> {
        self.components
            .iter()
            .position(|c| c.binary_search(&gen).is_ok())
    }

    /// Largest graph distance from `from` to a vertex of its component.
    pub fn eccentricity(&self, g: &DefiningGraph, from: usize) -> Option<usize> {
        let comp = &self.components[self.component_of(from)?];
        let mut dist = vec![usize::MAX; g.len()];
        dist[from] = 0;
        let mut queue = std::collections::VecDeque::from([from]);
        let mut ecc = 0;
        while let Some(v) = queue.pop_front() {
            ecc = ecc.max(dist[v]);
            for &u in g.neighbors(v) {
                if dist[u] == usize::MAX && comp.binary_search(&u).is_ok() {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        Some(ecc)
    }
}

/// Support graph of the generators occurring in `w`.
pub fn support_graph(g: &DefiningGraph, w: &[Letter]) -> SupportGraph {
    SupportGraph::from_generators(g, w.iter().map(|l| l.gen()))
}
