#![allow(dead_code)]

use raag::complex::{BasedWord, CubeComplexMap, VertexId};
use raag::graph::DefiningGraph;
use raag::word::{Letter, Word};

pub fn example() -> DefiningGraph {
    DefiningGraph::build(
        &["a1", "a2", "a3", "a4"],
        &[("a1", "a4"), ("a2", "a3"), ("a2", "a4")],
    )
    .unwrap()
}

pub fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn load_group(name: &str) -> DefiningGraph {
    DefiningGraph::parse_presentation(&std::fs::read_to_string(data(name)).unwrap()).unwrap()
}

pub fn load_complex(g: &DefiningGraph, name: &str) -> CubeComplexMap {
    CubeComplexMap::parse(g, &std::fs::read_to_string(data(name)).unwrap()).unwrap()
}

/// The three hand-built complexes with their presentations.
pub fn complexes() -> Vec<(&'static str, DefiningGraph, CubeComplexMap)> {
    [
        ("counterex.cx", "f2.grp"),
        ("torus.cx", "z2.grp"),
        ("strip.cx", "z2xf1.grp"),
    ]
    .into_iter()
    .map(|(cx, grp)| {
        let g = load_group(grp);
        let c = load_complex(&g, cx);
        (cx, g, c)
    })
    .collect()
}

/// Every freely reduced loop of length at most `max_len` based at `v`.
pub fn loops_at(cx: &CubeComplexMap, v: VertexId, max_len: usize) -> Vec<BasedWord> {
    fn go(
        cx: &CubeComplexMap,
        base: VertexId,
        at: VertexId,
        word: &mut Vec<Letter>,
        max_len: usize,
        out: &mut Vec<BasedWord>,
    ) {
        if at == base {
            out.push(BasedWord::new(cx, base, Word::from_letters(word.clone())).unwrap());
        }
        if word.len() == max_len {
            return;
        }
        for l in cx.letters_at(at) {
            if word.last() == Some(&l.inverse()) {
                continue;
            }
            let next = cx.step(at, l).unwrap();
            word.push(l);
            go(cx, base, next, word, max_len, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    go(cx, v, v, &mut Vec::new(), max_len, &mut out);
    out
}

pub fn all_loops(cx: &CubeComplexMap, max_len: usize) -> Vec<BasedWord> {
    (0..cx.vertex_count())
        .flat_map(|v| loops_at(cx, v, max_len))
        .collect()
}

/// All words of length at most `n` over `g`.
pub fn all_words(g: &DefiningGraph, n: usize) -> Vec<Word> {
    let letters: Vec<Letter> = (0..g.len())
        .flat_map(|i| [Letter::pos(i), Letter::neg(i)])
        .collect();
    let mut out = vec![Word::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|p: &Vec<Letter>| {
                letters.iter().map(move |&l| {
                    let mut q = p.clone();
                    q.push(l);
                    q
                })
            })
            .collect();
        out.extend(layer.iter().cloned().map(Word::from_letters));
    }
    out
}

pub mod arb {
    use proptest::prelude::*;
    use raag::graph::DefiningGraph;
    use raag::word::{Letter, Word};

    /// Generator counts 1 to 5 with a random commutation relation.
    pub fn graph() -> impl Strategy<Value = DefiningGraph> {
        (1usize..=5)
            .prop_flat_map(|n| {
                (
                    Just(n),
                    prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
                )
            })
            .prop_map(|(n, bits)| {
                let names: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
                let mut pairs = Vec::new();
                let mut k = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if bits[k] {
                            pairs.push((names[i].clone(), names[j].clone()));
                        }
                        k += 1;
                    }
                }
                DefiningGraph::build(&names, &pairs).unwrap()
            })
    }

    pub fn word(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((0..n, any::<bool>()), 0..=max_len)
            .prop_map(|ls| ls.into_iter().map(|(g, s)| Letter::new(g, s)).collect())
    }

    pub fn graph_and_word(max_len: usize) -> impl Strategy<Value = (DefiningGraph, Word)> {
        graph().prop_flat_map(move |g| {
            let n = g.len();
            (Just(g), word(n, max_len))
        })
    }

    pub fn graph_and_words(
        max_len: usize,
        count: usize,
    ) -> impl Strategy<Value = (DefiningGraph, Vec<Word>)> {
        graph().prop_flat_map(move |g| {
            let n = g.len();
            (Just(g), prop::collection::vec(word(n, max_len), count))
        })
    }
}
