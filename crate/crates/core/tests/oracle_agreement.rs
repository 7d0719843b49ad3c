mod common;

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use raag::complex::{groupoid_conjugate, BasedWord};
use raag::conjugacy::{conjugate_in_raag, normal_form};
use raag::graph::DefiningGraph;
use raag::oracle::{oracle_conjugate, oracle_equal, oracle_groupoid_conjugate, reduced_forms};
use raag::random::random_word;
use raag::word::{Letter, Word};

/// Every labelled presentation on one to three generators.
fn small_graphs() -> Vec<DefiningGraph> {
    let mut out = vec![DefiningGraph::free("a", 1)];
    for n in 2..=3usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        for mask in 0..1u32 << pairs.len() {
            let names: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
            let commuting: Vec<(String, String)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &(i, j))| (names[i].clone(), names[j].clone()))
                .collect();
            out.push(DefiningGraph::build(&names, &commuting).unwrap());
        }
    }
    out
}

/// Pairwise agreement over all words of length at most five, checked as
/// agreement of the two induced partitions: the pipeline's normal form and
/// the least reduced form found by the rewriting closure.
#[test]
fn equality_partitions_agree_exhaustively() {
    for g in small_graphs() {
        let mut fast_to_slow: HashMap<Word, Vec<Letter>> = HashMap::new();
        let mut slow_to_fast: HashMap<Vec<Letter>, Word> = HashMap::new();
        for w in common::all_words(&g, 5) {
            let fast = normal_form(&g, &w).into_word();
            let slow = reduced_forms(&g, &w)
                .unwrap()
                .iter()
                .min()
                .unwrap()
                .to_vec();
            assert_eq!(
                fast_to_slow.entry(fast.clone()).or_insert(slow.clone()),
                &slow,
                "{w:?}"
            );
            assert_eq!(
                slow_to_fast.entry(slow).or_insert(fast.clone()),
                &fast,
                "{w:?}"
            );
        }
    }
}

#[test]
fn equality_agrees_pairwise_on_short_words() {
    for g in small_graphs() {
        let words = common::all_words(&g, 3);
        for a in &words {
            for b in &words {
                let fast = normal_form(&g, a) == normal_form(&g, b);
                assert_eq!(fast, oracle_equal(&g, a, b).unwrap(), "{a:?} {b:?}");
            }
        }
    }
}

#[test]
fn conjugacy_agrees_on_random_pairs() {
    let graphs = [
        common::example(),
        DefiningGraph::free("a", 3),
        DefiningGraph::free_abelian("a", 3),
        DefiningGraph::build(
            &["a1", "a2", "a3", "a4"],
            &[("a1", "a2"), ("a2", "a3"), ("a3", "a4")],
        )
        .unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for g in &graphs {
        let mut yes = 0;
        for _ in 0..1000 {
            let u = random_word(g, rng.gen_range(0..=8), &mut rng);
            let v = if rng.gen_bool(0.5) {
                random_word(g, rng.gen_range(0..=8), &mut rng)
            } else {
                let k = if u.is_empty() {
                    0
                } else {
                    rng.gen_range(0..u.len())
                };
                u.rotate_left(k)
            };
            let slow = oracle_conjugate(g, &u, &v).unwrap();
            assert_eq!(conjugate_in_raag(g, &u, &v), slow, "{u:?} {v:?}");
            yes += usize::from(slow);
        }
        assert!(yes >= 400);
    }
}

#[test]
fn groupoid_oracle_examples() {
    let g = common::load_group("f2.grp");
    let cx = common::load_complex(&g, "counterex.cx");
    let a = BasedWord::parse(&cx, &g, "x1: a1").unwrap();
    let b = BasedWord::parse(&cx, &g, "x1: a2 a1 a2^-1").unwrap();
    for bound in [1, 8, 32] {
        assert!(!oracle_groupoid_conjugate(&cx, &g, &a, &b, bound).unwrap());
    }
    let c = raag::complex::based_cycle(&cx, &b).unwrap();
    assert!(oracle_groupoid_conjugate(&cx, &g, &b, &c, 1).unwrap());

    let z2 = common::load_group("z2.grp");
    let torus = common::load_complex(&z2, "torus.cx");
    let x = BasedWord::parse(&torus, &z2, "v: a1 a2 a1").unwrap();
    let y = BasedWord::parse(&torus, &z2, "v: a1 a1 a2").unwrap();
    assert!(oracle_groupoid_conjugate(&torus, &z2, &x, &y, 8).unwrap());
    assert!(conjugate_in_raag(&z2, x.word(), y.word()));
}

/// Pairwise oracle with its own per-pair cap, on the shorter loops.
#[test]
fn groupoid_agrees_pairwise_on_short_loops() {
    for (name, g, cx) in common::complexes() {
        let loops = common::all_loops(&cx, 3);
        for a in &loops {
            for b in &loops {
                let bound = 2 * (a.word().len() + b.word().len()) + cx.vertex_count() * 6;
                assert_eq!(
                    groupoid_conjugate(&cx, &g, a, b).unwrap(),
                    oracle_groupoid_conjugate(&cx, &g, a, b, bound).unwrap(),
                    "{name}: {a:?} vs {b:?}"
                );
            }
        }
    }
}
