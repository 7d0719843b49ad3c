//! Acceptance suite: one PASS/FAIL line per criterion, limits pinned below.
//! Criteria run sequentially in a single test so timings are not perturbed
//! by sibling tests.
//!
//! cargo test --test acceptance -- --nocapture

mod common;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use raag::bench;
use raag::centralizer::{centralizer_of, minimal_root};
use raag::complex::{groupoid_conjugate, BasedWord};
use raag::conjugacy::{conjugate_in_raag, cyclic_normal_factors, is_cyclic_normal, normal_form};
use raag::graph::{support_graph, DefiningGraph};
use raag::oracle::{canonical, oracle_conjugate, ConjugatorSearch};
use raag::piling::Piling;
use raag::random::{random_cyclically_reduced_word, random_rewrite, random_word};
use raag::word::{parse_word, Letter, Word};

const GOLDEN_LIMIT: Duration = Duration::from_millis(1);
const ORACLE_RAAG_LIMIT: Duration = Duration::from_secs(60);
const ORACLE_GROUPOID_LIMIT: Duration = Duration::from_secs(120);
const UNIQUENESS_LIMIT: Duration = Duration::from_secs(10);
const PYRAMID_LIMIT: Duration = Duration::from_secs(10);
const CENTRALIZER_LIMIT: Duration = Duration::from_secs(30);
const ROOT_LIMIT: Duration = Duration::from_secs(5);

const PAIRS_PER_GRAPH: usize = 1000;
const MAX_PAIR_WORD_LEN: usize = 8;
const MAX_LOOP_LEN: usize = 6;
/// Conjugator path bound for the groupoid oracle; with the length cap below
/// the search space is finite and this bound is never the binding one.
const MAX_CONJ_LEN: usize = 64;
const CONJUGATE_LEN_CAP: usize = MAX_LOOP_LEN + 2;
const REWRITE_WORDS: usize = 500;
const REWRITES_PER_WORD: usize = 20;
const PYRAMID_SAMPLES: usize = 500;
const CENTRALIZER_SAMPLES: usize = 200;
const ROOT_SAMPLES: usize = 100;

const LINEARITY_SIZES: [usize; 5] = [10_000, 20_000, 40_000, 80_000, 160_000];
const LINEARITY_REPS: usize = 9;
const RATIO_LOW: f64 = 1.5;
const RATIO_HIGH: f64 = 2.7;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn within(elapsed: Duration, limit: Duration) -> (bool, String) {
    (elapsed < limit, format!("{elapsed:.2?} (limit {limit:?})"))
}

fn w(g: &DefiningGraph, s: &str) -> Word {
    parse_word(g, s).unwrap()
}

fn golden_normal_form() -> Outcome {
    let g = common::example();
    let input = w(&g, "a2^-2 a4^-1 a3 a2 a4 a1 a2 a1^-1 a2^2 a4^-1");
    let expected = w(&g, "a4^-1 a3 a2^-1 a1 a2 a1^-1 a2 a2");
    let start = Instant::now();
    let nf = normal_form(&g, &input);
    let (fast, timing) = within(start.elapsed(), GOLDEN_LIMIT);
    let exact = nf.letters() == expected.letters();
    outcome(exact && fast, format!("exact match: {exact}, {timing}"))
}

fn split_regression() -> Outcome {
    let g = common::example();
    let f = cyclic_normal_factors(&g, &w(&g, "a1^-1 a2 a3 a1 a4^-1"));
    let components = f.components();
    let components_ok = components == vec![&[1][..], &[2, 3][..]];
    let factors_ok = components_ok
        && oracle_conjugate(&g, &f.factors[0].word, &w(&g, "a2")).unwrap()
        && oracle_conjugate(&g, &f.factors[1].word, &w(&g, "a3 a4^-1")).unwrap();
    outcome(
        components_ok && factors_ok,
        format!("components {components:?}, factors equivalent: {factors_ok}"),
    )
}

fn cyclic_normal_classifier() -> Outcome {
    let g = common::example();
    let rejects = !is_cyclic_normal(&g, &w(&g, "a4^-1 a3 a2^-1 a1 a2 a1^-1 a2 a2"));
    let accepts = is_cyclic_normal(&g, &w(&g, "a1 a2 a1^-1 a3 a4^-1 a2"));
    outcome(
        rejects && accepts,
        format!("rejects: {rejects}, accepts: {accepts}"),
    )
}

fn counterexample() -> Outcome {
    let g = common::load_group("f2.grp");
    let cx = common::load_complex(&g, "counterex.cx");
    let first = BasedWord::parse(&cx, &g, "x1: a1").unwrap();
    let second = BasedWord::parse(&cx, &g, "x1: a2 a1 a2^-1").unwrap();
    let groupoid = groupoid_conjugate(&cx, &g, &first, &second).unwrap();
    let raag = conjugate_in_raag(&g, first.word(), second.word());
    outcome(
        !groupoid && raag,
        format!("groupoid: {}, group: {}", yes_no(groupoid), yes_no(raag)),
    )
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

/// Half the pairs are independent words, half are disguised conjugates.
fn random_pair(g: &DefiningGraph, rng: &mut ChaCha8Rng) -> (Word, Word) {
    let len = rng.gen_range(0..=MAX_PAIR_WORD_LEN);
    let u = random_word(g, len, rng);
    if rng.gen_bool(0.5) {
        let len = rng.gen_range(0..=MAX_PAIR_WORD_LEN);
        return (u, random_word(g, len, rng));
    }
    loop {
        let mut v = u.rotate_left(if u.is_empty() {
            0
        } else {
            rng.gen_range(0..u.len())
        });
        for _ in 0..rng.gen_range(0..4) {
            v = random_rewrite(g, &v, rng);
        }
        if rng.gen_bool(0.3) {
            let l = Letter::new(rng.gen_range(0..g.len()), rng.gen_bool(0.5));
            let mut c = vec![l];
            c.extend_from_slice(&v);
            c.push(l.inverse());
            v = Word::from_letters(c);
        }
        if v.len() <= MAX_PAIR_WORD_LEN {
            return (u, v);
        }
    }
}

fn oracle_raag() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut agree = 0;
    let mut total = 0;
    let mut yes = 0;
    for g in [common::example(), DefiningGraph::free("a", 3)] {
        for _ in 0..PAIRS_PER_GRAPH {
            let (u, v) = random_pair(&g, &mut rng);
            let fast = conjugate_in_raag(&g, &u, &v);
            let slow = oracle_conjugate(&g, &u, &v).unwrap();
            total += 1;
            agree += usize::from(fast == slow);
            yes += usize::from(slow);
        }
    }
    let (fast, timing) = within(start.elapsed(), ORACLE_RAAG_LIMIT);
    outcome(
        agree == total && fast,
        format!("{agree}/{total} agree ({yes} conjugate), {timing}"),
    )
}

fn oracle_groupoid() -> Outcome {
    let start = Instant::now();
    let mut total = 0usize;
    let mut agree = 0usize;
    let mut yes = 0usize;
    let mut first_disagreement = None;
    for (name, g, cx) in common::complexes() {
        let loops = common::all_loops(&cx, MAX_LOOP_LEN);
        let canon: Vec<Vec<Letter>> = loops.iter().map(|l| canonical(&g, l.word())).collect();
        for bw1 in &loops {
            let search = ConjugatorSearch::run(
                &cx,
                &g,
                bw1.base(),
                bw1.word(),
                MAX_CONJ_LEN,
                CONJUGATE_LEN_CAP,
            )
            .unwrap();
            for (bw2, c2) in loops.iter().zip(&canon) {
                let slow = search.reaches_canonical(bw2.base(), c2.clone());
                let fast = groupoid_conjugate(&cx, &g, bw1, bw2).unwrap();
                total += 1;
                yes += usize::from(slow);
                if fast == slow {
                    agree += 1;
                } else if first_disagreement.is_none() {
                    first_disagreement = Some(format!("{name}: {bw1:?} vs {bw2:?}"));
                }
            }
        }
    }
    let (fast, timing) = within(start.elapsed(), ORACLE_GROUPOID_LIMIT);
    let mut detail = format!("{agree}/{total} agree ({yes} conjugate), {timing}");
    if let Some(d) = first_disagreement {
        detail.push_str(&format!("; first disagreement {d}"));
    }
    outcome(agree == total && fast, detail)
}

fn uniqueness() -> Outcome {
    let start = Instant::now();
    let g = common::example();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut failures = 0;
    for _ in 0..REWRITE_WORDS {
        let len = rng.gen_range(0..=40);
        let mut x = random_word(&g, len, &mut rng);
        let nf = normal_form(&g, &x);
        for _ in 0..REWRITES_PER_WORD {
            x = random_rewrite(&g, &x, &mut rng);
            failures += usize::from(normal_form(&g, &x) != nf);
        }
    }
    let (fast, timing) = within(start.elapsed(), UNIQUENESS_LIMIT);
    outcome(
        failures == 0 && fast,
        format!(
            "{} rewrites, {failures} with a different normal form, {timing}",
            REWRITE_WORDS * REWRITES_PER_WORD
        ),
    )
}

fn pyramid_bound() -> Outcome {
    let start = Instant::now();
    let g = common::example();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut samples = 0;
    let mut violations = 0;
    let mut worst = 0;
    let mut histogram: HashMap<usize, usize> = HashMap::new();
    while samples < PYRAMID_SAMPLES {
        let len = rng.gen_range(1..=30);
        let x = random_word(&g, len, &mut rng);
        let mut p = Piling::from_word(&g, &x);
        p.cyclically_reduce().unwrap();
        for mut part in p.split_components().unwrap() {
            if samples == PYRAMID_SAMPLES {
                break;
            }
            let word = part.to_word().unwrap();
            let support = support_graph(&g, &word);
            let apex = part.apex().unwrap();
            let ecc = support.eccentricity(&g, apex).unwrap();
            let diameter = support
                .vertices()
                .iter()
                .map(|&v| support.eccentricity(&g, v).unwrap())
                .max()
                .unwrap();
            let result = part.pyramidalize().unwrap();
            violations += usize::from(result.iterations > ecc || result.iterations > diameter);
            worst = worst.max(result.iterations);
            *histogram.entry(result.iterations).or_default() += 1;
            samples += 1;
        }
    }
    let (fast, timing) = within(start.elapsed(), PYRAMID_LIMIT);
    let mut hist: Vec<_> = histogram.into_iter().collect();
    hist.sort();
    outcome(
        violations == 0 && fast,
        format!("{samples} pilings, {violations} over the bound, max {worst} iterations {hist:?}, {timing}"),
    )
}

fn centralizer_soundness() -> Outcome {
    let start = Instant::now();
    let g = common::example();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut checked = 0;
    let mut failures = 0;
    for _ in 0..CENTRALIZER_SAMPLES {
        let len = rng.gen_range(1..=24);
        let x = random_cyclically_reduced_word(&g, len, &mut rng);
        let target = normal_form(&g, &x);
        for u in centralizer_of(&g, &x).generators {
            let conj = u.concat(&x).concat(&u.inverse());
            checked += 1;
            failures += usize::from(normal_form(&g, &conj) != target);
        }
    }
    let (fast, timing) = within(start.elapsed(), CENTRALIZER_LIMIT);
    outcome(
        failures == 0 && fast,
        format!(
            "{checked} generators over {CENTRALIZER_SAMPLES} words, {failures} failures, {timing}"
        ),
    )
}

/// Smallest `t` dividing `|x|` with `x` equal to its `t`-prefix repeated.
fn scan_period(x: &[Letter]) -> usize {
    (1..=x.len())
        .find(|&t| x.len().is_multiple_of(t) && x.chunks(t).all(|c| c == &x[..t]))
        .unwrap()
}

fn minimal_roots() -> Outcome {
    let start = Instant::now();
    let f2 = DefiningGraph::free("a", 2);
    let cube = w(&f2, "a1 a2 a1 a2 a1 a2");
    let r = minimal_root(&cube).unwrap();
    let golden = r.root == w(&f2, "a1 a2") && r.power == 3;

    let g = common::example();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut sampled = 0;
    let mut failures = 0;
    while sampled < ROOT_SAMPLES {
        let len = rng.gen_range(1..=20);
        let x = random_word(&g, len, &mut rng);
        for f in cyclic_normal_factors(&g, &x).factors {
            if sampled == ROOT_SAMPLES || scan_period(&f.word) != f.word.len() {
                continue;
            }
            assert!(is_cyclic_normal(&g, &f.word));
            let r = minimal_root(&f.word).unwrap();
            failures += usize::from(r.power != 1 || r.root != f.word);
            sampled += 1;
        }
    }
    let (fast, timing) = within(start.elapsed(), ROOT_LIMIT);
    outcome(
        golden && failures == 0 && fast,
        format!("(a1 a2)^3 -> root of length {} power {}, {sampled} aperiodic forms with {failures} failures, {timing}", r.root.len(), r.power),
    )
}

fn linearity() -> Outcome {
    let g = common::example();
    let pairs: Vec<(Word, Word)> = LINEARITY_SIZES
        .iter()
        .map(|&n| bench::conjugate_pair(&g, n, n as u64))
        .collect();
    for (a, b) in &pairs {
        assert!(conjugate_in_raag(&g, a, b));
    }
    // Interleave sizes within each round so drift hits all sizes alike.
    let mut runs: Vec<Vec<f64>> = vec![Vec::new(); pairs.len()];
    for _ in 0..LINEARITY_REPS {
        for (k, (a, b)) in pairs.iter().enumerate() {
            let t = Instant::now();
            std::hint::black_box(conjugate_in_raag(&g, a, b));
            runs[k].push(t.elapsed().as_secs_f64());
        }
    }
    let medians: Vec<f64> = runs.into_iter().map(bench::median).collect();
    let ratios: Vec<f64> = medians.windows(2).map(|p| p[1] / p[0]).collect();
    let top = &ratios[ratios.len() - 3..];
    let pass = top.iter().all(|r| (RATIO_LOW..=RATIO_HIGH).contains(r));
    let shown: Vec<String> = ratios.iter().map(|r| format!("{r:.2}")).collect();
    let times: Vec<String> = medians
        .iter()
        .map(|t| format!("{:.2}ms", t * 1e3))
        .collect();
    outcome(
        pass,
        format!(
            "medians [{}], ratios [{}], top three in [{RATIO_LOW}, {RATIO_HIGH}]",
            times.join(", "),
            shown.join(", ")
        ),
    )
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("golden normal form", golden_normal_form),
        ("split regression", split_regression),
        ("cyclic-normal classifier", cyclic_normal_classifier),
        ("counterexample", counterexample),
        ("oracle equivalence (group)", oracle_raag),
        ("oracle equivalence (groupoid)", oracle_groupoid),
        ("uniqueness under rewrites", uniqueness),
        ("pyramidalize iteration bound", pyramid_bound),
        ("centralizer soundness", centralizer_soundness),
        ("linearity", linearity),
        ("minimal root", minimal_roots),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("[{status}] {:>2}. {name}: {}", i + 1, o.detail);
        if !o.pass {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
