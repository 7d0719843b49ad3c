//! Random words and random rewrites that preserve the group element.

use rand::Rng;

use crate::conjugacy::is_cyclically_reduced;
use crate::graph::DefiningGraph;
use crate::piling::Piling;
use crate::word::{Letter, Word};

pub fn random_letter<R: Rng + ?Sized>(g: &DefiningGraph, rng: &mut R) -> Letter {
    Letter::new(rng.gen_range(0..g.len()), rng.gen_bool(0.5))
}

/// Uniform letters, with no reduction.
pub fn random_word<R: Rng + ?Sized>(g: &DefiningGraph, len: usize, rng: &mut R) -> Word {
    (0..len).map(|_| random_letter(g, rng)).collect()
}

/// A reduced word of exactly `len` letters: letters that would cancel
/// against the piling built so far are redrawn.
pub fn random_reduced_word<R: Rng + ?Sized>(g: &DefiningGraph, len: usize, rng: &mut R) -> Word {
    let mut p = Piling::empty(g);
    let mut w = Word::new();
    while w.len() < len {
        let l = random_letter(g, rng);
        if !p.would_cancel(l) {
            p.push(l);
            w.push(l);
        }
    }
    w
}

/// A cyclically reduced word of exactly `len` letters, by rejection.
pub fn random_cyclically_reduced_word<R: Rng + ?Sized>(
    g: &DefiningGraph,
    len: usize,
    rng: &mut R,
) -> Word {
    loop {
        let w = random_reduced_word(g, len, rng);
        if is_cyclically_reduced(g, &w) {
            return w;
        }
    }
}

/// One element-preserving rewrite: swap an adjacent commuting pair,
/// insert a cancelling pair, or delete an adjacent cancelling pair.
pub fn random_rewrite<R: Rng + ?Sized>(g: &DefiningGraph, w: &Word, rng: &mut R) -> Word {
    let mut letters = w.letters().to_vec();
    let swaps: Vec<usize> = (0..letters.len().saturating_sub(1))
        .filter(|&i| g.letters_commute(letters[i], letters[i + 1]))
        .collect();
    let cancels: Vec<usize> = (0..letters.len().saturating_sub(1))
        .filter(|&i| letters[i + 1] == letters[i].inverse())
        .collect();
    match rng.gen_range(0..3) {
        0 if !swaps.is_empty() => {
            let i = swaps[rng.gen_range(0..swaps.len())];
            letters.swap(i, i + 1);
        }
        1 if !cancels.is_empty() => {
            let i = cancels[rng.gen_range(0..cancels.len())];
            letters.drain(i..i + 2);
        }
        _ => {
            let l = random_letter(g, rng);
            let at = rng.gen_range(0..=letters.len());
            letters.splice(at..at, [l, l.inverse()]);
        }
    }
    Word::from_letters(letters)
}

/// Applies `count` rewrites in sequence.
pub fn random_rewrites<R: Rng + ?Sized>(
    g: &DefiningGraph,
    w: &Word,
    count: usize,
    rng: &mut R,
) -> Word {
    (0..count).fold(w.clone(), |acc, _| random_rewrite(g, &acc, rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugacy::{equal_in_group, normal_form};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn reduced_words_are_reduced() {
        let g = DefiningGraph::build(&["a", "b", "c"], &[("a", "c")]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for len in 0..40 {
            let w = random_reduced_word(&g, len, &mut rng);
            assert_eq!(w.len(), len);
            assert_eq!(normal_form(&g, &w).len(), len);
            let c = random_cyclically_reduced_word(&g, len, &mut rng);
            assert!(is_cyclically_reduced(&g, &c));
        }
    }

    #[test]
    fn rewrites_preserve_element() {
        let g = DefiningGraph::build(&["a", "b", "c"], &[("a", "b")]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let w = random_word(&g, 8, &mut rng);
            let r = random_rewrites(&g, &w, 10, &mut rng);
            assert!(equal_in_group(&g, &w, &r));
        }
    }
}
