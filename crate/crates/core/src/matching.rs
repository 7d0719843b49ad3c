//! Linear-time exact matching (Knuth-Morris-Pratt) over letter slices.

/// Failure function: `fail[i]` is the length of the longest proper border of
/// `pattern[..=i]`.
fn failure<T: Eq>(pattern: &[T]) -> Vec<usize> {
    let mut fail = vec![0; pattern.len()];
    let mut k = 0;
    for i in 1..pattern.len() {
        while k > 0 && pattern[i] != pattern[k] {
            k = fail[k - 1];
        }
        if pattern[i] == pattern[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

/// Start of the first occurrence of `pattern` in the concatenation of
/// `parts`, without materializing it.
fn find_in_parts<T: Eq>(parts: &[&[T]], pattern: &[T]) -> Option<usize> {
    if pattern.is_empty() {
        return Some(0);
    }
    let fail = failure(pattern);
    let mut k = 0;
    let mut pos = 0;
    for part in parts {
        for c in part.iter() {
            while k > 0 && *c != pattern[k] {
                k = fail[k - 1];
            }
            if *c == pattern[k] {
                k += 1;
            }
            pos += 1;
            if k == pattern.len() {
                return Some(pos - k);
            }
        }
    }
    None
}

/// First occurrence of `pattern` in `text`.
pub fn find_first<T: Eq>(text: &[T], pattern: &[T]) -> Option<usize> {
    find_in_parts(&[text], pattern)
}

/// Smallest `t` such that rotating `u` left by `t` gives `v`, if any.
pub fn cyclic_shift<T: Eq>(u: &[T], v: &[T]) -> Option<usize> {
    if u.len() != v.len() {
        return None;
    }
    if u.is_empty() {
        return Some(0);
    }
    // Search v in u·u[..len-1]; every rotation starts inside that window.
    find_in_parts(&[u, &u[..u.len() - 1]], v)
}

/// Smallest period `t` of `w` that divides `|w|`, found as the first
/// occurrence of `w` in `w·w` with the first letter removed (1-based start
/// position in that word). Returns `|w|` for primitive words.
pub fn primitive_period<T: Eq>(w: &[T]) -> usize {
    if w.is_empty() {
        return 0;
    }
    let occurrence = find_in_parts(&[&w[1..], w], w).expect("w occurs at the seam");
    occurrence + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn kmp_finds_first() {
        assert_eq!(find_first(b"abababc", b"abc"), Some(4));
        assert_eq!(find_first(b"aaaa", b"aa"), Some(0));
        assert_eq!(find_first(b"abc", b"d"), None);
        assert_eq!(find_first(b"abc", b""), Some(0));
    }

    #[test]
    fn shifts() {
        assert_eq!(cyclic_shift(b"abc", b"bca"), Some(1));
        assert_eq!(cyclic_shift(b"abc", b"abc"), Some(0));
        assert_eq!(cyclic_shift(b"ab", b"bb"), None);
        assert_eq!(cyclic_shift(b"abab", b"baba"), Some(1));
        assert_eq!(cyclic_shift::<u8>(b"", b""), Some(0));
    }

    #[test]
    fn periods() {
        assert_eq!(primitive_period(b"ababab"), 2);
        assert_eq!(primitive_period(b"abaab"), 5);
        assert_eq!(primitive_period(b"aaaa"), 1);
        assert_eq!(primitive_period(b"a"), 1);
        assert_eq!(primitive_period(b"abaaba"), 3);
        // "aba" has period 2 but 2 does not divide 3.
        assert_eq!(primitive_period(b"aba"), 3);
    }

    proptest! {
        #[test]
        fn shift_matches_naive(u in prop::collection::vec(0u8..3, 0..12), k in 0usize..12) {
            let mut v = u.clone();
            if !v.is_empty() {
                v.rotate_left(k % u.len());
            }
            let naive = (0..u.len().max(1)).find(|&t| {
                let mut r = u.clone();
                if !r.is_empty() { r.rotate_left(t); }
                r == v
            });
            prop_assert_eq!(cyclic_shift(&u, &v), naive);
        }

        #[test]
        fn period_matches_naive(w in prop::collection::vec(0u8..2, 1..16)) {
            let n = w.len();
            let naive = (1..=n)
                .find(|&t| n % t == 0 && w.chunks(t).all(|c| c == &w[..t]))
                .unwrap();
            prop_assert_eq!(primitive_period(&w), naive);
        }
    }
}
