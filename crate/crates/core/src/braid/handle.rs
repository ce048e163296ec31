//! Handle reduction.
//!
//! An `s_i`-handle is a subword `s_i^e u s_i^{-e}` where every letter of `u`
//! has index greater than `i`. Reducing it conjugates `u` letter by letter:
//! `s_{i+1}^d ↦ s_{i+1}^{-e} s_i^d s_{i+1}^e`, higher letters unchanged.
//! Reducing the handle whose right end comes first (it contains no inner
//! handle) always terminates, and a word is trivial iff it reduces to the
//! empty word: a nonempty handle-free word has all its lowest-index letters
//! of one sign.

/// Reduces `letters` until no handle remains.
pub fn handle_reduce(letters: &[i32]) -> Vec<i32> {
    let mut word = letters.to_vec();
    let max_index = word
        .iter()
        .map(|l| l.unsigned_abs() as usize)
        .max()
        .unwrap_or(0);
    // last[j] = most recent position of a letter with index j
    let mut last: Vec<Option<usize>> = vec![None; max_index + 2];
    let mut start = 0;
    while let Some((s, k)) = first_handle(&word, start, &mut last) {
        let e = word[s].signum();
        let i = word[s].abs();
        let mut replacement = Vec::with_capacity(3 * (k - s));
        for &d in &word[s + 1..k] {
            if d.abs() == i + 1 {
                replacement.push(-e * (i + 1));
                replacement.push(d.signum() * i);
                replacement.push(e * (i + 1));
            } else {
                replacement.push(d);
            }
        }
        word.splice(s..=k, replacement);
        start = s;
    }
    word
}

/// Finds the handle with the leftmost right end, scanning right ends from
/// `start` (no handle ends before it).
fn first_handle(word: &[i32], start: usize, last: &mut [Option<usize>]) -> Option<(usize, usize)> {
    last.iter_mut().for_each(|p| *p = None);
    for (pos, &l) in word.iter().enumerate().take(start) {
        last[l.unsigned_abs() as usize] = Some(pos);
    }
    for k in start..word.len() {
        let l = word[k];
        let i = l.unsigned_abs() as usize;
        let prev = last[1..=i].iter().flatten().max().copied();
        if let Some(s) = prev {
            if word[s] == -l {
                return Some((s, k));
            }
        }
        last[i] = Some(k);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_pairs_vanish() {
        assert!(handle_reduce(&[1, -1]).is_empty());
        assert!(handle_reduce(&[2, 1, -1, -2]).is_empty());
    }

    #[test]
    fn braid_relation_reduces() {
        assert!(handle_reduce(&[1, 2, 1, -2, -1, -2]).is_empty());
        assert!(handle_reduce(&[1, 3, -1, -3]).is_empty());
    }

    #[test]
    fn nontrivial_stays_nonempty() {
        assert!(!handle_reduce(&[1, 1]).is_empty());
        assert!(!handle_reduce(&[1, 2, -1]).is_empty());
        let r = handle_reduce(&[1, 2, -1, 3, -2]);
        assert!(!r.is_empty());
    }

    #[test]
    fn result_is_handle_free() {
        let r = handle_reduce(&[1, 2, -1, 2, 1, -2, -2, -1, 3, 1]);
        let mut last = vec![None; 5];
        assert!(first_handle(&r, 0, &mut last).is_none());
    }
}
