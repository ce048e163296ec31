//! Seeded random generators for braids, trees and group elements.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;
use crate::diagram::{Diagram, GroupElement};
use crate::forest::{Address, Tree};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn letter<R: Rng>(rng: &mut R, strands: usize) -> i32 {
    let i = rng.gen_range(1..strands as i32);
    if rng.gen_bool(0.5) {
        i
    } else {
        -i
    }
}

/// A uniformly random word of exactly `len` letters (`strands ≥ 2`).
pub fn random_word<R: Rng>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    if strands < 2 {
        return BraidWord::identity(strands);
    }
    let letters = (0..len).map(|_| letter(rng, strands)).collect();
    BraidWord::new(strands, letters).expect("letters in range")
}

/// A random word followed by a sorting braid, so the result is pure.
pub fn random_pure_braid<R: Rng>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    let w = random_word(rng, strands, len);
    let mut letters = w.letters().to_vec();
    // at[p] = starting position of the strand now at position p
    let mut at: Vec<usize> = (0..strands).collect();
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        at.swap(i, i + 1);
    }
    while let Some(i) = (0..strands.saturating_sub(1)).find(|&i| at[i] > at[i + 1]) {
        at.swap(i, i + 1);
        let s = i as i32 + 1;
        letters.push(if rng.gen_bool(0.5) { s } else { -s });
    }
    BraidWord::new(strands, letters).expect("letters in range")
}

/// A word of at most `len` letters equal to the identity: `r · r'⁻¹` where
/// `r'` is `r` scrambled by random applications of the braid relations.
pub fn random_trivial_word<R: Rng>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    if strands < 2 {
        return BraidWord::identity(strands);
    }
    let half = len / 2;
    let r = random_word(rng, strands, half);
    let mut s = r.letters().to_vec();
    for _ in 0..half.max(1) * 2 {
        scramble_step(rng, &mut s, strands, len - half);
    }
    let mut letters = r.letters().to_vec();
    letters.extend(s.iter().rev().map(|l| -l));
    BraidWord::new(strands, letters).expect("letters in range")
}

fn scramble_step<R: Rng>(rng: &mut R, s: &mut Vec<i32>, strands: usize, budget: usize) {
    let pos = if s.is_empty() {
        0
    } else {
        rng.gen_range(0..s.len())
    };
    match rng.gen_range(0..3) {
        0 if s.len() + 2 <= budget => {
            let l = letter(rng, strands);
            s.splice(pos..pos, [l, -l]);
        }
        1 if pos + 1 < s.len() => {
            let (a, b) = (s[pos], s[pos + 1]);
            if (a.abs() - b.abs()).abs() >= 2 {
                s.swap(pos, pos + 1);
            }
        }
        _ if pos + 2 < s.len() => {
            let (a, b, c) = (s[pos], s[pos + 1], s[pos + 2]);
            if a == c && (a.abs() - b.abs()).abs() == 1 && a.signum() == b.signum() {
                s[pos] = b;
                s[pos + 1] = a;
                s[pos + 2] = b;
            }
        }
        _ => {}
    }
}

/// A random tree with `leaves` leaves, grown by splitting random leaves.
pub fn random_tree<R: Rng>(rng: &mut R, leaves: usize) -> Tree {
    let mut t = Tree::trivial();
    while t.leaf_count() < leaves.max(1) {
        let i = rng.gen_range(1..=t.leaf_count());
        t = t.add_caret(i).expect("leaf in range");
    }
    t
}

/// A random element with trees of `leaves` leaves and a pure braid built
/// from `braid_len` random letters.
pub fn random_element<R: Rng>(rng: &mut R, leaves: usize, braid_len: usize) -> GroupElement {
    let neg = random_tree(rng, leaves);
    let pos = random_tree(rng, leaves);
    let b = random_pure_braid(rng, leaves, braid_len);
    GroupElement::from_parts(neg, b, pos).expect("matching leaf counts")
}

/// A random element of `Fbr(w)`: both trees are the vine to `w` with a
/// random subtree of `extra + 1` leaves grafted at `w`.
pub fn random_deferred_element<R: Rng>(
    rng: &mut R,
    w: &Address,
    extra: usize,
    braid_len: usize,
) -> GroupElement {
    let vine = Tree::vine(w);
    let neg = vine
        .graft(w, &random_tree(rng, extra + 1))
        .expect("w is a leaf of its vine");
    let pos = vine
        .graft(w, &random_tree(rng, extra + 1))
        .expect("w is a leaf of its vine");
    let b = random_pure_braid(rng, neg.leaf_count(), braid_len);
    GroupElement::from_parts(neg, b, pos).expect("matching leaf counts")
}

/// Applies `count` random expansions to a diagram.
pub fn random_expansion<R: Rng>(rng: &mut R, d: &Diagram, count: usize) -> Diagram {
    let mut d = d.clone();
    for _ in 0..count {
        let k = rng.gen_range(1..=d.strands());
        d = if rng.gen_bool(0.5) {
            d.expand(k).expect("leaf in range")
        } else {
            d.expand_neg(k).expect("leaf in range")
        };
    }
    d
}

/// A random subset of `items` of size at most `max`.
pub fn random_subset<R: Rng, T: Clone>(rng: &mut R, items: &[T], max: usize) -> Vec<T> {
    let k = rng.gen_range(0..=max.min(items.len()));
    items.choose_multiple(rng, k).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_braids_are_pure() {
        let mut r = rng(1);
        for n in 1..7 {
            for len in 0..20 {
                let b = random_pure_braid(&mut r, n, len);
                assert!(b.is_pure());
            }
        }
    }

    #[test]
    fn trivial_words_are_trivial() {
        let mut r = rng(2);
        for _ in 0..50 {
            let n = r.gen_range(2..6);
            let w = random_trivial_word(&mut r, n, 30);
            assert!(w.is_trivial());
        }
    }

    #[test]
    fn deferred_elements_are_members() {
        let mut r = rng(3);
        for w in ["", "0", "1", "10"] {
            let w: Address = w.parse().unwrap();
            for _ in 0..10 {
                let g = random_deferred_element(&mut r, &w, 3, 6);
                assert!(crate::diagram::in_deferred_subgroup(&g, &w).unwrap());
            }
        }
    }

    #[test]
    fn deterministic() {
        let a = random_element(&mut rng(9), 5, 10);
        let b = random_element(&mut rng(9), 5, 10);
        assert!(a.equals(&b));
        assert_eq!(a.diagram(), b.diagram());
    }
}
