//! Braid groups `B_n` and pure braid groups `PB_n` in Artin generators.
//!
//! A word is read left to right as bottom to top. Letter `+i` is the
//! generator `s_i`: the strand at position `i` goes up and crosses under the
//! strand at position `i + 1`. Letter `-i` is its inverse. Strands are
//! numbered from 1 at the bottom of the picture.

mod free_group;
mod handle;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use free_group::{artin_images, FreeWord};
pub use handle::handle_reduce;

/// Which word-problem engine decides triviality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    /// Faithful action of `B_n` on the free group of rank `n`.
    FreeGroupAction,
    /// Handle reduction (rewriting to the empty word or a handle-free word).
    HandleReduction,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBraid", into = "RawBraid")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct RawBraid {
    strands: usize,
    letters: Vec<i32>,
}

impl TryFrom<RawBraid> for BraidWord {
    type Error = Error;

    fn try_from(raw: RawBraid) -> Result<Self> {
        BraidWord::new(raw.strands, raw.letters)
    }
}

impl From<BraidWord> for RawBraid {
    fn from(b: BraidWord) -> Self {
        RawBraid {
            strands: b.strands,
            letters: b.letters,
        }
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Precondition(
                "a braid needs at least one strand".into(),
            ));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::LetterOutOfRange { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1);
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self` followed by `other` (so `other` sits on top), freely reduced.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            if letters.last() == Some(&-l) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Removes adjacent inverse pairs.
    pub fn free_reduce(&self) -> BraidWord {
        let mut letters: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if letters.last() == Some(&-l) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn permutation(&self) -> Permutation {
        let n = self.strands;
        // position[s] = current position of the strand that started at s
        let mut at: Vec<usize> = (0..n).collect(); // at[pos] = strand
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize - 1;
            at.swap(k, k + 1);
        }
        let mut images = vec![0; n];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand] = pos;
        }
        Permutation { images }
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    pub fn is_trivial(&self) -> bool {
        self.is_trivial_with(Engine::HandleReduction)
    }

    pub fn is_trivial_with(&self, engine: Engine) -> bool {
        if self.letters.is_empty() {
            return true;
        }
        match engine {
            Engine::HandleReduction => handle_reduce(&self.letters).is_empty(),
            Engine::FreeGroupAction => {
                // a·b = 1 iff the actions of a and b⁻¹ agree; splitting keeps
                // the image words short.
                let mid = self.letters.len() / 2;
                let lower = &self.letters[..mid];
                let upper: Vec<i32> = self.letters[mid..].iter().rev().map(|l| -l).collect();
                artin_images(self.strands, lower) == artin_images(self.strands, &upper)
            }
        }
    }

    pub fn equals(&self, other: &BraidWord) -> Result<bool> {
        Ok(self.compose(&other.invert())?.is_trivial())
    }

    /// Deletes the strand that starts at bottom position `i`.
    pub fn delete_strand(&self, i: usize) -> Result<BraidWord> {
        let n = self.strands;
        if n < 2 || i == 0 || i > n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: if n < 2 { 0 } else { n },
            });
        }
        let mut pos = i;
        let mut letters = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize;
            if k == pos {
                pos = k + 1;
            } else if k + 1 == pos {
                pos = k;
            } else if k > pos {
                letters.push(l.signum() * (k as i32 - 1));
            } else {
                letters.push(l);
            }
        }
        Ok(BraidWord {
            strands: n - 1,
            letters,
        }
        .free_reduce())
    }

    /// Keeps only the strands whose bottom positions are listed.
    pub fn restrict_to(&self, keep: &[usize]) -> Result<BraidWord> {
        let mut drop: Vec<usize> = (1..=self.strands).filter(|s| !keep.contains(s)).collect();
        drop.sort_unstable_by(|a, b| b.cmp(a));
        let mut b = self.clone();
        for s in drop {
            // bottom numbering of the remaining strands below s is unchanged
            b = b.delete_strand(s)?;
        }
        Ok(b)
    }

    /// Replaces the strand starting at bottom position `i` by two parallel
    /// strands. Every crossing with the cable becomes two crossings of the
    /// same sign.
    pub fn double_strand(&self, i: usize) -> Result<BraidWord> {
        let n = self.strands;
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        let mut pos = i;
        let mut letters = Vec::with_capacity(self.letters.len() + 8);
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize;
            let s = l.signum();
            let (k, k1) = (k as i32, k as i32 + 1);
            if k as usize == pos {
                letters.push(s * k1);
                letters.push(s * k);
                pos += 1;
            } else if k as usize + 1 == pos {
                letters.push(s * k);
                letters.push(s * k1);
                pos -= 1;
            } else if (k as usize) > pos {
                letters.push(s * k1);
            } else {
                letters.push(l);
            }
        }
        Ok(BraidWord {
            strands: n + 1,
            letters,
        })
    }

    /// Winding number of strands `i < j` of a pure braid, normalised so that
    /// `s_1^2` in `PB_2` has winding number 1.
    pub fn winding_number(&self, i: usize, j: usize) -> Result<i64> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        if i == 0 || j > self.strands {
            return Err(Error::IndexOutOfRange {
                index: if i == 0 { i } else { j },
                max: self.strands,
            });
        }
        if i >= j {
            return Err(Error::Precondition(format!(
                "winding indices need i < j, got {i}, {j}"
            )));
        }
        let two = self.restrict_to(&[i, j])?;
        let sum: i64 = two.letters.iter().map(|&l| l.signum() as i64).sum();
        debug_assert!(sum % 2 == 0);
        Ok(sum / 2)
    }

    /// Exponent sum of the word.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// `Δ_n = s_1⋯s_{n-1} s_1⋯s_{n-2} ⋯ s_1 s_2 s_1`.
    pub fn half_twist(n: usize) -> BraidWord {
        assert!(n >= 1);
        let mut letters = Vec::with_capacity(n * (n - 1) / 2);
        for top in (1..n).rev() {
            letters.extend(1..=top as i32);
        }
        BraidWord {
            strands: n,
            letters,
        }
    }

    /// `Δ_n²`, which generates the centre of `PB_n`.
    pub fn full_twist(n: usize) -> BraidWord {
        let half = Self::half_twist(n);
        let mut letters = half.letters.clone();
        letters.extend_from_slice(&half.letters);
        BraidWord {
            strands: n,
            letters,
        }
    }

    /// A positive braid whose permutation is the transposition of `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<BraidWord> {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        if a == 0 || b > n {
            return Err(Error::IndexOutOfRange {
                index: b.max(a),
                max: n,
            });
        }
        let mut letters: Vec<i32> = (a..b).map(|k| k as i32).collect();
        letters.extend((a..b.saturating_sub(1)).rev().map(|k| k as i32));
        Ok(BraidWord {
            strands: n,
            letters,
        })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[", self.strands)?;
        for (idx, l) in self.letters.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

/// A permutation of `{1, …, n}`; `image(i) = j` means the strand that starts
/// at bottom position `i` ends at top position `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds from 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &j in images {
            if j == 0 || j > n || seen[j - 1] {
                return Err(Error::Precondition(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[j - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|j| j - 1).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 1-based image of 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|j| j + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn after(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }
}
