//! Finite rooted binary trees and forests, stored as sorted antichains of
//! leaf addresses over `{0, 1}`.
//!
//! Leaves are numbered from 1, left to right, and within a forest the
//! numbering runs across all trees in order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex address; the root is the empty word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Address(Vec<u8>);

impl Address {
    pub fn root() -> Self {
        Address(Vec::new())
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidAddress(
                bits.iter().map(|b| b.to_string()).collect::<String>(),
            ));
        }
        Ok(Address(bits.to_vec()))
    }

    /// `1` repeated `n` times.
    pub fn ones(n: usize) -> Self {
        Address(vec![1; n])
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, bit: u8) -> Address {
        debug_assert!(bit <= 1);
        let mut v = self.0.clone();
        v.push(bit);
        Address(v)
    }

    pub fn extended(&self, suffix: &[u8]) -> Address {
        let mut v = self.0.clone();
        v.extend_from_slice(suffix);
        Address(v)
    }

    pub fn parent(&self) -> Option<Address> {
        if self.0.is_empty() {
            None
        } else {
            Some(Address(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    pub fn is_prefix_of(&self, other: &Address) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn is_proper_prefix_of(&self, other: &Address) -> bool {
        self.0.len() < other.0.len() && self.is_prefix_of(other)
    }

    pub fn is_independent_of(&self, other: &Address) -> bool {
        !self.is_prefix_of(other) && !other.is_prefix_of(self)
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for Address {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "ε" {
            return Ok(Address::root());
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidAddress(s.to_string())),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Address)
    }
}

/// A finite rooted binary tree, given by its leaf addresses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct Tree {
    leaves: Vec<Address>,
}

impl TryFrom<Vec<String>> for Tree {
    type Error = Error;

    fn try_from(raw: Vec<String>) -> Result<Self> {
        let leaves = raw
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<Address>>>()?;
        Tree::from_leaves(leaves)
    }
}

impl From<Tree> for Vec<String> {
    fn from(t: Tree) -> Self {
        t.leaves.iter().map(|a| a.to_string()).collect()
    }
}

/// Checks that the sorted slice is exactly the leaf set of a complete binary
/// tree rooted at `prefix`.
fn is_complete(leaves: &[Address], prefix: &[u8]) -> bool {
    match leaves {
        [] => false,
        [only] if only.0 == prefix => true,
        _ => {
            let depth = prefix.len();
            if leaves
                .iter()
                .any(|a| a.0.len() <= depth || !a.0.starts_with(prefix))
            {
                return false;
            }
            let split = leaves.partition_point(|a| a.0[depth] == 0);
            let mut left = prefix.to_vec();
            left.push(0);
            let mut right = prefix.to_vec();
            right.push(1);
            is_complete(&leaves[..split], &left) && is_complete(&leaves[split..], &right)
        }
    }
}

impl Tree {
    pub fn trivial() -> Self {
        Tree {
            leaves: vec![Address::root()],
        }
    }

    pub fn caret() -> Self {
        Tree {
            leaves: vec![Address(vec![0]), Address(vec![1])],
        }
    }

    /// Validates the antichain and the Kraft equality.
    pub fn from_leaves(mut leaves: Vec<Address>) -> Result<Self> {
        leaves.sort();
        let before = leaves.len();
        leaves.dedup();
        if leaves.len() != before {
            return Err(Error::InvalidTree("repeated leaf address".into()));
        }
        if !is_complete(&leaves, &[]) {
            return Err(Error::InvalidTree(format!(
                "{:?} is not the leaf set of a complete binary tree",
                leaves.iter().map(|a| a.to_string()).collect::<Vec<_>>()
            )));
        }
        Ok(Tree { leaves })
    }

    /// Parses a list of address strings.
    pub fn parse(addresses: &[&str]) -> Result<Self> {
        Tree::from_leaves(addresses.iter().map(|s| s.parse()).collect::<Result<_>>()?)
    }

    /// The vine to `w`: the tree with `|w| + 1` leaves having `w` as a leaf.
    pub fn vine(w: &Address) -> Self {
        let mut leaves: Vec<Address> = (0..w.len())
            .map(|k| {
                let mut v = w.0[..k].to_vec();
                v.push(1 - w.0[k]);
                Address(v)
            })
            .collect();
        leaves.push(w.clone());
        leaves.sort();
        Tree { leaves }
    }

    pub fn leaves(&self) -> &[Address] {
        &self.leaves
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.leaves.len() == 1
    }

    pub fn caret_count(&self) -> usize {
        self.leaves.len() - 1
    }

    /// 1-based index of the leaf with address `a`.
    pub fn leaf_index(&self, a: &Address) -> Option<usize> {
        self.leaves.binary_search(a).ok().map(|i| i + 1)
    }

    pub fn leaf(&self, i: usize) -> &Address {
        &self.leaves[i - 1]
    }

    /// Depth of the first leaf.
    pub fn left_depth(&self) -> usize {
        self.leaves[0].len()
    }

    /// Depth of the last leaf.
    pub fn right_depth(&self) -> usize {
        self.leaves[self.leaves.len() - 1].len()
    }

    /// Adds a caret to the `i`-th leaf.
    pub fn add_caret(&self, i: usize) -> Result<Tree> {
        if i == 0 || i > self.leaves.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.leaves.len(),
            });
        }
        let mut leaves = Vec::with_capacity(self.leaves.len() + 1);
        leaves.extend_from_slice(&self.leaves[..i - 1]);
        leaves.push(self.leaves[i - 1].child(0));
        leaves.push(self.leaves[i - 1].child(1));
        leaves.extend_from_slice(&self.leaves[i..]);
        Ok(Tree { leaves })
    }

    /// True when leaves `i` and `i + 1` are the two children of one vertex.
    pub fn has_caret_at(&self, i: usize) -> bool {
        if i == 0 || i >= self.leaves.len() {
            return false;
        }
        let (a, b) = (&self.leaves[i - 1], &self.leaves[i]);
        a.len() == b.len()
            && !a.is_empty()
            && a.0[a.len() - 1] == 0
            && b.0[b.len() - 1] == 1
            && a.0[..a.len() - 1] == b.0[..b.len() - 1]
    }

    /// Removes the caret formed by leaves `i` and `i + 1`.
    pub fn remove_caret(&self, i: usize) -> Result<Tree> {
        if !self.has_caret_at(i) {
            return Err(Error::ShapeMismatch(format!(
                "leaves {i} and {} are not a caret",
                i + 1
            )));
        }
        let mut leaves = self.leaves.clone();
        let parent = leaves[i - 1].parent().expect("caret leaf has a parent");
        leaves.splice(i - 1..=i, [parent]);
        Ok(Tree { leaves })
    }

    /// True iff every leaf extends `w` or is a leaf of the vine to `w`.
    pub fn is_deferred(&self, w: &Address) -> bool {
        let vine = Tree::vine(w);
        self.leaves
            .iter()
            .all(|a| w.is_prefix_of(a) || vine.leaf_index(a).is_some())
    }

    /// Left and right depth below `w` of a `w`-deferred tree.
    pub fn depths(&self, w: &Address) -> Result<(usize, usize)> {
        if !self.is_deferred(w) {
            return Err(Error::NotDeferred(w.to_string()));
        }
        let under: Vec<&Address> = self.leaves.iter().filter(|a| w.is_prefix_of(a)).collect();
        let first = under.first().expect("a deferred tree has a leaf under w");
        let last = under.last().expect("a deferred tree has a leaf under w");
        Ok((first.len() - w.len(), last.len() - w.len()))
    }

    /// True iff `self` is obtained from `coarser` by adding carets.
    pub fn is_expansion_of(&self, coarser: &Tree) -> bool {
        self.leaves
            .iter()
            .all(|a| coarser.leaves.iter().any(|c| c.is_prefix_of(a)))
    }

    /// The least common expansion.
    pub fn common_refinement(&self, other: &Tree) -> Tree {
        let all: BTreeSet<&Address> = self.leaves.iter().chain(other.leaves.iter()).collect();
        let leaves: Vec<Address> = all
            .iter()
            .filter(|a| !all.iter().any(|b| a.is_proper_prefix_of(b)))
            .map(|a| (*a).clone())
            .collect();
        Tree { leaves }
    }

    /// Subtree rooted at the internal vertex or leaf `v`, re-rooted.
    pub fn subtree(&self, v: &Address) -> Option<Tree> {
        let leaves: Vec<Address> = self
            .leaves
            .iter()
            .filter(|a| v.is_prefix_of(a))
            .map(|a| Address(a.0[v.len()..].to_vec()))
            .collect();
        Tree::from_leaves(leaves).ok()
    }

    /// Replaces leaf `at` by a copy of `sub`.
    pub fn graft(&self, at: &Address, sub: &Tree) -> Result<Tree> {
        let idx = self
            .leaf_index(at)
            .ok_or_else(|| Error::ShapeMismatch(format!("{at} is not a leaf")))?;
        let mut leaves = self.leaves[..idx - 1].to_vec();
        leaves.extend(sub.leaves.iter().map(|s| at.extended(&s.0)));
        leaves.extend_from_slice(&self.leaves[idx..]);
        Ok(Tree { leaves })
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.leaves.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if a.is_empty() {
                write!(f, "ε")?;
            } else {
                write!(f, "{a}")?;
            }
        }
        write!(f, "}}")
    }
}

/// A nonempty sequence of trees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Tree>", into = "Vec<Tree>")]
pub struct Forest {
    trees: Vec<Tree>,
}

impl TryFrom<Vec<Tree>> for Forest {
    type Error = Error;

    fn try_from(trees: Vec<Tree>) -> Result<Self> {
        Forest::new(trees)
    }
}

impl From<Forest> for Vec<Tree> {
    fn from(f: Forest) -> Self {
        f.trees
    }
}

impl From<Tree> for Forest {
    fn from(t: Tree) -> Self {
        Forest { trees: vec![t] }
    }
}

impl Forest {
    pub fn new(trees: Vec<Tree>) -> Result<Self> {
        if trees.is_empty() {
            return Err(Error::InvalidTree(
                "a forest needs at least one tree".into(),
            ));
        }
        Ok(Forest { trees })
    }

    /// The trivial forest `1_n`.
    pub fn trivial(n: usize) -> Self {
        assert!(n >= 1);
        Forest {
            trees: vec![Tree::trivial(); n],
        }
    }

    /// An elementary forest on `roots` roots with carets at the listed roots.
    pub fn elementary(roots: usize, carets: &[usize]) -> Result<Self> {
        if roots == 0 {
            return Err(Error::InvalidTree(
                "a forest needs at least one tree".into(),
            ));
        }
        let mut trees = vec![Tree::trivial(); roots];
        for &r in carets {
            if r == 0 || r > roots {
                return Err(Error::IndexOutOfRange {
                    index: r,
                    max: roots,
                });
            }
            trees[r - 1] = Tree::caret();
        }
        Ok(Forest { trees })
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn root_count(&self) -> usize {
        self.trees.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.trees.iter().map(Tree::leaf_count).sum()
    }

    pub fn caret_count(&self) -> usize {
        self.trees.iter().map(Tree::caret_count).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.trees.iter().all(Tree::is_trivial)
    }

    /// The single tree, if there is exactly one.
    pub fn as_tree(&self) -> Option<&Tree> {
        match self.trees.as_slice() {
            [t] => Some(t),
            _ => None,
        }
    }

    /// Maps a global 1-based leaf index to (tree index, local leaf index),
    /// both 1-based.
    pub fn locate(&self, leaf: usize) -> Result<(usize, usize)> {
        let mut rest = leaf;
        if leaf == 0 {
            return Err(Error::IndexOutOfRange {
                index: 0,
                max: self.leaf_count(),
            });
        }
        for (t, tree) in self.trees.iter().enumerate() {
            if rest <= tree.leaf_count() {
                return Ok((t + 1, rest));
            }
            rest -= tree.leaf_count();
        }
        Err(Error::IndexOutOfRange {
            index: leaf,
            max: self.leaf_count(),
        })
    }

    /// Global index of the first leaf of tree `t` (1-based).
    pub fn first_leaf_of(&self, t: usize) -> usize {
        1 + self.trees[..t - 1]
            .iter()
            .map(Tree::leaf_count)
            .sum::<usize>()
    }

    /// Address (within its tree) of global leaf `leaf`.
    pub fn leaf_address(&self, leaf: usize) -> Result<(usize, &Address)> {
        let (t, i) = self.locate(leaf)?;
        Ok((t, self.trees[t - 1].leaf(i)))
    }

    pub fn add_caret(&self, leaf: usize) -> Result<Forest> {
        let (t, i) = self.locate(leaf)?;
        let mut trees = self.trees.clone();
        trees[t - 1] = trees[t - 1].add_caret(i)?;
        Ok(Forest { trees })
    }

    /// True when global leaves `leaf` and `leaf + 1` form a caret.
    pub fn has_caret_at(&self, leaf: usize) -> bool {
        match (self.locate(leaf), self.locate(leaf + 1)) {
            (Ok((t, i)), Ok((t2, _))) if t == t2 => self.trees[t - 1].has_caret_at(i),
            _ => false,
        }
    }

    pub fn remove_caret(&self, leaf: usize) -> Result<Forest> {
        if !self.has_caret_at(leaf) {
            return Err(Error::ShapeMismatch(format!(
                "leaves {leaf} and {} are not a caret",
                leaf + 1
            )));
        }
        let (t, i) = self.locate(leaf)?;
        let mut trees = self.trees.clone();
        trees[t - 1] = trees[t - 1].remove_caret(i)?;
        Ok(Forest { trees })
    }

    /// Componentwise least common expansion.
    pub fn common_refinement(&self, other: &Forest) -> Result<Forest> {
        if self.root_count() != other.root_count() {
            return Err(Error::RootMismatch {
                left: self.root_count(),
                right: other.root_count(),
            });
        }
        Ok(Forest {
            trees: self
                .trees
                .iter()
                .zip(&other.trees)
                .map(|(a, b)| a.common_refinement(b))
                .collect(),
        })
    }

    pub fn is_expansion_of(&self, coarser: &Forest) -> bool {
        self.root_count() == coarser.root_count()
            && self
                .trees
                .iter()
                .zip(&coarser.trees)
                .all(|(a, b)| a.is_expansion_of(b))
    }

    /// Each tree is trivial or a single caret.
    pub fn is_elementary(&self) -> bool {
        self.trees.iter().all(|t| t.leaf_count() <= 2)
    }

    /// Root support and leaf support of an elementary forest, 1-based.
    pub fn supports(&self) -> Result<(Vec<usize>, Vec<usize>)> {
        if !self.is_elementary() {
            return Err(Error::NotElementary);
        }
        let mut roots = Vec::new();
        let mut leaves = Vec::new();
        let mut leaf = 1;
        for (r, t) in self.trees.iter().enumerate() {
            if t.leaf_count() == 2 {
                roots.push(r + 1);
                leaves.push(leaf);
                leaves.push(leaf + 1);
            }
            leaf += t.leaf_count();
        }
        Ok((roots, leaves))
    }

    /// First `n` trees trivial.
    pub fn is_bare(&self, n: usize) -> bool {
        self.trees.len() >= n && self.trees[..n].iter().all(Tree::is_trivial)
    }

    /// Stacks `lower` under `self`: the leaves of `self` become the roots of
    /// `lower`. Both must be elementary and no caret of `lower` may hang
    /// from a leaf of a caret of `self`.
    pub fn elementary_compose(&self, lower: &Forest) -> Result<Forest> {
        if !self.is_elementary() || !lower.is_elementary() {
            return Err(Error::NotElementary);
        }
        if self.leaf_count() != lower.root_count() {
            return Err(Error::ShapeMismatch(format!(
                "{} leaves on top of {} roots",
                self.leaf_count(),
                lower.root_count()
            )));
        }
        let (_, upper_leaves) = self.supports()?;
        let (lower_roots, _) = lower.supports()?;
        if let Some(&clash) = upper_leaves.iter().find(|l| lower_roots.contains(l)) {
            return Err(Error::SupportOverlap(clash));
        }
        let mut trees = Vec::with_capacity(self.trees.len());
        let mut leaf = 1;
        for t in &self.trees {
            if t.leaf_count() == 2 {
                trees.push(t.clone());
                leaf += 2;
            } else {
                trees.push(lower.trees[leaf - 1].clone());
                leaf += 1;
            }
        }
        Ok(Forest { trees })
    }

    /// The forest obtained by hanging `lower` under the leaves of `self`
    /// (general, not necessarily elementary).
    pub fn stack(&self, lower: &Forest) -> Result<Forest> {
        if self.leaf_count() != lower.root_count() {
            return Err(Error::ShapeMismatch(format!(
                "{} leaves on top of {} roots",
                self.leaf_count(),
                lower.root_count()
            )));
        }
        let mut k = 0;
        let mut trees = Vec::with_capacity(self.trees.len());
        for t in &self.trees {
            let mut leaves = Vec::new();
            for a in t.leaves() {
                for s in lower.trees[k].leaves() {
                    leaves.push(a.extended(s.bits()));
                }
                k += 1;
            }
            trees.push(Tree { leaves });
        }
        Ok(Forest { trees })
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, t) in self.trees.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

/// All trees with exactly `leaves` leaves.
pub fn all_trees(leaves: usize) -> Vec<Tree> {
    fn build(n: usize) -> Vec<Vec<Address>> {
        if n == 1 {
            return vec![vec![Address::root()]];
        }
        let mut out = Vec::new();
        for left in 1..n {
            for l in build(left) {
                for r in build(n - left) {
                    let mut v: Vec<Address> = l
                        .iter()
                        .map(|a| Address::root().child(0).extended(a.bits()))
                        .collect();
                    v.extend(
                        r.iter()
                            .map(|a| Address::root().child(1).extended(a.bits())),
                    );
                    out.push(v);
                }
            }
        }
        out
    }
    if leaves == 0 {
        return Vec::new();
    }
    build(leaves)
        .into_iter()
        .map(|leaves| Tree { leaves })
        .collect()
}

/// All elementary forests with the given number of roots.
pub fn all_elementary_forests(roots: usize) -> Vec<Forest> {
    (0u32..1 << roots)
        .map(|mask| {
            let carets: Vec<usize> = (0..roots)
                .filter(|r| mask >> r & 1 == 1)
                .map(|r| r + 1)
                .collect();
            Forest::elementary(roots, &carets).expect("valid caret positions")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Address {
        s.parse().unwrap()
    }

    fn t(v: &[&str]) -> Tree {
        Tree::parse(v).unwrap()
    }

    #[test]
    fn vine_examples() {
        assert_eq!(Tree::vine(&a("")), Tree::trivial());
        assert_eq!(Tree::vine(&a("0")), t(&["0", "1"]));
        assert_eq!(Tree::vine(&a("01")), t(&["00", "01", "1"]));
        assert_eq!(Tree::vine(&a("0110")).leaf_count(), 5);
    }

    #[test]
    fn rejects_non_trees() {
        assert!(Tree::parse(&["0"]).is_err());
        assert!(Tree::parse(&["0", "01", "1"]).is_err());
        assert!(Tree::parse(&["00", "1"]).is_err());
        assert!(Tree::parse(&["0", "0", "1"]).is_err());
        assert!(Tree::parse(&["0", "2"]).is_err());
        assert!(Tree::parse(&[]).is_err());
    }

    #[test]
    fn deferred_examples() {
        let any = t(&["00", "010", "011", "1"]);
        assert!(any.is_deferred(&a("")));
        assert!(Tree::vine(&a("01")).is_deferred(&a("01")));
        assert!(!t(&["00", "01", "1"]).is_deferred(&a("1")));
    }

    #[test]
    fn depth_examples() {
        let w = a("0110");
        assert_eq!(Tree::vine(&w).depths(&w).unwrap(), (0, 0));
        assert_eq!(t(&["00", "01", "1"]).depths(&a("")).unwrap(), (2, 1));
        assert_eq!(t(&["0", "10", "11"]).depths(&a("")).unwrap(), (1, 2));
        assert!(t(&["00", "01", "1"]).depths(&a("1")).is_err());
    }

    #[test]
    fn refinement_examples() {
        let x = t(&["0", "10", "11"]);
        assert_eq!(x.common_refinement(&x), x);
        assert_eq!(
            Tree::trivial().common_refinement(&Tree::caret()),
            Tree::caret()
        );
        assert_eq!(
            x.common_refinement(&t(&["00", "01", "1"])),
            t(&["00", "01", "10", "11"])
        );
    }

    #[test]
    fn caret_moves_are_inverse() {
        let x = t(&["0", "10", "11"]);
        let y = x.add_caret(1).unwrap();
        assert_eq!(y, t(&["00", "01", "10", "11"]));
        assert!(y.has_caret_at(1));
        assert!(!y.has_caret_at(2));
        assert_eq!(y.remove_caret(1).unwrap(), x);
        assert!(x.remove_caret(1).is_err());
    }

    #[test]
    fn elementary_examples() {
        let triv = Forest::trivial(3);
        assert!(triv.is_elementary());
        assert_eq!(triv.supports().unwrap(), (vec![], vec![]));
        let e = Forest::elementary(2, &[1]).unwrap();
        assert_eq!(e.supports().unwrap(), (vec![1], vec![1, 2]));
        let f = Forest::new(vec![t(&["0", "10", "11"])]).unwrap();
        assert!(!f.is_elementary());
        assert_eq!(f.supports(), Err(Error::NotElementary));
    }

    #[test]
    fn elementary_compose_examples() {
        let e = Forest::elementary(2, &[1]).unwrap();
        assert_eq!(e.elementary_compose(&Forest::trivial(3)).unwrap(), e);
        let d = Forest::elementary(3, &[3]).unwrap();
        assert_eq!(
            e.elementary_compose(&d).unwrap(),
            Forest::elementary(2, &[1, 2]).unwrap()
        );
        let clash = Forest::elementary(3, &[2]).unwrap();
        assert_eq!(e.elementary_compose(&clash), Err(Error::SupportOverlap(2)));
        assert!(matches!(
            e.elementary_compose(&Forest::trivial(2)),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn stack_matches_elementary_compose() {
        let e = Forest::elementary(3, &[1, 3]).unwrap();
        let d = Forest::elementary(5, &[3]).unwrap();
        assert_eq!(e.stack(&d).unwrap(), e.elementary_compose(&d).unwrap());
    }

    #[test]
    fn enumerations() {
        let catalan = [1, 1, 2, 5, 14, 42];
        for (i, &c) in catalan.iter().enumerate() {
            assert_eq!(all_trees(i + 1).len(), c);
        }
        assert_eq!(all_elementary_forests(3).len(), 8);
    }

    #[test]
    fn json_shape() {
        let f = Forest::new(vec![Tree::trivial(), t(&["0", "1"])]).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"[[""],["0","1"]]"#);
        assert_eq!(serde_json::from_str::<Forest>(&s).unwrap(), f);
        assert!(serde_json::from_str::<Tree>(r#"["0","2"]"#).is_err());
        assert!(serde_json::from_str::<Forest>("[]").is_err());
    }
}
