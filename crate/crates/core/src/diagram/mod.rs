//! Strand diagrams `(F₋, b, F₊)` and the groupoid they form under expansion
//! and reduction.
//!
//! The negative forest sits on top with its roots up, the positive forest at
//! the bottom with its roots down, and the braid joins their leaves. Strands
//! are numbered at the bottom: if the braid's permutation sends `i` to `j`,
//! leaf `i` of the positive forest is joined to leaf `j` of the negative one.
//! Single-tree diagrams are the elements of braided `V`; those with pure
//! braids form braided `F`, and those with trivial braids form `F`.

mod deferred;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::forest::{Address, Forest, Tree};

pub use deferred::{
    conjugation_check, deferred_representative, forget_braid, hnn_rewrite, in_deferred_subgroup,
    psi, psi_of_representative, tail_conjugator, ConjugationDirection, HnnRewrite, Side,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram", into = "RawDiagram")]
pub struct Diagram {
    neg: Forest,
    braid: BraidWord,
    pos: Forest,
}

#[derive(Serialize, Deserialize)]
struct RawDiagram {
    neg: Forest,
    braid: BraidWord,
    pos: Forest,
}

impl TryFrom<RawDiagram> for Diagram {
    type Error = Error;

    fn try_from(raw: RawDiagram) -> Result<Self> {
        Diagram::new(raw.neg, raw.braid, raw.pos)
    }
}

impl From<Diagram> for RawDiagram {
    fn from(d: Diagram) -> Self {
        RawDiagram {
            neg: d.neg,
            braid: d.braid,
            pos: d.pos,
        }
    }
}

/// Membership of a group element in `F` and in braided `F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub in_f: bool,
    pub in_fbr: bool,
}

impl Diagram {
    pub fn new(neg: impl Into<Forest>, braid: BraidWord, pos: impl Into<Forest>) -> Result<Self> {
        let (neg, pos) = (neg.into(), pos.into());
        let n = braid.strands();
        if neg.leaf_count() != n || pos.leaf_count() != n {
            return Err(Error::ShapeMismatch(format!(
                "{} negative leaves, {} strands, {} positive leaves",
                neg.leaf_count(),
                n,
                pos.leaf_count()
            )));
        }
        Ok(Diagram { neg, braid, pos })
    }

    /// `[T₋, T₊]` with the trivial braid.
    pub fn from_trees(neg: Tree, pos: Tree) -> Result<Self> {
        let n = neg.leaf_count();
        Diagram::new(neg, BraidWord::identity(n), pos)
    }

    /// The identity on `roots` roots.
    pub fn identity(roots: usize) -> Self {
        Diagram {
            neg: Forest::trivial(roots),
            braid: BraidWord::identity(roots),
            pos: Forest::trivial(roots),
        }
    }

    pub fn neg(&self) -> &Forest {
        &self.neg
    }

    pub fn pos(&self) -> &Forest {
        &self.pos
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn strands(&self) -> usize {
        self.braid.strands()
    }

    pub fn neg_tree(&self) -> Option<&Tree> {
        self.neg.as_tree()
    }

    pub fn pos_tree(&self) -> Option<&Tree> {
        self.pos.as_tree()
    }

    pub fn is_pure(&self) -> bool {
        self.braid.is_pure()
    }

    /// Adds a caret at positive leaf `k`, cables strand `k`, and adds the
    /// matching caret on the negative side.
    pub fn expand(&self, k: usize) -> Result<Diagram> {
        let n = self.strands();
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, max: n });
        }
        let j = self.braid.permutation().image(k);
        Ok(Diagram {
            neg: self.neg.add_caret(j)?,
            braid: self.braid.double_strand(k)?,
            pos: self.pos.add_caret(k)?,
        })
    }

    /// Expansion that adds a caret at negative leaf `j`.
    pub fn expand_neg(&self, j: usize) -> Result<Diagram> {
        let n = self.strands();
        if j == 0 || j > n {
            return Err(Error::IndexOutOfRange { index: j, max: n });
        }
        let k = self.braid.permutation().inverse().image(j);
        self.expand(k)
    }

    /// The reduction removing the carets at positive leaves `i, i+1`, if
    /// those strands run parallel into a caret of the negative forest.
    pub fn reduction_at(&self, i: usize) -> Option<Diagram> {
        if !self.pos.has_caret_at(i) {
            return None;
        }
        let perm = self.braid.permutation();
        let j = perm.image(i);
        if perm.image(i + 1) != j + 1 || !self.neg.has_caret_at(j) {
            return None;
        }
        let lower = self.braid.delete_strand(i + 1).ok()?;
        let recabled = lower.double_strand(i).ok()?;
        if !self.braid.equals(&recabled).ok()? {
            return None;
        }
        Some(Diagram {
            neg: self.neg.remove_caret(j).ok()?,
            braid: lower,
            pos: self.pos.remove_caret(i).ok()?,
        })
    }

    /// Applies reductions until none applies.
    pub fn reduce(&self) -> Diagram {
        let mut d = self.clone();
        'outer: loop {
            for i in 1..d.strands() {
                if let Some(r) = d.reduction_at(i) {
                    d = r;
                    continue 'outer;
                }
            }
            return d;
        }
    }

    pub fn is_reduced(&self) -> bool {
        (1..self.strands()).all(|i| self.reduction_at(i).is_none())
    }

    /// Expands along positive leaves until the positive forest is `target`.
    pub fn expand_pos_to(&self, target: &Forest) -> Result<Diagram> {
        if !target.is_expansion_of(&self.pos) {
            return Err(Error::ShapeMismatch(format!(
                "{target} does not refine {}",
                self.pos
            )));
        }
        let mut d = self.clone();
        while let Some(k) = first_leaf_to_split(&d.pos, target) {
            d = d.expand(k)?;
        }
        Ok(d)
    }

    /// Expands along negative leaves until the negative forest is `target`.
    pub fn expand_neg_to(&self, target: &Forest) -> Result<Diagram> {
        if !target.is_expansion_of(&self.neg) {
            return Err(Error::ShapeMismatch(format!(
                "{target} does not refine {}",
                self.neg
            )));
        }
        let mut d = self.clone();
        while let Some(j) = first_leaf_to_split(&d.neg, target) {
            d = d.expand_neg(j)?;
        }
        Ok(d)
    }

    /// Groupoid product: `self` on top of `other`.
    pub fn multiply(&self, other: &Diagram) -> Result<Diagram> {
        Ok(self.multiply_unreduced(other)?.reduce())
    }

    /// The product before reduction, on the common refinement.
    pub fn multiply_unreduced(&self, other: &Diagram) -> Result<Diagram> {
        if self.pos.root_count() != other.neg.root_count() {
            return Err(Error::RootMismatch {
                left: self.pos.root_count(),
                right: other.neg.root_count(),
            });
        }
        let middle = self.pos.common_refinement(&other.neg)?;
        let upper = self.expand_pos_to(&middle)?;
        let lower = other.expand_neg_to(&middle)?;
        // bottom to top: the lower braid first
        let braid = lower.braid.compose(&upper.braid)?;
        Ok(Diagram {
            neg: upper.neg,
            braid,
            pos: lower.pos,
        })
    }

    pub fn invert(&self) -> Diagram {
        Diagram {
            neg: self.pos.clone(),
            braid: self.braid.invert(),
            pos: self.neg.clone(),
        }
    }

    /// Equality in the groupoid.
    pub fn equals(&self, other: &Diagram) -> bool {
        let (a, b) = (self.reduce(), other.reduce());
        a.neg == b.neg && a.pos == b.pos && a.braid.equals(&b.braid).unwrap_or(false)
    }

    /// Equality of already reduced diagrams.
    pub fn reduced_equals(&self, other: &Diagram) -> bool {
        self.neg == other.neg
            && self.pos == other.pos
            && self.braid.strands() == other.braid.strands()
            && self.braid.equals(&other.braid).unwrap_or(false)
    }
}

/// First leaf of `current` that is a proper prefix of a leaf of `target`
/// in the same tree, as a global index.
fn first_leaf_to_split(current: &Forest, target: &Forest) -> Option<usize> {
    let mut global = 0;
    for (t, tree) in current.trees().iter().enumerate() {
        let goal = &target.trees()[t];
        for a in tree.leaves() {
            global += 1;
            if goal.leaf_index(a).is_none() {
                return Some(global);
            }
        }
    }
    None
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.neg, self.braid, self.pos)
    }
}

/// An element of braided `V`: a reduced single-tree diagram.
#[derive(Debug, Clone, Serialize)]
#[serde(transparent)]
pub struct GroupElement(Diagram);

impl GroupElement {
    pub fn new(d: Diagram) -> Result<Self> {
        if d.neg.root_count() != 1 || d.pos.root_count() != 1 {
            return Err(Error::ShapeMismatch(
                "a group element has single trees".into(),
            ));
        }
        Ok(GroupElement(d.reduce()))
    }

    pub fn from_parts(neg: Tree, braid: BraidWord, pos: Tree) -> Result<Self> {
        GroupElement::new(Diagram::new(neg, braid, pos)?)
    }

    pub fn identity() -> Self {
        GroupElement(Diagram::identity(1))
    }

    /// `x_w = [V(w01), V(w10)]`.
    pub fn x_gen(w: &Address) -> Self {
        let d = Diagram::from_trees(
            Tree::vine(&w.extended(&[0, 1])),
            Tree::vine(&w.extended(&[1, 0])),
        )
        .expect("vines of equal length have equal leaf counts");
        GroupElement(d.reduce())
    }

    /// `x_n = x_{1^n}` of the standard infinite presentation of `F`.
    pub fn x(n: usize) -> Self {
        GroupElement::x_gen(&Address::ones(n))
    }

    pub fn diagram(&self) -> &Diagram {
        &self.0
    }

    pub fn into_diagram(self) -> Diagram {
        self.0
    }

    pub fn neg(&self) -> &Tree {
        self.0.neg.as_tree().expect("single tree")
    }

    pub fn pos(&self) -> &Tree {
        self.0.pos.as_tree().expect("single tree")
    }

    pub fn braid(&self) -> &BraidWord {
        &self.0.braid
    }

    pub fn multiply(&self, other: &GroupElement) -> GroupElement {
        GroupElement(
            self.0
                .multiply(&other.0)
                .expect("single trees always compose"),
        )
    }

    pub fn invert(&self) -> GroupElement {
        GroupElement(self.0.invert())
    }

    pub fn pow(&self, k: i64) -> GroupElement {
        let base = if k < 0 { self.invert() } else { self.clone() };
        (0..k.unsigned_abs()).fold(GroupElement::identity(), |acc, _| acc.multiply(&base))
    }

    /// `self⁻¹ · g · self`.
    pub fn conjugate(&self, g: &GroupElement) -> GroupElement {
        self.invert().multiply(g).multiply(self)
    }

    pub fn equals(&self, other: &GroupElement) -> bool {
        self.0.reduced_equals(&other.0)
    }

    pub fn is_identity(&self) -> bool {
        self.0.strands() == 1
    }

    pub fn classify(&self) -> Classification {
        Classification {
            in_f: self.0.braid.is_trivial(),
            in_fbr: self.0.braid.is_pure(),
        }
    }
}

impl<'de> Deserialize<'de> for GroupElement {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let d = Diagram::deserialize(de)?;
        GroupElement::new(d).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr(v: &[&str]) -> Tree {
        Tree::parse(v).unwrap()
    }

    fn bw(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn addr(s: &str) -> Address {
        s.parse().unwrap()
    }

    #[test]
    fn expand_identity() {
        let d = Diagram::identity(1).expand(1).unwrap();
        assert_eq!(
            d,
            Diagram::from_trees(Tree::caret(), Tree::caret()).unwrap()
        );
        assert!(Diagram::identity(1).expand(2).is_err());
    }

    #[test]
    fn expand_cables_the_strand() {
        let d = Diagram::new(Tree::caret(), bw(2, &[1, 1]), Tree::caret()).unwrap();
        let e = d.expand(1).unwrap();
        assert_eq!(e.pos_tree().unwrap(), &tr(&["00", "01", "1"]));
        assert_eq!(e.neg_tree().unwrap(), &tr(&["00", "01", "1"]));
        assert_eq!(e.braid().winding_number(1, 3).unwrap(), 1);
        assert_eq!(e.braid().winding_number(2, 3).unwrap(), 1);
        assert_eq!(e.braid().winding_number(1, 2).unwrap(), 0);
        assert!(e.reduce().reduced_equals(&d));
    }

    #[test]
    fn reduce_examples() {
        let s1 = Diagram::new(Tree::caret(), bw(2, &[1]), Tree::caret()).unwrap();
        assert_eq!(s1.reduce(), s1);
        let flat = Diagram::from_trees(Tree::caret(), Tree::caret()).unwrap();
        assert_eq!(flat.reduce(), Diagram::identity(1));
    }

    #[test]
    fn x_gen_shape() {
        let x0 = GroupElement::x_gen(&Address::root());
        assert_eq!(x0.neg(), &tr(&["00", "01", "1"]));
        assert_eq!(x0.pos(), &tr(&["0", "10", "11"]));
        assert!(x0.braid().is_empty());
        let x1 = GroupElement::x_gen(&addr("1"));
        assert!(x1.neg().is_deferred(&addr("1")));
        assert!(x1.pos().is_deferred(&addr("1")));
    }

    #[test]
    fn inverse_of_x0() {
        let inv = GroupElement::x_gen(&Address::root()).invert();
        assert_eq!(inv.neg(), &Tree::vine(&addr("10")));
        assert_eq!(inv.pos(), &Tree::vine(&addr("01")));
        assert!(GroupElement::identity().invert().is_identity());
    }

    #[test]
    fn thompson_relation() {
        // x_j x_i = x_i x_{j+1} for i < j
        let lhs = GroupElement::x(1).multiply(&GroupElement::x(0));
        let rhs = GroupElement::x(0).multiply(&GroupElement::x(2));
        assert!(lhs.equals(&rhs));
        let x0 = GroupElement::x(0);
        assert!(x0.multiply(&x0.invert()).is_identity());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            GroupElement::x(0).classify(),
            Classification {
                in_f: true,
                in_fbr: true
            }
        );
        let s1 = GroupElement::from_parts(Tree::caret(), bw(2, &[1]), Tree::caret()).unwrap();
        assert_eq!(
            s1.classify(),
            Classification {
                in_f: false,
                in_fbr: false
            }
        );
        let s11 = GroupElement::from_parts(Tree::caret(), bw(2, &[1, 1]), Tree::caret()).unwrap();
        assert_eq!(
            s11.classify(),
            Classification {
                in_f: false,
                in_fbr: true
            }
        );
    }

    #[test]
    fn full_twist_is_not_identity() {
        let t = tr(&["0", "10", "11"]);
        let twist = Diagram::new(t.clone(), BraidWord::full_twist(3), t.clone()).unwrap();
        assert!(!twist.equals(&Diagram::identity(1)));
        let g = Diagram::new(t.clone(), bw(3, &[2, 2]), t).unwrap();
        assert!(g.equals(&g.expand(2).unwrap()));
    }

    #[test]
    fn root_mismatch_is_rejected() {
        let a = Diagram::identity(2);
        let b = Diagram::identity(3);
        assert!(matches!(a.multiply(&b), Err(Error::RootMismatch { .. })));
    }

    #[test]
    fn shape_is_validated() {
        assert!(Diagram::new(Tree::caret(), bw(3, &[]), Tree::caret()).is_err());
        let bad = r#"{"neg":[["0","1"]],"braid":{"strands":2,"letters":[]},"pos":[[""]]}"#;
        assert!(serde_json::from_str::<Diagram>(bad).is_err());
    }
}
