//! The subgroups `Fbr(w)` of elements with `w`-deferred representatives,
//! their ascending HNN structure, and the maps built from them.

use serde::Serialize;

use super::{Diagram, GroupElement};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::forest::{Address, Forest, Tree};

fn require_pure(g: &GroupElement) -> Result<()> {
    if g.braid().is_pure() {
        Ok(())
    } else {
        Err(Error::NotPure)
    }
}

fn proper_prefix_leaf(tree: &Tree, w: &Address) -> Option<usize> {
    tree.leaves()
        .iter()
        .position(|a| a.is_proper_prefix_of(w))
        .map(|i| i + 1)
}

/// The least representative of `g` in which no leaf on either side is a
/// proper prefix of `w`, if its trees are both `w`-deferred.
///
/// Every representative expands the reduced one, and expanding never turns
/// a leaf off the vine into a vine leaf, so `None` is definitive.
pub fn deferred_representative(g: &GroupElement, w: &Address) -> Result<Option<Diagram>> {
    require_pure(g)?;
    let mut d = g.diagram().clone();
    loop {
        if let Some(k) = proper_prefix_leaf(d.pos_tree().expect("single tree"), w) {
            d = d.expand(k)?;
        } else if let Some(j) = proper_prefix_leaf(d.neg_tree().expect("single tree"), w) {
            d = d.expand_neg(j)?;
        } else {
            break;
        }
    }
    let deferred = d.pos_tree().expect("single tree").is_deferred(w)
        && d.neg_tree().expect("single tree").is_deferred(w);
    Ok(deferred.then_some(d))
}

/// Membership in `Fbr(w)`.
pub fn in_deferred_subgroup(g: &GroupElement, w: &Address) -> Result<bool> {
    Ok(deferred_representative(g, w)?.is_some())
}

/// Which depth the HNN descent strips.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Strip left depth with powers of `x_w`; lands in `Fbr(w1)`.
    Left,
    /// Strip right depth with powers of `x_w⁻¹`; lands in `Fbr(w0)`.
    Right,
}

/// `g = x_w^{k_neg} · h · x_w^{-k_pos}` for [`Side::Left`], and
/// `g = x_w^{-k_neg} · h · x_w^{k_pos}` for [`Side::Right`].
#[derive(Debug, Clone, Serialize)]
pub struct HnnRewrite {
    pub side: Side,
    pub k_neg: u64,
    pub h: GroupElement,
    pub k_pos: u64,
}

impl HnnRewrite {
    /// The address whose deferred subgroup contains `h`.
    pub fn base(&self, w: &Address) -> Address {
        match self.side {
            Side::Left => w.child(1),
            Side::Right => w.child(0),
        }
    }

    /// Multiplies the pieces back together.
    pub fn reconstruct(&self, w: &Address) -> GroupElement {
        let x = GroupElement::x_gen(w);
        let (a, b) = match self.side {
            Side::Left => (self.k_neg as i64, -(self.k_pos as i64)),
            Side::Right => (-(self.k_neg as i64), self.k_pos as i64),
        };
        x.pow(a).multiply(&self.h).multiply(&x.pow(b))
    }
}

/// Splits `g ∈ Fbr(w)` along the HNN decomposition by descending depth.
pub fn hnn_rewrite(g: &GroupElement, w: &Address, side: Side) -> Result<HnnRewrite> {
    let rep = deferred_representative(g, w)?
        .ok_or_else(|| Error::NotInDeferredSubgroup(w.to_string()))?;
    let (neg_left, neg_right) = rep.neg_tree().expect("single tree").depths(w)?;
    let (pos_left, pos_right) = rep.pos_tree().expect("single tree").depths(w)?;
    let x = GroupElement::x_gen(w);
    let (k_neg, k_pos, h) = match side {
        Side::Left => {
            let (a, b) = (neg_left.saturating_sub(1), pos_left.saturating_sub(1));
            (
                a,
                b,
                x.pow(-(a as i64)).multiply(g).multiply(&x.pow(b as i64)),
            )
        }
        Side::Right => {
            let (a, b) = (neg_right.saturating_sub(1), pos_right.saturating_sub(1));
            (
                a,
                b,
                x.pow(a as i64).multiply(g).multiply(&x.pow(-(b as i64))),
            )
        }
    };
    Ok(HnnRewrite {
        side,
        k_neg: k_neg as u64,
        h,
        k_pos: k_pos as u64,
    })
}

/// Which inclusion of the stable letter to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjugationDirection {
    /// `x_w⁻¹ · Fbr(w1) · x_w ⊆ Fbr(w11)`.
    One,
    /// `x_w · Fbr(w0) · x_w⁻¹ ⊆ Fbr(w00)`.
    Zero,
}

/// Conjugates `g` by the stable letter and tests the deeper membership.
pub fn conjugation_check(
    g: &GroupElement,
    w: &Address,
    direction: ConjugationDirection,
) -> Result<bool> {
    let x = GroupElement::x_gen(w);
    let (base, target, conj) = match direction {
        ConjugationDirection::One => (w.child(1), w.extended(&[1, 1]), x.conjugate(g)),
        ConjugationDirection::Zero => (w.child(0), w.extended(&[0, 0]), x.invert().conjugate(g)),
    };
    if !in_deferred_subgroup(g, &base)? {
        return Err(Error::NotInDeferredSubgroup(base.to_string()));
    }
    in_deferred_subgroup(&conj, &target)
}

/// The map `Fbr(1ⁿ) → PB_n` keeping the first `n` strands of a
/// `1ⁿ`-deferred representative.
pub fn psi(g: &GroupElement, n: usize) -> Result<BraidWord> {
    if n == 0 {
        return Err(Error::Precondition("psi needs n >= 1".into()));
    }
    let w = Address::ones(n);
    let rep = deferred_representative(g, &w)?
        .ok_or_else(|| Error::NotInDeferredSubgroup(w.to_string()))?;
    psi_of_representative(&rep, n)
}

/// `ψ` read off a given `1ⁿ`-deferred representative.
pub fn psi_of_representative(d: &Diagram, n: usize) -> Result<BraidWord> {
    let w = Address::ones(n);
    let deferred = |t: Option<&Tree>| t.is_some_and(|t| t.is_deferred(&w));
    if n == 0 || !deferred(d.neg_tree()) || !deferred(d.pos_tree()) {
        return Err(Error::NotDeferred(w.to_string()));
    }
    if !d.is_pure() {
        return Err(Error::NotPure);
    }
    let keep: Vec<usize> = (1..=n).collect();
    d.braid().restrict_to(&keep)
}

/// The split epimorphism onto `F`: forget the braid.
pub fn forget_braid(g: &GroupElement) -> Result<GroupElement> {
    require_pure(g)?;
    GroupElement::from_parts(
        g.neg().clone(),
        BraidWord::identity(g.braid().strands()),
        g.pos().clone(),
    )
}

/// `[V(w), b, V(1ⁿ)]` with `n = |w|` and `b` realising the transposition
/// of the leaf `w` and the last leaf. Conjugating by it carries `Fbr(w)`
/// onto `Fbr(1ⁿ)`.
pub fn tail_conjugator(w: &Address) -> Diagram {
    let n = w.len();
    let vine = Tree::vine(w);
    let k = vine.leaf_index(w).expect("w is a leaf of its vine");
    let b = BraidWord::transposition(n + 1, k, n + 1).expect("indices are in range");
    Diagram::new(Forest::from(vine), b, Tree::vine(&Address::ones(n)))
        .expect("vines have n + 1 leaves")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn addr(s: &str) -> Address {
        s.parse().unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(in_deferred_subgroup(&GroupElement::x_gen(&addr("1")), &addr("1")).unwrap());
        assert!(!in_deferred_subgroup(&GroupElement::x(0), &addr("1")).unwrap());
        for w in ["", "0", "101", "1110"] {
            assert!(in_deferred_subgroup(&GroupElement::identity(), &addr(w)).unwrap());
        }
        let s1 = GroupElement::from_parts(
            Tree::caret(),
            BraidWord::new(2, vec![1]).unwrap(),
            Tree::caret(),
        )
        .unwrap();
        assert_eq!(in_deferred_subgroup(&s1, &addr("1")), Err(Error::NotPure));
    }

    #[test]
    fn hnn_examples() {
        let x0 = GroupElement::x(0);
        let r = hnn_rewrite(&x0, &Address::root(), Side::Left).unwrap();
        assert_eq!((r.k_neg, r.k_pos), (1, 0));
        assert!(r.h.is_identity());
        let r2 = hnn_rewrite(&x0.multiply(&x0), &Address::root(), Side::Left).unwrap();
        assert_eq!((r2.k_neg, r2.k_pos), (2, 0));
        assert!(r2.h.is_identity());
        assert!(r2.reconstruct(&Address::root()).equals(&x0.multiply(&x0)));

        let inside = GroupElement::x_gen(&addr("01"));
        let r3 = hnn_rewrite(&inside, &addr("0"), Side::Left).unwrap();
        assert_eq!((r3.k_neg, r3.k_pos), (0, 0));
        assert!(r3.h.equals(&inside));
    }

    #[test]
    fn hnn_rejects_non_members() {
        assert!(matches!(
            hnn_rewrite(&GroupElement::x(0), &addr("0"), Side::Left),
            Err(Error::NotInDeferredSubgroup(_))
        ));
    }

    #[test]
    fn conjugation_examples() {
        for w in ["", "0", "1", "10"] {
            let w = addr(w);
            let g = GroupElement::x_gen(&w.child(1));
            assert!(conjugation_check(&g, &w, ConjugationDirection::One).unwrap());
            assert!(
                conjugation_check(&GroupElement::identity(), &w, ConjugationDirection::One)
                    .unwrap()
            );
            let g0 = GroupElement::x_gen(&w.child(0));
            assert!(conjugation_check(&g0, &w, ConjugationDirection::Zero).unwrap());
        }
        assert!(conjugation_check(
            &GroupElement::x(0),
            &Address::root(),
            ConjugationDirection::One
        )
        .is_err());
    }

    #[test]
    fn psi_examples() {
        for n in 1..4 {
            assert!(psi(&GroupElement::x(n), n).unwrap().is_empty());
        }
        // full twist on the first two strands of a 1²-deferred tree
        let t = Tree::vine(&addr("11"));
        let twist = BraidWord::full_twist(2);
        let mut letters = twist.letters().to_vec();
        letters.retain(|_| true);
        let b = BraidWord::new(3, letters).unwrap();
        let g = GroupElement::from_parts(t.clone(), b, t).unwrap();
        let image = psi(&g, 2).unwrap();
        assert!(image.equals(&BraidWord::full_twist(2)).unwrap());
    }

    #[test]
    fn forget_braid_examples() {
        let x = GroupElement::x_gen(&addr("10"));
        assert!(forget_braid(&x).unwrap().equals(&x));
        let s11 = GroupElement::from_parts(
            Tree::caret(),
            BraidWord::new(2, vec![1, 1]).unwrap(),
            Tree::caret(),
        )
        .unwrap();
        assert!(forget_braid(&s11).unwrap().is_identity());
    }

    #[test]
    fn tail_conjugator_examples() {
        let c = tail_conjugator(&addr("0"));
        assert_eq!(c.neg_tree().unwrap(), &Tree::caret());
        assert_eq!(c.braid().letters(), &[1]);
        assert_eq!(c.pos_tree().unwrap(), &Tree::caret());
        let c = tail_conjugator(&addr("111"));
        assert!(c.braid().is_empty());
    }
}
