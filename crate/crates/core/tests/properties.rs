use proptest::prelude::*;

use braided_thompson::braid::{BraidWord, Engine};
use braided_thompson::charbnsr::{abelian_image, sigma_membership, Character};
use braided_thompson::complexes::{
    connectivity_report, homology, matching_complex, Graph, SimplicialComplex,
};
use braided_thompson::diagram::GroupElement;
use braided_thompson::forest::{all_trees, Forest};
use braided_thompson::sample;

fn word() -> impl Strategy<Value = BraidWord> {
    (2usize..=5).prop_flat_map(|n| {
        let letter = (1..n as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
        prop::collection::vec(letter, 0..16).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

fn element() -> impl Strategy<Value = GroupElement> {
    (any::<u64>(), 1usize..=5, 0usize..=8)
        .prop_map(|(seed, leaves, len)| sample::random_element(&mut sample::rng(seed), leaves, len))
}

fn graph() -> impl Strategy<Value = Graph> {
    (2usize..=6).prop_flat_map(|n| {
        prop::collection::vec((1..=n, 1..=n), 0..10).prop_map(move |es| Graph::new(n, es).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn word_times_inverse_is_trivial(w in word()) {
        let t = w.compose(&w.invert()).unwrap();
        prop_assert!(t.is_trivial_with(Engine::FreeGroupAction));
        prop_assert!(t.is_trivial_with(Engine::HandleReduction));
    }

    #[test]
    fn engines_agree(w in word()) {
        prop_assert_eq!(w.is_trivial_with(Engine::FreeGroupAction), w.is_trivial_with(Engine::HandleReduction));
    }

    #[test]
    fn conjugation_preserves_triviality(w in word(), v in word()) {
        prop_assume!(w.strands() == v.strands());
        let conj = v.invert().compose(&w).unwrap().compose(&v).unwrap();
        prop_assert_eq!(conj.is_trivial(), w.is_trivial());
    }

    #[test]
    fn doubling_then_deleting_a_strand(w in word(), i in 1usize..=5) {
        prop_assume!(i <= w.strands());
        let d = w.double_strand(i).unwrap();
        let back = d.delete_strand(i + 1).unwrap();
        prop_assert!(back.equals(&w).unwrap());
    }

    #[test]
    fn group_axioms(g in element(), h in element(), k in element()) {
        prop_assert!(g.multiply(&h).multiply(&k).equals(&g.multiply(&h.multiply(&k))));
        prop_assert!(g.multiply(&g.invert()).is_identity());
        prop_assert!(g.multiply(&GroupElement::identity()).equals(&g));
    }

    #[test]
    fn reduced_forms_are_reduced(g in element()) {
        prop_assert!(g.diagram().is_reduced());
    }

    #[test]
    fn abelian_image_is_a_homomorphism(g in element(), h in element()) {
        let sum = abelian_image(&g).unwrap().add(&abelian_image(&h).unwrap());
        prop_assert_eq!(abelian_image(&g.multiply(&h)).unwrap(), sum);
        prop_assert!(abelian_image(&g.multiply(&g.invert())).unwrap().is_zero());
    }

    #[test]
    fn sigma_is_invariant_under_positive_scaling(a in -5i64..=5, b in -5i64..=5, c in -2i64..=2, d in -2i64..=2, t in 1i64..=7, m in 1u32..=4) {
        let chi = Character::from_ints(a, b, c, d);
        prop_assume!(!chi.is_zero());
        let scaled = Character::from_ints(a * t, b * t, c * t, d * t);
        prop_assert_eq!(sigma_membership(&chi, m).unwrap(), sigma_membership(&scaled, m).unwrap());
        // Σ^m only shrinks as m grows
        if !sigma_membership(&chi, m).unwrap() {
            prop_assert!(!sigma_membership(&chi, m + 1).unwrap());
        }
    }

    #[test]
    fn euler_characteristic_matches_betti_numbers(g in graph()) {
        let k = matching_complex(&g);
        let alt: i64 = homology(&k)
            .iter()
            .map(|h| if h.dim.rem_euclid(2) == 0 { h.betti as i64 } else { -(h.betti as i64) })
            .sum();
        prop_assert_eq!(alt, k.euler_characteristic() - 1);
    }

    #[test]
    fn cones_are_acyclic(g in graph()) {
        let k = matching_complex(&g);
        prop_assume!(!k.is_empty());
        let n = k.vertex_count();
        let mut labels = k.labels().to_vec();
        labels.push("apex".into());
        let faces = k.facets().iter().map(|f| {
            let mut f = f.clone();
            f.push(n);
            f
        });
        let cone = SimplicialComplex::new(labels, faces).unwrap();
        prop_assert!(homology(&cone).iter().all(|h| h.is_zero()));
        prop_assert!(connectivity_report(&cone).homological_connectivity.is_none());
    }

    #[test]
    fn links_in_flag_complexes_are_flag(g in graph()) {
        let k = matching_complex(&g);
        prop_assert!(k.is_flag());
        for v in 0..k.vertex_count() {
            prop_assert!(k.link(&[v]).unwrap().is_flag());
        }
    }

    #[test]
    fn complex_json_round_trip(g in graph()) {
        let k = matching_complex(&g);
        let s = serde_json::to_string(&k).unwrap();
        let back: SimplicialComplex = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, k);
    }
}

#[test]
fn tree_counts_are_catalan() {
    let catalan = [1, 1, 2, 5, 14, 42, 132];
    for (i, &c) in catalan.iter().enumerate() {
        assert_eq!(all_trees(i + 1).len(), c);
    }
}

#[test]
fn elementary_forests_count() {
    // each root is split or not
    for roots in 1..6 {
        let fs = braided_thompson::forest::all_elementary_forests(roots);
        assert_eq!(fs.len(), 1 << roots);
        assert!(fs.iter().all(Forest::is_elementary));
    }
}
