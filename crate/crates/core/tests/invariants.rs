use proptest::prelude::*;

use crosscut::crosscut::{c_poset, d_poset, u_poset};
use crosscut::dot::{crosscut_dot, poset_dot, DotOptions};
use crosscut::iso::{are_isomorphic, is_isomorphism};
use crosscut::poset::numeric_labels;
use crosscut::random::random_poset;
use crosscut::text::{emit_crosscut, emit_poset, parse_document, parse_poset};
use crosscut::{ElementSet, Poset};

fn arb_poset() -> impl Strategy<Value = Poset> {
    (1usize..=10, 0.0f64..=1.0, any::<u64>())
        .prop_map(|(n, density, seed)| random_poset(n, density, seed).unwrap())
}

/// A poset plus a permutation of its elements.
fn arb_shuffled() -> impl Strategy<Value = (Poset, Vec<usize>)> {
    arb_poset().prop_flat_map(|p| {
        let ids: Vec<usize> = p.elements().collect();
        (Just(p), Just(ids).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn partial_order_axioms(p in arb_poset()) {
        for x in p.elements() {
            prop_assert!(p.le(x, x));
            for y in p.elements() {
                prop_assert!(x == y || !(p.le(x, y) && p.le(y, x)));
                for z in p.elements() {
                    prop_assert!(!(p.le(x, y) && p.le(y, z)) || p.le(x, z));
                }
            }
        }
    }

    #[test]
    fn opposite_is_an_involution(p in arb_poset()) {
        let op = p.opposite();
        prop_assert_eq!(op.opposite(), p.clone());
        prop_assert_eq!(op.maximal_elements(), p.minimal_elements());
        for x in p.elements() {
            prop_assert_eq!(op.down_set(x).unwrap(), p.up_set(x).unwrap());
        }
    }

    #[test]
    fn components_partition(p in arb_poset(), mask in any::<u16>()) {
        let s = ElementSet::from_bits(mask as u64).intersection(p.all());
        let comps = p.connected_components(s);
        let mut union = ElementSet::EMPTY;
        for &c in &comps {
            prop_assert!(!c.is_empty() && p.is_connected(c));
            prop_assert!(!union.intersects(c));
            union = union.union(c);
        }
        prop_assert_eq!(union, s);
        for (i, &a) in comps.iter().enumerate() {
            for &b in &comps[i + 1..] {
                prop_assert!(a.iter().all(|x| !p.comparable_with(x).intersects(b)));
            }
        }
    }

    #[test]
    fn extremal_sets_are_cutsets(p in arb_poset()) {
        prop_assert!(p.is_cutset(p.maximal_elements()).unwrap());
        prop_assert!(p.is_cutset(p.minimal_elements()).unwrap());
    }

    #[test]
    fn isomorphism_with_shuffled_copy((p, perm) in arb_shuffled()) {
        let q = Poset::from_relation(numeric_labels(p.len()), |i, j| p.le(perm[i], perm[j])).unwrap();
        let phi = are_isomorphic(&p, &q).expect("copies are isomorphic");
        prop_assert!(is_isomorphism(&p, &q, &phi));
        let psi = are_isomorphic(&q, &p).expect("isomorphism is symmetric");
        prop_assert!(is_isomorphism(&q, &p, &psi));
    }

    #[test]
    fn text_round_trip(p in arb_poset()) {
        let text = emit_poset(&p);
        let back = parse_poset(&text).unwrap();
        prop_assert_eq!(back.labels(), p.labels());
        prop_assert_eq!(back, p.clone());
        let d = d_poset(&p).unwrap();
        let doc = parse_document(&emit_crosscut(&d)).unwrap();
        prop_assert_eq!(&doc.poset, d.order());
        prop_assert_eq!(doc.sides.as_deref(), Some(d.sides()));
    }

    #[test]
    fn dot_is_deterministic(p in arb_poset()) {
        let opts = DotOptions::default();
        prop_assert_eq!(poset_dot(&p, &opts), poset_dot(&p.clone(), &opts));
        let u = u_poset(&p).unwrap();
        prop_assert_eq!(crosscut_dot(&u, &opts), crosscut_dot(&u_poset(&p).unwrap(), &opts));
        if let Ok(c) = c_poset(&p) {
            let dot = crosscut_dot(&c, &opts);
            prop_assert_eq!(dot.matches("color=red").count(), c.cross_covers().len());
        }
    }
}
