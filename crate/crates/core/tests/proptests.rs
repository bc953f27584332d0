//! Property tests for the combinatorial substrate.

use proptest::prelude::*;
use spectra_core::faces::Face;
use spectra_core::partition::Partition;
use spectra_core::perm::{self, Permutation};
use spectra_core::tableaux;
use spectra_core::words;

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just(()).prop_perturb(move |_, mut rng| {
        let mut images: Vec<u8> = (1..=n as u8).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            images.swap(i, j);
        }
        Permutation::new(images).unwrap()
    })
}

fn arb_face(n: usize) -> impl Strategy<Value = Face> {
    proptest::collection::vec(0u8..4, n).prop_map(move |labels| {
        // group 1..n by label, order blocks by label value
        let mut blocks: Vec<Vec<u8>> = Vec::new();
        for label in 0..4u8 {
            let members: Vec<u8> = (1..=n as u8)
                .filter(|&v| labels[v as usize - 1] == label)
                .collect();
            if !members.is_empty() {
                blocks.push(members);
            }
        }
        Face::new(blocks).unwrap()
    })
}

proptest! {
    #[test]
    fn compose_is_associative(a in arb_perm(6), b in arb_perm(6), c in arb_perm(6)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_cancels(a in arb_perm(7)) {
        prop_assert_eq!(a.compose(&a.inverse()).unwrap(), Permutation::identity(7));
        prop_assert_eq!(a.inverse().inverse(), a);
    }

    #[test]
    fn lex_rank_roundtrips(a in arb_perm(7)) {
        prop_assert_eq!(Permutation::from_lex_rank(7, a.lex_rank()), a.clone());
        let _ = a;
    }

    #[test]
    fn noninv_symmetric_in_inverse(a in arb_perm(7), k in 1usize..=7) {
        prop_assert_eq!(
            perm::noninv_k(&a, k).unwrap(),
            perm::noninv_k(&a.inverse(), k).unwrap()
        );
    }

    #[test]
    fn rsk_preserves_descents(a in arb_perm(7)) {
        let (p, q_tab) = tableaux::rsk(&a);
        prop_assert_eq!(p.shape(), q_tab.shape());
        prop_assert_eq!(a.descent_set(), q_tab.descents());
    }

    #[test]
    fn lyndon_factors_concatenate_and_decrease(word in proptest::collection::vec(0u32..4, 1..12)) {
        let factors = words::lyndon_factorization(&word);
        let concat: Vec<u32> = factors.iter().flatten().copied().collect();
        prop_assert_eq!(concat, word);
        for pair in factors.windows(2) {
            prop_assert!(pair[0] >= pair[1]);
        }
    }

    #[test]
    fn partition_roundtrip(parts in proptest::collection::vec(1u8..9, 1..6)) {
        let p = Partition::from_unsorted(parts).unwrap();
        let parsed: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(parsed, p);
    }

    #[test]
    fn face_band_laws(x in arb_face(5), y in arb_face(5)) {
        prop_assert_eq!(x.product(&x).unwrap(), x.clone());
        let xy = x.product(&y).unwrap();
        prop_assert_eq!(xy.product(&x).unwrap(), xy.clone());
        // support of a product is the join (refines both arguments)
        prop_assert!(xy.support().refines(&x.support()));
        let _ = (x, y, xy);
    }

    #[test]
    fn demotion_shrinks_and_keeps_standardness(a in arb_perm(6)) {
        let (_, q_tab) = tableaux::rsk(&a);
        if q_tab.n() > 0 {
            let d = q_tab.demote().unwrap();
            prop_assert_eq!(d.n(), q_tab.n() - 1);
        }
    }

    #[test]
    fn matching_counts_are_consistent(a in arb_perm(6)) {
        let counts = perm::noninv_two_blocks_all(&a);
        prop_assert_eq!(counts[0], 1);
        // total pairs: k = 1 count equals noninv_2
        prop_assert_eq!(counts[1], perm::noninv_k(&a, 2).unwrap());
    }
}
