use proptest::prelude::*;

use tourlink_core::digraph::{CyclePattern, Tournament};
use tourlink_core::iso::canonical_form;

fn tournament_strategy(n: usize) -> impl Strategy<Value = Tournament> {
    let bits = n * (n - 1) / 2;
    prop::collection::vec(any::<bool>(), bits).prop_map(move |orient| {
        let mut arcs = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                arcs.push(if orient[k] { (i, j) } else { (j, i) });
                k += 1;
            }
        }
        Tournament::from_arcs(n, &arcs).unwrap()
    })
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn dual_is_an_involution(t in tournament_strategy(7)) {
        prop_assert_eq!(t.dual().dual(), t);
    }

    #[test]
    fn relabel_composes(
        t in tournament_strategy(6),
        a in perm_strategy(6),
        b in perm_strategy(6),
    ) {
        // (relabel by a, then by b) equals relabel by b o a
        let ab: Vec<usize> = (0..6).map(|v| b[a[v]]).collect();
        prop_assert_eq!(t.relabel(&a).unwrap().relabel(&b).unwrap(), t.relabel(&ab).unwrap());
    }

    #[test]
    fn canonical_form_is_isomorphism_invariant(
        t in tournament_strategy(6),
        sigma in perm_strategy(6),
    ) {
        prop_assert_eq!(
            canonical_form(&t).unwrap(),
            canonical_form(&t.relabel(&sigma).unwrap()).unwrap()
        );
    }

    #[test]
    fn pattern_canonical_ignores_rotation_and_reflection(
        start in 0usize..5,
        flip in any::<bool>(),
    ) {
        let verts = [2usize, 4, 1, 6, 3];
        let mut rotated: Vec<usize> = (0..5).map(|i| verts[(start + i) % 5]).collect();
        if flip {
            rotated.reverse();
        }
        let p = CyclePattern::new(verts.to_vec()).unwrap();
        let q = CyclePattern::new(rotated).unwrap();
        prop_assert_eq!(p.canonical(), q.canonical());
    }

    #[test]
    fn json_round_trip(t in tournament_strategy(8)) {
        prop_assert_eq!(Tournament::from_json(&t.to_json()).unwrap(), t);
    }
}
