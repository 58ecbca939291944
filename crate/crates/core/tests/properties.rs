use proptest::prelude::*;

use tplancherel::littlewood::{decompose, recompose, t_hook_additions, t_hook_removals};
use tplancherel::stats::corners;
use tplancherel::walks::{f_skew, f_skew_recursive};
use tplancherel::{BoundarySequence, Partition};

fn partition(max_len: usize, max_part: i64) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(&parts).unwrap()
    })
}

proptest! {
    #[test]
    fn boundary_round_trip(l in partition(12, 12)) {
        prop_assert_eq!(BoundarySequence::encode(&l).decode().unwrap(), l);
    }

    #[test]
    fn littlewood_round_trip(l in partition(10, 10), t in 1usize..7) {
        let dec = decompose(&l, t).unwrap();
        prop_assert!(dec.core.is_t_core(t));
        prop_assert_eq!(dec.size(), l.size());
        prop_assert_eq!(recompose(&dec.core, &dec.quotients, t).unwrap(), l);
    }

    #[test]
    fn conjugation_commutes_with_core(l in partition(9, 9), t in 1usize..6) {
        let core = decompose(&l, t).unwrap().core;
        let conj = decompose(&l.conjugate(), t).unwrap();
        prop_assert_eq!(conj.core, core.conjugate());
    }

    #[test]
    fn hook_moves_stay_in_layer(l in partition(8, 8), t in 1usize..5) {
        let dec = decompose(&l, t).unwrap();
        let ups = t_hook_additions(&l, t);
        // one addable cell per quotient
        let expected: usize = dec.quotients.iter().map(|q| corners(q).x.len()).sum();
        prop_assert_eq!(ups.len(), expected);
        for up in &ups {
            prop_assert_eq!(up.size(), l.size() + t);
            prop_assert_eq!(&decompose(up, t).unwrap().core, &dec.core);
            prop_assert!(t_hook_removals(up, t).contains(&l));
        }
        prop_assert_eq!(t_hook_removals(&l, t).len(), dec.quotients.iter().map(|q| corners(q).y.len()).sum::<usize>());
    }

    #[test]
    fn walk_counts_agree(l in partition(6, 7), t in 1usize..4) {
        let core = decompose(&l, t).unwrap().core;
        prop_assert_eq!(f_skew(&l, &core, t).unwrap(), f_skew_recursive(&l, &core, t));
    }

    #[test]
    fn corners_interleave(l in partition(12, 12)) {
        let cd = corners(&l);
        prop_assert_eq!(cd.x.len(), cd.y.len() + 1);
        let sum_x: i64 = cd.x.iter().sum();
        let sum_y: i64 = cd.y.iter().sum();
        prop_assert_eq!(sum_x, sum_y);
    }
}
