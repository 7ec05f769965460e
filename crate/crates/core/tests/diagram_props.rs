use coxpoly::diagram::{Bipartition, Diagram};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn tree(seed: u64, n: usize) -> Diagram {
    Diagram::random_tree(&mut ChaCha8Rng::seed_from_u64(seed), n, &[1, 2, 3])
}

fn graph(n: usize, mask: u64) -> Diagram {
    let mut d = Diagram::new(n);
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                d.set_edge(i, j, 1).unwrap();
            }
            bit += 1;
        }
    }
    d
}

fn two_colourable(d: &Diagram) -> bool {
    let n = d.len();
    (0u32..1 << n).any(|c| d.edges().all(|(i, j, _)| (c >> i & 1) != (c >> j & 1)))
}

proptest! {
    #[test]
    fn adjacency_is_symmetric_and_loop_free(seed: u64, n in 1usize..10) {
        let d = tree(seed, n);
        let a = d.adjacency();
        for i in 0..n {
            prop_assert_eq!(*a.get(i, i), 0);
            for j in 0..n {
                prop_assert_eq!(a.get(i, j), a.get(j, i));
            }
        }
        prop_assert!(d.is_tree());
    }

    #[test]
    fn join_then_delete(s1: u64, s2: u64, n1 in 1usize..6, n2 in 1usize..6, v1 in 0usize..6, v2 in 0usize..6) {
        let (a, b) = (tree(s1, n1), tree(s2, n2));
        let j = Diagram::join(&[(a.clone(), v1 % n1), (b.clone(), v2 % n2)]).unwrap();
        prop_assert_eq!(j.len(), n1 + n2 + 1);
        prop_assert_eq!(j.delete(&[0]).unwrap(), Diagram::disjoint_union(&[a, b]));
    }

    #[test]
    fn trees_are_bipartite(seed: u64, n in 1usize..=10) {
        let d = tree(seed, n);
        match d.bipartite_order() {
            Bipartition::Order(order) => prop_assert_eq!(order.len(), n),
            Bipartition::NotBipartite { .. } => prop_assert!(false, "tree rejected"),
        }
    }

    #[test]
    fn bipartition_matches_brute_force(n in 1usize..8, mask: u64) {
        let d = graph(n, mask);
        match d.bipartite_order() {
            Bipartition::Order(order) => {
                prop_assert!(two_colourable(&d));
                prop_assert!(d.clone().with_order(order).is_ok());
            }
            Bipartition::NotBipartite { cycle } => {
                prop_assert!(!two_colourable(&d));
                prop_assert_eq!(cycle.len() % 2, 1);
                for k in 0..cycle.len() {
                    prop_assert!(d.weight(cycle[k], cycle[(k + 1) % cycle.len()]) != 0);
                }
            }
        }
    }

    #[test]
    fn file_format_round_trip(seed: u64, n in 1usize..10) {
        let d = tree(seed, n);
        prop_assert_eq!(Diagram::parse(&d.to_string()).unwrap(), d);
    }
}
