use coxpoly::diagram::{Diagram, Family};
use coxpoly::identities::{cd_char, cd_coxeter, cd_wronskian, chain_identities, poincare_cd, PoincareCd};
use coxpoly::kostant::klein_data;
use coxpoly::report::{all_hold, Expr};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn tree(seed: u64, n: usize) -> Diagram {
    Diagram::random_tree(&mut ChaCha8Rng::seed_from_u64(seed), n, &[1, 2])
}

/// Random tree with a unit-weight path of `k` new vertices hung from vertex
/// 0; returns the diagram and the path from its free end inward.
fn with_tail(seed: u64, n: usize, k: usize) -> (Diagram, Vec<usize>) {
    let base = tree(seed, n);
    let path = Diagram::build(Family::A, k).unwrap();
    let mut d = Diagram::disjoint_union(&[base, path]);
    d.set_edge(0, n, 1).unwrap();
    let tail = (n..n + k).rev().collect();
    (d, tail)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn expansions_hold_on_trees(seed: u64, n in 1usize..=8) {
        let d = tree(seed, n);
        for p in 0..n {
            let bez = cd_coxeter(&d, p).unwrap();
            let wr = cd_wronskian(&d, p).unwrap();
            prop_assert!(bez.holds && wr.holds);
        }
    }

    #[test]
    fn cofactor_identities_hold(seed: u64, n in 1usize..=6) {
        let d = tree(seed, n);
        for i in 0..n {
            for j in 0..n {
                prop_assert!(all_hold(&cd_char(&d, i, j).unwrap()));
            }
        }
    }

    #[test]
    fn chains_hold(seed: u64, n in 1usize..=5, k in 1usize..=5) {
        let (d, tail) = with_tail(seed, n, k);
        let r = chain_identities(&d, &tail).unwrap();
        prop_assert!(all_hold(&r), "{:?}", r.iter().find(|x| !x.holds));
    }

    #[test]
    fn wronskian_form_is_diagonal_of_bezoutian_form(seed: u64, n in 1usize..=7) {
        let d = tree(seed, n);
        for p in 0..n {
            let (bez, wr) = (cd_coxeter(&d, p).unwrap(), cd_wronskian(&d, p).unwrap());
            let (Expr::Bi(bl), Expr::Bi(br), Expr::Bi(res)) = (&bez.lhs, &bez.rhs, &bez.residual) else {
                panic!("two-variable sides expected")
            };
            prop_assert_eq!(Expr::Laurent(bl.diagonal()), wr.lhs.clone());
            prop_assert_eq!(Expr::Laurent(br.diagonal()), wr.rhs.clone());
            prop_assert_eq!(Expr::Laurent(res.diagonal()), wr.residual.clone());
        }
    }
}

#[test]
fn arcs_cancel_to_diagonal_terms() {
    for n in 1..=8 {
        let k = klein_data(Family::AffA, n).unwrap();
        for i in 1..=n {
            for j in i..=n {
                assert!(all_hold(&poincare_cd(&k, PoincareCd::Arc(i, j)).unwrap()), "~A{n} {i}..{j}");
            }
        }
    }
}

#[test]
fn subtrees_on_branching_types() {
    let mut types: Vec<_> = (4..=8).map(|n| klein_data(Family::AffD, n).unwrap()).collect();
    types.extend((6..=8).map(|n| klein_data(Family::AffE, n).unwrap()));
    for k in types {
        for i in 0..=k.n {
            assert!(all_hold(&poincare_cd(&k, PoincareCd::Subtree(i)).unwrap()), "{} {i}", k.name());
        }
    }
}
