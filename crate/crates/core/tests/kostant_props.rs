use coxpoly::diagram::Family;
use coxpoly::kostant::{klein_data, poincare_series, prop2_squares, verify_system, KleinGroupData, System};

fn all_types() -> Vec<KleinGroupData> {
    let mut out: Vec<_> = (1..=12).map(|n| klein_data(Family::AffA, n).unwrap()).collect();
    out.extend((4..=12).map(|n| klein_data(Family::AffD, n).unwrap()));
    out.extend((6..=8).map(|n| klein_data(Family::AffE, n).unwrap()));
    out
}

#[test]
fn exponent_relations_and_table_shape() {
    for k in all_types() {
        assert_eq!(k.a + k.b, k.h + 2, "{}", k.name());
        assert_eq!(k.a as i64 * k.b as i64, 2 * k.order);
        assert_eq!(k.z.len(), k.n + 1);
        assert_eq!(k.z[0].max_exp(), Some(k.h));
        for z in &k.z {
            assert!(z.max_exp().unwrap() <= k.h);
            assert!(z.terms().all(|(_, c)| c > 0));
        }
    }
}

#[test]
fn series_are_nonnegative() {
    for k in all_types() {
        for i in -1..=k.n as i64 {
            let s = poincare_series(&k, i, 200).unwrap();
            assert!(s.terms().all(|(_, c)| c >= 0), "{} P{i}", k.name());
        }
    }
}

#[test]
fn series_start_with_trivial_representation() {
    for k in all_types() {
        let s = poincare_series(&k, 0, 0).unwrap();
        assert_eq!(s.to_string(), "1");
    }
}

#[test]
fn all_systems_hold() {
    for k in all_types().into_iter().filter(|k| k.n <= 8) {
        for sys in [System::Series, System::Numerators, System::Cofactors] {
            assert!(verify_system(&k, sys).unwrap().iter().all(|r| r.holds), "{}", k.name());
        }
        for i in 1..=k.n {
            assert!(prop2_squares(&k, i).unwrap().holds, "{} {i}", k.name());
        }
    }
}

#[test]
fn both_parents_on_even_cycles() {
    for m in 1..=5 {
        let k = klein_data(Family::AffA, 2 * m + 1).unwrap();
        let parents = k.toward_root(m + 1);
        assert_eq!(parents, vec![m as i64, m as i64 + 2]);
        let ratios: Vec<_> = parents
            .iter()
            .map(|&p| k.poincare(p).unwrap().div(&k.poincare(m as i64 + 1).unwrap()).unwrap())
            .collect();
        assert_eq!(ratios[0], ratios[1]);
    }
}
