mod common;

use std::collections::HashSet;
use std::sync::Arc;

use common::*;
use eulersign_core::permgrp::conjugating_element;
use eulersign_core::{
    are_conjugate_subgroups, conjugacy_classes, gassmann_equivalent, has_required_class,
    quotient_is_s3, search_candidates, ClassTable, PermGroup, Permutation, SearchOptions,
    Subgroup, Verdict, DEFAULT_MAX_ELEMENTS,
};
use proptest::prelude::*;

const MAX: u64 = DEFAULT_MAX_ELEMENTS;

fn gens_of(g: &PermGroup) -> Vec<Vec<u32>> {
    g.generators().iter().map(images).collect()
}

#[test]
fn psl27_order_matches_closure() {
    let g = load_group("psl27.json");
    let all = brute_closure(7, &gens_of(&g), 10_000).unwrap();
    assert_eq!(all.len(), 168);
    assert_eq!(g.order_u64(), Some(168));
    assert!(g.is_transitive());
}

#[test]
fn psl27_classes_match_brute_force() {
    let g = load_group("psl27.json");
    let all = brute_closure(7, &gens_of(&g), 10_000).unwrap();
    let expect = brute_class_sizes(&all);
    assert_eq!(expect.len(), 6);
    let mut got: Vec<u64> = conjugacy_classes(&g, MAX).unwrap().iter().map(|c| c.1).collect();
    got.sort_unstable();
    assert_eq!(got, expect);
}

#[test]
fn psl27_stabilizer_pair() {
    let g = Arc::new(load_group("psl27.json"));
    let stab = g.point_stabilizer(0).unwrap();
    assert_eq!(stab.order_u64(), Some(24));
    let fixture = load_group("stab.json");
    assert_eq!(stab, fixture);
    let h = Subgroup::from_group(g.clone(), stab).unwrap();
    let h2 = Subgroup::from_group(g.clone(), load_group("twisted.json")).unwrap();
    assert_eq!(h2.order_u64(), Some(24));
    assert!(gassmann_equivalent(&h, &h2, MAX).unwrap());
    assert!(!are_conjugate_subgroups(&h, &h2, MAX).unwrap());
}

/// Class intersections computed by brute force, with an exhaustive
/// conjugacy scan.
#[test]
fn psl27_pair_brute_force() {
    let g = load_group("psl27.json");
    let all = brute_closure(7, &gens_of(&g), 10_000).unwrap();
    let class = brute_classes(&all);
    let h1 = brute_closure(7, &gens_of(&load_group("stab.json")), 1000).unwrap();
    let h2 = brute_closure(7, &gens_of(&load_group("twisted.json")), 1000).unwrap();
    let tally = |h: &HashSet<Vec<u32>>| {
        let mut t = vec![0; 6];
        for x in h {
            t[class[x]] += 1;
        }
        t
    };
    assert_eq!(tally(&h1), tally(&h2));
    let conj_set = |x: &Vec<u32>| -> HashSet<Vec<u32>> {
        let inv = {
            let mut v = vec![0u32; 7];
            for (i, &y) in x.iter().enumerate() {
                v[y as usize] = i as u32;
            }
            v
        };
        h1.iter()
            .map(|h| (0..7).map(|i| x[h[inv[i] as usize] as usize]).collect())
            .collect()
    };
    assert!(all.iter().all(|x| conj_set(x) != h2));
}

#[test]
fn s4_over_v4_matches_coset_table() {
    let s4 = PermGroup::symmetric(4).unwrap();
    let v4_gens = vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]];
    let v4 = PermGroup::new(
        4,
        v4_gens.iter().map(|v| Permutation::from_images(v.clone()).unwrap()).collect(),
    )
    .unwrap();
    assert!(quotient_is_s3(&s4, &v4).unwrap());

    // Brute force: cosets of V4, their multiplication, and commutativity.
    let all: Vec<Vec<u32>> = brute_closure(4, &gens_of(&s4), 100).unwrap().into_iter().collect();
    let kernel = brute_closure(4, &v4_gens, 100).unwrap();
    let compose = |a: &[u32], b: &[u32]| -> Vec<u32> { a.iter().map(|&x| b[x as usize]).collect() };
    let coset = |x: &Vec<u32>| -> Vec<Vec<u32>> {
        let mut c: Vec<_> = kernel.iter().map(|k| compose(k, x)).collect();
        c.sort();
        c
    };
    let cosets: HashSet<Vec<Vec<u32>>> = all.iter().map(coset).collect();
    assert_eq!(cosets.len(), 6);
    let reps: Vec<Vec<u32>> = cosets.iter().map(|c| c[0].clone()).collect();
    let abelian = reps
        .iter()
        .all(|a| reps.iter().all(|b| coset(&compose(a, b)) == coset(&compose(b, a))));
    assert!(!abelian);
}

#[test]
fn psl27_search_report() {
    let g = load_group("psl27.json");
    let twisted = load_group("twisted.json");
    let rep = search_candidates(&g, &[twisted], &[], SearchOptions::default()).unwrap();
    assert!(!rep.has_required_class);
    assert_eq!(rep.pairs.len(), 1);
    assert!(rep.pairs[0]
        .intermediates
        .iter()
        .all(|u| !(u.s3_over_h && u.s3_over_h2)));
    assert_eq!(rep.verdict, Verdict::FailsCycleType);
    assert!(!rep.degree_multiple_of_six);
}

#[test]
fn witness_groups() {
    let x = witness_x();
    assert_eq!(x.cycle_type().0, vec![6, 6, 6, 3, 3, 3, 3, 3, 3]);
    let cyc = PermGroup::new(36, vec![x.clone()]).unwrap();
    assert_eq!(cyc.order_u64(), Some(6));
    assert!(has_required_class(&cyc, MAX).unwrap());
    let err = search_candidates(&cyc, &[], &[], SearchOptions::default()).unwrap_err();
    assert_eq!(err.kind(), "NotTransitive");

    let g = PermGroup::new(36, vec![x, witness_y()]).unwrap();
    assert!(g.is_transitive());
    let n = g.order_u64().unwrap();
    assert!(n <= 279_936 && 279_936 % n == 0);
    let rep = search_candidates(&g, &[], &[], SearchOptions::default()).unwrap();
    assert!(rep.has_required_class);
    assert_eq!(rep.verdict, Verdict::NoAlmostConjugate);
}

#[test]
fn regular_abelian_group_has_no_pairs() {
    let g = &load_groups("degree36_sample.json")[3];
    assert_eq!(g.order_u64(), Some(36));
    let table = ClassTable::new(g, MAX).unwrap();
    assert_eq!(table.len(), 36);
    let rep = search_candidates(g, &[], &[], SearchOptions::default()).unwrap();
    assert!(rep.pairs.is_empty());
    assert!(!rep.has_required_class);
}

fn random_perm(degree: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((0..degree as u32).collect::<Vec<_>>()).prop_shuffle()
}

fn random_gens() -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (2usize..=7).prop_flat_map(|d| (Just(d), prop::collection::vec(random_perm(d), 1..=3)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bsgs_matches_closure((degree, gens) in random_gens()) {
        let g = PermGroup::new(
            degree,
            gens.iter().map(|v| Permutation::from_images(v.clone()).unwrap()).collect(),
        ).unwrap();
        let all = brute_closure(degree, &gens, 6000).unwrap();
        prop_assert_eq!(g.order_u64(), Some(all.len() as u64));
        for x in &all {
            prop_assert!(g.contains(&Permutation::from_images(x.clone()).unwrap()));
        }
        let n = all.len() as u64;
        for p in 0..degree as u32 {
            let orbit = g.orbit(p).len() as u64;
            let stab = g.point_stabilizer(p).unwrap().order_u64().unwrap();
            prop_assert_eq!(orbit * stab, n);
        }
    }

    #[test]
    fn class_sizes_partition_the_group((degree, gens) in random_gens()) {
        let g = PermGroup::new(
            degree,
            gens.iter().map(|v| Permutation::from_images(v.clone()).unwrap()).collect(),
        ).unwrap();
        let n = g.order_u64().unwrap();
        let classes = conjugacy_classes(&g, MAX).unwrap();
        prop_assert_eq!(classes.iter().map(|c| c.1).sum::<u64>(), n);
        for (rep, size) in &classes {
            prop_assert_eq!(n % size, 0);
            for s in g.generators() {
                prop_assert_eq!(rep.conjugate_by(s).cycle_type(), rep.cycle_type());
            }
        }
        if n <= 720 {
            let all = brute_closure(degree, &gens, 1000).unwrap();
            let mut got: Vec<u64> = classes.iter().map(|c| c.1).collect();
            got.sort_unstable();
            prop_assert_eq!(got, brute_class_sizes(&all));
        }
    }

    #[test]
    fn conjugate_subgroups_are_gassmann(
        (degree, gens) in random_gens(),
        sub_idx in 0usize..64,
        conj_idx in 0u64..5040,
    ) {
        let g = Arc::new(PermGroup::new(
            degree,
            gens.iter().map(|v| Permutation::from_images(v.clone()).unwrap()).collect(),
        ).unwrap());
        let n = g.order_u64().unwrap();
        let a = g.element_at(sub_idx as u64 % n);
        let x = g.element_at(conj_idx % n);
        let h1 = Subgroup::new(g.clone(), vec![a.clone()]).unwrap();
        let h2 = Subgroup::new(g.clone(), vec![a.conjugate_by(&x)]).unwrap();
        prop_assert!(gassmann_equivalent(&h1, &h2, MAX).unwrap());
        prop_assert!(gassmann_equivalent(&h2, &h1, MAX).unwrap());
        let w = conjugating_element(&g, &h1, &h2, MAX).unwrap();
        prop_assert!(w.is_some());
        // A simultaneous conjugate keeps the S3-quotient verdict.
        let u = g.point_stabilizer(0).unwrap();
        let hu = PermGroup::new(degree, vec![]).unwrap();
        let ux = PermGroup::new(degree, u.generators().iter().map(|s| s.conjugate_by(&x)).collect()).unwrap();
        prop_assert_eq!(quotient_is_s3(&u, &hu).unwrap(), quotient_is_s3(&ux, &hu).unwrap());
    }
}
