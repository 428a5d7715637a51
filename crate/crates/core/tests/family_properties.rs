mod common;

use hosoya::distribution::distance_distribution;
use hosoya::families::{
    build_family_tree, closed_form_alpha, family_member, hamming_alpha, hamming_graph,
    pell_solutions, FamilyParameters, DEFAULT_HAMMING_LIMIT, DEFAULT_TREE_VERTEX_LIMIT,
};
use hosoya::palindrome::palindromicity_distance;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

use common::naive_alpha;

#[test]
fn pell_stream_invariants() {
    for sol in pell_solutions(51) {
        assert_eq!(&sol.x * &sol.x - 2 * &sol.y * &sol.y, BigInt::from(-94));
        assert!(sol.x.is_even() && sol.y.is_odd());
    }
}

#[test]
fn family_members_are_palindromic() {
    for index in 0..=50 {
        let (p, dist) = family_member(index);
        assert!(p.a.clone() + &p.b >= BigUint::from(19u32));
        assert!((p.a.clone() + &p.b).is_odd());
        let a = BigInt::from(p.a.clone());
        let b = BigInt::from(p.b.clone());
        let x: BigInt = &a - 3 * &b + 3;
        let y: BigInt = 2 * &b - 3;
        let lhs: BigInt = &x * &x - 2 * &y * &y + 94;
        assert!(lhs.is_zero());
        let report = palindromicity_distance(&dist);
        assert!(report.is_palindromic, "index {index}");
        assert_eq!(report.diameter, 6);
    }
}

#[test]
fn degenerate_shape_matches_naive_distances() {
    let g = build_family_tree(&FamilyParameters::new(0u32, 0u32, 0u32, 0u32), DEFAULT_TREE_VERTEX_LIMIT).unwrap();
    assert_eq!(naive_alpha(&g), vec![8, 7, 8, 5, 4, 4]);
}

#[test]
fn hamming_closed_form_matches_naive_small() {
    for m in 1..=6 {
        let g = hamming_graph(m, DEFAULT_HAMMING_LIMIT).unwrap();
        assert_eq!(hamming_alpha(m).to_u64_vec().unwrap(), naive_alpha(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_form_holds_beyond_sweep(a in 0u32..20, b in 0u32..20, s in 0u32..20, t in 0u32..20) {
        let p = FamilyParameters::new(a, b, s, t);
        let g = build_family_tree(&p, DEFAULT_TREE_VERTEX_LIMIT).unwrap();
        prop_assert!(g.is_tree());
        let mut bfs = distance_distribution(&g).unwrap().to_u64_vec().unwrap();
        bfs.resize(7, 0);
        prop_assert_eq!(closed_form_alpha(&p).to_u64_vec().unwrap(), bfs);
    }
}

#[test]
fn admissible_parameters_below_the_first_member() {
    // a + b odd in 11..19 with s = t + 3 = (a + b - 5) / 2 forced
    let mut found = Vec::new();
    for sum in (11u32..19).step_by(2) {
        for a in 0..=sum {
            let s = (sum - 5) / 2;
            let p = FamilyParameters::new(a, sum - a, s, s - 3);
            if p.is_admissible() {
                found.push((a, sum - a, s, s - 3));
            }
        }
    }
    // (x, y) = (-22, 17) precedes the seed (2, 7) under the recurrence; the
    // mirror a <-> b is the same tree since v6 and u are symmetric
    assert_eq!(found, vec![(5, 10, 5, 2), (10, 5, 5, 2)]);
    for (a, b, s, t) in found {
        let g = build_family_tree(&FamilyParameters::new(a, b, s, t), DEFAULT_TREE_VERTEX_LIMIT).unwrap();
        let dist = distance_distribution(&g).unwrap();
        assert_eq!(dist.to_u64_vec().unwrap(), vec![30, 29, 108, 131, 108, 29, 30]);
        assert!(palindromicity_distance(&dist).is_palindromic);
    }
}
