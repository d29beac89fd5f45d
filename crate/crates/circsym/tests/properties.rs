//! Standalone randomized property suites (fixed seed, see `support`).
//! The acceptance suite re-runs the same five suites as one criterion; here
//! they run individually for quicker attribution when one fails.

mod support;

use circsym::autgroups;
use circsym::constructions;
use circsym::graph::CirculantGraph;
use circsym::verification;

#[test]
fn reflections_never_preserve_proper_colorings_outside_even_odd() {
    let mut rng = support::suite_rng();
    assert_eq!(support::suite_reflection_exclusion(&mut rng, 2500), 2500);
}

#[test]
fn preserving_rotations_force_periodicity() {
    let mut rng = support::suite_rng();
    assert_eq!(support::suite_rotation_periodicity(&mut rng, 2500), 2500);
}

#[test]
fn prime_order_dihedral_graphs_distinguish_for_free() {
    let mut rng = support::suite_rng();
    assert_eq!(
        support::suite_odd_prime_distinguishing(&mut rng, 2000),
        2000
    );
}

#[test]
fn fresh_color_recoloring_keeps_properness() {
    let mut rng = support::suite_rng();
    assert_eq!(support::suite_plus_one_properness(&mut rng, 1500), 1500);
}

#[test]
fn multiplier_maps_are_isomorphisms() {
    let mut rng = support::suite_rng();
    assert_eq!(support::suite_multiplier_isomorphism(&mut rng, 1500), 1500);
}

#[test]
fn wreath_checkers_agree_on_random_proper_colorings() {
    // structured twin-pair check vs full group scan, 1000 colorings spread
    // over the enumeration-friendly sizes
    let mut rng = support::suite_rng();
    let sizes = [10usize, 12, 14, 16, 18, 20, 22, 24];
    for &n in &sizes {
        let k = n / 2 - 1;
        let g = CirculantGraph::one_k(n, k).unwrap();
        let grp = autgroups::wreath_group(n).unwrap();
        for _ in 0..125 {
            let c = support::random_proper_coloring(&g, 5, &mut rng).expect("5 colors suffice");
            let full = verification::is_distinguishing(&g, &c, &grp).unwrap();
            let structured = verification::wreath_distinguishing(n, &c).unwrap();
            assert_eq!(
                full.distinguishing, structured.distinguishing,
                "checkers disagree on {c} for n = {n}"
            );
            if let Some(w) = &structured.witness {
                assert!(verification::preserves(w, &c).unwrap());
                assert!(!w.is_identity());
                assert!(autgroups::is_automorphism(&g, w));
            }
        }
        // and on the constructed coloring
        let built = constructions::construct_wreath(n).unwrap();
        let full = verification::is_distinguishing(&g, &built, &grp).unwrap();
        let structured = verification::wreath_distinguishing(n, &built).unwrap();
        assert!(full.distinguishing && structured.distinguishing);
    }
}

#[test]
fn wreath_checkers_agree_up_to_the_enumeration_switch() {
    // the full scan is still affordable through n = 30 (order 983040);
    // above that certification flips to the structured check, so pin the
    // agreement on constructed and perturbed colorings right up to there
    let mut rng = support::suite_rng();
    for n in [26usize, 28, 30] {
        let k = n / 2 - 1;
        let g = CirculantGraph::one_k(n, k).unwrap();
        let grp = autgroups::wreath_group(n).unwrap();
        let built = constructions::construct_wreath(n).unwrap();
        let mut cases = vec![built.clone()];
        for _ in 0..3 {
            cases.push(support::random_proper_coloring(&g, 5, &mut rng).expect("5 colors"));
        }
        // a deliberately symmetric coloring: duplicate pair sequence
        let mut periodic = built.colors().to_vec();
        let m = n / 2;
        for i in 0..m {
            periodic[i] = if i % 2 == 0 { 1 } else { 3 };
            periodic[i + m] = if i % 2 == 0 { 2 } else { 4 };
        }
        cases.push(constructions::Coloring::new(periodic, 5).unwrap());
        for c in &cases {
            let full = verification::is_distinguishing(&g, c, &grp).unwrap();
            let structured = verification::wreath_distinguishing(n, c).unwrap();
            assert_eq!(
                full.distinguishing, structured.distinguishing,
                "checkers disagree at n = {n} on {c}"
            );
        }
    }
}
