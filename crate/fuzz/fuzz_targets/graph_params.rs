#![no_main]

//! Raw graph parameters: construction either rejects cleanly or yields a
//! canonical connection set whose invariants hold.

use libfuzzer_sys::fuzz_target;

use circsym::graph::CirculantGraph;

fuzz_target!(|input: (u16, Vec<i64>)| {
    let (n, raw) = input;
    let n = n as usize;
    let Ok(g) = CirculantGraph::new(n, &raw) else {
        return;
    };
    // canonical range, sorted, duplicate-free
    assert!(g.diffs().windows(2).all(|w| w[0] < w[1]));
    assert!(g.diffs().iter().all(|&d| d >= 1 && d <= n / 2));

    // rebuilding from the canonical set is the identity
    let again: Vec<i64> = g.diffs().iter().map(|&d| d as i64).collect();
    assert_eq!(CirculantGraph::new(n, &again).unwrap(), g);

    // adjacency is symmetric and irreflexive
    let probe = n.min(24);
    for u in 0..probe {
        assert!(!g.adjacent(u, u));
        for v in 0..probe {
            assert_eq!(g.adjacent(u, v), g.adjacent(v, u));
        }
    }
    let degree = g.degree();
    assert_eq!(g.neighbors(0).len(), degree);
});
