#![no_main]

//! Multiplier isomorphisms and pair reduction on arbitrary parameters: no
//! panics, and every claimed isomorphism preserves adjacency.

use libfuzzer_sys::fuzz_target;

use circsym::graph::{canonical_pair, CirculantGraph, Reduction};

fuzz_target!(|input: (u8, u8, u8, u8)| {
    let (n, a, b, p) = input;
    let n = n as usize;
    let (a, b, p) = (a as usize, b as usize, p as usize);
    if n < 3 || n > 48 {
        return;
    }

    if let Ok(g) = CirculantGraph::new(n, &[a as i64, b as i64]) {
        if let Ok(h) = g.multiply(p as u64) {
            let map = g.multiplier_map(p % n).unwrap();
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(g.adjacent(u, v), h.adjacent(map.apply(u), map.apply(v)));
                }
            }
        }
    }

    let Ok(reduction) = canonical_pair(n, a, b) else {
        return;
    };
    match reduction {
        Reduction::Reduced { k, multiplier, iso } => {
            assert!(k >= 1 && k <= n / 2);
            let g = CirculantGraph::new(n, &[a as i64, b as i64]).unwrap();
            let h = CirculantGraph::one_k(n, k).unwrap();
            assert_eq!(iso.apply(1), multiplier % n);
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(g.adjacent(u, v), h.adjacent(iso.apply(u), iso.apply(v)));
                }
            }
        }
        Reduction::NotReducible => {
            // neither difference is a unit; gcd check mirrors the contract
            let gcd = |mut x: usize, mut y: usize| {
                while y != 0 {
                    let t = x % y;
                    x = y;
                    y = t;
                }
                x
            };
            assert!(gcd(a, n) != 1 && gcd(b, n) != 1);
        }
    }
});
