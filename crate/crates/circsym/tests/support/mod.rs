#![allow(dead_code)] // each test target compiles its own copy and uses a subset

//! Shared helpers for the randomized property suites. The same five suites
//! back both the standalone `properties` target and the acceptance
//! criterion that re-runs them; the seed is fixed so failures reproduce.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use circsym::autgroups::{self, AutClass};
use circsym::chromatic;
use circsym::constructions::{self, Coloring};
use circsym::graph::CirculantGraph;
use circsym::perm::Permutation;
use circsym::verification;

/// Seed for every randomized suite.
pub const SUITE_SEED: u64 = 0xC19C_5EED_0001_2357;

pub fn suite_rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SUITE_SEED)
}

/// Proper coloring sampled by randomized backtracking: colors are tried in
/// a shuffled order per vertex. Only called with feasible palettes.
pub fn random_proper_coloring(
    g: &CirculantGraph,
    palette: u8,
    rng: &mut ChaCha8Rng,
) -> Option<Coloring> {
    fn descend(
        g: &CirculantGraph,
        palette: u8,
        v: usize,
        colors: &mut Vec<u8>,
        rng: &mut ChaCha8Rng,
    ) -> bool {
        if v == g.n() {
            return true;
        }
        let mut order: Vec<u8> = (1..=palette).collect();
        order.shuffle(rng);
        'next: for &c in &order {
            for w in g.neighbors(v) {
                if w < v && colors[w] == c {
                    continue 'next;
                }
            }
            colors[v] = c;
            if descend(g, palette, v + 1, colors, rng) {
                return true;
            }
            colors[v] = 0;
        }
        false
    }
    let mut colors = vec![0u8; g.n()];
    descend(g, palette, 0, &mut colors, rng)
        .then(|| Coloring::new(colors, palette).expect("colors within palette"))
}

/// No reflection preserves a proper coloring of `C_n(1,k)` unless `n` is
/// even and `k` is odd.
pub fn suite_reflection_exclusion(rng: &mut ChaCha8Rng, cases: usize) -> usize {
    let mut run = 0;
    while run < cases {
        let n = rng.random_range(7..=20);
        let k = rng.random_range(2..=(n - 1) / 2);
        if n % 2 == 0 && k % 2 == 1 {
            continue; // the one family where color-preserving reflections exist
        }
        let g = CirculantGraph::one_k(n, k).unwrap();
        let chi = chromatic::chi_formula(n, k).unwrap().value;
        let palette = chi.max(3) + rng.random_range(0..=1) as u8;
        let c = random_proper_coloring(&g, palette, rng).expect("palette >= chi");
        for a in 0..n {
            let refl = Permutation::reflection(n, a);
            assert!(
                !verification::preserves(&refl, &c).unwrap(),
                "reflection i -> {a} - i preserves a proper coloring of C_{n}(1,{k}): {c}"
            );
        }
        run += 1;
    }
    run
}

/// Whenever a rotation preserves a coloring, the color sequence is periodic
/// with period dividing gcd(r, n); checked both on random colorings and on
/// deliberately periodic ones.
pub fn suite_rotation_periodicity(rng: &mut ChaCha8Rng, cases: usize) -> usize {
    let mut run = 0;
    while run < cases {
        let n = rng.random_range(6..=24usize);
        let periodic = rng.random_bool(0.5);
        let colors: Vec<u8> = if periodic {
            let divisors: Vec<usize> = (1..n).filter(|d| n % d == 0).collect();
            let d = *divisors.choose(rng).unwrap();
            let block: Vec<u8> = (0..d).map(|_| rng.random_range(1..=4)).collect();
            (0..n).map(|i| block[i % d]).collect()
        } else {
            (0..n).map(|_| rng.random_range(1..=4)).collect()
        };
        let c = Coloring::new(colors, 4).unwrap();
        for r in 1..n {
            let rot = Permutation::rotation(n, r);
            if verification::preserves(&rot, &c).unwrap() {
                let d = gcd(r, n);
                assert!(d < n, "nonidentity rotation with gcd = n");
                for i in 0..n {
                    assert_eq!(
                        c.color(i),
                        c.color((i + d) % n),
                        "rotation by {r} preserves but period does not divide gcd({r},{n})"
                    );
                }
            }
        }
        run += 1;
    }
    run
}

/// For prime `n` with a dihedral automorphism group, every proper coloring
/// is distinguishing.
pub fn suite_odd_prime_distinguishing(rng: &mut ChaCha8Rng, cases: usize) -> usize {
    let mut run = 0;
    while run < cases {
        let n = *[7usize, 11, 13, 17, 19, 23].choose(rng).unwrap();
        let k = rng.random_range(2..=(n - 1) / 2);
        if autgroups::classify(n, k).unwrap() != AutClass::Dihedral {
            continue;
        }
        let g = CirculantGraph::one_k(n, k).unwrap();
        let chi = chromatic::chi_formula(n, k).unwrap().value;
        let palette = chi + rng.random_range(0..=1) as u8;
        let c = random_proper_coloring(&g, palette, rng).expect("palette >= chi");
        let cert = verification::certify(n, k, &c).unwrap();
        assert!(cert.proper);
        assert!(
            cert.distinguishing,
            "proper coloring of prime C_{n}(1,{k}) preserved by {:?}",
            cert.witness
        );
        run += 1;
    }
    run
}

/// Recoloring `v_0` and a valid `v_b` with a fresh color keeps the coloring
/// proper and grows the palette by one.
pub fn suite_plus_one_properness(rng: &mut ChaCha8Rng, cases: usize) -> usize {
    let mut run = 0;
    while run < cases {
        let n = rng.random_range(13..=40usize);
        let k = rng.random_range(2..=(n - 1) / 2);
        let candidates: Vec<usize> = (2..n.div_ceil(2))
            .filter(|&b| b != k && gcd(b, n) == 1)
            .collect();
        let Some(&b) = candidates.choose(rng) else {
            continue;
        };
        let g = CirculantGraph::one_k(n, k).unwrap();
        let chi = chromatic::chi_formula(n, k).unwrap().value;
        let base = random_proper_coloring(&g, chi, rng).expect("chi colors suffice");
        let recolored = constructions::plus_one_recolor(n, k, &base, b).unwrap();
        assert_eq!(recolored.palette(), chi + 1);
        assert!(verification::is_proper(&g, &recolored).unwrap());
        assert_eq!(recolored.color(0), chi + 1);
        assert_eq!(recolored.color(b), chi + 1);
        run += 1;
    }
    run
}

/// The multiplier map `v_i -> v_{p*i}` carries edges of `C_n(D)` onto edges
/// of `C_n(pD)` whenever `gcd(p, n) = 1`.
pub fn suite_multiplier_isomorphism(rng: &mut ChaCha8Rng, cases: usize) -> usize {
    let mut run = 0;
    while run < cases {
        let n = rng.random_range(3..=40usize);
        let d_count = rng.random_range(1..=3usize);
        let raw: Vec<i64> = (0..d_count)
            .map(|_| rng.random_range(1..n as i64))
            .filter(|&d| d as usize % n != 0)
            .collect();
        if raw.is_empty() {
            continue;
        }
        let p = rng.random_range(1..n);
        if gcd(p, n) != 1 {
            continue;
        }
        let g = CirculantGraph::new(n, &raw).unwrap();
        let h = g.multiply(p as u64).unwrap();
        let map = g.multiplier_map(p).unwrap();
        for u in 0..n {
            for v in 0..n {
                assert_eq!(
                    g.adjacent(u, v),
                    h.adjacent(map.apply(u), map.apply(v)),
                    "v_i -> v_{{{p}i}} fails on {g}"
                );
            }
        }
        run += 1;
    }
    run
}

fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Runs all five suites with the fixed seed; returns the total case count.
pub fn run_all_suites() -> usize {
    let mut rng = suite_rng();
    let mut total = 0;
    total += suite_reflection_exclusion(&mut rng, 2500);
    total += suite_rotation_periodicity(&mut rng, 2500);
    total += suite_odd_prime_distinguishing(&mut rng, 2000);
    total += suite_plus_one_properness(&mut rng, 1500);
    total += suite_multiplier_isomorphism(&mut rng, 1500);
    total
}
