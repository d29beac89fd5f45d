//! Canonical circulant graphs and their isomorphism-level reductions.
//!
//! A circulant graph `C_n(D)` has vertices `v_0..v_{n-1}` and an edge between
//! `v_i` and `v_j` whenever the index difference `|i - j|` reduced modulo `n`
//! lies in the connection set `D`. Connection sets are canonicalized at
//! construction so that every difference lies in `{1..floor(n/2)}`; no value
//! of [`CirculantGraph`] ever carries a non-canonical difference.
//!
//! Vertices are plain `usize` indices, always reduced modulo `n`.

use std::fmt;

use thiserror::Error;

use crate::gcd;
use crate::perm::Permutation;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} is below the minimum of 3")]
    VertexCountTooSmall(usize),
    #[error("difference {0} is congruent to 0 modulo {1} (self-loop)")]
    SelfLoopDifference(i64, usize),
    #[error("multiplier {p} is not coprime to {n}")]
    NotCoprime { p: u64, n: usize },
    #[error("invalid pair ({a}, {b}) for n = {n}: need 1 <= a, b <= n/2 and a != b")]
    InvalidPair { n: usize, a: usize, b: usize },
    #[error("vertex index {0} out of range for n = {1}")]
    VertexOutOfRange(usize, usize),
}

/// Whether an edge of a tetravalent `C_n(1,k)` steps by 1 or by `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    E1,
    Ek,
}

/// An undirected circulant graph with a canonical connection set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CirculantGraph {
    n: usize,
    diffs: Vec<usize>,
}

impl CirculantGraph {
    /// Builds `C_n(raw_diffs)`, canonicalizing each difference to
    /// `min(d mod n, n - d mod n)` and merging duplicates.
    pub fn new(n: usize, raw_diffs: &[i64]) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::VertexCountTooSmall(n));
        }
        let mut diffs = Vec::new();
        for &d in raw_diffs {
            let r = d.rem_euclid(n as i64) as usize;
            if r == 0 {
                return Err(GraphError::SelfLoopDifference(d, n));
            }
            diffs.push(r.min(n - r));
        }
        diffs.sort_unstable();
        diffs.dedup();
        Ok(CirculantGraph { n, diffs })
    }

    /// Convenience constructor for the tetravalent family `C_n(1,k)`.
    pub fn one_k(n: usize, k: usize) -> Result<Self, GraphError> {
        CirculantGraph::new(n, &[1, k as i64])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diffs(&self) -> &[usize] {
        &self.diffs
    }

    /// Degree of every vertex: `2|D|`, minus one for a difference equal to `n/2`.
    pub fn degree(&self) -> usize {
        let halving = self.diffs.iter().filter(|&&d| 2 * d == self.n).count();
        2 * self.diffs.len() - halving
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        let (u, v) = (u % self.n, v % self.n);
        if u == v {
            return false;
        }
        let d = u.abs_diff(v);
        self.diffs.binary_search(&d.min(self.n - d)).is_ok()
    }

    /// Neighbors of `v` in ascending index order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let v = v % self.n;
        let mut out: Vec<usize> = self
            .diffs
            .iter()
            .flat_map(|&d| [(v + d) % self.n, (v + self.n - d) % self.n])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Every undirected edge exactly once, as `(i, (i + d) mod n)` pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &d in &self.diffs {
            let limit = if 2 * d == self.n { self.n / 2 } else { self.n };
            for i in 0..limit {
                out.push((i, (i + d) % self.n));
            }
        }
        out
    }

    /// For graphs with connection set `{1}` or `{1, k}`: which class the edge
    /// `uv` belongs to. `None` if `uv` is not an edge or the set has another shape.
    pub fn edge_class(&self, u: usize, v: usize) -> Option<EdgeClass> {
        if !self.adjacent(u, v) {
            return None;
        }
        match self.diffs.as_slice() {
            [1] => Some(EdgeClass::E1),
            [1, k] => {
                let d = u.abs_diff(v) % self.n;
                let d = d.min(self.n - d);
                if d == 1 {
                    Some(EdgeClass::E1)
                } else if d == *k {
                    Some(EdgeClass::Ek)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Multiplies every difference by `p` (mod `n`). The result is isomorphic
    /// to `self` via the vertex map `v_i -> v_{p*i}`.
    pub fn multiply(&self, p: u64) -> Result<Self, GraphError> {
        if gcd(p % self.n as u64, self.n as u64) != 1 {
            return Err(GraphError::NotCoprime { p, n: self.n });
        }
        let scaled: Vec<i64> = self
            .diffs
            .iter()
            .map(|&d| ((d as u64 * p) % self.n as u64) as i64)
            .collect();
        CirculantGraph::new(self.n, &scaled)
    }

    /// The vertex map `v_i -> v_{p*i}` witnessing [`CirculantGraph::multiply`].
    pub fn multiplier_map(&self, p: usize) -> Result<Permutation, GraphError> {
        if gcd(p as u64 % self.n as u64, self.n as u64) != 1 {
            return Err(GraphError::NotCoprime {
                p: p as u64,
                n: self.n,
            });
        }
        Ok(Permutation::multiplier(self.n, p % self.n).expect("unit multiplier is bijective"))
    }

    /// GraphViz DOT rendering: one node per vertex, one line per undirected
    /// edge, with a `class` attribute on the edges of `C_n(1)` and `C_n(1,k)`.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("graph \"{}\" {{\n", self));
        for i in 0..self.n {
            out.push_str(&format!("  v{i} [label=\"v{i}\"];\n"));
        }
        self.write_dot_edges(&mut out);
        out.push_str("}\n");
        out
    }

    pub(crate) fn write_dot_edges(&self, out: &mut String) {
        for (u, v) in self.edges() {
            match self.edge_class(u, v) {
                Some(EdgeClass::E1) => out.push_str(&format!("  v{u} -- v{v} [class=\"E1\"];\n")),
                Some(EdgeClass::Ek) => out.push_str(&format!("  v{u} -- v{v} [class=\"Ek\"];\n")),
                None => out.push_str(&format!("  v{u} -- v{v};\n")),
            }
        }
    }
}

impl fmt::Display for CirculantGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let diffs: Vec<String> = self.diffs.iter().map(|d| d.to_string()).collect();
        write!(f, "C_{}({})", self.n, diffs.join(","))
    }
}

/// Result of reducing `C_n(a,b)` to the standard form `C_n(1,k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduction {
    /// `C_n(a,b)` is isomorphic to `C_n(1,k)` via `v_i -> v_{multiplier * i}`.
    Reduced {
        k: usize,
        multiplier: usize,
        iso: Permutation,
    },
    /// Neither `a` nor `b` is coprime to `n`.
    NotReducible,
}

/// Finds `k` with `C_n(a,b) ≅ C_n(1,k)` together with the witnessing vertex
/// map, when one of `a`, `b` is a unit modulo `n`.
///
/// The multiplier is the smallest `p` with `p*a ≡ 1` or `p*b ≡ 1 (mod n)`,
/// so the output is deterministic.
pub fn canonical_pair(n: usize, a: usize, b: usize) -> Result<Reduction, GraphError> {
    if a == b || a == 0 || b == 0 || a > n / 2 || b > n / 2 {
        return Err(GraphError::InvalidPair { n, a, b });
    }
    for p in 1..n {
        if gcd(p as u64, n as u64) != 1 {
            continue;
        }
        let pa = (p * a) % n;
        let pb = (p * b) % n;
        if pa == 1 || pb == 1 {
            let other = if pa == 1 { pb } else { pa };
            let k = other.min(n - other);
            debug_assert!(k >= 1 && k <= n / 2);
            let iso = Permutation::multiplier(n, p).expect("p coprime to n");
            return Ok(Reduction::Reduced {
                k,
                multiplier: p,
                iso,
            });
        }
    }
    Ok(Reduction::NotReducible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Brute-force check that `map` carries edges of `g` onto edges of `h`.
    fn is_isomorphism(g: &CirculantGraph, h: &CirculantGraph, map: &Permutation) -> bool {
        let n = g.n();
        if h.n() != n || map.len() != n {
            return false;
        }
        (0..n).all(|u| (0..n).all(|v| g.adjacent(u, v) == h.adjacent(map.apply(u), map.apply(v))))
    }

    #[test]
    fn builds_canonical_connection_sets() {
        let g = CirculantGraph::new(7, &[1, 2]).unwrap();
        assert_eq!(g.diffs(), &[1, 2]);
        assert_eq!(g.degree(), 4);

        // a difference above n/2 is replaced by its complement
        let g = CirculantGraph::new(7, &[1, 5]).unwrap();
        assert_eq!(g.diffs(), &[1, 2]);

        let ladder = CirculantGraph::new(8, &[1, 4]).unwrap();
        assert_eq!(ladder.diffs(), &[1, 4]);
        assert_eq!(ladder.degree(), 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            CirculantGraph::new(2, &[1]),
            Err(GraphError::VertexCountTooSmall(2))
        );
        assert_eq!(
            CirculantGraph::new(6, &[6]),
            Err(GraphError::SelfLoopDifference(6, 6))
        );
        assert_eq!(
            CirculantGraph::new(6, &[-6]),
            Err(GraphError::SelfLoopDifference(-6, 6))
        );
    }

    #[test]
    fn adjacency_follows_the_connection_set() {
        let g = CirculantGraph::new(7, &[1, 2]).unwrap();
        assert!(g.adjacent(0, 2));
        assert!(!g.adjacent(0, 3));
        let ladder = CirculantGraph::new(8, &[1, 4]).unwrap();
        assert!(ladder.adjacent(0, 4)); // rung edge
    }

    #[test]
    fn multiply_matches_brute_force_isomorphism() {
        let g = CirculantGraph::new(7, &[2, 3]).unwrap();
        let h = g.multiply(4).unwrap();
        assert_eq!(h.diffs(), &[1, 2]);
        assert!(is_isomorphism(&g, &h, &g.multiplier_map(4).unwrap()));

        // C_7(1,3) and C_7(1,2) are isomorphic via p = 5
        let g = CirculantGraph::new(7, &[1, 3]).unwrap();
        let h = g.multiply(5).unwrap();
        assert_eq!(h.diffs(), &[1, 2]);
        assert!(is_isomorphism(&g, &h, &g.multiplier_map(5).unwrap()));

        let g = CirculantGraph::new(9, &[1, 4]).unwrap();
        assert_eq!(g.multiply(1).unwrap(), g);
        assert_eq!(g.multiply(3), Err(GraphError::NotCoprime { p: 3, n: 9 }));
    }

    #[test]
    fn canonical_pair_reduces_when_a_unit_exists() {
        match canonical_pair(7, 2, 3).unwrap() {
            Reduction::Reduced { k, multiplier, iso } => {
                assert_eq!((k, multiplier), (2, 4));
                let g = CirculantGraph::new(7, &[2, 3]).unwrap();
                let h = CirculantGraph::one_k(7, k).unwrap();
                assert!(is_isomorphism(&g, &h, &iso));
            }
            other => panic!("expected reduction, got {other:?}"),
        }

        match canonical_pair(9, 4, 2).unwrap() {
            Reduction::Reduced { k, multiplier, iso } => {
                assert_eq!((k, multiplier), (2, 5));
                let g = CirculantGraph::new(9, &[4, 2]).unwrap();
                let h = CirculantGraph::one_k(9, k).unwrap();
                assert!(is_isomorphism(&g, &h, &iso));
            }
            other => panic!("expected reduction, got {other:?}"),
        }

        // the triangular prism: no unit difference, not reducible
        assert_eq!(canonical_pair(6, 2, 3).unwrap(), Reduction::NotReducible);
    }

    #[test]
    fn dot_export_marks_edge_classes() {
        let dot = CirculantGraph::one_k(5, 2).unwrap().to_dot();
        assert!(dot.starts_with("graph \"C_5(1,2)\""));
        assert!(dot.contains("v0 -- v1 [class=\"E1\"];"));
        assert!(dot.contains("v0 -- v2 [class=\"Ek\"];"));
        // 5 nodes + 10 edges
        assert_eq!(dot.lines().filter(|l| l.contains("--")).count(), 10);
    }

    #[test]
    fn mobius_rung_edges_emitted_once() {
        let g = CirculantGraph::new(8, &[1, 4]).unwrap();
        assert_eq!(g.edges().len(), 12); // 8 cycle edges + 4 rungs
    }

    proptest! {
        #[test]
        fn construction_is_idempotent(n in 3usize..40, raw in proptest::collection::vec(-80i64..80, 1..5)) {
            prop_assume!(raw.iter().all(|d| d.rem_euclid(n as i64) != 0));
            let g = CirculantGraph::new(n, &raw).unwrap();
            let again: Vec<i64> = g.diffs().iter().map(|&d| d as i64).collect();
            prop_assert_eq!(CirculantGraph::new(n, &again).unwrap(), g);
        }

        #[test]
        fn adjacency_symmetric_irreflexive(n in 3usize..30, raw in proptest::collection::vec(1i64..29, 1..4)) {
            prop_assume!(raw.iter().all(|d| d.rem_euclid(n as i64) != 0));
            let g = CirculantGraph::new(n, &raw).unwrap();
            for u in 0..n {
                prop_assert!(!g.adjacent(u, u));
                for v in 0..n {
                    prop_assert_eq!(g.adjacent(u, v), g.adjacent(v, u));
                }
            }
        }

        #[test]
        fn multiplier_map_preserves_adjacency(n in 3usize..50, k in 1usize..24, p in 1u64..49) {
            prop_assume!(k <= n / 2);
            prop_assume!(crate::gcd(p % n as u64, n as u64) == 1);
            let g = CirculantGraph::one_k(n, k).unwrap();
            let h = g.multiply(p).unwrap();
            let map = g.multiplier_map(p as usize % n).unwrap();
            prop_assert!(is_isomorphism(&g, &h, &map));
        }
    }
}
