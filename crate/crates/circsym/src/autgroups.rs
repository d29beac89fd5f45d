//! Automorphism groups of the graphs `C_n(1,k)`.
//!
//! The tetravalent circulants fall into a small number of classes. Away from
//! a handful of exceptions the group is the dihedral group `D_n` acting on
//! vertex indices. When `k^2 ≡ ±1 (mod n)` the graph is dart-transitive and
//! the group consists of the `4n` affine maps `i -> s + (t-s)i`; when
//! `k = n/2 - 1` the graph is a wreath graph `W(n/2, 2)` whose group is the
//! semidirect product of the `n/2` twin swaps with the dihedral action on
//! twin pairs. A generic backtracking search over vertex images serves both
//! as an independent oracle and as the handler for the exceptional cases.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::CirculantGraph;
use crate::perm::Permutation;

/// Full enumeration of a generic group is refused above this bound.
pub const DEFAULT_SEARCH_BOUND: usize = 16;

/// Wreath groups are not expanded element-by-element past this order.
pub const WREATH_ENUMERATION_GUARD: u128 = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("(n, k) = ({n}, {k}) is not canonical: need n >= 3 and 1 <= k <= n/2")]
    NonCanonical { n: usize, k: usize },
    #[error("k^2 = {k}^2 is not congruent to +/-1 modulo {n}")]
    NotSquareRootOfUnity { n: usize, k: usize },
    #[error("({s}, {t}) is not an edge of C_{n}(1,{k})")]
    NotAnEdge {
        n: usize,
        k: usize,
        s: usize,
        t: usize,
    },
    #[error("graph on {0} vertices exceeds the search bound {1}")]
    SearchBoundExceeded(usize, usize),
    #[error("wreath parameters require even n >= 10 with k = n/2 - 1, got n = {0}")]
    BadWreathParameters(usize),
    #[error("group order {0} exceeds the enumeration guard {1}")]
    EnumerationRefused(u128, u128),
}

/// Which description of `Aut(C_n(1,k))` applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AutClass {
    /// `(4,2), (5,2), (6,2), (6,3), (8,3)`: complete multipartite graphs.
    CompleteMultipartite,
    /// `k = 1`: the plain cycle, dihedral of order `2n`.
    Cycle,
    /// `k = n/2`: the trivalent Moebius ladder, dihedral for `n >= 8`.
    MobiusLadder,
    /// `n = 10, k = 3`: the bipartite double of `K_5`, order 240.
    ExceptionalC10k3,
    /// `k = n/2 - 1`, `n >= 10` even: wreath graph, order `2^(n/2) * n`.
    Wreath,
    /// `k^2 ≡ ±1 (mod n)`: dart-transitive, order `4n`. Carries the sign.
    EdgeTransitiveSquare(i8),
    /// Everything else: dihedral of order `2n`.
    Dihedral,
}

impl fmt::Display for AutClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutClass::CompleteMultipartite => write!(f, "CompleteMultipartite"),
            AutClass::Cycle => write!(f, "Cycle"),
            AutClass::MobiusLadder => write!(f, "MobiusLadder"),
            AutClass::ExceptionalC10k3 => write!(f, "ExceptionalC10k3"),
            AutClass::Wreath => write!(f, "Wreath"),
            AutClass::EdgeTransitiveSquare(s) => {
                write!(
                    f,
                    "EdgeTransitiveSquare({})",
                    if *s >= 0 { "+1" } else { "-1" }
                )
            }
            AutClass::Dihedral => write!(f, "Dihedral"),
        }
    }
}

/// Classifies `Aut(C_n(1,k))` for canonical `(n, k)`.
pub fn classify(n: usize, k: usize) -> Result<AutClass, GroupError> {
    if n < 3 || k == 0 || k > n / 2 {
        return Err(GroupError::NonCanonical { n, k });
    }
    Ok(match (n, k) {
        (4, 2) | (5, 2) | (6, 2) | (6, 3) | (8, 3) => AutClass::CompleteMultipartite,
        (10, 3) => AutClass::ExceptionalC10k3,
        _ if k == 1 => AutClass::Cycle,
        _ if 2 * k == n => AutClass::MobiusLadder,
        _ if n % 2 == 0 && k == n / 2 - 1 => AutClass::Wreath,
        _ if (k * k) % n == 1 => AutClass::EdgeTransitiveSquare(1),
        _ if (k * k) % n == n - 1 => AutClass::EdgeTransitiveSquare(-1),
        _ => AutClass::Dihedral,
    })
}

/// A set of automorphisms, closed under composition and inverse.
///
/// `elements` is `None` when the group was too large to expand; the
/// generators and the order are still available.
#[derive(Debug, Clone)]
pub struct AutGroup {
    n: usize,
    generators: Vec<Permutation>,
    elements: Option<Vec<Permutation>>,
    order: u128,
}

impl AutGroup {
    fn from_elements(
        n: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let order = elements.len() as u128;
        AutGroup {
            n,
            generators,
            elements: Some(elements),
            order,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements in ascending lexicographic order of their image arrays
    /// (so the identity comes first), or `None` past the enumeration guard.
    pub fn elements(&self) -> Option<&[Permutation]> {
        self.elements.as_deref()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        match &self.elements {
            Some(els) => els.binary_search(p).is_ok(),
            None => false,
        }
    }
}

/// The dihedral group of order `2n`: rotations `i -> i + r` and reflections
/// `i -> r - i`.
pub fn dihedral_group(n: usize) -> AutGroup {
    let mut elements = Vec::with_capacity(2 * n);
    for r in 0..n {
        elements.push(Permutation::rotation(n, r));
        elements.push(Permutation::reflection(n, r));
    }
    AutGroup::from_elements(
        n,
        vec![Permutation::rotation(n, 1), Permutation::reflection(n, 0)],
        elements,
    )
}

/// The affine map `i -> s + (t - s) i (mod n)` sending the edge `(v_0, v_1)`
/// to `(v_s, v_t)`. Requires `k^2 ≡ ±1 (mod n)` and `v_s v_t` an edge of
/// `C_n(1,k)`; under those hypotheses it is always an automorphism.
pub fn affine_edge_map(n: usize, k: usize, s: usize, t: usize) -> Result<Permutation, GroupError> {
    let kk = (k * k) % n;
    if kk != 1 && kk != n - 1 {
        return Err(GroupError::NotSquareRootOfUnity { n, k });
    }
    let g = CirculantGraph::one_k(n, k).map_err(|_| GroupError::NonCanonical { n, k })?;
    let (s, t) = (s % n, t % n);
    if !g.adjacent(s, t) {
        return Err(GroupError::NotAnEdge { n, k, s, t });
    }
    let m = (t + n - s) % n;
    let images = (0..n).map(|i| ((s + m * i) % n) as u16).collect();
    Ok(Permutation::new(images).expect("affine map with unit multiplier"))
}

/// The order-`4n` group `{ phi_st : v_s v_t an edge }` of a graph with
/// `k^2 ≡ ±1 (mod n)`, taking both orientations of each edge.
pub fn edge_transitive_group(n: usize, k: usize) -> Result<AutGroup, GroupError> {
    if n < 3 || k <= 1 || 2 * k >= n {
        return Err(GroupError::NonCanonical { n, k });
    }
    let mut elements = Vec::with_capacity(4 * n);
    for s in 0..n {
        for d in [1, k, n - 1, n - k] {
            let t = (s + d) % n;
            elements.push(affine_edge_map(n, k, s, t)?);
        }
    }
    let generators = vec![
        Permutation::rotation(n, 1),
        Permutation::reflection(n, 0),
        Permutation::multiplier(n, k).expect("k is a unit: k^2 = +/-1"),
    ];
    let group = AutGroup::from_elements(n, generators, elements);
    debug_assert_eq!(group.order(), 4 * n as u128);
    Ok(group)
}

/// Order of the wreath group `2^(n/2) * n`, saturating at `u128::MAX` once
/// `n >= 256` pushes it past 128 bits.
pub fn wreath_order(n: usize) -> u128 {
    1u128
        .checked_shl((n / 2) as u32)
        .and_then(|x| x.checked_mul(n as u128))
        .unwrap_or(u128::MAX)
}

/// Twin swap exchanging `v_p` and `v_{p + n/2}` and fixing everything else.
pub fn twin_swap(n: usize, p: usize) -> Permutation {
    let m = n / 2;
    let mut images: Vec<u16> = (0..n as u16).collect();
    images.swap(p, p + m);
    Permutation::new(images).expect("transposition")
}

/// The automorphism group of the wreath graph `C_n(1, n/2 - 1)`, `n >= 10`
/// even: all products of twin swaps with lifts of the dihedral action on the
/// `n/2` twin pairs. Order `2^(n/2) * n`.
///
/// Past [`WREATH_ENUMERATION_GUARD`] the element list is left empty and only
/// generators and order are returned.
pub fn wreath_group(n: usize) -> Result<AutGroup, GroupError> {
    if n < 10 || n % 2 != 0 {
        return Err(GroupError::BadWreathParameters(n));
    }
    let m = n / 2;
    let order = wreath_order(n);
    let generators = vec![
        Permutation::rotation(n, 1),
        Permutation::reflection(n, 0),
        twin_swap(n, 0),
    ];
    if order > WREATH_ENUMERATION_GUARD {
        return Ok(AutGroup {
            n,
            generators,
            elements: None,
            order,
        });
    }

    // Each element factors uniquely as (twin swaps over S) ∘ (lift of a
    // dihedral symmetry of the pair cycle); the canonical lifts are the
    // rotations i -> i + t and reflections i -> a - i with t, a < n/2.
    let mut lifts = Vec::with_capacity(2 * m);
    for t in 0..m {
        lifts.push(Permutation::rotation(n, t));
        lifts.push(Permutation::reflection(n, t));
    }
    let mut elements = Vec::with_capacity(order as usize);
    for bits in 0u64..(1 << m) {
        for lift in &lifts {
            let images = (0..n)
                .map(|i| {
                    let j = lift.apply(i);
                    let pair = j % m;
                    if bits >> pair & 1 == 1 {
                        ((j + m) % n) as u16
                    } else {
                        j as u16
                    }
                })
                .collect();
            elements.push(Permutation::new(images).expect("composition of bijections"));
        }
    }
    let group = AutGroup::from_elements(n, generators, elements);
    debug_assert_eq!(group.order(), order);
    Ok(group)
}

/// Complete automorphism group by backtracking over vertex images with
/// adjacency pruning; candidate images are tried in ascending index order so
/// enumeration is deterministic. Independent of the classification above.
pub fn generic_search(g: &CirculantGraph, max_n: usize) -> Result<AutGroup, GroupError> {
    let n = g.n();
    if n > max_n {
        return Err(GroupError::SearchBoundExceeded(n, max_n));
    }
    let mut images: Vec<u16> = vec![0; n];
    let mut used = vec![false; n];
    let mut found = Vec::new();
    extend(g, 0, &mut images, &mut used, &mut found);
    let generators = minimal_generators(&found);
    Ok(AutGroup::from_elements(n, generators, found))
}

fn extend(
    g: &CirculantGraph,
    v: usize,
    images: &mut Vec<u16>,
    used: &mut Vec<bool>,
    found: &mut Vec<Permutation>,
) {
    let n = g.n();
    if v == n {
        found.push(Permutation::new(images.clone()).expect("bijection by construction"));
        return;
    }
    'candidates: for w in 0..n {
        if used[w] {
            continue;
        }
        for (u, &img) in images.iter().enumerate().take(v) {
            if g.adjacent(u, v) != g.adjacent(img as usize, w) {
                continue 'candidates;
            }
        }
        images[v] = w as u16;
        used[w] = true;
        extend(g, v + 1, images, used, found);
        used[w] = false;
    }
}

/// Greedy minimal generating set: walk the sorted elements, keeping each one
/// not yet generated by the previously kept elements.
pub fn minimal_generators(elements: &[Permutation]) -> Vec<Permutation> {
    let mut sorted: Vec<&Permutation> = elements.iter().collect();
    sorted.sort_unstable();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut known: BTreeSet<Permutation> = BTreeSet::new();
    if let Some(first) = sorted.first() {
        known.insert(Permutation::identity(first.len()));
    }
    for el in sorted {
        if !known.contains(el) {
            gens.push((*el).clone());
            known = closure(&gens);
        }
    }
    gens
}

/// Closure of a generator list under composition (breadth-first products).
pub fn closure(generators: &[Permutation]) -> BTreeSet<Permutation> {
    let mut set = BTreeSet::new();
    let Some(first) = generators.first() else {
        return set;
    };
    set.insert(Permutation::identity(first.len()));
    let mut frontier: Vec<Permutation> = vec![Permutation::identity(first.len())];
    while let Some(p) = frontier.pop() {
        for g in generators {
            let q = g.compose(&p);
            if set.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    set
}

/// The full automorphism group of `C_n(1,k)`, chosen by class. The two
/// sporadic classes fall back to the generic search; everything else uses
/// the closed-form groups.
pub fn full_group(n: usize, k: usize) -> Result<AutGroup, GroupError> {
    let class = classify(n, k)?;
    match class {
        AutClass::CompleteMultipartite | AutClass::ExceptionalC10k3 => {
            let g = CirculantGraph::one_k(n, k).expect("canonical parameters");
            generic_search(&g, DEFAULT_SEARCH_BOUND)
        }
        AutClass::Cycle | AutClass::MobiusLadder | AutClass::Dihedral => Ok(dihedral_group(n)),
        AutClass::Wreath => wreath_group(n),
        AutClass::EdgeTransitiveSquare(_) => edge_transitive_group(n, k),
    }
}

/// Order of `Aut(C_n(1,k))` without enumerating large groups. Wreath orders
/// saturate at `u128::MAX` (reached from `n = 256` upward).
pub fn aut_order(n: usize, k: usize) -> Result<u128, GroupError> {
    let class = classify(n, k)?;
    Ok(match class {
        AutClass::CompleteMultipartite | AutClass::ExceptionalC10k3 => {
            let g = CirculantGraph::one_k(n, k).expect("canonical parameters");
            generic_search(&g, DEFAULT_SEARCH_BOUND)?.order()
        }
        AutClass::Cycle | AutClass::MobiusLadder | AutClass::Dihedral => 2 * n as u128,
        AutClass::Wreath => wreath_order(n),
        AutClass::EdgeTransitiveSquare(_) => 4 * n as u128,
    })
}

/// JSON dump of a group: class, order, and generator image arrays.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupDocument {
    pub n: usize,
    pub k: usize,
    pub class: String,
    pub order: String,
    pub generators: Vec<Vec<u16>>,
}

pub fn group_document(n: usize, k: usize) -> Result<GroupDocument, GroupError> {
    let class = classify(n, k)?;
    let group = full_group(n, k)?;
    Ok(GroupDocument {
        n,
        k,
        class: class.to_string(),
        order: group.order().to_string(),
        generators: group
            .generators()
            .iter()
            .map(|p| p.images().to_vec())
            .collect(),
    })
}

/// True when `map` preserves adjacency of `g` (edges map onto edges).
pub fn is_automorphism(g: &CirculantGraph, map: &Permutation) -> bool {
    if map.len() != g.n() {
        return false;
    }
    g.edges()
        .iter()
        .all(|&(u, v)| g.adjacent(map.apply(u), map.apply(v)))
}
