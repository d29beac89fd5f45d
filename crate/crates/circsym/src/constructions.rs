//! Optimal distinguishing proper colorings for every canonical `C_n(1,k)`.
//!
//! Each family of parameters has its own construction: explicit tables for
//! the sporadic graphs, block layouts for the dihedral cases (split by the
//! parities of `n` and `k` and by `q = n div k`), a color-pair walk for the
//! wreath graphs, and a recolor-two-vertices scheme on top of a proper
//! 2-coloring when the graph is bipartite. [`construct`] dispatches on the
//! parameters and refuses to return a coloring that fails its certificate.
//!
//! Vertex indexing is 0-based throughout. Block layouts are assembled from
//! named color sequences and length-checked against `n` before use.

use std::fmt;

use thiserror::Error;

use crate::autgroups::{classify, AutClass, GroupError};

use crate::exact_search::{self, SearchBudget};
use crate::gcd;
use crate::graph::CirculantGraph;
use crate::verification::{self, Certificate, VerifyError};

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("(n, k) = ({n}, {k}) is not canonical: need n >= 3 and 1 <= k <= n/2")]
    NonCanonical { n: usize, k: usize },
    #[error("parameters ({n}, {k}) are outside this construction's case")]
    WrongCase { n: usize, k: usize },
    #[error("no integer b with 1 < b < n/2, b != k, gcd(b, n) = 1 exists for n = {0}")]
    NoValidB(usize),
    #[error("vertices v_0 and v_{0} are adjacent; recoloring would break properness")]
    RecolorAdjacent(usize),
    #[error("b = {b} is not coprime to n = {n}")]
    RecolorNotCoprime { n: usize, b: usize },
    #[error("coloring has {got} entries, expected {want}")]
    BadColoringLength { got: usize, want: usize },
    #[error("color {0} outside palette 1..={1}")]
    ColorOutsidePalette(u8, u8),
    #[error("block layout for ({n}, {k}) produced {got} colors, expected {want}")]
    LayoutLengthMismatch {
        n: usize,
        k: usize,
        got: usize,
        want: usize,
    },
    #[error("constructed coloring for ({n}, {k}) failed certification")]
    CertificationFailed {
        n: usize,
        k: usize,
        certificate: Box<Certificate>,
    },
    #[error("group error: {0}")]
    Group(#[from] GroupError),
    #[error("verification error: {0}")]
    Verify(#[from] VerifyError),
    #[error("search error: {0}")]
    Search(#[from] exact_search::SearchError),
}

/// A vertex coloring: one 1-based color index per vertex plus the palette
/// size (number of colors allowed).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u8>,
    palette: u8,
}

impl Coloring {
    pub fn new(colors: Vec<u8>, palette: u8) -> Result<Self, BuildError> {
        for &c in &colors {
            if c == 0 || c > palette {
                return Err(BuildError::ColorOutsidePalette(c, palette));
            }
        }
        Ok(Coloring { colors, palette })
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn palette(&self) -> u8 {
        self.palette
    }

    pub fn color(&self, v: usize) -> u8 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    /// The same coloring carried through the vertex relabeling
    /// `v_i -> v_{p*i}`: new color of `v_i` is the old color of `v_{p*i}`.
    /// Requires `gcd(p, n) = 1`, otherwise the relabeling is not a bijection.
    pub fn pull_back(&self, p: usize) -> Coloring {
        let n = self.colors.len();
        debug_assert_eq!(gcd(p as u64 % n as u64, n as u64), 1);
        Coloring {
            colors: (0..n).map(|i| self.colors[(i * p) % n]).collect(),
            palette: self.palette,
        }
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The distinguishing chromatic number of `C_n(1,k)`, from the closed-form
/// classification (sporadic values first, then the parameter families).
pub fn chi_d_target(n: usize, k: usize) -> Result<u8, BuildError> {
    if n < 3 || k == 0 || k > n / 2 {
        return Err(BuildError::NonCanonical { n, k });
    }
    Ok(match (n, k) {
        (4, 2) | (5, 2) | (6, 2) | (6, 3) | (8, 3) => n as u8, // complete multipartite
        (10, 3) => 5,
        (15, 4) | (13, 5) => 4,
        _ if k == 1 => {
            if n == 4 || n == 6 {
                4
            } else {
                3
            }
        }
        _ if 2 * k == n => 3,                   // Moebius ladder, n >= 8 here
        _ if n % 2 == 0 && k == n / 2 - 1 => 5, // wreath, n >= 10 here
        _ if k == 2 || (n % 2 == 1 && 2 * k + 1 == n) => 4,
        _ => 3,
    })
}

// ---------------------------------------------------------------------------
// block-layout machinery

/// A named sequence of colors occupying consecutively indexed vertices.
#[derive(Debug, Clone)]
pub struct Block {
    pub name: &'static str,
    pub seq: Vec<u8>,
}

impl Block {
    fn new(name: &'static str, seq: Vec<u8>) -> Self {
        Block { name, seq }
    }
}

/// `len` colors alternating `a, b, a, b, ...`.
fn alt(a: u8, b: u8, len: usize) -> Vec<u8> {
    (0..len).map(|i| if i % 2 == 0 { a } else { b }).collect()
}

/// One row of a block layout; the blocks must fill the stated width.
struct Row {
    width: usize,
    blocks: Vec<Block>,
}

impl Row {
    fn new(width: usize, blocks: Vec<Block>) -> Self {
        Row { width, blocks }
    }
}

/// Concatenates the rows into a length-`n` color array, checking every row
/// against its declared width first.
fn assemble_rows(n: usize, k: usize, rows: &[Row]) -> Result<Vec<u8>, BuildError> {
    let mut out = Vec::with_capacity(n);
    for row in rows {
        let got: usize = row.blocks.iter().map(|b| b.seq.len()).sum();
        if got != row.width {
            return Err(BuildError::LayoutLengthMismatch {
                n,
                k,
                got,
                want: row.width,
            });
        }
        out.extend(row.blocks.iter().flat_map(|b| b.seq.iter().copied()));
    }
    if out.len() != n {
        return Err(BuildError::LayoutLengthMismatch {
            n,
            k,
            got: out.len(),
            want: n,
        });
    }
    Ok(out)
}

/// `B1 = (1,2,3,2,3,...,2,3,1)` and its color-shifted siblings: first and
/// last entry equal to the block's color, alternating interior. `len` >= 2.
fn boundary_block(name: &'static str, color: u8, len: usize) -> Block {
    let mut seq = Vec::with_capacity(len);
    seq.push(color);
    for i in 0..len.saturating_sub(2) {
        // interior cycles through the other two colors starting just above `color`
        let step = if i % 2 == 0 { 1 } else { 2 };
        seq.push((color - 1 + step) % 3 + 1);
    }
    seq.push(color);
    Block::new(name, seq)
}

// ---------------------------------------------------------------------------
// sporadic tables

/// The unique-up-to-names 5-coloring of `C_10(1,3)`.
pub fn construct_c10_1_3() -> Coloring {
    Coloring::new(vec![1, 4, 2, 5, 2, 1, 3, 4, 3, 5], 5).expect("static table")
}

/// `C_13(1,5)`: the pattern (1,2,3) repeated on twelve vertices, color 4 on
/// the last one.
pub fn construct_c13_1_5() -> Coloring {
    let mut colors: Vec<u8> = (0..12u8).map(|i| i % 3 + 1).collect();
    colors.push(4);
    Coloring::new(colors, 4).expect("static table")
}

/// `C_15(1,4)`: the pattern (1,2,3) repeated, then `v_0` and `v_b` recolored
/// with the new color 4, where `b = find_b(15, 4) = 2`.
pub fn construct_c15_1_4() -> Coloring {
    let base: Vec<u8> = (0..15u8).map(|i| i % 3 + 1).collect();
    let coloring = Coloring::new(base, 3).expect("repeating pattern");
    let b = find_b(15, 4).expect("b = 2 qualifies");
    plus_one_recolor(15, 4, &coloring, b).expect("v_0 and v_2 are nonadjacent")
}

/// All-distinct coloring for the complete multipartite cases; with every
/// vertex uniquely colored, only the identity preserves the coloring.
fn construct_all_distinct(n: usize) -> Coloring {
    Coloring::new((1..=n as u8).collect(), n as u8).expect("distinct colors")
}

// ---------------------------------------------------------------------------
// bipartite cases: one new color on two vertices

/// The smallest `b` with `1 < b < n/2`, `b != k`, `gcd(b, n) = 1`.
pub fn find_b(n: usize, k: usize) -> Result<usize, BuildError> {
    (2..n.div_ceil(2))
        .find(|&b| b != k && gcd(b as u64, n as u64) == 1)
        .ok_or(BuildError::NoValidB(n))
}

/// Recolors `v_0` and `v_b` with the previously unused color `palette + 1`.
/// Properness is kept because the new color is fresh; the recolored pair
/// breaks every symmetry exchanging step-1 and step-k edges.
pub fn plus_one_recolor(
    n: usize,
    k: usize,
    c: &Coloring,
    b: usize,
) -> Result<Coloring, BuildError> {
    if c.len() != n {
        return Err(BuildError::BadColoringLength {
            got: c.len(),
            want: n,
        });
    }
    if b <= 1 || 2 * b >= n {
        return Err(BuildError::WrongCase { n, k });
    }
    if gcd(b as u64, n as u64) != 1 {
        return Err(BuildError::RecolorNotCoprime { n, b });
    }
    if b == k || b == n - 1 || b == n - k {
        return Err(BuildError::RecolorAdjacent(b));
    }
    let palette = c.palette() + 1;
    let mut colors = c.colors().to_vec();
    colors[0] = palette;
    colors[b] = palette;
    Coloring::new(colors, palette)
}

/// `n` even, `k` odd, `k < n/2 - 1`, `(n,k) != (10,3)`: proper 2-coloring by
/// index parity, then the fresh color 3 on `v_0` and `v_b`.
pub fn construct_even_odd(n: usize, k: usize) -> Result<Coloring, BuildError> {
    if n % 2 != 0 || k % 2 == 0 || k <= 1 || k >= n / 2 - 1 || (n, k) == (10, 3) {
        return Err(BuildError::WrongCase { n, k });
    }
    let two: Vec<u8> = (0..n).map(|i| if i % 2 == 0 { 1 } else { 2 }).collect();
    let base = Coloring::new(two, 2).expect("parity coloring");
    let b = find_b(n, k)?;
    plus_one_recolor(n, k, &base, b)
}

// ---------------------------------------------------------------------------
// cycles and Moebius ladders

/// Distinguishing coloring of the cycle `C_n`. Palette 3 except for
/// `n in {4, 6}` where 4 colors are needed. Found by bounded search seeded
/// with explicit patterns, then certified.
pub fn construct_cycle(n: usize) -> Result<Coloring, BuildError> {
    if n < 3 {
        return Err(BuildError::WrongCase { n, k: 1 });
    }
    let palette: u8 = if n == 4 || n == 6 { 4 } else { 3 };
    let g = CirculantGraph::new(n, &[1]).expect("cycle");

    if n >= 8 {
        // alternating 1,2 with sparse 3s breaking rotations and reflections
        let mut colors: Vec<u8> = (0..n).map(|i| if i % 2 == 0 { 1 } else { 2 }).collect();
        colors[2] = 3;
        colors[5] = 3;
        if n % 2 == 1 {
            colors[n - 1] = 3;
        }
        if let Ok(c) = Coloring::new(colors, palette) {
            let cert = verification::certify(n, 1, &c)?;
            if cert.proper && cert.distinguishing {
                return Ok(c);
            }
        }
    }
    // fall back to the exhaustive search oracle: first certified coloring in
    // canonical enumeration order
    let grp = crate::autgroups::dihedral_group(n);
    let budget = SearchBudget {
        max_n: n,
        ..SearchBudget::default()
    };
    match exact_search::distinguishing_exists(&g, palette, &grp, &budget)? {
        Some(c) => Ok(c),
        None => Err(BuildError::WrongCase { n, k: 1 }),
    }
}

/// Distinguishing 3-coloring of the Moebius ladder `C_n(1, n/2)`, `n >= 8`;
/// the two 4- and 6-vertex ladders are complete multipartite and get
/// all-distinct colors.
pub fn construct_mobius(n: usize) -> Result<Coloring, BuildError> {
    if n < 4 || n % 2 != 0 {
        return Err(BuildError::WrongCase { n, k: n / 2 });
    }
    if n == 4 || n == 6 {
        return Ok(construct_all_distinct(n));
    }
    let m = n / 2;
    let colors = if n % 4 == 0 {
        // row v_0..v_{m-1}: 1,2,...; row v_m..v_{n-1}: 3,1,2,...,3
        let mut colors = alt(1, 2, m);
        colors.push(3);
        colors.extend(alt(1, 2, m - 2));
        colors.push(3);
        colors
    } else {
        // bipartite: parity coloring with two nonadjacent vertices moved to 3
        let mut colors: Vec<u8> = (0..n).map(|i| if i % 2 == 0 { 1 } else { 2 }).collect();
        colors[0] = 3;
        colors[m + 2] = 3;
        colors
    };
    Coloring::new(colors, 3)
}

// ---------------------------------------------------------------------------
// wreath graphs

/// Distinguishing 5-coloring of `C_n(1, n/2-1)`, `n >= 10` even: twin pairs
/// are colored along a closed walk in the pairs-of-5-colors graph
/// (12,34,15,23,45,... for odd `n/2`; 12,34,25,14,23,45,... for even), with
/// the trailing two pairs repeated as needed. The first color of each pair
/// goes to the lower vertex index.
pub fn construct_wreath(n: usize) -> Result<Coloring, BuildError> {
    if n < 10 || n % 2 != 0 {
        return Err(BuildError::WrongCase { n, k: n / 2 - 1 });
    }
    let m = n / 2;
    let mut walk: Vec<(u8, u8)> = if m % 2 == 1 {
        vec![(1, 2), (3, 4), (1, 5)]
    } else {
        vec![(1, 2), (3, 4), (2, 5), (1, 4)]
    };
    while walk.len() < m {
        walk.push((2, 3));
        walk.push((4, 5));
    }
    debug_assert_eq!(walk.len(), m);
    let mut colors = vec![0u8; n];
    for (i, &(first, second)) in walk.iter().enumerate() {
        colors[i] = first;
        colors[i + m] = second;
    }
    Coloring::new(colors, 5)
}

// ---------------------------------------------------------------------------
// k = 2 and its mirror k = (n-1)/2

/// `C_n(1,2)`, `n >= 7`: color 4 on `v_0` (and on `v_{n-3}` when
/// `n ≡ 2 mod 3`), remaining vertices greedily colored from {1,2,3} in index
/// order, constrained by already-colored neighbors only.
pub fn construct_k2(n: usize) -> Result<Coloring, BuildError> {
    if n < 7 {
        return Err(BuildError::WrongCase { n, k: 2 });
    }
    let g = CirculantGraph::one_k(n, 2).expect("n >= 7");
    let mut colors = vec![0u8; n];
    colors[0] = 4;
    if n % 3 == 2 {
        colors[n - 3] = 4;
    }
    for i in 1..n {
        if colors[i] != 0 {
            continue;
        }
        let mut used = [false; 4];
        for w in g.neighbors(i) {
            let c = colors[w];
            if (1..=3).contains(&c) {
                used[c as usize] = true;
            }
        }
        let c = (1..=3u8)
            .find(|&c| !used[c as usize])
            .ok_or(BuildError::WrongCase { n, k: 2 })?;
        colors[i] = c;
    }
    Coloring::new(colors, 4)
}

// ---------------------------------------------------------------------------
// dihedral block layouts

/// `n` even, `k` even, `2 < k < n/2`: 3-coloring by block rows.
pub fn construct_even_even(n: usize, k: usize) -> Result<Coloring, BuildError> {
    if n % 2 != 0 || k % 2 != 0 || k <= 2 || 2 * k >= n {
        return Err(BuildError::WrongCase { n, k });
    }
    if (n, k) == (12, 4) {
        // the only parameters where the q >= 3 layout degenerates: with
        // k = 4, q = 3, r = 0 the three blocks chain into the rotation-
        // invariant pattern (1,2,3) repeated. Frozen from the exhaustive
        // oracle instead (first certified coloring in canonical order).
        return Coloring::new(vec![1, 2, 1, 2, 3, 1, 3, 1, 2, 3, 2, 3], 3);
    }
    let q = n / k;
    let r = n % k;
    let mut rows: Vec<Row> = Vec::new();
    if q >= 3 {
        let b1 = || boundary_block("B1", 1, k);
        let b2 = || boundary_block("B2", 2, k);
        for j in 1..q {
            rows.push(Row::new(k, vec![if j % 2 == 1 { b1() } else { b2() }]));
        }
        rows.push(Row::new(k, vec![boundary_block("B3", 3, k)]));
        if r > 0 {
            // partial B2 with the closing vertex moved to color 3
            let mut tail = vec![2u8];
            tail.extend(alt(3, 1, r - 2));
            tail.push(3);
            rows.push(Row::new(r, vec![Block::new("B'", tail)]));
        }
    } else {
        // q = 2: rows E1, E2 of length k and M of length r
        if r < 2 {
            return Err(BuildError::WrongCase { n, k });
        }
        rows.push(Row::new(k, vec![Block::new("E1", alt(1, 2, k))]));
        rows.push(Row::new(k, vec![Block::new("E2", alt(3, 1, k))]));
        rows.push(Row::new(r, vec![Block::new("M", alt(2, 3, r))]));
    }
    Coloring::new(assemble_rows(n, k, &rows)?, 3)
}

/// `n` odd, `k` odd, `2 < k < (n-1)/2`, excluding `(13,5)`.
pub fn construct_odd_odd(n: usize, k: usize) -> Result<Coloring, BuildError> {
    if n % 2 == 0 || k % 2 == 0 || k <= 2 || 2 * k + 1 >= n || (n, k) == (13, 5) {
        return Err(BuildError::WrongCase { n, k });
    }
    let r = n % k;
    if n >= 3 * k {
        // parity coloring in 1-based labels: odd indices get 1 up to v_{n-k}
        // and 2 beyond; even indices get 2 up to v_k and 3 beyond
        let colors = (1..=n)
            .map(|i| {
                if i % 2 == 1 {
                    if i <= n - k {
                        1
                    } else {
                        2
                    }
                } else if i <= k {
                    2
                } else {
                    3
                }
            })
            .collect();
        return Coloring::new(colors, 3);
    }
    let rows = if 2 * r <= k - 1 {
        odd_odd_small_r(k, r)
    } else {
        odd_odd_large_r(k, r)
    };
    let mut colors = assemble_rows(n, k, &rows)?;
    if 2 * r >= k + 1 && 2 * r - k == 1 {
        // shifted variant: the last two vertices change to keep the layout proper
        colors[n - 2] = 1;
        colors[n - 1] = 3;
    }
    Coloring::new(colors, 3)
}

/// The five row-defining sequences `(R1, R2, R3, L1, L2)` of a small-`r`
/// block table.
type RowTable = (Vec<u8>, Vec<u8>, Vec<u8>, Vec<u8>, Vec<u8>);

/// Case `n = 2k + r` with `2r <= k - 1`: two length-`k` rows of `p` blocks
/// of length `r` plus a length-`l` remainder block (`k = p*r + l`), then one
/// length-`r` row.
fn odd_odd_small_r(k: usize, r: usize) -> Vec<Row> {
    let p = k / r;
    let l = k % r;
    let main1 = || {
        let mut s = alt(3, 2, r - 1);
        s.push(1);
        s
    };
    let main2 = || {
        let mut s = alt(2, 1, r - 1);
        s.push(3);
        s
    };
    let (r1, r2, r3, l1, l2): RowTable = if l == 0 {
        let mut r2 = vec![2u8];
        r2.extend(alt(1, 3, r - 1));
        let mut r3 = vec![1u8];
        r3.extend(alt(3, 2, r - 1));
        (alt(1, 3, r), r2, r3, vec![], vec![])
    } else if l == 1 {
        (main1(), main2(), alt(1, 2, r), vec![3], vec![2])
    } else if l % 2 == 1 {
        let mut l1 = alt(2, 1, l - 1);
        l1.push(3);
        (main1(), main2(), main1(), l1, alt(1, 3, l))
    } else {
        (
            alt(1, 3, r),
            alt(3, 2, r),
            alt(2, 1, r),
            alt(3, 1, l),
            alt(2, 3, l),
        )
    };
    let mut row1 = vec![Block::new("R1", r1)];
    let mut row2 = vec![Block::new("R2", r2)];
    for _ in 1..p {
        row1.push(Block::new("main1", main1()));
        row2.push(Block::new("main2", main2()));
    }
    if !l1.is_empty() {
        row1.push(Block::new("L1", l1));
    }
    if !l2.is_empty() {
        row2.push(Block::new("L2", l2));
    }
    vec![
        Row::new(k, row1),
        Row::new(k, row2),
        Row::new(r, vec![Block::new("R3", r3)]),
    ]
}

/// Case `n = 2k + r` with `2r >= k + 1`: segments across two length-`k`
/// rows and one length-`r` row, widths alternating between `2r - k` and
/// either `2k - 3r` or `k - r`.
fn odd_odd_large_r(k: usize, r: usize) -> Vec<Row> {
    let a = 2 * r - k;
    if a > k - r {
        let w = k - r;
        vec![
            Row::new(
                k,
                vec![
                    Block::new("row1a", alt(2, 1, w)),
                    Block::new("row1b", alt(3, 2, a)),
                    Block::new("row1c", alt(2, 1, w)),
                ],
            ),
            Row::new(
                k,
                vec![
                    Block::new("row2a", prefixed(3, alt(2, 1, w - 1))),
                    Block::new("row2b", alt(1, 3, a)),
                    Block::new("row2c", prefixed(3, alt(2, 1, w - 1))),
                ],
            ),
            Row::new(
                r,
                vec![
                    Block::new("row3a", prefixed(1, alt(3, 2, w - 1))),
                    Block::new("row3b", suffixed(alt(2, 1, a - 1), 3)),
                ],
            ),
        ]
    } else {
        let b = 2 * k - 3 * r;
        vec![
            Row::new(
                k,
                vec![
                    Block::new("row1a", alt(2, 1, a)),
                    Block::new("row1b", alt(1, 2, b)),
                    Block::new("row1c", alt(3, 1, a)),
                    Block::new("row1d", alt(2, 1, b)),
                    Block::new("row1e", alt(1, 2, a)),
                ],
            ),
            Row::new(
                k,
                vec![
                    Block::new("row2a", prefixed(3, alt(2, 1, a - 1))),
                    Block::new("row2b", alt(2, 1, b)),
                    Block::new("row2c", alt(1, 3, a)),
                    Block::new("row2d", prefixed(3, alt(2, 1, b - 1))),
                    Block::new("row2e", alt(2, 1, a)),
                ],
            ),
            Row::new(
                r,
                vec![
                    Block::new("row3a", prefixed(1, alt(3, 2, a - 1))),
                    Block::new("row3b", alt(3, 2, b)),
                    Block::new("row3c", prefixed(2, alt(1, 3, a - 1))),
                ],
            ),
        ]
    }
}

fn prefixed(head: u8, tail: Vec<u8>) -> Vec<u8> {
    let mut s = vec![head];
    s.extend(tail);
    s
}

fn suffixed(mut seq: Vec<u8>, last: u8) -> Vec<u8> {
    seq.push(last);
    seq
}

/// `n` odd, `k` even, `2 < k < (n-1)/2`, excluding `(15,4)`.
pub fn construct_odd_even(n: usize, k: usize) -> Result<Coloring, BuildError> {
    if n % 2 == 0 || k % 2 != 0 || k <= 2 || 2 * k + 1 >= n || (n, k) == (15, 4) {
        return Err(BuildError::WrongCase { n, k });
    }
    let q = n / k;
    let r = n % k;
    if q >= 3 {
        // rows B4, then B2/B3 alternating, then B1, then the partial row B'
        let mut rows = vec![Row::new(k, vec![Block::new("B4", alt(3, 1, k))])];
        for j in 0..q - 2 {
            rows.push(Row::new(
                k,
                vec![if j % 2 == 0 {
                    boundary_block("B2", 2, k)
                } else {
                    boundary_block("B3", 3, k)
                }],
            ));
        }
        rows.push(Row::new(k, vec![boundary_block("B1", 1, k)]));
        if r > 0 {
            rows.push(Row::new(r, vec![Block::new("B'", alt(2, 1, r))]));
        }
        return Coloring::new(assemble_rows(n, k, &rows)?, 3);
    }
    if 2 * r <= k {
        // k = m*r + l with m >= 2
        let m = k / r;
        let l = k % r;
        let main1 = || suffixed(alt(3, 2, r - 1), 1);
        let main2 = || suffixed(alt(2, 1, r - 1), 3);
        let (r1, r2, row3, l1, l2): RowTable = if l == 0 {
            (
                alt(1, 3, r),
                prefixed(2, alt(1, 3, r - 1)),
                prefixed(1, alt(3, 2, r - 1)),
                vec![],
                vec![],
            )
        } else if l == 1 {
            (main1(), main2(), alt(1, 2, r), vec![3], vec![2])
        } else if l % 2 == 1 {
            (main1(), main2(), alt(1, 2, r), alt(3, 1, l), alt(2, 3, l))
        } else {
            (
                alt(1, 3, r),
                alt(3, 2, r),
                alt(2, 1, r),
                alt(3, 1, l),
                alt(2, 3, l),
            )
        };
        let mut row1 = vec![Block::new("A", r1)];
        let mut row2 = vec![Block::new("C", r2)];
        for _ in 1..m {
            row1.push(Block::new("B", main1()));
            row2.push(Block::new("D", main2()));
        }
        if !l1.is_empty() {
            row1.push(Block::new("E1", l1));
        }
        if !l2.is_empty() {
            row2.push(Block::new("E2", l2));
        }
        let rows = vec![
            Row::new(k, row1),
            Row::new(k, row2),
            Row::new(r, vec![Block::new("E", row3)]),
        ];
        return Coloring::new(assemble_rows(n, k, &rows)?, 3);
    }
    // r > k/2. The three-segment layout needs k - r >= 3; the boundary
    // family n = 3k - 1 reduces to C_n(1,3) via v_i -> v_{3i} instead.
    if k - r == 1 {
        let g = CirculantGraph::one_k(n, k).expect("canonical");
        debug_assert_eq!(g.multiply(3).expect("n = 3k - 1").diffs(), &[1, 3]);
        let target = construct_odd_odd(n, 3)?;
        return Ok(target.pull_back(3));
    }
    let w = k - r;
    let a = 2 * r - k;
    let rows = vec![
        Row::new(
            k,
            vec![
                Block::new("row1a", suffixed(alt(1, 2, w - 1), 3)),
                Block::new("row1b", alt(1, 3, a)),
                Block::new("row1c", alt(1, 2, w)),
            ],
        ),
        Row::new(
            k,
            vec![
                Block::new("row2a", alt(2, 3, w)),
                Block::new("row2b", alt(3, 1, a)),
                Block::new("row2c", prefixed(3, alt(1, 2, w - 1))),
            ],
        ),
        Row::new(
            r,
            vec![
                Block::new("row3a", alt(3, 1, w)),
                Block::new("row3b", alt(1, 3, a)),
            ],
        ),
    ];
    Coloring::new(assemble_rows(n, k, &rows)?, 3)
}

// ---------------------------------------------------------------------------
// edge-transitive graphs with k^2 = +/-1 (mod n)

/// `k^2 ≡ ±1 (mod n)`, `k > 3`, excluding `(13,5)` and `(15,4)`: the matching
/// dihedral-case coloring, adjusted so that some edge is fixed by every
/// color-preserving map. The adjustments recolor at most two vertices and
/// keep the coloring proper.
///
/// The sporadic pairs `(13,5)` and `(15,4)` cannot be 3-colored this way and
/// fall through to their dedicated tables.
///
/// One subfamily is underdetermined: for odd `k` with `n = 2k + r`,
/// `k = 2r + l`, `l > 1` odd, the standard switch leaves a second vertex
/// with the same colored neighborhood, and an affine involution carrying
/// one to the other survives (seen at `(45,19)`). There the caller's
/// certificate-guided completion supplies one further recolor.
pub fn construct_edge_transitive(n: usize, k: usize) -> Result<Coloring, BuildError> {
    match classify(n, k)? {
        AutClass::EdgeTransitiveSquare(_) => {}
        _ => return Err(BuildError::WrongCase { n, k }),
    }
    // the two sporadic members need a fourth color; hand them to their tables
    if (n, k) == (13, 5) {
        return Ok(construct_c13_1_5());
    }
    if (n, k) == (15, 4) {
        return Ok(construct_c15_1_4());
    }
    if n % 2 == 0 {
        // bipartite case: the two-vertices-recolored-with-a-new-color scheme
        // already breaks the edge-swapping maps
        return construct_even_odd(n, k);
    }
    let q = n / k;
    let r = n % k;
    if k % 2 == 1 {
        let mut c = construct_odd_odd(n, k)?;
        if q == 2 {
            if 2 * r >= k + 1 {
                let a = 2 * r - k;
                if a > 1 && a < k - r {
                    // v_{k-r+2} (1-based) is the unique 1 with all neighbors 3
                    c = recolor(c, k - r + 1, 2)?;
                }
            } else {
                let l = k % r;
                if l == 0 {
                    c = recolor(c, 1, 2)?;
                } else if l % 2 == 1 {
                    c = recolor(c, k + r + 1, 3)?;
                }
            }
        }
        return Ok(c);
    }
    let mut c = construct_odd_even(n, k)?;
    if q >= 3 {
        if q % 2 == 0 {
            if r < k - 1 {
                c = recolor(c, 0, 1)?;
                c = recolor(c, 1, 2)?;
            } else {
                // keep v_{qk+1} unique among vertices colored 2 with all
                // neighbors colored 1 by moving its lookalikes to 3
                let g = CirculantGraph::one_k(n, k).expect("canonical");
                let keep = q * k; // 0-based index of 1-based v_{qk+1}
                let lookalikes: Vec<usize> = (0..n)
                    .filter(|&v| {
                        v != keep
                            && c.color(v) == 2
                            && g.neighbors(v).iter().all(|&w| c.color(w) == 1)
                    })
                    .collect();
                for v in lookalikes {
                    c = recolor(c, v, 3)?;
                }
            }
        } else if q == 3 {
            c = recolor(c, k + 2, 2)?;
        }
    } else if 2 * r <= k {
        let l = k % r;
        if l == 0 {
            c = recolor(c, 1, 2)?;
        } else if l % 2 == 1 {
            c = recolor(c, k + r + 1, 3)?;
        }
    }
    Ok(c)
}

fn recolor(c: Coloring, v: usize, color: u8) -> Result<Coloring, BuildError> {
    let mut colors = c.colors().to_vec();
    colors[v] = color;
    Coloring::new(colors, c.palette())
}

// ---------------------------------------------------------------------------
// dispatcher

/// Builds a distinguishing proper coloring of `C_n(1,k)` with exactly
/// `chi_d_target(n, k)` colors and certifies it. Never returns an
/// uncertified coloring.
pub fn construct(n: usize, k: usize) -> Result<Coloring, BuildError> {
    Ok(construct_certified(n, k)?.0)
}

/// [`construct`] plus the certificate that was computed for the result.
pub fn construct_certified(n: usize, k: usize) -> Result<(Coloring, Certificate), BuildError> {
    if n < 3 || k == 0 || k > n / 2 {
        return Err(BuildError::NonCanonical { n, k });
    }
    let mut repairable = false;
    let coloring = match (n, k) {
        (4, 2) | (5, 2) | (6, 2) | (6, 3) | (8, 3) => construct_all_distinct(n),
        (10, 3) => construct_c10_1_3(),
        (13, 5) => construct_c13_1_5(),
        (15, 4) => construct_c15_1_4(),
        _ if k == 1 => construct_cycle(n)?,
        _ if 2 * k == n => construct_mobius(n)?,
        _ if n % 2 == 0 && k == n / 2 - 1 => construct_wreath(n)?,
        _ if k == 2 => construct_k2(n)?,
        _ if n % 2 == 1 && 2 * k + 1 == n => {
            // C_n(1,(n-1)/2) is C_n(1,2) under v_i -> v_{2i}
            let g = CirculantGraph::one_k(n, k).expect("canonical");
            debug_assert_eq!(g.multiply(2).expect("odd n").diffs(), &[1, 2]);
            construct(n, 2)?.pull_back(2)
        }
        _ if n % 2 == 0 && k % 2 == 1 => {
            repairable = true;
            construct_even_odd(n, k)?
        }
        _ => {
            repairable = true;
            match classify(n, k)? {
                AutClass::EdgeTransitiveSquare(_) => construct_edge_transitive(n, k)?,
                _ if n % 2 == 0 => construct_even_even(n, k)?,
                _ if k % 2 == 1 => construct_odd_odd(n, k)?,
                _ => construct_odd_even(n, k)?,
            }
        }
    };
    debug_assert_eq!(coloring.palette(), chi_d_target(n, k)?);
    let certificate = verification::certify(n, k, &coloring)?;
    if certificate.proper && certificate.distinguishing {
        return Ok((coloring, certificate));
    }
    if repairable {
        if let Some(fixed) = repair(n, k, &coloring)? {
            return Ok(fixed);
        }
    }
    Err(BuildError::CertificationFailed {
        n,
        k,
        certificate: Box::new(certificate),
    })
}

/// Last-resort local repair: try recoloring one vertex (then two) within the
/// palette until the certificate passes. Every repair is logged on stderr.
fn repair(n: usize, k: usize, c: &Coloring) -> Result<Option<(Coloring, Certificate)>, BuildError> {
    let palette = c.palette();
    let try_candidate =
        |cand: Coloring, note: String| -> Result<Option<(Coloring, Certificate)>, BuildError> {
            let cert = verification::certify(n, k, &cand)?;
            if cert.proper && cert.distinguishing {
                eprintln!("circsym: repair applied for C_{n}(1,{k}): {note}");
                Ok(Some((cand, cert)))
            } else {
                Ok(None)
            }
        };
    for v in 0..n {
        for color in 1..=palette {
            if color == c.color(v) {
                continue;
            }
            let cand = recolor(c.clone(), v, color)?;
            if let Some(hit) = try_candidate(cand, format!("v{v} -> {color}"))? {
                return Ok(Some(hit));
            }
        }
    }
    if n > 64 {
        return Ok(None);
    }
    for v in 0..n {
        for w in v + 1..n {
            for cv in 1..=palette {
                for cw in 1..=palette {
                    if cv == c.color(v) && cw == c.color(w) {
                        continue;
                    }
                    let cand = recolor(recolor(c.clone(), v, cv)?, w, cw)?;
                    if let Some(hit) = try_candidate(cand, format!("v{v} -> {cv}, v{w} -> {cw}"))? {
                        return Ok(Some(hit));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_d_target_spot_values() {
        assert_eq!(chi_d_target(10, 3).unwrap(), 5);
        assert_eq!(chi_d_target(6, 3).unwrap(), 6);
        assert_eq!(chi_d_target(100, 49).unwrap(), 5);
        assert_eq!(chi_d_target(101, 7).unwrap(), 3);
        assert_eq!(chi_d_target(4, 1).unwrap(), 4);
        assert_eq!(chi_d_target(7, 1).unwrap(), 3);
        assert_eq!(chi_d_target(8, 4).unwrap(), 3);
        assert_eq!(chi_d_target(8, 3).unwrap(), 8);
        assert_eq!(chi_d_target(13, 6).unwrap(), 4);
        assert!(chi_d_target(10, 6).is_err());
    }

    #[test]
    fn complete_multipartite_graphs_get_all_distinct_colors() {
        for (n, k) in [(4usize, 2usize), (5, 2), (6, 2), (6, 3), (8, 3)] {
            let (c, cert) = construct_certified(n, k).unwrap();
            let expected: Vec<u8> = (1..=n as u8).collect();
            assert_eq!(c.colors(), expected.as_slice());
            assert_eq!(c.palette() as usize, n);
            assert!(cert.proper && cert.distinguishing);
        }
    }

    #[test]
    fn sporadic_tables_match_published_values() {
        let c10 = construct_c10_1_3();
        assert_eq!(c10.colors(), &[1, 4, 2, 5, 2, 1, 3, 4, 3, 5]);
        assert_eq!(c10.color(0), 1);
        assert_eq!(c10.color(5), 1);

        let c13 = construct_c13_1_5();
        assert_eq!(c13.colors(), &[1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 4]);
        assert_eq!(c13.color(12), 4);
        assert_eq!(c13.palette(), 4);

        let c15 = construct_c15_1_4();
        assert_eq!(c15.color(0), 4);
        assert_eq!(c15.color(2), 4);
        assert_eq!(c15.palette(), 4);
    }

    #[test]
    fn find_b_picks_smallest_coprime() {
        assert_eq!(find_b(13, 2).unwrap(), 3);
        assert_eq!(find_b(15, 4).unwrap(), 2);
        assert_eq!(find_b(14, 3).unwrap(), 5); // 2 and 4 share a factor, 3 = k
        assert!(find_b(10, 3).is_err());
        assert_eq!(find_b(12, 3).unwrap(), 5);
    }

    #[test]
    fn plus_one_recolor_basics() {
        let base = Coloring::new((0..15u8).map(|i| i % 3 + 1).collect(), 3).unwrap();
        let c = plus_one_recolor(15, 4, &base, 2).unwrap();
        assert_eq!(c.color(0), 4);
        assert_eq!(c.color(2), 4);
        assert_eq!(c.palette(), 4);
        let g = CirculantGraph::one_k(15, 4).unwrap();
        assert!(verification::is_proper(&g, &c).unwrap());

        // gcd violation
        assert!(matches!(
            plus_one_recolor(15, 4, &base, 6),
            Err(BuildError::RecolorNotCoprime { .. })
        ));
        // adjacency violation (b = k)
        assert!(plus_one_recolor(15, 4, &base, 4).is_err());
    }

    #[test]
    fn cycle_colorings() {
        assert_eq!(construct_cycle(3).unwrap().colors(), &[1, 2, 3]);
        assert_eq!(construct_cycle(6).unwrap().palette(), 4);
        for n in [3usize, 4, 5, 6, 7, 9, 12, 45] {
            let (c, cert) = construct_certified(n, 1).unwrap();
            assert!(cert.proper && cert.distinguishing, "cycle n={n}");
            assert_eq!(c.palette(), chi_d_target(n, 1).unwrap());
        }
    }

    #[test]
    fn mobius_tables() {
        assert_eq!(
            construct_mobius(8).unwrap().colors(),
            &[1, 2, 1, 2, 3, 1, 2, 3]
        );
        assert_eq!(
            construct_mobius(10).unwrap().colors(),
            &[3, 2, 1, 2, 1, 2, 1, 3, 1, 2]
        );
        assert_eq!(construct_mobius(6).unwrap().palette(), 6);
        assert!(construct_mobius(7).is_err());
    }

    #[test]
    fn wreath_pair_walks() {
        let c10 = construct_wreath(10).unwrap();
        assert_eq!(c10.colors(), &[1, 3, 1, 2, 4, 2, 4, 5, 3, 5]);
        let c12 = construct_wreath(12).unwrap();
        assert_eq!(c12.colors(), &[1, 3, 2, 1, 2, 4, 2, 4, 5, 4, 3, 5]);
        let c14 = construct_wreath(14).unwrap();
        assert_eq!(c14.colors(), &[1, 3, 1, 2, 4, 2, 4, 2, 4, 5, 3, 5, 3, 5]);
        assert!(construct_wreath(8).is_err());
    }

    #[test]
    fn k2_greedy_colorings() {
        assert_eq!(construct_k2(7).unwrap().colors(), &[4, 1, 2, 3, 1, 2, 3]);
        assert_eq!(construct_k2(8).unwrap().colors(), &[4, 1, 2, 3, 1, 4, 2, 3]);
        assert_eq!(
            construct_k2(9).unwrap().colors(),
            &[4, 1, 2, 3, 1, 2, 3, 1, 2]
        );
    }

    #[test]
    fn layout_cases_produce_certified_colorings() {
        // one representative per construction family / subcase
        let cases: &[(usize, usize)] = &[
            (20, 4),  // even/even q >= 3, r = 0
            (22, 4),  // even/even q >= 3, r = 2
            (22, 6),  // even/even q >= 3, r > 2
            (16, 6),  // even/even q = 2
            (23, 7),  // odd/odd n >= 3k
            (21, 9),  // odd/odd small r, l = 0
            (17, 7),  // odd/odd small r, l = 1
            (31, 13), // odd/odd small r, l > 1 odd
            (37, 17), // odd/odd small r, l > 1 even
            (29, 11), // odd/odd large r, 1 < 2r-k < k-r
            (23, 9),  // odd/odd large r, 2r-k = 1
            (19, 7),  // odd/odd large r, 2r-k > k-r
            (21, 4),  // odd/even q >= 3, q odd
            (25, 8),  // odd/even q = 3
            (25, 6),  // odd/even q >= 3, q even
            (15, 6),  // odd/even small r, l = 0
            (23, 10), // odd/even small r, l = 1
            (41, 18), // odd/even small r, l > 1 odd, m odd
            (19, 8),  // odd/even small r, l = 2 even, m = 2
            (27, 10), // odd/even large r
            (17, 6),  // odd/even n = 3k - 1 (prime), reduced through v_i -> v_{3i}
            (35, 12), // odd/even n = 3k - 1 (composite), same reduction
        ];
        for &(n, k) in cases {
            let (c, cert) = construct_certified(n, k).unwrap();
            assert!(
                cert.proper && cert.distinguishing,
                "({n},{k}) not certified"
            );
            assert_eq!(
                c.palette(),
                chi_d_target(n, k).unwrap(),
                "palette at ({n},{k})"
            );
            // dispatch must hand back the family constructor's output verbatim
            // (no hidden repair)
            let raw = if n % 2 == 0 {
                construct_even_even(n, k).unwrap()
            } else if k % 2 == 1 {
                construct_odd_odd(n, k).unwrap()
            } else {
                construct_odd_even(n, k).unwrap()
            };
            assert_eq!(c, raw, "({n},{k}) was modified after construction");
        }
    }

    #[test]
    fn even_even_layout_matches_hand_expansion() {
        let c = construct_even_even(16, 6).unwrap();
        assert_eq!(
            c.colors(),
            &[1, 2, 1, 2, 1, 2, 3, 1, 3, 1, 3, 1, 2, 3, 2, 3]
        );
        let c = construct_even_even(20, 4).unwrap();
        assert_eq!(
            c.colors(),
            &[1, 2, 3, 1, 2, 3, 1, 2, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3]
        );
    }

    #[test]
    fn even_even_two_row_layout_covers_the_wreath_parameters_too() {
        // k = n/2 - 1 lands outside the dispatcher's dihedral route, but the
        // two-row layout itself still applies and is proper; it only breaks
        // the dihedral symmetries, not the twin swaps.
        let c = construct_even_even(14, 6).unwrap();
        assert_eq!(c.colors(), &[1, 2, 1, 2, 1, 2, 3, 1, 3, 1, 3, 1, 2, 3]);
        let g = CirculantGraph::one_k(14, 6).unwrap();
        assert!(verification::is_proper(&g, &c).unwrap());
        let dihedral = crate::autgroups::dihedral_group(14);
        let cert = verification::is_distinguishing(&g, &c, &dihedral).unwrap();
        assert!(cert.distinguishing);
        // the full wreath group does have a color-preserving twin swap
        let full = verification::certify(14, 6, &c).unwrap();
        assert!(!full.distinguishing);
    }

    #[test]
    fn edge_transitive_adjustments_fix_an_edge() {
        for (n, k) in [(17, 4), (24, 5), (26, 5), (25, 7), (35, 6), (55, 21)] {
            let (c, cert) = construct_certified(n, k).unwrap();
            assert!(cert.proper && cert.distinguishing, "({n},{k})");
            assert_eq!(cert.group_order_checked, 4 * n as u128, "({n},{k})");
            assert_eq!(c.palette(), chi_d_target(n, k).unwrap());
            assert_eq!(
                c,
                construct_edge_transitive(n, k).unwrap(),
                "({n},{k}) repaired"
            );
        }
        // the sporadic members fall through to their dedicated tables
        assert_eq!(
            construct_edge_transitive(13, 5).unwrap(),
            construct_c13_1_5()
        );
        assert_eq!(
            construct_edge_transitive(15, 4).unwrap(),
            construct_c15_1_4()
        );
        assert!(construct_edge_transitive(11, 3).is_err()); // dihedral class
    }

    #[test]
    fn the_one_underdetermined_edge_transitive_pair_completes_deterministically() {
        // (45,19): k = 2r + l with l = 5 odd. The standard switch at
        // v_{k+r+1} leaves the affine involution i -> 9 + 19i color-
        // preserving (it swaps the two look-alike vertices v_26 and v_8 and
        // fixes v_2), so one further recolor is found by the certificate-
        // guided completion: v_4 moves from 3 to 1, pairing with v_40 under
        // that involution and breaking it.
        let (c, cert) = construct_certified(45, 19).unwrap();
        assert!(cert.proper && cert.distinguishing);
        assert_eq!(cert.group_order_checked, 180);
        let mut expected = construct_odd_odd(45, 19).unwrap().colors().to_vec();
        expected[27] = 3; // the standard switch
        expected[4] = 1; // the completion
        assert_eq!(c.colors(), expected.as_slice());
        // exactly two vertices differ from the dihedral-case base
        let base = construct_odd_odd(45, 19).unwrap();
        let diffs = (0..45).filter(|&v| c.color(v) != base.color(v)).count();
        assert_eq!(diffs, 2);
    }

    #[test]
    fn mirror_of_k2_pulls_back_through_the_doubling_map() {
        let (c, cert) = construct_certified(9, 4).unwrap();
        assert!(cert.proper && cert.distinguishing);
        let base = construct(9, 2).unwrap();
        assert_eq!(c, base.pull_back(2));
    }

    #[test]
    fn rotated_distinguishing_colorings_stay_distinguishing() {
        for (n, k) in [(8, 2), (10, 4), (11, 3), (12, 3), (13, 5), (14, 6)] {
            let c = construct(n, k).unwrap();
            for r in 0..n {
                let rotated: Vec<u8> = (0..n).map(|i| c.color((i + r) % n)).collect();
                let rc = Coloring::new(rotated, c.palette()).unwrap();
                let cert = verification::certify(n, k, &rc).unwrap();
                assert!(
                    cert.proper && cert.distinguishing,
                    "rotation by {r} of ({n},{k}) failed"
                );
            }
        }
    }

    #[test]
    fn c15_base_pattern_is_not_a_palindrome_on_the_long_side() {
        // hypothesis behind the two-vertices recoloring at (15,4), b = 2:
        // the segment after v_b must fail the palindrome test
        let base: Vec<u8> = (0..15u8).map(|i| i % 3 + 1).collect();
        let long_side: Vec<u8> = base[3..15].to_vec();
        assert!(!verification::is_palindrome(&long_side));
    }
}
