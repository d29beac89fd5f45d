//! Certification of colorings: properness, color preservation, and the
//! distinguishing property against an explicit automorphism group.
//!
//! A coloring is distinguishing when the identity is the only automorphism
//! preserving it. For most classes the full group is small enough to scan;
//! the wreath graphs `C_n(1, n/2-1)` get a structured check on the quotient
//! cycle of twin pairs instead once enumeration would be too large.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::autgroups::{self, classify, AutClass, AutGroup, GroupError};
use crate::constructions::Coloring;
use crate::graph::CirculantGraph;
use crate::perm::Permutation;

/// Full group scans are used up to this order; beyond it the wreath class
/// switches to the structured check (no other class can exceed it).
pub const ENUMERATION_GUARD: u128 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("coloring length {0} does not match vertex count {1}")]
    LengthMismatch(usize, usize),
    #[error("vertex count {0} exceeds the certification limit {max}", max = u16::MAX)]
    TooLarge(usize),
    #[error("wreath check requires even n >= 10 with k = n/2 - 1")]
    NotWreath,
    #[error("group error: {0}")]
    Group(#[from] GroupError),
    #[error("group elements unavailable for scanning")]
    ElementsUnavailable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMethod {
    FullEnumeration,
    WreathStructured,
}

/// Verification outcome. When `distinguishing` is false, `witness` holds a
/// nontrivial color-preserving automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub proper: bool,
    pub distinguishing: bool,
    pub witness: Option<Permutation>,
    pub group_order_checked: u128,
    pub method: CheckMethod,
}

/// True iff adjacent vertices always receive distinct colors.
pub fn is_proper(g: &CirculantGraph, c: &Coloring) -> Result<bool, VerifyError> {
    if c.len() != g.n() {
        return Err(VerifyError::LengthMismatch(c.len(), g.n()));
    }
    Ok(g.edges().iter().all(|&(u, v)| c.color(u) != c.color(v)))
}

/// True iff `c(p(i)) = c(i)` for all vertices.
pub fn preserves(p: &Permutation, c: &Coloring) -> Result<bool, VerifyError> {
    if p.len() != c.len() {
        return Err(VerifyError::LengthMismatch(c.len(), p.len()));
    }
    Ok((0..c.len()).all(|i| c.color(p.apply(i)) == c.color(i)))
}

/// Scans the group for a nontrivial color-preserving element. Elements are
/// stored in ascending lexicographic order, so the first hit is also the
/// lexicographically smallest witness.
pub fn is_distinguishing(
    g: &CirculantGraph,
    c: &Coloring,
    grp: &AutGroup,
) -> Result<Certificate, VerifyError> {
    let proper = is_proper(g, c)?;
    let elements = grp.elements().ok_or(VerifyError::ElementsUnavailable)?;
    for p in elements {
        if p.is_identity() {
            continue;
        }
        if preserves(p, c)? {
            return Ok(Certificate {
                proper,
                distinguishing: false,
                witness: Some(p.clone()),
                group_order_checked: grp.order(),
                method: CheckMethod::FullEnumeration,
            });
        }
    }
    Ok(Certificate {
        proper,
        distinguishing: true,
        witness: None,
        group_order_checked: grp.order(),
        method: CheckMethod::FullEnumeration,
    })
}

/// Structured distinguishing check for the wreath graphs `C_n(1, n/2-1)`:
/// the coloring is distinguishing iff every twin pair `{v_i, v_{i+n/2}}` uses
/// two distinct colors and the cyclic sequence of unordered color pairs has
/// no nontrivial dihedral symmetry. Equivalent to the full scan, but runs in
/// `O(n^2)` regardless of the group order `2^(n/2) * n`.
///
/// On failure the witness is a valid nontrivial preserving automorphism
/// (smallest within the violation family found), not necessarily the
/// lexicographic minimum over the whole group.
pub fn wreath_distinguishing(n: usize, c: &Coloring) -> Result<Certificate, VerifyError> {
    if n < 10 || n % 2 != 0 {
        return Err(VerifyError::NotWreath);
    }
    if c.len() != n {
        return Err(VerifyError::LengthMismatch(c.len(), n));
    }
    let g = CirculantGraph::one_k(n, n / 2 - 1).expect("wreath parameters");
    let proper = is_proper(&g, c)?;
    let m = n / 2;
    let order = autgroups::wreath_order(n);
    let fail = |witness: Permutation| Certificate {
        proper,
        distinguishing: false,
        witness: Some(witness),
        group_order_checked: order,
        method: CheckMethod::WreathStructured,
    };

    let mut witnesses: Vec<Permutation> = Vec::new();
    for i in 0..m {
        if c.color(i) == c.color(i + m) {
            witnesses.push(autgroups::twin_swap(n, i));
        }
    }
    if let Some(w) = witnesses.into_iter().min() {
        return Ok(fail(w));
    }

    // unordered color pair per twin pair
    let pairs: Vec<(u8, u8)> = (0..m)
        .map(|i| {
            let (a, b) = (c.color(i), c.color(i + m));
            (a.min(b), a.max(b))
        })
        .collect();
    let mut lifts: Vec<Permutation> = Vec::new();
    for t in 1..m {
        if (0..m).all(|i| pairs[(i + t) % m] == pairs[i]) {
            lifts.push(lift_quotient_symmetry(c, n, |i| (i + t) % m));
        }
    }
    for a in 0..m {
        if (0..m).all(|i| pairs[(a + m - i) % m] == pairs[i]) {
            lifts.push(lift_quotient_symmetry(c, n, |i| (a + m - i) % m));
        }
    }
    if let Some(w) = lifts.into_iter().min() {
        return Ok(fail(w));
    }
    Ok(Certificate {
        proper,
        distinguishing: true,
        witness: None,
        group_order_checked: order,
        method: CheckMethod::WreathStructured,
    })
}

/// Lifts a pair-index symmetry to the vertex map that matches colors within
/// each twin pair. With all twin pairs bicolored the lift is unique.
fn lift_quotient_symmetry(c: &Coloring, n: usize, sigma: impl Fn(usize) -> usize) -> Permutation {
    let m = n / 2;
    let mut images = vec![0u16; n];
    for i in 0..m {
        let j = sigma(i);
        let (low, high) = if c.color(j) == c.color(i) {
            (j, j + m)
        } else {
            (j + m, j)
        };
        images[i] = low as u16;
        images[i + m] = high as u16;
    }
    Permutation::new(images).expect("lift of a pair bijection")
}

/// True iff the sequence reads the same in both directions.
pub fn is_palindrome(seq: &[u8]) -> bool {
    seq.iter().eq(seq.iter().rev())
}

/// Full certificate for a coloring of `C_n(1,k)`: properness plus the
/// distinguishing check against the class's automorphism group, switching to
/// the structured wreath check above [`ENUMERATION_GUARD`].
pub fn certify(n: usize, k: usize, c: &Coloring) -> Result<Certificate, VerifyError> {
    if n > u16::MAX as usize {
        return Err(VerifyError::TooLarge(n));
    }
    let class = classify(n, k)?;
    if class == AutClass::Wreath && autgroups::aut_order(n, k)? > ENUMERATION_GUARD {
        return wreath_distinguishing(n, c);
    }
    let g = CirculantGraph::one_k(n, k).expect("canonical parameters");
    let grp = autgroups::full_group(n, k)?;
    is_distinguishing(&g, c, &grp)
}
