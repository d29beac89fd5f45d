//! Permutations of `{0..n-1}` stored as image arrays.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("image array of length {0} is not a bijection")]
    NotBijective(usize),
    #[error("permutation degree {0} exceeds the supported maximum {max}", max = u16::MAX)]
    TooLarge(usize),
}

/// A bijection of `{0..n-1}`; the entry at position `i` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Permutation(Vec<u16>);

impl Permutation {
    pub fn new(images: Vec<u16>) -> Result<Self, PermError> {
        if images.len() > u16::MAX as usize + 1 {
            return Err(PermError::TooLarge(images.len()));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if (im as usize) >= n || seen[im as usize] {
                return Err(PermError::NotBijective(n));
            }
            seen[im as usize] = true;
        }
        Ok(Permutation(images))
    }

    fn check_degree(n: usize) {
        assert!(
            n <= u16::MAX as usize + 1,
            "permutation degree {n} exceeds the supported maximum"
        );
    }

    pub fn identity(n: usize) -> Self {
        Self::check_degree(n);
        Permutation((0..n).map(|i| i as u16).collect())
    }

    /// The rotation `i -> i + r (mod n)`.
    pub fn rotation(n: usize, r: usize) -> Self {
        Self::check_degree(n);
        Permutation((0..n).map(|i| ((i + r) % n) as u16).collect())
    }

    /// The reflection `i -> a - i (mod n)`.
    pub fn reflection(n: usize, a: usize) -> Self {
        Self::check_degree(n);
        Permutation((0..n).map(|i| ((a % n + n - i) % n) as u16).collect())
    }

    /// The multiplier map `i -> p * i (mod n)`; a bijection iff `gcd(p, n) = 1`.
    pub fn multiplier(n: usize, p: usize) -> Result<Self, PermError> {
        Permutation::new((0..n).map(|i| ((i * p) % n) as u16).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &im)| i == im as usize)
    }

    /// Composition `(self ∘ first)(i) = self(first(i))`.
    pub fn compose(&self, first: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), first.len());
        Permutation(first.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.len()];
        for (i, &im) in self.0.iter().enumerate() {
            inv[im as usize] = i as u16;
        }
        Permutation(inv)
    }
}
