//! Exhaustive oracles: does a distinguishing proper coloring with a given
//! palette exist, and what is the exact distinguishing chromatic number.
//!
//! Proper colorings are enumerated by backtracking in vertex index order
//! with `c(v_0) = 1` and canonical color introduction (color `j + 1` may
//! first appear only after color `j`), which prunes color permutations
//! without losing any answer: relabeling colors by first appearance maps
//! distinguishing colorings to distinguishing colorings. The circulant
//! structure makes properness pruning effective early, since `v_i`
//! constrains `v_{i+1}` and `v_{i+k}`. The distinguishing test runs only at
//! complete colorings, scanning the group with an early exit.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::autgroups::AutGroup;
use crate::constructions::Coloring;
use crate::graph::CirculantGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("graph on {0} vertices exceeds the search bound {1}")]
    TooLarge(usize, usize),
    #[error("search budget exhausted: {0}")]
    BudgetExhausted(&'static str),
    #[error("group elements unavailable for scanning")]
    ElementsUnavailable,
}

/// Resource limits for the exhaustive searches.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    /// Largest vertex count accepted.
    pub max_n: usize,
    /// Maximum number of complete proper colorings visited.
    pub max_colorings: u64,
    /// Wall-clock limit, checked between leaves.
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_n: 16,
            max_colorings: 500_000_000,
            time_limit: None,
        }
    }
}

struct SearchState<'a> {
    grp: &'a AutGroup,
    palette: u8,
    budget: &'a SearchBudget,
    started: Instant,
    leaves: u64,
    colors: Vec<u8>,
    /// per vertex: the neighbors with a smaller index (already colored)
    lower_nbrs: Vec<Vec<usize>>,
}

impl SearchState<'_> {
    fn tick(&mut self) -> Result<(), SearchError> {
        self.leaves += 1;
        if self.leaves > self.budget.max_colorings {
            return Err(SearchError::BudgetExhausted("coloring limit reached"));
        }
        if let Some(limit) = self.budget.time_limit {
            if self.started.elapsed() > limit {
                return Err(SearchError::BudgetExhausted("time limit reached"));
            }
        }
        Ok(())
    }

    fn leaf_is_distinguishing(&self) -> Result<bool, SearchError> {
        let elements = self
            .grp
            .elements()
            .ok_or(SearchError::ElementsUnavailable)?;
        let n = self.colors.len();
        'next: for p in elements {
            if p.is_identity() {
                continue;
            }
            for i in 0..n {
                if self.colors[p.apply(i)] != self.colors[i] {
                    continue 'next;
                }
            }
            return Ok(false);
        }
        Ok(true)
    }
}

/// Searches for a proper coloring with at most `palette` colors preserved by
/// no nonidentity element of `grp`. Returns the first hit in canonical
/// enumeration order, or `None` when the search space is exhausted.
pub fn distinguishing_exists(
    g: &CirculantGraph,
    palette: u8,
    grp: &AutGroup,
    budget: &SearchBudget,
) -> Result<Option<Coloring>, SearchError> {
    let mut out = None;
    search(g, palette, grp, budget, false, &mut |state| {
        out = Some(Coloring::new(state.colors.clone(), palette).expect("colors within palette"));
        true // stop at the first hit
    })?;
    Ok(out)
}

/// Collects every proper distinguishing coloring using exactly `palette`
/// colors, in canonical first-appearance form.
pub fn enumerate_distinguishing(
    g: &CirculantGraph,
    palette: u8,
    grp: &AutGroup,
    budget: &SearchBudget,
) -> Result<Vec<Coloring>, SearchError> {
    let mut out = Vec::new();
    search(g, palette, grp, budget, true, &mut |state| {
        out.push(Coloring::new(state.colors.clone(), palette).expect("colors within palette"));
        false
    })?;
    Ok(out)
}

fn search(
    g: &CirculantGraph,
    palette: u8,
    grp: &AutGroup,
    budget: &SearchBudget,
    exact_palette: bool,
    on_hit: &mut dyn FnMut(&SearchState) -> bool,
) -> Result<(), SearchError> {
    let n = g.n();
    if n > budget.max_n {
        return Err(SearchError::TooLarge(n, budget.max_n));
    }
    let lower_nbrs = (0..n)
        .map(|v| g.neighbors(v).into_iter().filter(|&w| w < v).collect())
        .collect();
    let mut state = SearchState {
        grp,
        palette,
        budget,
        started: Instant::now(),
        leaves: 0,
        colors: vec![0; n],
        lower_nbrs,
    };
    descend(&mut state, 0, 0, exact_palette, on_hit)?;
    Ok(())
}

fn descend(
    state: &mut SearchState,
    v: usize,
    max_used: u8,
    exact_palette: bool,
    on_hit: &mut dyn FnMut(&SearchState) -> bool,
) -> Result<bool, SearchError> {
    let n = state.colors.len();
    if v == n {
        state.tick()?;
        if exact_palette && max_used != state.palette {
            return Ok(false);
        }
        if state.leaf_is_distinguishing()? && on_hit(state) {
            return Ok(true);
        }
        return Ok(false);
    }
    let limit = state.palette.min(max_used + 1);
    'next_color: for c in 1..=limit {
        for i in 0..state.lower_nbrs[v].len() {
            if state.colors[state.lower_nbrs[v][i]] == c {
                continue 'next_color;
            }
        }
        state.colors[v] = c;
        if descend(state, v + 1, max_used.max(c), exact_palette, on_hit)? {
            return Ok(true);
        }
        state.colors[v] = 0;
    }
    Ok(false)
}

/// Exact distinguishing chromatic number: the smallest palette admitting a
/// distinguishing proper coloring, starting from the chromatic number and
/// incrementing.
pub fn chi_d_exact(
    g: &CirculantGraph,
    grp: &AutGroup,
    budget: &SearchBudget,
) -> Result<u8, SearchError> {
    let chi = crate::chromatic::chi_exact_bounded(g, budget.max_n)
        .map_err(|_| SearchError::TooLarge(g.n(), budget.max_n))?;
    let mut palette = chi.value;
    loop {
        if distinguishing_exists(g, palette, grp, budget)?.is_some() {
            return Ok(palette);
        }
        palette += 1;
        if palette as usize > g.n() {
            // n distinct colors always distinguish; reaching this point
            // means the group scan is inconsistent
            return Err(SearchError::BudgetExhausted(
                "palette exceeded vertex count",
            ));
        }
    }
}
