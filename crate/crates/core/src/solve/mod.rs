//! Exact decision procedures for edge-list STC labeling.
//!
//! All solvers return the same answer on every instance; witnesses differ
//! between solvers but each is deterministic.

mod dp;
mod fpt;
mod oracle;

pub use dp::solve_subset_dp;
pub use fpt::solve_fpt;
pub use oracle::solve_oracle;

use crate::error::{Error, Result};
use crate::gallai::{k1, GallaiGraph};
use crate::model::{ElInstance, Labeling, MultiInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Cap on the oracle's search space `prod (|psi(e)| + 1)`.
    pub max_enum: u128,
    /// Cap on the number of Gallai-vertex subsets the DP tabulates.
    pub max_subsets: u64,
    /// Cap on search nodes of the branching solver.
    pub max_nodes: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enum: 10_000_000,
            max_subsets: 1 << 20,
            max_nodes: 200_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub answer: bool,
    pub witness: Option<Labeling>,
    pub stats: Stats,
}

impl SolveResult {
    fn yes(witness: Labeling, nodes: u64) -> Self {
        SolveResult {
            answer: true,
            witness: Some(witness),
            stats: Stats { nodes },
        }
    }

    fn no(nodes: u64) -> Self {
        SolveResult {
            answer: false,
            witness: None,
            stats: Stats { nodes },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algo {
    Oracle,
    Dp,
    Fpt,
    Auto,
}

impl std::str::FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Algo::Oracle),
            "dp" => Ok(Algo::Dp),
            "fpt" => Ok(Algo::Fpt),
            "auto" => Ok(Algo::Auto),
            _ => Err(Error::validation(format!("unknown algorithm {s:?}"))),
        }
    }
}

pub fn solve(inst: &ElInstance, algo: Algo, limits: &Limits) -> Result<SolveResult> {
    match algo {
        Algo::Oracle => solve_oracle(inst, limits),
        Algo::Dp => solve_subset_dp(inst, limits),
        Algo::Fpt => solve_fpt(inst, limits),
        Algo::Auto => solve_auto(inst, limits),
    }
}

/// Shortcut for full lists, then the branching solver, then the DP when the
/// branching solver runs out of nodes.
pub fn solve_auto(inst: &ElInstance, limits: &Limits) -> Result<SolveResult> {
    if inst.has_full_lists() {
        if let Some(r) = shortcut_el(inst) {
            return Ok(r);
        }
    }
    match solve_fpt(inst, limits) {
        Err(Error::ResourceLimit { .. }) => solve_subset_dp(inst, limits),
        other => other,
    }
}

/// Constructive yes for full lists with `c > k1`: cover edges get pairwise
/// distinct colors `1..=k1`, all remaining edges share `k1 + 1`.
pub fn shortcut_multi(inst: &MultiInstance) -> Option<SolveResult> {
    shortcut_el(&inst.normalize())
}

fn shortcut_el(inst: &ElInstance) -> Option<SolveResult> {
    let kr = k1(&inst.g);
    if inst.c <= kr.k1 {
        return None;
    }
    let mut color_of = vec![kr.k1 + 1; inst.g.m()];
    for (i, &e) in kr.cover.iter().enumerate() {
        color_of[e] = i + 1;
    }
    Some(SolveResult::yes(Labeling::new(color_of), 0))
}

/// Coloring of Gallai vertices with `0..=c`, 0 meaning deleted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphColoring {
    pub chi: Vec<usize>,
}

impl SubgraphColoring {
    pub fn from_labeling(gg: &GallaiGraph, lab: &Labeling) -> Self {
        SubgraphColoring {
            chi: gg.to_edge.iter().map(|&e| lab.color_of[e]).collect(),
        }
    }

    pub fn to_labeling(&self, gg: &GallaiGraph) -> Labeling {
        let mut color_of = vec![0; self.chi.len()];
        for (w, &x) in self.chi.iter().enumerate() {
            color_of[gg.to_edge[w]] = x;
        }
        Labeling::new(color_of)
    }

    /// No Gallai edge is monochromatic in a nonzero color and every nonzero
    /// color lies in the vertex's list.
    pub fn is_valid(&self, gg: &GallaiGraph, lists: &[Vec<usize>]) -> bool {
        let proper = gg
            .base
            .edges()
            .iter()
            .all(|&(a, b)| self.chi[a] == 0 || self.chi[a] != self.chi[b]);
        proper
            && self
                .chi
                .iter()
                .enumerate()
                .all(|(w, &x)| x == 0 || lists[gg.to_edge[w]].binary_search(&x).is_ok())
    }

    pub fn zeros(&self) -> usize {
        self.chi.iter().filter(|&&x| x == 0).count()
    }
}
