//! Graphs, revelation orders and the online domination procedure itself.
//!
//! Vertices are revealed one at a time; a revealed vertex joins the set
//! exactly when none of its neighbours is already in it. The result is always
//! an independent dominating set.

mod graph;
mod permutation;

pub use graph::{Family, GraphSpec};
pub use permutation::Permutation;

use serde::Serialize;

use crate::error::{invalid, Result};

/// The set produced by one run, together with its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationOutcome {
    /// Vertices in the order they were added.
    pub chosen: Vec<u32>,
    /// `chosen_mask[v - 1]` is true iff `v` was added.
    pub chosen_mask: Vec<bool>,
    pub size: usize,
}

impl DominationOutcome {
    pub fn sorted_members(&self) -> Vec<u32> {
        let mut members = self.chosen.clone();
        members.sort_unstable();
        members
    }
}

pub fn run_online_domination(graph: &GraphSpec, perm: &Permutation) -> Result<DominationOutcome> {
    check_lengths(graph, perm)?;
    let n = graph.vertex_count();
    let mut chosen_mask = vec![false; n];
    let mut chosen = Vec::new();
    for &v in perm.as_slice() {
        if !graph.neighbors(v).iter().any(|&u| chosen_mask[u as usize - 1]) {
            chosen_mask[v as usize - 1] = true;
            chosen.push(v);
        }
    }
    let size = chosen.len();
    Ok(DominationOutcome {
        chosen,
        chosen_mask,
        size,
    })
}

pub fn gamma(graph: &GraphSpec, perm: &Permutation) -> Result<usize> {
    check_lengths(graph, perm)?;
    Ok(match graph.neighbor_masks() {
        Some(masks) => masked_run(masks, perm.as_slice()).count_ones() as usize,
        None if graph.is_path() => PathRunner::new(perm.len()).gamma(perm.as_slice()),
        None => run_online_domination(graph, perm)?.size,
    })
}

fn check_lengths(graph: &GraphSpec, perm: &Permutation) -> Result<()> {
    if perm.len() != graph.vertex_count() {
        return Err(invalid(format!(
            "permutation has length {} but the graph has {} vertices",
            perm.len(),
            graph.vertex_count()
        )));
    }
    Ok(())
}

/// True iff `vertices` is both independent and dominating in `graph`.
pub fn is_independent_dominating(graph: &GraphSpec, vertices: &[u32]) -> Result<bool> {
    let n = graph.vertex_count();
    let mut member = vec![false; n];
    for &v in vertices {
        if v == 0 || v as usize > n {
            return Err(invalid(format!("vertex {v} outside 1..={n}")));
        }
        member[v as usize - 1] = true;
    }
    for v in 1..=n as u32 {
        let in_set = member[v as usize - 1];
        let nbr_in_set = graph.neighbors(v).iter().any(|&u| member[u as usize - 1]);
        if in_set && nbr_in_set || !in_set && !nbr_in_set {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs the procedure on a graph with at most 64 vertices given its
/// neighbour masks; returns the chosen set as a bitmask (bit `v - 1`).
#[inline]
pub fn masked_run(masks: &[u64], order: &[u32]) -> u64 {
    let mut set = 0u64;
    for &v in order {
        let i = v as usize - 1;
        if masks[i] & set == 0 {
            set |= 1 << i;
        }
    }
    set
}

/// Chosen-set bitmask for `path(order.len())`, `order.len() <= 64`.
#[inline]
pub fn path_run_mask(order: &[u32]) -> u64 {
    debug_assert!(order.len() <= 64);
    let mut set = 0u64;
    for &v in order {
        let i = v - 1;
        // neighbours i-1 and i+1; shifting handles both ends
        let nbrs = (set << 1) | (set >> 1);
        if nbrs >> i & 1 == 0 {
            set |= 1 << i;
        }
    }
    set
}

/// Reusable evaluator for paths of any length.
#[derive(Debug, Clone)]
pub struct PathRunner {
    // padded by one slot at each end so vertex v lives at index v
    chosen: Vec<bool>,
}

impl PathRunner {
    pub fn new(n: usize) -> Self {
        PathRunner {
            chosen: vec![false; n + 2],
        }
    }

    pub fn gamma(&mut self, order: &[u32]) -> usize {
        if self.chosen.len() != order.len() + 2 {
            self.chosen.resize(order.len() + 2, false);
        }
        self.chosen.fill(false);
        let mut size = 0;
        for &v in order {
            let v = v as usize;
            if !self.chosen[v - 1] && !self.chosen[v + 1] {
                self.chosen[v] = true;
                size += 1;
            }
        }
        size
    }
}
