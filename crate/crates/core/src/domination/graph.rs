use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Which family a [`GraphSpec`] was built from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Star { leaves: usize },
    Wheel { spokes: usize },
    CompleteMultipartite(Vec<usize>),
    Explicit,
}

/// A validated graph on vertices `1..=n`.
///
/// Labelling conventions:
/// * `path(n)`: edges `(i, i+1)` for `i` in `1..n`.
/// * `cycle(n)`: the path plus `(n, 1)`.
/// * `star(l)`: centre `1`, leaves `2..=l+1`.
/// * `wheel(s)`: hub `1`, rim `2..=s+1` joined in a cycle.
/// * `complete_multipartite(p)`: parts occupy consecutive label blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSpec {
    family: Family,
    // adjacency[v - 1] = sorted neighbour labels of v
    adjacency: Vec<Vec<u32>>,
    // open neighbourhood bitmasks (bit v-1), present when n <= 64
    masks: Option<Vec<u64>>,
}

impl GraphSpec {
    pub fn path(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(invalid("path needs n >= 1"));
        }
        let edges = (1..n).map(|i| (i, i + 1));
        Ok(Self::from_edges(Family::Path(n), n, edges))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(invalid("cycle needs n >= 3"));
        }
        let edges = (1..n).map(|i| (i, i + 1)).chain(std::iter::once((n, 1)));
        Ok(Self::from_edges(Family::Cycle(n), n, edges))
    }

    pub fn star(leaves: usize) -> Result<Self> {
        if leaves < 1 {
            return Err(invalid("star needs at least one leaf"));
        }
        let edges = (2..=leaves + 1).map(|l| (1, l));
        Ok(Self::from_edges(Family::Star { leaves }, leaves + 1, edges))
    }

    pub fn wheel(spokes: usize) -> Result<Self> {
        if spokes < 3 {
            return Err(invalid("wheel needs at least 3 spokes"));
        }
        let rim = |k: usize| 2 + (k % spokes);
        let edges = (0..spokes).flat_map(|k| [(1, rim(k)), (rim(k), rim(k + 1))]);
        Ok(Self::from_edges(Family::Wheel { spokes }, spokes + 1, edges))
    }

    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        if parts.is_empty() {
            return Err(invalid("complete multipartite graph needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(invalid("every part must have size >= 1"));
        }
        let mut block = Vec::new();
        for (idx, &p) in parts.iter().enumerate() {
            block.extend(std::iter::repeat_n(idx, p));
        }
        let n = block.len();
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if block[u - 1] != block[v - 1] {
                    edges.push((u, v));
                }
            }
        }
        Ok(Self::from_edges(Family::CompleteMultipartite(parts.to_vec()), n, edges))
    }

    /// Builds a graph from 1-based adjacency lists. Lists must be symmetric,
    /// loop-free and in range; duplicates are collapsed.
    pub fn explicit(adjacency: Vec<Vec<u32>>) -> Result<Self> {
        let n = adjacency.len();
        if n == 0 {
            return Err(invalid("explicit graph needs at least one vertex"));
        }
        let mut edges = Vec::new();
        for (i, nbrs) in adjacency.iter().enumerate() {
            let u = i + 1;
            for &v in nbrs {
                let v = v as usize;
                if v == 0 || v > n {
                    return Err(invalid(format!("neighbour {v} of {u} out of range")));
                }
                if v == u {
                    return Err(invalid(format!("self loop at {u}")));
                }
                if !adjacency[v - 1].contains(&(u as u32)) {
                    return Err(invalid(format!("edge {u}-{v} is not symmetric")));
                }
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_edges(Family::Explicit, n, edges))
    }

    fn from_edges(family: Family, n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            adjacency[u - 1].push(v as u32);
            adjacency[v - 1].push(u as u32);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let masks = (n <= 64).then(|| {
            adjacency
                .iter()
                .map(|nb| nb.iter().fold(0u64, |m, &v| m | 1 << (v - 1)))
                .collect()
        });
        GraphSpec {
            family,
            adjacency,
            masks,
        }
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize - 1]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.neighbors(v).len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_path(&self) -> bool {
        matches!(self.family, Family::Path(_))
    }

    /// Open-neighbourhood bitmasks, available for graphs with at most 64 vertices.
    pub fn neighbor_masks(&self) -> Option<&[u64]> {
        self.masks.as_deref()
    }
}
