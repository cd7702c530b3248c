//! Cover partitions: route every edge to one vertex of a minimum vertex
//! cover, then spill the small classes.
//!
//! For a multi-hypergraph with covering number at most `a` and any `b`, the
//! partition keeps at most `a` vertex classes, each of size strictly above
//! `|E|/(ab)`, and spills at most `|E|/b` edges.

use crate::graph::{Hypergraph, VertexId};
use crate::solve::SolveError;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoverError {
    #[error("covering number {tau} exceeds the required bound {bound}")]
    TauTooLarge {
        tau: usize,
        bound: usize,
        cover: Vec<VertexId>,
    },
    #[error(transparent)]
    Solver(#[from] SolveError),
}

/// Edges grouped under cover vertices, plus the spilled remainder. Edge
/// values are indices into the hypergraph's edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverPartition {
    pub a: usize,
    pub b: usize,
    pub kept: BTreeMap<VertexId, Vec<usize>>,
    pub spill: Vec<usize>,
}

/// Partition the edges of `h` under a minimum vertex cover of size ≤ `a`:
/// each edge goes to its smallest cover vertex, and classes of size at most
/// `|E|/(ab)` are moved to the spill.
pub fn cover_partition(h: &Hypergraph, a: usize, b: usize) -> Result<CoverPartition, CoverError> {
    assert!(a >= 1 && b >= 1, "partition parameters must be positive");
    let cover = h.min_vertex_cover()?;
    if cover.len() > a {
        return Err(CoverError::TauTooLarge {
            tau: cover.len(),
            bound: a,
            cover: cover.vertices.iter().copied().collect(),
        });
    }
    let mut kept: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    for (i, edge) in h.edges().iter().enumerate() {
        let anchor = edge
            .iter()
            .copied()
            .filter(|v| cover.vertices.contains(v))
            .min()
            .expect("a vertex cover meets every edge");
        kept.entry(anchor).or_default().push(i);
    }
    let m = h.edge_count();
    let mut spill = Vec::new();
    kept.retain(|_, class| {
        // Keep exactly the classes with |class| > m/(ab), in exact integer
        // arithmetic.
        if class.len() * a * b > m {
            true
        } else {
            spill.extend(class.iter().copied());
            false
        }
    });
    spill.sort_unstable();
    Ok(CoverPartition { a, b, kept, spill })
}

impl CoverPartition {
    /// Check every structural guarantee against the source hypergraph.
    pub fn verify(&self, h: &Hypergraph) -> Result<(), String> {
        let m = h.edge_count();
        let mut seen = vec![false; m];
        let mut mark = |i: usize| -> Result<(), String> {
            if i >= m {
                return Err(format!("edge index {i} out of range"));
            }
            if seen[i] {
                return Err(format!("edge {i} appears twice in the partition"));
            }
            seen[i] = true;
            Ok(())
        };
        for &i in &self.spill {
            mark(i)?;
        }
        for (&v, class) in &self.kept {
            for &i in class {
                mark(i)?;
                if !h.edges()[i].contains(&v) {
                    return Err(format!("edge {i} kept under vertex {v} misses it"));
                }
            }
            if class.len() * self.a * self.b <= m {
                return Err(format!(
                    "kept class under vertex {v} has size {}, at most |E|/(ab)",
                    class.len()
                ));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err("partition misses an edge".into());
        }
        if self.spill.len() * self.b > m {
            return Err(format!(
                "spill of {} exceeds |E|/b = {m}/{}",
                self.spill.len(),
                self.b
            ));
        }
        if self.kept.len() > self.a {
            return Err(format!("{} kept vertices exceed a = {}", self.kept.len(), self.a));
        }
        Ok(())
    }
}
