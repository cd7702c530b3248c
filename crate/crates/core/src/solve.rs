//! Exact solvers: covering number, matching number, and rainbow search.
//!
//! All three are branch-and-bound / backtracking searches sized for small
//! instances. They are deterministic: branches are explored in ascending
//! vertex / edge / color order, so the returned witness is a pure function of
//! the input.

use crate::graph::{
    disjoint_sorted, ColorId, ColoredHypergraph, EdgeId, Hypergraph, Matching, VertexCover,
    VertexId,
};

/// Vertex budget above which the covering solver refuses to run unless the
/// caller raises the limit explicitly.
pub const TAU_VERTEX_GUARD: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("instance has {vertices} vertices, over the solver guard of {limit}")]
    GuardExceeded { vertices: usize, limit: usize },
    #[error("hypergraph contains an empty edge, which no vertex set covers")]
    UncoverableEdge,
    #[error("query vertex set must be nonempty")]
    EmptySubset,
    #[error("query vertex set of size {size} must be smaller than r = {r}")]
    SubsetTooLarge { size: usize, r: usize },
}

impl Hypergraph {
    /// Minimum vertex cover (covering number witness) via branch and bound,
    /// guarded at [`TAU_VERTEX_GUARD`] vertices.
    pub fn min_vertex_cover(&self) -> Result<VertexCover, SolveError> {
        self.min_vertex_cover_with_limit(Some(TAU_VERTEX_GUARD))
    }

    /// Minimum vertex cover with an explicit vertex guard (`None` disables it).
    ///
    /// Branches on the vertices of the first uncovered edge; prunes with a
    /// greedy disjoint-edge packing lower bound.
    pub fn min_vertex_cover_with_limit(
        &self,
        limit: Option<usize>,
    ) -> Result<VertexCover, SolveError> {
        if let Some(limit) = limit {
            if self.vertex_count() > limit {
                return Err(SolveError::GuardExceeded {
                    vertices: self.vertex_count(),
                    limit,
                });
            }
        }
        if self.edges().iter().any(|e| e.is_empty()) {
            return Err(SolveError::UncoverableEdge);
        }
        // Initial upper bound: take every vertex of a greedily chosen
        // uncovered edge until all edges are hit.
        let mut best: Vec<VertexId> = Vec::new();
        for e in self.edges() {
            if !e.iter().any(|v| best.contains(v)) {
                best.extend(e.iter().copied());
            }
        }
        best.sort_unstable();
        best.dedup();
        let mut chosen: Vec<VertexId> = Vec::new();
        cover_branch(self.edges(), &mut chosen, &mut best);
        Ok(VertexCover {
            vertices: best.into_iter().collect(),
        })
    }

    /// Maximum matching (matching number witness) via branch and bound with a
    /// greedy matching as the initial incumbent.
    pub fn max_matching(&self) -> Matching {
        let edges = self.edges();
        let mut best: Vec<usize> = Vec::new();
        let mut used: Vec<VertexId> = Vec::new();
        for (i, e) in edges.iter().enumerate() {
            if e.iter().all(|v| !used.contains(v)) {
                best.push(i);
                used.extend(e.iter().copied());
            }
        }
        let mut current = Vec::new();
        let mut occupied = Vec::new();
        matching_branch(edges, 0, &mut current, &mut occupied, &mut best);
        Matching { edges: best }
    }
}

/// Branch on the first edge not covered by `chosen`.
fn cover_branch(edges: &[Vec<VertexId>], chosen: &mut Vec<VertexId>, best: &mut Vec<VertexId>) {
    let uncovered: Vec<&Vec<VertexId>> = edges
        .iter()
        .filter(|e| !e.iter().any(|v| chosen.contains(v)))
        .collect();
    let Some(first) = uncovered.first() else {
        if chosen.len() < best.len() {
            *best = chosen.clone();
            best.sort_unstable();
        }
        return;
    };
    // Lower bound: a set of pairwise disjoint uncovered edges needs one
    // distinct cover vertex each.
    let mut packing_vertices: Vec<VertexId> = Vec::new();
    let mut packed = 0;
    for e in &uncovered {
        if e.iter().all(|v| !packing_vertices.contains(v)) {
            packed += 1;
            packing_vertices.extend(e.iter().copied());
        }
    }
    if chosen.len() + packed >= best.len() {
        return;
    }
    for &v in first.iter() {
        chosen.push(v);
        cover_branch(edges, chosen, best);
        chosen.pop();
    }
}

/// Include/exclude recursion over edges in index order.
fn matching_branch(
    edges: &[Vec<VertexId>],
    index: usize,
    current: &mut Vec<usize>,
    occupied: &mut Vec<VertexId>,
    best: &mut Vec<usize>,
) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    if index == edges.len() {
        return;
    }
    // Upper bound: every remaining edge disjoint from the occupied set can
    // contribute at most one.
    let mut free = 0;
    for e in &edges[index..] {
        if e.iter().all(|v| !occupied.contains(v)) {
            free += 1;
        }
    }
    if current.len() + free <= best.len() {
        return;
    }
    let e = &edges[index];
    if e.iter().all(|v| !occupied.contains(v)) {
        current.push(index);
        let added = e.len();
        occupied.extend(e.iter().copied());
        matching_branch(edges, index + 1, current, occupied, best);
        occupied.truncate(occupied.len() - added);
        current.pop();
    }
    matching_branch(edges, index + 1, current, occupied, best);
}

/// A rainbow matching: `k` pairwise disjoint edges in `k` distinct colors,
/// listed as (color, edge id) pairs sorted by color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowCertificate {
    pub pairs: Vec<(ColorId, EdgeId)>,
}

impl RainbowCertificate {
    pub fn new(mut pairs: Vec<(ColorId, EdgeId)>) -> Self {
        pairs.sort_unstable();
        RainbowCertificate { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Full structural check against an instance: every pair names an
    /// existing edge of that exact color, colors are pairwise distinct, edges
    /// are pairwise disjoint, and the size matches `expected`.
    pub fn verify(&self, g: &ColoredHypergraph, expected: usize) -> Result<(), String> {
        if self.pairs.len() != expected {
            return Err(format!(
                "certificate has {} pairs, expected {expected}",
                self.pairs.len()
            ));
        }
        let mut colors = Vec::new();
        let mut members: Vec<&[VertexId]> = Vec::new();
        for &(color, id) in &self.pairs {
            let edge = g
                .edge(id)
                .ok_or_else(|| format!("certificate names unknown edge {id}"))?;
            if edge.color != color {
                return Err(format!(
                    "edge {id} has color {}, certificate claims {color}",
                    edge.color
                ));
            }
            if colors.contains(&color) {
                return Err(format!("color {color} appears twice"));
            }
            colors.push(color);
            for prior in &members {
                if !disjoint_sorted(prior, &edge.vertices) {
                    return Err(format!("edge {id} intersects an earlier edge"));
                }
            }
            members.push(&edge.vertices);
        }
        Ok(())
    }
}

/// Outcome of an exhausted rainbow search that found nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonexistenceCertificate {
    /// Requested rainbow size.
    pub target: usize,
    /// Backtracking nodes visited before exhaustion.
    pub nodes_explored: u64,
    /// Always true: this type is only produced by complete searches.
    pub exhausted: bool,
}

/// Result of [`ColoredHypergraph::search_rainbow`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RainbowSearch {
    Found {
        certificate: RainbowCertificate,
        nodes_explored: u64,
    },
    None(NonexistenceCertificate),
}

impl RainbowSearch {
    pub fn certificate(&self) -> Option<&RainbowCertificate> {
        match self {
            RainbowSearch::Found { certificate, .. } => Some(certificate),
            RainbowSearch::None(_) => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, RainbowSearch::Found { .. })
    }

    pub fn nodes_explored(&self) -> u64 {
        match self {
            RainbowSearch::Found { nodes_explored, .. } => *nodes_explored,
            RainbowSearch::None(c) => c.nodes_explored,
        }
    }
}

impl ColoredHypergraph {
    /// Exhaustive search for a rainbow `k`-matching.
    ///
    /// Colors are scanned in ascending order; within a color each edge is
    /// tried in ascending id order before the color is skipped, so the first
    /// certificate found is the lexicographically least under (color, edge
    /// id). `k = 0` returns the empty certificate; `k > f` is immediate
    /// nonexistence.
    pub fn search_rainbow(&self, k: usize) -> RainbowSearch {
        if k == 0 {
            return RainbowSearch::Found {
                certificate: RainbowCertificate::new(Vec::new()),
                nodes_explored: 0,
            };
        }
        if k > self.num_colors() {
            return RainbowSearch::None(NonexistenceCertificate {
                target: k,
                nodes_explored: 0,
                exhausted: true,
            });
        }
        let mut state = RainbowState {
            g: self,
            k,
            chosen: Vec::new(),
            occupied: Vec::new(),
            nodes: 0,
        };
        match state.descend(0) {
            Some(pairs) => RainbowSearch::Found {
                certificate: RainbowCertificate::new(pairs),
                nodes_explored: state.nodes,
            },
            None => RainbowSearch::None(NonexistenceCertificate {
                target: k,
                nodes_explored: state.nodes,
                exhausted: true,
            }),
        }
    }
}

struct RainbowState<'a> {
    g: &'a ColoredHypergraph,
    k: usize,
    chosen: Vec<(ColorId, EdgeId)>,
    occupied: Vec<VertexId>,
    nodes: u64,
}

impl RainbowState<'_> {
    fn descend(&mut self, color: ColorId) -> Option<Vec<(ColorId, EdgeId)>> {
        self.nodes += 1;
        if self.chosen.len() == self.k {
            return Some(self.chosen.clone());
        }
        // Not enough colors left to finish.
        if self.k - self.chosen.len() > self.g.num_colors() - color {
            return None;
        }
        for edge in self.g.class(color) {
            if edge
                .vertices
                .iter()
                .all(|v| !self.occupied.contains(v))
            {
                self.chosen.push((color, edge.id));
                self.occupied.extend(edge.vertices.iter().copied());
                if let Some(hit) = self.descend(color + 1) {
                    return Some(hit);
                }
                self.occupied
                    .truncate(self.occupied.len() - edge.vertices.len());
                self.chosen.pop();
            }
        }
        self.descend(color + 1)
    }
}
