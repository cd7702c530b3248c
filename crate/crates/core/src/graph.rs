//! Colored multi-hypergraph model.
//!
//! Vertices are arbitrary nonnegative integer ids. Partite instances carry an
//! explicit list of `r` disjoint parts and every edge is expected to take
//! exactly one vertex per part; general instances have a single vertex pool.
//! Edge multiplicity is represented by repeated vertex sets under distinct
//! edge ids. All types are immutable after construction; structural rules are
//! checked by [`ColoredHypergraph::validate`], which reports violations as
//! data instead of refusing to construct the object (tests need to build
//! broken instances on purpose).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Range;

pub type VertexId = u32;
pub type EdgeId = usize;
pub type ColorId = usize;

/// Whether the vertex set is split into `r` named parts or is one pool.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Partite,
    General,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Partite => write!(f, "partite"),
            Mode::General => write!(f, "general"),
        }
    }
}

/// One edge of a colored instance: a sorted vertex tuple plus its color.
///
/// Ids are stable: restriction and contraction keep the original id of every
/// surviving edge so certificates can always be traced back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredEdge {
    pub id: EdgeId,
    pub color: ColorId,
    /// Sorted ascending; duplicates are kept so validation can flag them.
    pub vertices: Vec<VertexId>,
}

impl ColoredEdge {
    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn contains_all(&self, set: &[VertexId]) -> bool {
        set.iter().all(|&v| self.contains(v))
    }

    pub fn disjoint_from(&self, other: &ColoredEdge) -> bool {
        disjoint_sorted(&self.vertices, &other.vertices)
    }
}

/// Linear-merge disjointness test for two ascending vertex lists.
pub fn disjoint_sorted(a: &[VertexId], b: &[VertexId]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// Plain (uncolored, not necessarily uniform) multi-hypergraph.
///
/// Edges are indexed by position; covering and matching solvers hand back
/// witnesses in terms of these indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: BTreeSet<VertexId>,
    edges: Vec<Vec<VertexId>>,
}

impl Hypergraph {
    /// Builds a hypergraph; edge tuples are sorted and the vertex set is
    /// extended to contain every vertex that appears in an edge.
    pub fn new(vertices: BTreeSet<VertexId>, edges: Vec<Vec<VertexId>>) -> Self {
        let mut vertices = vertices;
        let mut edges = edges;
        for e in &mut edges {
            e.sort_unstable();
            vertices.extend(e.iter().copied());
        }
        Hypergraph { vertices, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &[Vec<VertexId>] {
        &self.edges
    }
}

/// A set of pairwise disjoint edges of a [`Hypergraph`], by edge index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub edges: Vec<usize>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// True when the selected edges exist and are pairwise disjoint.
    pub fn is_valid_for(&self, h: &Hypergraph) -> bool {
        let mut seen: BTreeSet<VertexId> = BTreeSet::new();
        let mut indices: BTreeSet<usize> = BTreeSet::new();
        for &i in &self.edges {
            let Some(e) = h.edges().get(i) else {
                return false;
            };
            if !indices.insert(i) {
                return false;
            }
            for &v in e {
                if !seen.insert(v) {
                    return false;
                }
            }
        }
        true
    }
}

/// A vertex set meeting every edge of a [`Hypergraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCover {
    pub vertices: BTreeSet<VertexId>,
}

impl VertexCover {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn covers(&self, h: &Hypergraph) -> bool {
        h.edges()
            .iter()
            .all(|e| e.iter().any(|v| self.vertices.contains(v)))
    }
}

/// A structural rule broken by an instance. See [`ColoredHypergraph::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Edge does not have exactly `r` distinct vertices.
    EdgeSize { edge: EdgeId, distinct: usize, r: usize },
    /// Partite edge does not take exactly one vertex from some part.
    EdgeCrossesPart { edge: EdgeId, part: usize, count: usize },
    /// Edge uses a vertex outside the declared vertex set / parts.
    UnknownVertex { edge: EdgeId, vertex: VertexId },
    /// Two edges of one color class share a vertex.
    ClassNotMatching { color: ColorId, first: EdgeId, second: EdgeId },
    /// Color class has the wrong number of edges.
    ClassSize { color: ColorId, size: usize, t: usize },
    /// Edge colored outside 0..f.
    ColorOutOfRange { edge: EdgeId, color: ColorId, f: usize },
    /// Two declared parts share a vertex.
    PartsOverlap { first: usize, second: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeSize { edge, distinct, r } => {
                write!(f, "edge {edge} has {distinct} distinct vertices, expected {r}")
            }
            Violation::EdgeCrossesPart { edge, part, count } => {
                write!(f, "edge {edge} crosses part {part} ({count} vertices, expected 1)")
            }
            Violation::UnknownVertex { edge, vertex } => {
                write!(f, "edge {edge} uses undeclared vertex {vertex}")
            }
            Violation::ClassNotMatching { color, first, second } => {
                write!(f, "color {color} not a matching (edges {first} and {second} intersect)")
            }
            Violation::ClassSize { color, size, t } => {
                write!(f, "color {color} has {size} edges, expected {t}")
            }
            Violation::ColorOutOfRange { edge, color, f: cf } => {
                write!(f, "edge {edge} has color {color} outside 0..{cf}")
            }
            Violation::PartsOverlap { first, second } => {
                write!(f, "parts {first} and {second} overlap")
            }
        }
    }
}

/// An (f, t)-colored r-uniform multi-hypergraph.
///
/// `partial` marks instances produced by [`ColoredHypergraph::restrict`]:
/// their color classes may hold fewer than `t` edges and validation treats
/// class sizes leniently.
#[derive(Debug, Clone, PartialEq)]
pub struct ColoredHypergraph {
    mode: Mode,
    r: usize,
    t: usize,
    /// `r` entries in partite mode, empty in general mode.
    parts: Vec<BTreeSet<VertexId>>,
    vertices: BTreeSet<VertexId>,
    /// Sorted by (color, id).
    edges: Vec<ColoredEdge>,
    /// Edge positions per color; sized to cover every color that occurs.
    class_spans: Vec<Range<usize>>,
    by_id: BTreeMap<EdgeId, usize>,
    num_colors: usize,
    partial: bool,
}

impl ColoredHypergraph {
    /// Builds a partite instance. `classes[c]` lists the edges of color `c`,
    /// each edge an arbitrary-order vertex tuple. Edge ids are assigned
    /// sequentially in (color, position) order.
    ///
    /// Panics if `parts.len() != r`; every other defect is left for
    /// [`validate`](Self::validate) to report.
    pub fn new_partite(
        r: usize,
        t: usize,
        parts: Vec<BTreeSet<VertexId>>,
        classes: Vec<Vec<Vec<VertexId>>>,
    ) -> Self {
        assert_eq!(parts.len(), r, "partite instance needs exactly r parts");
        let vertices = parts.iter().flatten().copied().collect();
        let edges = number_edges(classes);
        Self::from_raw(Mode::Partite, r, t, parts, vertices, edges, false)
    }

    /// Builds a general-mode instance over the given vertex pool.
    pub fn new_general(
        r: usize,
        t: usize,
        vertices: BTreeSet<VertexId>,
        classes: Vec<Vec<Vec<VertexId>>>,
    ) -> Self {
        let edges = number_edges(classes);
        Self::from_raw(Mode::General, r, t, Vec::new(), vertices, edges, false)
    }

    /// Shared constructor: sorts edge tuples, orders edges by (color, id),
    /// extends the vertex set by anything an edge mentions, and indexes
    /// classes. `num_colors` is the number of distinct class lists supplied.
    pub(crate) fn from_raw(
        mode: Mode,
        r: usize,
        t: usize,
        parts: Vec<BTreeSet<VertexId>>,
        vertices: BTreeSet<VertexId>,
        edges: Vec<ColoredEdge>,
        partial: bool,
    ) -> Self {
        let num_colors = edges.iter().map(|e| e.color + 1).max().unwrap_or(0);
        Self::from_raw_with_colors(mode, r, t, parts, vertices, edges, num_colors, partial)
    }

    pub(crate) fn from_raw_with_colors(
        mode: Mode,
        r: usize,
        t: usize,
        parts: Vec<BTreeSet<VertexId>>,
        mut vertices: BTreeSet<VertexId>,
        mut edges: Vec<ColoredEdge>,
        num_colors: usize,
        partial: bool,
    ) -> Self {
        for e in &mut edges {
            e.vertices.sort_unstable();
            vertices.extend(e.vertices.iter().copied());
        }
        edges.sort_by_key(|e| (e.color, e.id));
        let span_count = edges
            .iter()
            .map(|e| e.color + 1)
            .max()
            .unwrap_or(0)
            .max(num_colors);
        let mut class_spans = vec![0..0; span_count];
        let mut i = 0;
        while i < edges.len() {
            let c = edges[i].color;
            let start = i;
            while i < edges.len() && edges[i].color == c {
                i += 1;
            }
            class_spans[c] = start..i;
        }
        // Unoccupied colors keep an empty span positioned for slicing.
        let by_id = edges
            .iter()
            .enumerate()
            .map(|(pos, e)| (e.id, pos))
            .collect();
        ColoredHypergraph {
            mode,
            r,
            t,
            parts,
            vertices,
            edges,
            class_spans,
            by_id,
            num_colors,
            partial,
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Number of color classes, `f`.
    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_partial(&self) -> bool {
        self.partial
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn parts(&self) -> &[BTreeSet<VertexId>] {
        &self.parts
    }

    /// All edges, sorted by (color, id).
    pub fn edges(&self) -> &[ColoredEdge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Option<&ColoredEdge> {
        self.by_id.get(&id).map(|&pos| &self.edges[pos])
    }

    /// Edges of one color class (empty slice for an absent color).
    pub fn class(&self, color: ColorId) -> &[ColoredEdge] {
        match self.class_spans.get(color) {
            Some(span) => &self.edges[span.clone()],
            None => &[],
        }
    }

    /// Part index of a vertex in partite mode.
    pub fn part_of(&self, v: VertexId) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(&v))
    }

    /// Checks every structural rule and returns all violations found.
    ///
    /// Partial instances (from [`restrict`](Self::restrict)) may have classes
    /// smaller than `t`; everything else is enforced identically.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.mode == Mode::Partite {
            for i in 0..self.parts.len() {
                for j in i + 1..self.parts.len() {
                    if !self.parts[i].is_disjoint(&self.parts[j]) {
                        out.push(Violation::PartsOverlap { first: i, second: j });
                    }
                }
            }
        }
        for e in &self.edges {
            let distinct = {
                let mut vs = e.vertices.clone();
                vs.dedup();
                vs.len()
            };
            if distinct != self.r || e.vertices.len() != self.r {
                out.push(Violation::EdgeSize {
                    edge: e.id,
                    distinct,
                    r: self.r,
                });
            }
            for &v in &e.vertices {
                if !self.vertices.contains(&v)
                    || (self.mode == Mode::Partite && self.part_of(v).is_none())
                {
                    out.push(Violation::UnknownVertex { edge: e.id, vertex: v });
                }
            }
            if self.mode == Mode::Partite {
                for (k, part) in self.parts.iter().enumerate() {
                    let count = e.vertices.iter().filter(|v| part.contains(v)).count();
                    if count != 1 {
                        out.push(Violation::EdgeCrossesPart {
                            edge: e.id,
                            part: k,
                            count,
                        });
                    }
                }
            }
            if e.color >= self.num_colors {
                out.push(Violation::ColorOutOfRange {
                    edge: e.id,
                    color: e.color,
                    f: self.num_colors,
                });
            }
        }
        for color in 0..self.class_spans.len() {
            let class = self.class(color);
            let size_ok = if self.partial {
                class.len() <= self.t
            } else {
                class.len() == self.t
            };
            if !size_ok && color < self.num_colors {
                out.push(Violation::ClassSize {
                    color,
                    size: class.len(),
                    t: self.t,
                });
            }
            'pairs: for i in 0..class.len() {
                for j in i + 1..class.len() {
                    if !class[i].disjoint_from(&class[j]) {
                        out.push(Violation::ClassNotMatching {
                            color,
                            first: class[i].id,
                            second: class[j].id,
                        });
                        break 'pairs; // one witness pair per class is enough
                    }
                }
            }
        }
        out
    }

    /// Number of edges containing every vertex of `set`.
    ///
    /// `set` is treated as a vertex set (duplicates ignored); it must be
    /// nonempty. Sets larger than `r` fit in no edge and count 0.
    pub fn degree(&self, set: &[VertexId]) -> Result<usize, crate::solve::SolveError> {
        let set = normalize_set(set)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| e.contains_all(&set))
            .count())
    }

    /// Link of `set`: the (r - |set|)-uniform multi-hypergraph whose edges
    /// are `e \ set` over all edges `e ⊇ set`, with multiplicity preserved.
    /// Requires `1 <= |set| < r`.
    pub fn link(&self, set: &[VertexId]) -> Result<Hypergraph, crate::solve::SolveError> {
        let set = normalize_set(set)?;
        if set.len() >= self.r {
            return Err(crate::solve::SolveError::SubsetTooLarge {
                size: set.len(),
                r: self.r,
            });
        }
        let vertices: BTreeSet<VertexId> = self
            .vertices
            .iter()
            .copied()
            .filter(|v| !set.contains(v))
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| e.contains_all(&set))
            .map(|e| {
                e.vertices
                    .iter()
                    .copied()
                    .filter(|v| !set.contains(v))
                    .collect()
            })
            .collect();
        Ok(Hypergraph::new(vertices, edges))
    }

    /// Keeps only edges passing the predicate. Empty classes are dropped and
    /// surviving colors are renumbered compactly in ascending original order;
    /// edge ids are preserved. The result is flagged partial whenever some
    /// class ends up below `t` edges.
    pub fn restrict(&self, mut keep: impl FnMut(&ColoredEdge) -> bool) -> ColoredHypergraph {
        let mut classes: Vec<Vec<ColoredEdge>> = Vec::new();
        for color in 0..self.class_spans.len() {
            let kept: Vec<ColoredEdge> = self
                .class(color)
                .iter()
                .filter(|e| keep(e))
                .cloned()
                .collect();
            if !kept.is_empty() {
                classes.push(kept);
            }
        }
        let mut edges = Vec::new();
        let mut shrank = false;
        for (new_color, class) in classes.into_iter().enumerate() {
            if class.len() < self.t {
                shrank = true;
            }
            for mut e in class {
                e.color = new_color;
                edges.push(e);
            }
        }
        let partial = self.partial || shrank;
        Self::from_raw(
            self.mode,
            self.r,
            self.t,
            self.parts.clone(),
            self.vertices.clone(),
            edges,
            partial,
        )
    }

    /// Forgets the part structure: same vertices, edges, ids, and colors,
    /// but in general mode.
    pub fn as_general(&self) -> ColoredHypergraph {
        Self::from_raw_with_colors(
            Mode::General,
            self.r,
            self.t,
            Vec::new(),
            self.vertices.clone(),
            self.edges.clone(),
            self.num_colors,
            self.partial,
        )
    }

    /// Forgets colors, keeping edges in (color, id) order; edge index `i` of
    /// the result corresponds to `self.edges()[i]`.
    pub fn as_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(
            self.vertices.clone(),
            self.edges.iter().map(|e| e.vertices.clone()).collect(),
        )
    }

    /// Multiplicity of every distinct edge vertex set.
    pub fn multiplicity_map(&self) -> BTreeMap<Vec<VertexId>, usize> {
        let mut map = BTreeMap::new();
        for e in &self.edges {
            *map.entry(e.vertices.clone()).or_insert(0) += 1;
        }
        map
    }

    /// Multiplicity of one vertex set.
    pub fn multiplicity(&self, set: &[VertexId]) -> usize {
        let mut key = set.to_vec();
        key.sort_unstable();
        self.edges.iter().filter(|e| e.vertices == key).count()
    }
}

/// Assigns sequential ids to class-grouped edge tuples.
fn number_edges(classes: Vec<Vec<Vec<VertexId>>>) -> Vec<ColoredEdge> {
    let mut edges = Vec::new();
    let mut id = 0;
    for (color, class) in classes.into_iter().enumerate() {
        for vertices in class {
            edges.push(ColoredEdge { id, color, vertices });
            id += 1;
        }
    }
    edges
}

/// Sorts, dedups, and rejects an empty query set.
fn normalize_set(set: &[VertexId]) -> Result<Vec<VertexId>, crate::solve::SolveError> {
    if set.is_empty() {
        return Err(crate::solve::SolveError::EmptySubset);
    }
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    Ok(s)
}
