//! Exact small-parameter extremal values by exhaustive search: the largest
//! number of color classes an instance can carry while admitting no rainbow
//! t-matching.
//!
//! The search adds one color class at a time. Rainbow-freeness is monotone
//! downward (removing classes cannot create a rainbow matching), so any node
//! that already contains a rainbow t-matching is pruned with its whole
//! subtree, and scanning the class count upward can stop at the first count
//! with no witness. Isomorphic nodes are merged through a canonical form
//! that is invariant under part-wise vertex relabelings.

use crate::graph::{ColoredHypergraph, Mode, VertexId};
use crate::naive::classes_have_rainbow;
use std::collections::BTreeSet;

/// Default ceiling on explored nodes before a search declares itself
/// inconclusive.
pub const NODE_LIMIT: u64 = 100_000_000;

/// A color class as a sorted list of sorted edge tuples.
type Class = Vec<Vec<VertexId>>;

/// Canonical encoding of an instance's classes: classes sorted, each edge
/// flattened to sorted (part, label) pairs under a first-use relabeling
/// minimized over traversal orders. Equal forms mean isomorphic instances.
pub type CanonicalForm = Vec<Vec<Vec<u32>>>;

/// Search knobs. `use_canon` turns isomorphism rejection on; turning it off
/// enumerates raw class multisets instead (slower, used to cross-check the
/// canonical machinery).
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub node_limit: u64,
    pub use_canon: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_limit: NODE_LIMIT,
            use_canon: true,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Nodes (partial instances) examined.
    pub nodes: u64,
    /// Nodes rejected as isomorphic duplicates.
    pub duplicate_hits: u64,
}

/// Outcome of one rainbow-free existence search.
#[derive(Debug, Clone)]
pub enum SearchOutcome {
    /// A rainbow-free instance with the requested number of classes.
    Witness(ColoredHypergraph),
    /// No such instance exists — the search space was exhausted.
    Exhausted,
    /// The node limit was hit before the space was exhausted.
    Inconclusive { nodes: u64 },
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&ColoredHypergraph> {
        match self {
            SearchOutcome::Witness(g) => Some(g),
            _ => None,
        }
    }
}

/// What to search for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalQuery {
    pub mode: Mode,
    pub r: usize,
    pub t: usize,
    /// Part-size cap (partite) or vertex-pool cap (general).
    pub s: usize,
    /// Largest class count to try.
    pub f_max: usize,
}

/// Largest class count admitting a rainbow-free witness, with the witness.
#[derive(Debug, Clone)]
pub struct ExtremalResult {
    /// Largest `f <= f_max` with a confirmed rainbow-free witness (0 when
    /// even one class forces a rainbow matching).
    pub value: usize,
    pub witness: Option<ColoredHypergraph>,
    /// True when the witness sits at `f_max` itself: the true value may be
    /// larger, and `value` is only a lower bound.
    pub ceiling_hit: bool,
    /// True when a node limit stopped the scan before an exhaustive "none".
    pub inconclusive: bool,
    pub stats: SearchStats,
}

/// Search for a rainbow-free instance with exactly `f` classes, parts (or
/// pool) capped at `s`.
pub fn exists_rainbow_free(
    mode: Mode,
    r: usize,
    t: usize,
    s: usize,
    f: usize,
) -> (SearchOutcome, SearchStats) {
    exists_rainbow_free_with(mode, r, t, s, f, &SearchConfig::default())
}

pub fn exists_rainbow_free_with(
    mode: Mode,
    r: usize,
    t: usize,
    s: usize,
    f: usize,
    config: &SearchConfig,
) -> (SearchOutcome, SearchStats) {
    assert!(r >= 1 && t >= 1 && f >= 1, "degenerate query");
    assert!(s >= t, "parts of size {s} cannot hold a {t}-matching");
    let layout = Layout::new(mode, r, t, s, f);
    let pool = layout.candidate_classes();
    let mut engine = Engine {
        layout: &layout,
        pool: &pool,
        target: f,
        config,
        stats: SearchStats::default(),
        seen: vec![BTreeSet::new(); f + 1],
        witness: None,
        exhausted: true,
    };
    let mut chosen: Vec<usize> = Vec::new();
    engine.descend(&mut chosen);
    let outcome = match (engine.witness, engine.exhausted) {
        (Some(w), _) => SearchOutcome::Witness(w),
        (None, true) => SearchOutcome::Exhausted,
        (None, false) => SearchOutcome::Inconclusive {
            nodes: engine.stats.nodes,
        },
    };
    (outcome, engine.stats)
}

/// Scan `f = 1..=f_max` upward, keeping the last witness. Stops at the first
/// class count with no witness: a rainbow-free instance restricted to fewer
/// classes stays rainbow-free, so larger counts cannot succeed either.
pub fn exact_f_s(query: &ExtremalQuery) -> ExtremalResult {
    exact_f_s_with(query, &SearchConfig::default())
}

pub fn exact_f_s_with(query: &ExtremalQuery, config: &SearchConfig) -> ExtremalResult {
    assert!(query.f_max >= 1, "f_max must be positive");
    let mut result = ExtremalResult {
        value: 0,
        witness: None,
        ceiling_hit: false,
        inconclusive: false,
        stats: SearchStats::default(),
    };
    for f in 1..=query.f_max {
        let (outcome, stats) =
            exists_rainbow_free_with(query.mode, query.r, query.t, query.s, f, config);
        result.stats.nodes += stats.nodes;
        result.stats.duplicate_hits += stats.duplicate_hits;
        match outcome {
            SearchOutcome::Witness(w) => {
                result.value = f;
                result.witness = Some(w);
                result.ceiling_hit = f == query.f_max;
            }
            SearchOutcome::Exhausted => break,
            SearchOutcome::Inconclusive { .. } => {
                result.inconclusive = true;
                break;
            }
        }
    }
    result
}

/// One cap's pair of extremal values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainRow {
    pub s: usize,
    pub partite: usize,
    pub general: usize,
}

/// Extremal values along an ascending list of caps. The general column uses
/// a pool of `r·s` vertices, the total vertex budget of the partite query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub rows: Vec<ChainRow>,
    pub partite_nondecreasing: bool,
    pub general_nondecreasing: bool,
    /// Every partite witness is a general witness, so the general column
    /// must dominate row by row.
    pub general_dominates: bool,
}

pub fn chain_check(r: usize, t: usize, s_list: &[usize]) -> ChainReport {
    assert!(s_list.windows(2).all(|w| w[0] <= w[1]), "caps must ascend");
    let f_max = (1usize << (r - 1)) * (t - 1) + 2;
    let rows: Vec<ChainRow> = s_list
        .iter()
        .map(|&s| {
            let partite = exact_f_s(&ExtremalQuery {
                mode: Mode::Partite,
                r,
                t,
                s,
                f_max,
            });
            let general = exact_f_s(&ExtremalQuery {
                mode: Mode::General,
                r,
                t,
                s: r * s,
                f_max,
            });
            ChainRow {
                s,
                partite: partite.value,
                general: general.value,
            }
        })
        .collect();
    ChainReport {
        partite_nondecreasing: rows.windows(2).all(|w| w[0].partite <= w[1].partite),
        general_nondecreasing: rows.windows(2).all(|w| w[0].general <= w[1].general),
        general_dominates: rows.iter().all(|row| row.general >= row.partite),
        rows,
    }
}

/// Canonical form of an instance's color classes. Two instances get equal
/// forms exactly when some part-preserving vertex relabeling (any relabeling
/// in general mode) plus a class reordering maps one to the other.
pub fn canonical_form(g: &ColoredHypergraph) -> CanonicalForm {
    let classes: Vec<Class> = (0..g.num_colors())
        .map(|c| {
            let mut class: Class = g.class(c).iter().map(|e| e.vertices.clone()).collect();
            class.sort();
            class
        })
        .collect();
    let part_of = |v: VertexId| g.part_of(v).unwrap_or(0);
    canon_classes(&classes, &part_of)
}

/// Vertex layout of the search universe.
struct Layout {
    mode: Mode,
    r: usize,
    t: usize,
    /// Vertices per part (partite) or in the whole pool (general). Capped:
    /// `f` classes touch at most `f·t` vertices of a part, or `f·r·t` in
    /// total.
    width: usize,
}

impl Layout {
    fn new(mode: Mode, r: usize, t: usize, s: usize, f: usize) -> Layout {
        let width = match mode {
            Mode::Partite => s.min(f * t),
            Mode::General => s.min(f * r * t),
        };
        Layout { mode, r, t, width }
    }

    fn part_of(&self, v: VertexId) -> usize {
        match self.mode {
            Mode::Partite => v as usize / self.width,
            Mode::General => 0,
        }
    }

    /// Every t-matching over the layout, each class sorted, the list sorted.
    fn candidate_classes(&self) -> Vec<Class> {
        let edges = match self.mode {
            Mode::Partite => {
                // One vertex per part; part k occupies ids k·width..(k+1)·width.
                let mut acc: Vec<Vec<VertexId>> = vec![Vec::new()];
                for k in 0..self.r {
                    let offset = (k * self.width) as VertexId;
                    acc = acc
                        .into_iter()
                        .flat_map(|prefix| {
                            (0..self.width as VertexId).map(move |j| {
                                let mut e = prefix.clone();
                                e.push(offset + j);
                                e
                            })
                        })
                        .collect();
                }
                acc
            }
            Mode::General => {
                let pool: Vec<VertexId> = (0..self.width as VertexId).collect();
                all_subsets(&pool, self.r)
            }
        };
        let mut classes = Vec::new();
        let mut picked: Vec<usize> = Vec::new();
        collect_matchings(&edges, self.t, 0, &mut picked, &mut classes);
        classes.sort();
        classes
    }

    fn build(&self, pool: &[Class], chosen: &[usize]) -> ColoredHypergraph {
        let classes: Vec<Class> = chosen.iter().map(|&i| pool[i].clone()).collect();
        match self.mode {
            Mode::Partite => {
                let parts: Vec<BTreeSet<VertexId>> = (0..self.r)
                    .map(|k| {
                        let offset = (k * self.width) as VertexId;
                        (offset..offset + self.width as VertexId).collect()
                    })
                    .collect();
                ColoredHypergraph::new_partite(self.r, self.t, parts, classes)
            }
            Mode::General => ColoredHypergraph::new_general(
                self.r,
                self.t,
                (0..self.width as VertexId).collect(),
                classes,
            ),
        }
    }
}

fn all_subsets(pool: &[VertexId], r: usize) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn grow(
        pool: &[VertexId],
        r: usize,
        start: usize,
        cur: &mut Vec<VertexId>,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i]);
            grow(pool, r, i + 1, cur, out);
            cur.pop();
        }
    }
    grow(pool, r, 0, &mut cur, &mut out);
    out
}

fn collect_matchings(
    edges: &[Vec<VertexId>],
    t: usize,
    start: usize,
    picked: &mut Vec<usize>,
    out: &mut Vec<Class>,
) {
    if picked.len() == t {
        out.push(picked.iter().map(|&i| edges[i].clone()).collect());
        return;
    }
    for i in start..edges.len() {
        let disjoint = picked
            .iter()
            .all(|&j| edges[j].iter().all(|v| !edges[i].contains(v)));
        if disjoint {
            picked.push(i);
            collect_matchings(edges, t, i + 1, picked, out);
            picked.pop();
        }
    }
}

struct Engine<'a> {
    layout: &'a Layout,
    pool: &'a [Class],
    target: usize,
    config: &'a SearchConfig,
    stats: SearchStats,
    /// Per-depth canonical forms already explored.
    seen: Vec<BTreeSet<CanonicalForm>>,
    witness: Option<ColoredHypergraph>,
    exhausted: bool,
}

impl Engine<'_> {
    fn descend(&mut self, chosen: &mut Vec<usize>) {
        // With the canonical filter on, every candidate may follow every
        // node (duplicates collapse by isomorphism); without it, enumerate
        // each class multiset exactly once by extending nondecreasingly.
        let start = if self.config.use_canon {
            0
        } else {
            chosen.last().copied().unwrap_or(0)
        };
        for i in start..self.pool.len() {
            if self.witness.is_some() || !self.exhausted {
                return;
            }
            self.stats.nodes += 1;
            if self.stats.nodes > self.config.node_limit {
                self.exhausted = false;
                return;
            }
            chosen.push(i);
            let classes: Vec<Class> = chosen.iter().map(|&j| self.pool[j].clone()).collect();
            if classes_have_rainbow(&classes, self.layout.t) {
                chosen.pop();
                continue;
            }
            if chosen.len() == self.target {
                self.witness = Some(self.layout.build(self.pool, chosen));
                chosen.pop();
                return;
            }
            if self.config.use_canon {
                let layout = self.layout;
                let part_of = |v: VertexId| layout.part_of(v);
                let form = canon_classes(&classes, &part_of);
                if !self.seen[chosen.len()].insert(form) {
                    self.stats.duplicate_hits += 1;
                    chosen.pop();
                    continue;
                }
            }
            self.descend(chosen);
            chosen.pop();
        }
    }
}

/// Minimum, over class orders and per-class edge orders, of the first-use
/// relabeled encoding. The candidate relabelings are defined purely by
/// traversal structure, never by original labels, so isomorphic inputs
/// produce identical minima.
fn canon_classes(classes: &[Class], part_of: &dyn Fn(VertexId) -> usize) -> CanonicalForm {
    if classes.is_empty() {
        return Vec::new();
    }
    let mut best: Option<CanonicalForm> = None;
    let mut order: Vec<usize> = (0..classes.len()).collect();
    permute_orders(&mut order, 0, &mut |ord| {
        let labeler = Labeler {
            part_of,
            labels: Vec::new(),
            counters: Vec::new(),
        };
        explore_class(classes, ord, 0, Vec::new(), labeler, &mut best);
    });
    best.expect("nonempty class list yields a form")
}

fn permute_orders(order: &mut Vec<usize>, fixed: usize, f: &mut dyn FnMut(&[usize])) {
    if fixed == order.len() {
        f(order);
        return;
    }
    for i in fixed..order.len() {
        order.swap(fixed, i);
        permute_orders(order, fixed + 1, f);
        order.swap(fixed, i);
    }
}

#[derive(Clone)]
struct Labeler<'a> {
    part_of: &'a dyn Fn(VertexId) -> usize,
    /// (vertex, assigned label) pairs in assignment order.
    labels: Vec<(VertexId, u32)>,
    /// (part, next free label) pairs.
    counters: Vec<(usize, u32)>,
}

impl Labeler<'_> {
    fn get(&self, v: VertexId) -> Option<u32> {
        self.labels.iter().find(|&&(u, _)| u == v).map(|&(_, l)| l)
    }

    fn assign(&mut self, v: VertexId) -> u32 {
        let part = (self.part_of)(v);
        let slot = self.counters.iter_mut().find(|(p, _)| *p == part);
        let label = match slot {
            Some((_, next)) => {
                let l = *next;
                *next += 1;
                l
            }
            None => {
                self.counters.push((part, 1));
                0
            }
        };
        self.labels.push((v, label));
        label
    }

    /// Encode an edge, assigning fresh labels to unseen vertices in the
    /// given order. The encoding is the sorted list of (part, label) pairs,
    /// flattened.
    fn encode(&mut self, edge: &[VertexId], assignment_order: &[VertexId]) -> Vec<u32> {
        for &v in assignment_order {
            self.assign(v);
        }
        let mut pairs: Vec<(usize, u32)> = edge
            .iter()
            .map(|&v| ((self.part_of)(v), self.get(v).expect("assigned")))
            .collect();
        pairs.sort_unstable();
        pairs
            .into_iter()
            .flat_map(|(p, l)| [p as u32, l])
            .collect()
    }
}

/// Walk the classes in `ord` order; `acc` holds finished classes (each a
/// sorted edge list).
fn explore_class(
    classes: &[Class],
    ord: &[usize],
    ci: usize,
    acc: Vec<Vec<Vec<u32>>>,
    labeler: Labeler<'_>,
    best: &mut Option<CanonicalForm>,
) {
    if ci == ord.len() {
        let mut form = acc;
        form.sort();
        if best.as_ref().is_none_or(|b| form < *b) {
            *best = Some(form);
        }
        return;
    }
    let remaining: Vec<usize> = (0..classes[ord[ci]].len()).collect();
    explore_edges(classes, ord, ci, remaining, Vec::new(), acc, labeler, best);
}

#[allow(clippy::too_many_arguments)]
fn explore_edges(
    classes: &[Class],
    ord: &[usize],
    ci: usize,
    remaining: Vec<usize>,
    acc_class: Vec<Vec<u32>>,
    acc: Vec<Vec<Vec<u32>>>,
    labeler: Labeler<'_>,
    best: &mut Option<CanonicalForm>,
) {
    if remaining.is_empty() {
        let mut done = acc_class;
        done.sort();
        let mut acc2 = acc;
        acc2.push(done);
        explore_class(classes, ord, ci + 1, acc2, labeler, best);
        return;
    }
    let class = &classes[ord[ci]];
    for pos in 0..remaining.len() {
        let edge = &class[remaining[pos]];
        let mut rest = remaining.clone();
        rest.remove(pos);
        for assignment in assignment_orders(edge, &labeler) {
            let mut lab = labeler.clone();
            let encoded = lab.encode(edge, &assignment);
            let mut acc_class2 = acc_class.clone();
            acc_class2.push(encoded);
            explore_edges(
                classes,
                ord,
                ci,
                rest.clone(),
                acc_class2,
                acc.clone(),
                lab,
                best,
            );
        }
    }
}

/// All label-assignment orders for the edge's unseen vertices that can
/// produce distinct encodings: per part, every order of that part's unseen
/// vertices (label counters are independent across parts, so cross-part
/// order never matters). Valid partite edges have at most one vertex per
/// part, collapsing this to a single order.
fn assignment_orders(edge: &[VertexId], labeler: &Labeler<'_>) -> Vec<Vec<VertexId>> {
    let mut unseen_by_part: Vec<(usize, Vec<VertexId>)> = Vec::new();
    let mut covered: Vec<VertexId> = Vec::new();
    for &v in edge {
        if labeler.get(v).is_some() || covered.contains(&v) {
            continue;
        }
        covered.push(v);
        let part = (labeler.part_of)(v);
        match unseen_by_part.iter_mut().find(|(p, _)| *p == part) {
            Some((_, group)) => group.push(v),
            None => unseen_by_part.push((part, vec![v])),
        }
    }
    let mut orders: Vec<Vec<VertexId>> = vec![Vec::new()];
    for (_, group) in &unseen_by_part {
        let group_orders = permutations(group);
        orders = orders
            .into_iter()
            .flat_map(|prefix| {
                group_orders.iter().map(move |g| {
                    let mut o = prefix.clone();
                    o.extend(g.iter().copied());
                    o
                })
            })
            .collect();
    }
    orders
}

fn permutations(items: &[VertexId]) -> Vec<Vec<VertexId>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &head) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for tail in permutations(&rest) {
            let mut p = vec![head];
            p.extend(tail);
            out.push(p);
        }
    }
    out
}
