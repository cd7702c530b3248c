//! Cores, the level-by-level core decomposition, disjoint-core extraction,
//! and the greedy rainbow extension built on them.
//!
//! A nonempty set `S` with at most `r` vertices is a *core* when either the
//! covering number of its link exceeds `(t−1)(r+1)`, or `S` is a full r-set
//! of multiplicity at least `t`. Classes made of edges that each contain a
//! core admit a greedy rainbow extension: every core leaves so many
//! candidate edges that some unused color always remains.

use crate::graph::{ColorId, ColoredHypergraph, EdgeId, Hypergraph, VertexId};
use crate::proof::cover::{cover_partition, CoverError};
use crate::proof::{FinderOutcome, FinderRun, MathResult, ProofError, ProofFailure, Trace, UsageError};
use crate::solve::{RainbowCertificate, SolveError};
use std::collections::{BTreeMap, BTreeSet};

/// Which clause of the core definition holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoreKind {
    LinkCover { tau: usize },
    Multiplicity { degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Core {
    /// Sorted, distinct vertices.
    pub vertices: Vec<VertexId>,
    pub kind: CoreKind,
}

/// Evaluate both core clauses exactly. `None` means the set is not a core.
pub fn is_core(g: &ColoredHypergraph, set: &[VertexId]) -> Result<Option<Core>, SolveError> {
    let mut s: Vec<VertexId> = set.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.is_empty() {
        return Err(SolveError::EmptySubset);
    }
    if s.len() > g.r() {
        return Err(SolveError::SubsetTooLarge {
            size: s.len(),
            r: g.r(),
        });
    }
    if s.len() == g.r() {
        let degree = g.degree(&s)?;
        if degree >= g.t() {
            return Ok(Some(Core {
                vertices: s,
                kind: CoreKind::Multiplicity { degree },
            }));
        }
        return Ok(None);
    }
    let link = g.link(&s)?;
    let tau = link.min_vertex_cover()?.len();
    if tau > (g.t() - 1) * (g.r() + 1) {
        return Ok(Some(Core {
            vertices: s,
            kind: CoreKind::LinkCover { tau },
        }));
    }
    Ok(None)
}

/// Outcome of the covering-number shortcut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObservationOutcome {
    pub tau: usize,
    pub certificate: Option<RainbowCertificate>,
}

/// If the covering number exceeds `rt(t−1)`, a maximum matching is larger
/// than `t(t−1)` and therefore spans at least `t` colors; return one edge of
/// each of the first `t` colors. Otherwise no certificate.
pub fn observation_path(g: &ColoredHypergraph) -> Result<ObservationOutcome, SolveError> {
    let h = g.as_hypergraph();
    let tau = h.min_vertex_cover()?.len();
    if tau <= g.r() * g.t() * (g.t() - 1) {
        return Ok(ObservationOutcome {
            tau,
            certificate: None,
        });
    }
    let matching = h.max_matching();
    let mut per_color: BTreeMap<ColorId, EdgeId> = BTreeMap::new();
    for &index in &matching.edges {
        let edge = &g.edges()[index];
        per_color
            .entry(edge.color)
            .and_modify(|id| *id = (*id).min(edge.id))
            .or_insert(edge.id);
    }
    assert!(
        per_color.len() >= g.t(),
        "a matching above t(t-1) spans at least t colors"
    );
    let pairs: Vec<(ColorId, EdgeId)> = per_color.into_iter().take(g.t()).collect();
    Ok(ObservationOutcome {
        tau,
        certificate: Some(RainbowCertificate::new(pairs)),
    })
}

/// One family: a set shared by every edge listed under it. The same set may
/// appear several times with disjoint edge lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyEntry {
    pub set: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

/// Level-`i` partition of the edge set: spilled edges, edges with a recorded
/// core, and families of edges sharing a non-core i-set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreDecomposition {
    pub level: usize,
    pub spill: Vec<EdgeId>,
    pub hatted: Vec<(EdgeId, Core)>,
    pub families: Vec<FamilyEntry>,
}

impl CoreDecomposition {
    /// Check the level's guarantees: the three collections partition the
    /// edges, the spill is small, recorded cores are contained and real, and
    /// every family is large and shared.
    pub fn check(&self, g: &ColoredHypergraph) -> Result<(), String> {
        let m = g.edge_count();
        let mut seen: BTreeSet<EdgeId> = BTreeSet::new();
        let mut mark = |id: EdgeId| -> Result<(), String> {
            if g.edge(id).is_none() {
                return Err(format!("unknown edge id {id}"));
            }
            if !seen.insert(id) {
                return Err(format!("edge {id} appears twice in the partition"));
            }
            Ok(())
        };
        for &id in &self.spill {
            mark(id)?;
        }
        for (id, core) in &self.hatted {
            mark(*id)?;
            let edge = g.edge(*id).expect("marked");
            if !edge.contains_all(&core.vertices) {
                return Err(format!("edge {id} does not contain its recorded core"));
            }
            match is_core(g, &core.vertices) {
                Ok(Some(_)) => {}
                Ok(None) => return Err(format!("recorded core of edge {id} is not a core")),
                Err(e) => return Err(format!("core re-check failed: {e}")),
            }
        }
        for family in &self.families {
            if family.set.len() != self.level {
                return Err(format!(
                    "family set {:?} has size {}, expected level {}",
                    family.set,
                    family.set.len(),
                    self.level
                ));
            }
            for &id in &family.edges {
                mark(id)?;
                let edge = g.edge(id).expect("marked");
                if !edge.contains_all(&family.set) {
                    return Err(format!("edge {id} does not contain its family set"));
                }
            }
            // |E_S| ≥ |E| / (t(r+1))^{2i+1}, in exact integer arithmetic.
            let denom = (g.t() as u128 * (g.r() as u128 + 1)).pow(2 * self.level as u32 + 1);
            if (family.edges.len() as u128) * denom < m as u128 {
                return Err(format!(
                    "family {:?} of size {} is below the level-{} floor",
                    family.set,
                    family.edges.len(),
                    self.level
                ));
            }
        }
        if seen.len() != m {
            return Err(format!("partition covers {} of {m} edges", seen.len()));
        }
        // |E'^(i)| ≤ i|E| / (t(r+1)).
        let denom = g.t() as u128 * (g.r() as u128 + 1);
        if (self.spill.len() as u128) * denom > (self.level as u128) * (m as u128) {
            return Err(format!(
                "spill of {} exceeds the level-{} allowance",
                self.spill.len(),
                self.level
            ));
        }
        Ok(())
    }
}

/// Run the decomposition for levels 1..r. Requires `τ(G) ≤ rt(t−1)`; above
/// that the covering-number shortcut applies instead and the partition step
/// reports a precondition failure.
pub fn core_decomposition(
    g: &ColoredHypergraph,
) -> Result<MathResult<Vec<CoreDecomposition>>, ProofError> {
    let h = g.as_hypergraph();
    let edge_ids: Vec<EdgeId> = g.edges().iter().map(|e| e.id).collect();
    let first = match cover_partition(&h, g.r() * g.t() * (g.t() - 1), g.t() * (g.r() + 1)) {
        Ok(p) => p,
        Err(CoverError::TauTooLarge { tau, bound, cover }) => {
            return Ok(Err(ProofFailure::CoverPrecondition { tau, bound, cover }))
        }
        Err(CoverError::Solver(e)) => return Err(e.into()),
    };
    let mut spill: Vec<EdgeId> = first.spill.iter().map(|&i| edge_ids[i]).collect();
    let mut hatted: Vec<(EdgeId, Core)> = Vec::new();
    let mut families: Vec<FamilyEntry> = Vec::new();
    for (&v, class) in &first.kept {
        let ids: Vec<EdgeId> = class.iter().map(|&i| edge_ids[i]).collect();
        match is_core(g, &[v])? {
            Some(core) => hatted.extend(ids.into_iter().map(|id| (id, core.clone()))),
            None => families.push(FamilyEntry {
                set: vec![v],
                edges: ids,
            }),
        }
    }
    let mut levels = vec![CoreDecomposition {
        level: 1,
        spill,
        hatted,
        families,
    }];

    for i in 1..g.r() {
        let prev = levels.last().expect("level 1 exists");
        spill = prev.spill.clone();
        hatted = prev.hatted.clone();
        families = Vec::new();
        for family in &prev.families {
            let link_vertices: BTreeSet<VertexId> = g
                .vertices()
                .iter()
                .copied()
                .filter(|v| !family.set.contains(v))
                .collect();
            let link_edges: Vec<Vec<VertexId>> = family
                .edges
                .iter()
                .map(|&id| {
                    let edge = g.edge(id).expect("family edges exist");
                    edge.vertices
                        .iter()
                        .copied()
                        .filter(|v| !family.set.contains(v))
                        .collect()
                })
                .collect();
            let link = Hypergraph::new(link_vertices, link_edges);
            let p = match cover_partition(&link, (g.t() - 1) * (g.r() + 1), g.t() * (g.r() + 1))
            {
                Ok(p) => p,
                Err(CoverError::TauTooLarge { tau, bound, cover }) => {
                    return Ok(Err(ProofFailure::CoverPrecondition { tau, bound, cover }))
                }
                Err(CoverError::Solver(e)) => return Err(e.into()),
            };
            spill.extend(p.spill.iter().map(|&j| family.edges[j]));
            for (&v, class) in &p.kept {
                let mut grown = family.set.clone();
                grown.push(v);
                grown.sort_unstable();
                let ids: Vec<EdgeId> = class.iter().map(|&j| family.edges[j]).collect();
                match is_core(g, &grown)? {
                    Some(core) => hatted.extend(ids.into_iter().map(|id| (id, core.clone()))),
                    None => families.push(FamilyEntry {
                        set: grown,
                        edges: ids,
                    }),
                }
            }
        }
        levels.push(CoreDecomposition {
            level: i + 1,
            spill,
            hatted,
            families,
        });
    }
    Ok(Ok(levels))
}

/// `t` pairwise disjoint cores read off one color class that avoids the
/// final spill.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointCores {
    pub class: ColorId,
    /// One core per class edge, in edge-id order.
    pub cores: Vec<Core>,
    pub levels: Vec<CoreDecomposition>,
}

/// Scan the color classes for one with no spilled edge whose every edge
/// carries a verified core; disjointness is inherited from the class being a
/// matching.
pub fn find_disjoint_cores(
    g: &ColoredHypergraph,
) -> Result<MathResult<DisjointCores>, ProofError> {
    let levels = match core_decomposition(g)? {
        Ok(levels) => levels,
        Err(failure) => return Ok(Err(failure)),
    };
    extract_disjoint_cores(g, levels)
}

fn extract_disjoint_cores(
    g: &ColoredHypergraph,
    levels: Vec<CoreDecomposition>,
) -> Result<MathResult<DisjointCores>, ProofError> {
    let last = levels.last().expect("at least one level");
    let spilled: BTreeSet<EdgeId> = last.spill.iter().copied().collect();
    let recorded: BTreeMap<EdgeId, &Core> = last.hatted.iter().map(|(id, c)| (*id, c)).collect();
    let family_set: BTreeMap<EdgeId, &FamilyEntry> = last
        .families
        .iter()
        .flat_map(|f| f.edges.iter().map(move |&id| (id, f)))
        .collect();
    let mut classes_with_spill = 0;
    let mut classes_with_weak_cores = 0;
    'classes: for color in 0..g.num_colors() {
        let class = g.class(color);
        if class.iter().any(|e| spilled.contains(&e.id)) {
            classes_with_spill += 1;
            continue;
        }
        let mut cores = Vec::with_capacity(class.len());
        for edge in class {
            let candidate: Vec<VertexId> = match recorded.get(&edge.id) {
                Some(core) => core.vertices.clone(),
                None => {
                    family_set
                        .get(&edge.id)
                        .expect("every unspilled edge is recorded or in a family")
                        .set
                        .clone()
                }
            };
            match is_core(g, &candidate)? {
                Some(core) => cores.push(core),
                None => {
                    classes_with_weak_cores += 1;
                    continue 'classes;
                }
            }
        }
        for (i, a) in cores.iter().enumerate() {
            for b in cores.iter().skip(i + 1) {
                debug_assert!(
                    a.vertices.iter().all(|v| !b.vertices.contains(v)),
                    "cores inside a matching are disjoint"
                );
            }
        }
        return Ok(Ok(DisjointCores {
            class: color,
            cores,
            levels,
        }));
    }
    Ok(Err(ProofFailure::DisjointCores {
        classes_with_spill,
        classes_with_weak_cores,
        total_classes: g.num_colors(),
    }))
}

/// Greedily build a rainbow t-matching, one edge per core. At each step the
/// chosen edge must contain its core, avoid every previously chosen edge and
/// every later core, and carry an unused color; the smallest such color and
/// then the smallest edge id win.
pub fn extend_from_cores(
    g: &ColoredHypergraph,
    cores: &[Core],
) -> Result<MathResult<RainbowCertificate>, ProofError> {
    if cores.len() != g.t() {
        return Err(UsageError::WrongCoreCount {
            expected: g.t(),
            got: cores.len(),
        }
        .into());
    }
    for (index, core) in cores.iter().enumerate() {
        if is_core(g, &core.vertices)?.is_none() {
            return Ok(Err(ProofFailure::CoreCheck { index }));
        }
        for later in &cores[index + 1..] {
            if !core.vertices.iter().all(|v| !later.vertices.contains(v)) {
                return Ok(Err(ProofFailure::CoreCheck { index }));
            }
        }
    }
    let mut chosen: Vec<(ColorId, EdgeId)> = Vec::with_capacity(g.t());
    let mut used_colors: BTreeSet<ColorId> = BTreeSet::new();
    let mut occupied: BTreeSet<VertexId> = BTreeSet::new();
    for (step, core) in cores.iter().enumerate() {
        let mut forbidden = occupied.clone();
        for later in &cores[step + 1..] {
            forbidden.extend(later.vertices.iter().copied());
        }
        let candidates: Vec<_> = g
            .edges()
            .iter()
            .filter(|e| {
                e.contains_all(&core.vertices)
                    && e.vertices.iter().all(|v| !forbidden.contains(v))
            })
            .collect();
        let pick = candidates
            .iter()
            .filter(|e| !used_colors.contains(&e.color))
            .min_by_key(|e| (e.color, e.id));
        let Some(edge) = pick else {
            return Ok(Err(ProofFailure::Extend {
                step,
                candidates: candidates.len(),
            }));
        };
        chosen.push((edge.color, edge.id));
        used_colors.insert(edge.color);
        occupied.extend(edge.vertices.iter().copied());
    }
    let certificate = RainbowCertificate::new(chosen);
    debug_assert!(certificate.verify(g, g.t()).is_ok());
    Ok(Ok(certificate))
}

/// Full pipeline: covering-number shortcut, core decomposition, disjoint
/// cores, greedy extension. Succeeds for every instance with enough colors;
/// below the threshold any stage may fail, and the failure is returned with
/// the stage trace.
pub fn theorem1_find(g: &ColoredHypergraph) -> Result<FinderRun, ProofError> {
    let mut trace = Trace::default();
    let threshold = g.r() * g.t() * (g.t() - 1);
    let obs = observation_path(g)?;
    if let Some(certificate) = obs.certificate {
        trace.push(
            "observation",
            "found",
            &[("tau", obs.tau as u64), ("threshold", threshold as u64)],
        );
        return Ok(FinderRun {
            outcome: FinderOutcome::Found(certificate),
            trace,
        });
    }
    trace.push(
        "observation",
        "covering number within threshold, continuing",
        &[("tau", obs.tau as u64), ("threshold", threshold as u64)],
    );
    let levels = match core_decomposition(g)? {
        Ok(levels) => levels,
        Err(failure) => {
            trace.push("decomposition", "failed", &[]);
            return Ok(FinderRun {
                outcome: FinderOutcome::Failed(failure),
                trace,
            });
        }
    };
    let last = levels.last().expect("levels run 1..r");
    trace.push(
        "decomposition",
        "partitioned",
        &[
            ("levels", levels.len() as u64),
            ("spill", last.spill.len() as u64),
            ("recorded_cores", last.hatted.len() as u64),
            ("families", last.families.len() as u64),
        ],
    );
    let found = match extract_disjoint_cores(g, levels)? {
        Ok(found) => found,
        Err(failure) => {
            trace.push("disjoint_cores", "no usable class", &[]);
            return Ok(FinderRun {
                outcome: FinderOutcome::Failed(failure),
                trace,
            });
        }
    };
    trace.push(
        "disjoint_cores",
        "selected",
        &[
            ("class", found.class as u64),
            ("cores", found.cores.len() as u64),
        ],
    );
    match extend_from_cores(g, &found.cores)? {
        Ok(certificate) => {
            trace.push("extend", "completed", &[("size", certificate.len() as u64)]);
            Ok(FinderRun {
                outcome: FinderOutcome::Found(certificate),
                trace,
            })
        }
        Err(failure) => {
            trace.push("extend", "no candidate with an unused color", &[]);
            Ok(FinderRun {
                outcome: FinderOutcome::Failed(failure),
                trace,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructs::tight_rainbow_free;

    /// t disjoint edges in distinct colors, padded to full t-matchings on
    /// fresh vertices so the coloring stays proper.
    fn disjoint_distinct_colors(r: usize, t: usize, colors: usize) -> ColoredHypergraph {
        let mut classes = Vec::new();
        let mut next: VertexId = 0;
        for _ in 0..colors {
            let mut class = Vec::new();
            for _ in 0..t {
                let edge: Vec<VertexId> = (0..r).map(|_| {
                    let v = next;
                    next += 1;
                    v
                })
                .collect();
                class.push(edge);
            }
            classes.push(class);
        }
        ColoredHypergraph::new_general(r, t, BTreeSet::new(), classes)
    }

    #[test]
    fn parallel_bundle_is_a_multiplicity_core() {
        // Two identical classes put multiplicity 2 on each 2-set.
        let g = ColoredHypergraph::new_general(
            2,
            2,
            BTreeSet::new(),
            vec![
                vec![vec![0, 1], vec![2, 3]],
                vec![vec![0, 1], vec![2, 3]],
            ],
        );
        let core = is_core(&g, &[0, 1]).unwrap().expect("multiplicity 2 >= t");
        assert_eq!(core.kind, CoreKind::Multiplicity { degree: 2 });
    }

    #[test]
    fn sparse_links_are_not_cores() {
        let g = tight_rainbow_free(2, 2);
        assert!(is_core(&g, &[0]).unwrap().is_none());
        assert!(is_core(&g, &[0, 2]).unwrap().is_none());
        assert!(matches!(is_core(&g, &[]), Err(SolveError::EmptySubset)));
        assert!(matches!(
            is_core(&g, &[0, 1, 2]),
            Err(SolveError::SubsetTooLarge { size: 3, r: 2 })
        ));
    }

    #[test]
    fn crowded_link_is_a_core() {
        // Vertex 0 sits in (t−1)(r+1)+1 = 4 pairwise disjoint pairs — the
        // link is 4 disjoint singletons with covering number 4 > 3. Pad each
        // pair into a 2-matching with fresh vertices to keep classes proper.
        let mut classes = Vec::new();
        for j in 0..4u32 {
            classes.push(vec![vec![0, 10 + j], vec![100 + j, 200 + j]]);
        }
        let g = ColoredHypergraph::new_general(2, 2, BTreeSet::new(), classes);
        let core = is_core(&g, &[0]).unwrap().expect("link needs 4 cover vertices");
        assert_eq!(core.kind, CoreKind::LinkCover { tau: 4 });
    }

    #[test]
    fn observation_succeeds_on_many_disjoint_colors() {
        // 2t(t−1)+1 = 5 colors, each a matching of 2 fresh disjoint edges:
        // all 10 edges are pairwise disjoint, so τ = 10 > rt(t−1) = 4.
        let g = disjoint_distinct_colors(2, 2, 5);
        let obs = observation_path(&g).unwrap();
        assert_eq!(obs.tau, 10);
        let cert = obs.certificate.expect("threshold exceeded");
        assert!(cert.verify(&g, 2).is_ok());
    }

    #[test]
    fn observation_declines_small_covers() {
        let g = tight_rainbow_free(2, 2);
        let obs = observation_path(&g).unwrap();
        assert_eq!(obs.tau, 2);
        assert!(obs.certificate.is_none());

        let empty = ColoredHypergraph::new_general(2, 2, BTreeSet::new(), vec![]);
        assert!(observation_path(&empty).unwrap().certificate.is_none());
    }

    #[test]
    fn decomposition_levels_check_on_the_construction() {
        for (r, t) in [(2usize, 2usize), (2, 3), (3, 2)] {
            let g = tight_rainbow_free(r, t);
            let levels = core_decomposition(&g).unwrap().expect("tau is small");
            assert_eq!(levels.len(), r);
            for level in &levels {
                level.check(&g).unwrap();
            }
        }
    }

    #[test]
    fn decomposition_rejects_large_covers() {
        let g = disjoint_distinct_colors(2, 2, 5);
        match core_decomposition(&g).unwrap() {
            Err(ProofFailure::CoverPrecondition { tau, bound, cover }) => {
                assert_eq!(tau, 10);
                assert_eq!(bound, 4);
                assert_eq!(cover.len(), 10);
            }
            other => panic!("tau = 10 exceeds rt(t-1) = 4, got {other:?}"),
        }
    }

    #[test]
    fn parallel_bundles_give_disjoint_multiplicity_cores() {
        // Two identical classes of two disjoint edges: multiplicity 2
        // everywhere, no spill small enough to block both classes.
        let g = ColoredHypergraph::new_general(
            2,
            2,
            BTreeSet::new(),
            vec![
                vec![vec![0, 1], vec![2, 3]],
                vec![vec![0, 1], vec![2, 3]],
            ],
        );
        let found = find_disjoint_cores(&g).unwrap().expect("bundles are cores");
        assert_eq!(found.cores.len(), 2);
        for core in &found.cores {
            assert!(matches!(core.kind, CoreKind::Multiplicity { degree: 2 }));
        }
        let cert = extend_from_cores(&g, &found.cores)
            .unwrap()
            .expect("distinct bundle colors");
        assert!(cert.verify(&g, 2).is_ok());
    }

    #[test]
    fn construction_classes_have_no_cores() {
        // Every edge has multiplicity 1 < t and every link is sparse, so
        // whatever the spill routing, no class can carry verified cores.
        let g = tight_rainbow_free(2, 2);
        match find_disjoint_cores(&g).unwrap() {
            Err(ProofFailure::DisjointCores { total_classes, .. }) => {
                assert_eq!(total_classes, 2);
            }
            other => panic!("no cores exist in this instance: {other:?}"),
        }
    }

    #[test]
    fn extension_avoids_earlier_colors() {
        // Both parallel bundles carry colors {0,1}; the second pick must
        // take color 1.
        let g = ColoredHypergraph::new_general(
            2,
            2,
            BTreeSet::new(),
            vec![
                vec![vec![0, 1], vec![2, 3]],
                vec![vec![0, 1], vec![2, 3]],
            ],
        );
        let cores = vec![
            Core {
                vertices: vec![0, 1],
                kind: CoreKind::Multiplicity { degree: 2 },
            },
            Core {
                vertices: vec![2, 3],
                kind: CoreKind::Multiplicity { degree: 2 },
            },
        ];
        let cert = extend_from_cores(&g, &cores).unwrap().unwrap();
        assert_eq!(cert.pairs, vec![(0, 0), (1, 3)]);
    }

    #[test]
    fn extension_guards_its_inputs() {
        let g = tight_rainbow_free(2, 2);
        let fake = Core {
            vertices: vec![0],
            kind: CoreKind::LinkCover { tau: 99 },
        };
        assert!(matches!(
            extend_from_cores(&g, &[fake.clone()]),
            Err(ProofError::Usage(UsageError::WrongCoreCount { expected: 2, got: 1 }))
        ));
        let outcome = extend_from_cores(&g, &[fake.clone(), fake]).unwrap();
        assert_eq!(outcome, Err(ProofFailure::CoreCheck { index: 0 }));
    }

    #[test]
    fn pipeline_finds_by_observation() {
        let g = disjoint_distinct_colors(2, 2, 5);
        let run = theorem1_find(&g).unwrap();
        let cert = run.outcome.certificate().expect("observation path fires");
        assert!(cert.verify(&g, 2).is_ok());
        assert_eq!(run.trace.stages[0].stage, "observation");
        assert_eq!(run.trace.stages[0].outcome, "found");
    }

    #[test]
    fn pipeline_fails_honestly_below_threshold() {
        let g = tight_rainbow_free(2, 2);
        let run = theorem1_find(&g).unwrap();
        assert!(!run.outcome.is_found());
        assert!(run.trace.stages.len() >= 2);
    }

    #[test]
    fn pipeline_finds_through_cores() {
        let g = ColoredHypergraph::new_general(
            2,
            2,
            BTreeSet::new(),
            vec![
                vec![vec![0, 1], vec![2, 3]],
                vec![vec![0, 1], vec![2, 3]],
            ],
        );
        let run = theorem1_find(&g).unwrap();
        let cert = run.outcome.certificate().expect("multiplicity cores");
        assert!(cert.verify(&g, 2).is_ok());
    }
}
