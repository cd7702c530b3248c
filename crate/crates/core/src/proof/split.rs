//! Randomized halving: color the vertices black and white, keep the classes
//! that split into an all-black half-matching and an all-white one, and
//! recurse on the two sides with half the class size each.
//!
//! A fixed class survives a uniform coloring with probability
//! `C(t,⌈t/2⌉)·2^{−rt}`, so enough colors make some attempt leave both
//! sides solvable. Sub-instances keep the original edge ids, so the combined
//! certificate refers to the input instance; colors are renumbered per side
//! and mapped back on the way up.

use crate::graph::{ColorId, ColoredEdge, ColoredHypergraph, EdgeId, Mode, VertexId};
use crate::proof::{FinderOutcome, FinderRun, ProofFailure, Trace};
use crate::solve::RainbowCertificate;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Attempts per recursion level before giving up.
pub const DEFAULT_SPLIT_BUDGET: u64 = 1000;

/// Colors whose class splits into exactly `⌊t/2⌋` all-black edges and
/// `⌈t/2⌉` all-white edges, ascending.
pub fn split_survivors(g: &ColoredHypergraph, black: &BTreeSet<VertexId>) -> Vec<ColorId> {
    let want_black = g.t() / 2;
    let want_white = g.t() - want_black;
    (0..g.num_colors())
        .filter(|&color| {
            let class = g.class(color);
            let blacks = class
                .iter()
                .filter(|e| e.vertices.iter().all(|v| black.contains(v)))
                .count();
            let whites = class
                .iter()
                .filter(|e| e.vertices.iter().all(|v| !black.contains(v)))
                .count();
            class.len() == g.t() && blacks == want_black && whites == want_white
        })
        .collect()
}

/// Search for a rainbow t-matching by repeated random halving. Every
/// recursion level draws at most `budget` colorings; the first attempt whose
/// black side and white side both succeed wins. Honest failure reports the
/// attempts spent at the top level and the best survivor count seen.
pub fn random_split_find(g: &ColoredHypergraph, seed: u64, budget: u64) -> FinderRun {
    let (result, effort) = split_worker(g, seed, budget);
    let mut trace = Trace::default();
    match result {
        Some(pairs) => {
            let certificate = RainbowCertificate::new(pairs);
            debug_assert!(certificate.verify(g, g.t()).is_ok());
            trace.push(
                "split",
                "both sides completed",
                &[
                    ("attempts", effort.attempts),
                    ("max_survivors", effort.max_survivors as u64),
                ],
            );
            FinderRun {
                outcome: FinderOutcome::Found(certificate),
                trace,
            }
        }
        None => {
            trace.push(
                "split",
                "budget exhausted",
                &[
                    ("attempts", effort.attempts),
                    ("max_survivors", effort.max_survivors as u64),
                ],
            );
            FinderRun {
                outcome: FinderOutcome::Failed(ProofFailure::SplitBudget {
                    attempts: effort.attempts,
                    max_survivors: effort.max_survivors,
                }),
                trace,
            }
        }
    }
}

struct SplitEffort {
    attempts: u64,
    max_survivors: usize,
}

/// Returns certificate pairs in the color space of `g` (original edge ids
/// are preserved through every level).
fn split_worker(
    g: &ColoredHypergraph,
    seed: u64,
    budget: u64,
) -> (Option<Vec<(ColorId, EdgeId)>>, SplitEffort) {
    let mut effort = SplitEffort {
        attempts: 0,
        max_survivors: 0,
    };
    if g.num_colors() < g.t() {
        return (None, effort);
    }
    if g.t() == 1 {
        let first = g.edges().first().map(|e| vec![(e.color, e.id)]);
        return (first, effort);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        effort.attempts += 1;
        let black: BTreeSet<VertexId> = g
            .vertices()
            .iter()
            .copied()
            .filter(|_| rng.gen::<bool>())
            .collect();
        let survivors = split_survivors(g, &black);
        effort.max_survivors = effort.max_survivors.max(survivors.len());
        if survivors.is_empty() {
            continue;
        }
        let black_side = restrict_to_side(g, &survivors, &black, g.t() / 2);
        let (found_black, _) = split_worker(&black_side, rng.gen::<u64>(), budget);
        let Some(pairs_black) = found_black else {
            continue;
        };
        let pairs_black: Vec<(ColorId, EdgeId)> = pairs_black
            .into_iter()
            .map(|(c, id)| (survivors[c], id))
            .collect();
        let used: BTreeSet<ColorId> = pairs_black.iter().map(|&(c, _)| c).collect();
        let white_colors: Vec<ColorId> = survivors
            .iter()
            .copied()
            .filter(|c| !used.contains(c))
            .collect();
        let white: BTreeSet<VertexId> = g
            .vertices()
            .iter()
            .copied()
            .filter(|v| !black.contains(v))
            .collect();
        let white_side = restrict_to_side(g, &white_colors, &white, g.t() - g.t() / 2);
        let (found_white, _) = split_worker(&white_side, rng.gen::<u64>(), budget);
        let Some(pairs_white) = found_white else {
            continue;
        };
        let mut pairs: Vec<(ColorId, EdgeId)> = pairs_white
            .into_iter()
            .map(|(c, id)| (white_colors[c], id))
            .collect();
        pairs.extend(pairs_black);
        return (Some(pairs), effort);
    }
    (None, effort)
}

/// Sub-instance on one side of a vertex 2-coloring: the listed colors become
/// classes 0,1,… holding only their edges that lie entirely in `side`, the
/// class size drops to `new_t`, and edge ids are preserved.
fn restrict_to_side(
    g: &ColoredHypergraph,
    colors: &[ColorId],
    side: &BTreeSet<VertexId>,
    new_t: usize,
) -> ColoredHypergraph {
    let mut edges = Vec::new();
    for (new_color, &old_color) in colors.iter().enumerate() {
        for e in g.class(old_color) {
            if e.vertices.iter().all(|v| side.contains(v)) {
                edges.push(ColoredEdge {
                    id: e.id,
                    color: new_color,
                    vertices: e.vertices.clone(),
                });
            }
        }
    }
    let parts = match g.mode() {
        Mode::Partite => g
            .parts()
            .iter()
            .map(|p| p.intersection(side).copied().collect())
            .collect(),
        Mode::General => Vec::new(),
    };
    ColoredHypergraph::from_raw(g.mode(), g.r(), new_t, parts, side.clone(), edges, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructs::tight_rainbow_free;

    fn one_class() -> ColoredHypergraph {
        ColoredHypergraph::new_general(
            2,
            2,
            BTreeSet::new(),
            vec![vec![vec![0, 1], vec![2, 3]]],
        )
    }

    #[test]
    fn monochromatic_colorings_kill_every_class() {
        let g = one_class();
        let all: BTreeSet<VertexId> = g.vertices().clone();
        assert!(split_survivors(&g, &all).is_empty());
        assert!(split_survivors(&g, &BTreeSet::new()).is_empty());
    }

    #[test]
    fn a_clean_halving_survives_and_mixed_edges_do_not() {
        let g = one_class();
        assert_eq!(split_survivors(&g, &[0, 1].into()), vec![0]);
        assert_eq!(split_survivors(&g, &[2, 3].into()), vec![0]);
        // Vertex 2 black and 3 white leaves edge [2,3] mixed.
        assert!(split_survivors(&g, &[0, 1, 2].into()).is_empty());
    }

    #[test]
    fn survivor_census_over_every_coloring() {
        // Exactly 2 of the 16 colorings split the single class: black
        // = {0,1} or black = {2,3}.
        let g = one_class();
        let vertices: Vec<VertexId> = g.vertices().iter().copied().collect();
        let mut surviving_colorings = Vec::new();
        for mask in 0u32..(1 << vertices.len()) {
            let black: BTreeSet<VertexId> = vertices
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            if split_survivors(&g, &black) == vec![0] {
                surviving_colorings.push(black);
            }
        }
        assert_eq!(
            surviving_colorings,
            vec![[0, 1].into(), [2, 3].into()]
        );
    }

    #[test]
    fn split_finds_a_matching_in_disjoint_repeated_classes() {
        // Two disjoint perfect matchings, each doubled: a successful attempt
        // splits both surviving classes and combines one edge of each color.
        let g = ColoredHypergraph::new_general(
            2,
            2,
            BTreeSet::new(),
            vec![
                vec![vec![0, 1], vec![2, 3]],
                vec![vec![0, 1], vec![2, 3]],
            ],
        );
        let run = random_split_find(&g, 7, DEFAULT_SPLIT_BUDGET);
        let cert = run.outcome.certificate().expect("survival chance is 1/8");
        assert!(cert.verify(&g, 2).is_ok());
        assert_eq!(run.trace.stages[0].stage, "split");
    }

    #[test]
    fn split_cannot_beat_the_construction() {
        // At most one of the two classes survives any coloring, so the white
        // side always runs out of colors.
        let g = tight_rainbow_free(2, 2);
        let run = random_split_find(&g, 3, 50);
        match run.outcome {
            FinderOutcome::Failed(ProofFailure::SplitBudget {
                attempts,
                max_survivors,
            }) => {
                assert_eq!(attempts, 50);
                assert!(max_survivors <= 1);
            }
            other => panic!("the construction has no rainbow 2-matching: {other:?}"),
        }
    }

    #[test]
    fn trivial_class_size_takes_the_first_edge() {
        let g = ColoredHypergraph::new_general(
            2,
            1,
            BTreeSet::new(),
            vec![vec![vec![4, 5]], vec![vec![0, 1]]],
        );
        let run = random_split_find(&g, 0, 10);
        let cert = run.outcome.certificate().expect("any edge suffices");
        assert_eq!(cert.pairs, vec![(0, 0)]);

        let empty = ColoredHypergraph::new_general(2, 1, BTreeSet::new(), vec![]);
        let run = random_split_find(&empty, 0, 10);
        assert_eq!(
            run.outcome,
            FinderOutcome::Failed(ProofFailure::SplitBudget {
                attempts: 0,
                max_survivors: 0
            })
        );
    }
}
