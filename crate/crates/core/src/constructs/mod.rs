//! Lower-bound constructions, the zero-sum machinery, random instance
//! generation, and the bound calculators.
//!
//! The central construction takes a sequence of vectors over Z_t^d and turns
//! each vector `p` into one color class `M(p)`: the `t` edges
//! `(i, i+p(1), …, i+p(d)) mod t` across `d+1` parts, each part a copy of
//! Z_t. The classic rainbow-free family is the special case where the vectors
//! are all 0/1 vectors, each repeated `t−1` times.

pub mod bounds;
pub mod zerosum;

use crate::graph::{ColoredHypergraph, VertexId};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use zerosum::VectorSequence;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error("part size {s} cannot host a {t}-matching")]
    PartTooSmall { s: usize, t: usize },
}

/// The rainbow-free `(2^{r−1}(t−1), t)`-colored construction: parts are `r`
/// copies of Z_t; for every 0/1 vector `p` of length `r−1` (in lexicographic
/// order) the matching `M(p)` appears as `t−1` consecutive color classes.
///
/// `t = 1` yields the empty coloring, which is valid.
pub fn tight_rainbow_free(r: usize, t: usize) -> ColoredHypergraph {
    assert!(r >= 1 && t >= 1, "uniformity and class size must be positive");
    let parts = copies_of_z_t(r, t);
    let mut classes = Vec::new();
    for mask in 0..(1usize << (r - 1)) {
        let p: Vec<usize> = (0..r - 1).map(|k| (mask >> (r - 2 - k)) & 1).collect();
        for _copy in 0..t - 1 {
            classes.push(shifted_matching(r, t, &p));
        }
    }
    ColoredHypergraph::new_partite(r, t, parts, classes)
}

/// One color class per sequence item: item `p` over Z_t^d becomes the
/// matching `M(p)` in a `(d+1)`-partite graph whose parts are copies of Z_t.
/// Duplicate vectors get distinct colors, in sequence order.
pub fn from_vector_sequence(seq: &VectorSequence) -> ColoredHypergraph {
    let r = seq.d + 1;
    let t = seq.t;
    let parts = copies_of_z_t(r, t);
    let classes = seq
        .items
        .iter()
        .map(|p| shifted_matching(r, t, p))
        .collect();
    ColoredHypergraph::new_partite(r, t, parts, classes)
}

/// Part `k` is `{k·t, …, k·t + t − 1}`.
fn copies_of_z_t(r: usize, t: usize) -> Vec<BTreeSet<VertexId>> {
    (0..r)
        .map(|k| (0..t).map(|j| (k * t + j) as VertexId).collect())
        .collect()
}

/// The matching `M(p)`: edge `i` takes vertex `i` in part 0 and vertex
/// `(i + p(k)) mod t` in part `k`.
fn shifted_matching(r: usize, t: usize, p: &[usize]) -> Vec<Vec<VertexId>> {
    assert_eq!(p.len(), r - 1);
    (0..t)
        .map(|i| {
            let mut edge = vec![i as VertexId];
            for (k, &shift) in p.iter().enumerate() {
                edge.push(((k + 1) * t + (i + shift) % t) as VertexId);
            }
            edge
        })
        .collect()
}

/// A seeded random partite instance: `f` color classes on `r` parts of size
/// `s`, each class an independently uniform `t`-matching (sample `t` distinct
/// vertices per part, pair them by random permutations). Deterministic for a
/// fixed seed.
pub fn random_instance(
    r: usize,
    t: usize,
    f: usize,
    s: usize,
    seed: u64,
) -> Result<ColoredHypergraph, ConstructError> {
    assert!(r >= 1 && t >= 1);
    if s < t {
        return Err(ConstructError::PartTooSmall { s, t });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parts: Vec<BTreeSet<VertexId>> = (0..r)
        .map(|k| (0..s).map(|j| (k * s + j) as VertexId).collect())
        .collect();
    let mut classes = Vec::with_capacity(f);
    for _ in 0..f {
        let mut columns: Vec<Vec<usize>> = Vec::with_capacity(r);
        for k in 0..r {
            let mut picks: Vec<usize> = rand::seq::index::sample(&mut rng, s, t).into_vec();
            if k == 0 {
                picks.sort_unstable();
            } else {
                picks.shuffle(&mut rng);
            }
            columns.push(picks);
        }
        let class: Vec<Vec<VertexId>> = (0..t)
            .map(|slot| {
                (0..r)
                    .map(|k| (k * s + columns[k][slot]) as VertexId)
                    .collect()
            })
            .collect();
        classes.push(class);
    }
    Ok(ColoredHypergraph::new_partite(r, t, parts, classes))
}
