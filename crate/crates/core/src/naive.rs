//! Naive rainbow enumeration, kept deliberately separate from the optimized
//! backtracking in `solve`.
//!
//! This module enumerates color subsets and edge tuples directly, with no
//! pruning beyond pairwise disjointness. It exists as an independent
//! cross-check: agreement between this enumerator and the solver is asserted
//! throughout the test suites.

use crate::graph::{disjoint_sorted, ColoredHypergraph, VertexId};

/// Search for `k` pairwise disjoint representatives from `k` distinct classes,
/// given the classes as plain vertex lists. Returns the chosen
/// (class index, member index) pairs, or `None`.
pub fn rainbow_in_classes(
    classes: &[Vec<Vec<VertexId>>],
    k: usize,
) -> Option<Vec<(usize, usize)>> {
    let sorted: Vec<Vec<Vec<VertexId>>> = classes
        .iter()
        .map(|class| {
            class
                .iter()
                .map(|edge| {
                    let mut e = edge.clone();
                    e.sort_unstable();
                    e
                })
                .collect()
        })
        .collect();
    let mut combo = Vec::new();
    pick_colors(&sorted, 0, k, &mut combo)
}

/// Convenience predicate over plain classes.
pub fn classes_have_rainbow(classes: &[Vec<Vec<VertexId>>], k: usize) -> bool {
    rainbow_in_classes(classes, k).is_some()
}

/// Enumerate ascending `k`-subsets of class indices, then product over
/// member choices.
fn pick_colors(
    classes: &[Vec<Vec<VertexId>>],
    start: usize,
    remaining: usize,
    combo: &mut Vec<usize>,
) -> Option<Vec<(usize, usize)>> {
    if remaining == 0 {
        return product_over(classes, combo, 0, &mut Vec::new(), &mut Vec::new());
    }
    for c in start..classes.len() {
        combo.push(c);
        if let Some(hit) = pick_colors(classes, c + 1, remaining - 1, combo) {
            combo.pop();
            return Some(hit);
        }
        combo.pop();
    }
    None
}

fn product_over(
    classes: &[Vec<Vec<VertexId>>],
    combo: &[usize],
    depth: usize,
    picks: &mut Vec<(usize, usize)>,
    taken: &mut Vec<Vec<VertexId>>,
) -> Option<Vec<(usize, usize)>> {
    if depth == combo.len() {
        return Some(picks.clone());
    }
    let class = combo[depth];
    for (member, edge) in classes[class].iter().enumerate() {
        if taken.iter().all(|prev| disjoint_sorted(prev, edge)) {
            picks.push((class, member));
            taken.push(edge.clone());
            if let Some(hit) = product_over(classes, combo, depth + 1, picks, taken) {
                return Some(hit);
            }
            taken.pop();
            picks.pop();
        }
    }
    None
}

/// Rainbow test on a colored hypergraph by plain enumeration. Returns the
/// chosen edge ids, sorted, if a rainbow `k`-matching exists.
pub fn rainbow_by_enumeration(g: &ColoredHypergraph, k: usize) -> Option<Vec<usize>> {
    let classes: Vec<Vec<Vec<VertexId>>> = (0..g.num_colors())
        .map(|c| g.class(c).iter().map(|e| e.vertices.clone()).collect())
        .collect();
    let picks = rainbow_in_classes(&classes, k)?;
    let mut ids: Vec<usize> = picks
        .into_iter()
        .map(|(class, member)| g.class(class)[member].id)
        .collect();
    ids.sort_unstable();
    Some(ids)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_rainbow_pair_in_square() {
        let classes = vec![
            vec![vec![0, 2], vec![1, 3]],
            vec![vec![0, 3], vec![1, 2]],
        ];
        // Every cross-class pick intersects, so only size 1 is reachable.
        assert!(classes_have_rainbow(&classes, 1));
        assert!(!classes_have_rainbow(&classes, 2));
    }

    #[test]
    fn rainbow_needs_enough_classes() {
        let classes = vec![vec![vec![0, 1]], vec![vec![2, 3]]];
        assert!(classes_have_rainbow(&classes, 2));
        assert!(!classes_have_rainbow(&classes, 3));
        assert!(classes_have_rainbow(&classes, 0));
    }

    #[test]
    fn unsorted_member_vertices_are_handled() {
        let classes = vec![vec![vec![3, 0]], vec![vec![1, 2]]];
        assert_eq!(rainbow_in_classes(&classes, 2), Some(vec![(0, 0), (1, 0)]));
    }

    #[test]
    fn agrees_with_solver_on_small_shapes() {
        let shapes: Vec<Vec<Vec<Vec<u32>>>> = vec![
            vec![
                vec![vec![0, 2], vec![1, 3]],
                vec![vec![0, 3], vec![1, 2]],
                vec![vec![0, 2], vec![1, 3]],
            ],
            vec![
                vec![vec![0, 1], vec![2, 3]],
                vec![vec![0, 2], vec![1, 3]],
                vec![vec![0, 3], vec![1, 2]],
            ],
        ];
        for classes in shapes {
            let g = crate::graph::ColoredHypergraph::new_general(
                2,
                2,
                std::collections::BTreeSet::new(),
                classes.clone(),
            );
            for k in 0..=classes.len() {
                assert_eq!(
                    classes_have_rainbow(&classes, k),
                    g.search_rainbow(k).is_found(),
                    "k = {k}"
                );
            }
        }
    }
}
