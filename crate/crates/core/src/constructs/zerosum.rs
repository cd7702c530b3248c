//! Zero-sum subsequences over Z_t^d and the exact threshold `g`: the smallest
//! length forcing every sequence to contain `t` items summing to zero.

use std::collections::HashSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SequenceError {
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("item {index} has {len} coordinates, expected {d}")]
    WrongDimension { index: usize, len: usize, d: usize },
    #[error("item {index} coordinate {value} is outside 0..{t}")]
    CoordinateOutOfRange { index: usize, value: usize, t: usize },
}

/// A sequence of vectors over Z_t^d; repeats are meaningful.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorSequence {
    pub t: usize,
    pub d: usize,
    pub items: Vec<Vec<usize>>,
}

impl VectorSequence {
    pub fn new(t: usize, d: usize, items: Vec<Vec<usize>>) -> Result<Self, SequenceError> {
        if t == 0 {
            return Err(SequenceError::ZeroModulus);
        }
        if d == 0 {
            return Err(SequenceError::ZeroDimension);
        }
        for (index, item) in items.iter().enumerate() {
            if item.len() != d {
                return Err(SequenceError::WrongDimension {
                    index,
                    len: item.len(),
                    d,
                });
            }
            if let Some(&value) = item.iter().find(|&&x| x >= t) {
                return Err(SequenceError::CoordinateOutOfRange { index, value, t });
            }
        }
        Ok(VectorSequence { t, d, items })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Lexicographically least set of `k` indices whose vectors sum to zero
    /// in every coordinate mod `t`, or `None`. `k = 0` and `k > len` give
    /// `None`.
    ///
    /// Depth-first over indices in ascending order (include before skip) with
    /// memoized failing (position, still-needed, residue) states.
    pub fn zero_sum_subsequence(&self, k: usize) -> Option<Vec<usize>> {
        if k == 0 || k > self.items.len() {
            return None;
        }
        let mut chosen = Vec::with_capacity(k);
        let mut residue = vec![0usize; self.d];
        let mut failed: HashSet<(usize, usize, Vec<usize>)> = HashSet::new();
        if self.descend(0, k, &mut chosen, &mut residue, &mut failed) {
            Some(chosen)
        } else {
            None
        }
    }

    fn descend(
        &self,
        pos: usize,
        need: usize,
        chosen: &mut Vec<usize>,
        residue: &mut Vec<usize>,
        failed: &mut HashSet<(usize, usize, Vec<usize>)>,
    ) -> bool {
        if need == 0 {
            return residue.iter().all(|&x| x == 0);
        }
        if self.items.len() - pos < need {
            return false;
        }
        if failed.contains(&(pos, need, residue.clone())) {
            return false;
        }
        for i in pos..self.items.len() {
            chosen.push(i);
            for (acc, &x) in residue.iter_mut().zip(self.items[i].iter()) {
                *acc = (*acc + x) % self.t;
            }
            if self.descend(i + 1, need - 1, chosen, residue, failed) {
                return true;
            }
            for (acc, &x) in residue.iter_mut().zip(self.items[i].iter()) {
                *acc = (*acc + self.t - x) % self.t;
            }
            chosen.pop();
        }
        failed.insert((pos, need, residue.clone()));
        false
    }
}

/// Outcome of the exact threshold search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GOutcome {
    /// Every sequence of length `value` over Z_t^r has a zero-sum
    /// t-subsequence and `longest_free` (of length `value − 1`) has none.
    Exact {
        value: usize,
        longest_free: Vec<Vec<usize>>,
    },
    /// A sequence of the cap length with no zero-sum t-subsequence exists, so
    /// the threshold exceeds the cap; no value is guessed.
    UnresolvedAtCap {
        cap: usize,
        free_witness: Vec<Vec<usize>>,
    },
}

/// Default search cap used when the caller does not pick one.
pub fn default_cap(t: usize) -> usize {
    4 * t
}

/// Exact computation of the smallest `g` such that every length-`g` sequence
/// over Z_t^r contains `t` items summing to zero, by depth-first search over
/// sorted sequences (the zero-sum property is permutation-invariant, so
/// non-decreasing sequences cover every multiset).
pub fn g_exact(r: usize, t: usize, cap: usize) -> GOutcome {
    assert!(r >= 1 && t >= 1 && cap >= 1);
    let vectors = all_vectors(r, t);
    let mut state = GSearch {
        t,
        d: r,
        vectors,
        best_len: 0,
        best: Vec::new(),
        stack: Vec::new(),
    };
    match state.grow(0, cap) {
        Some(witness) => GOutcome::UnresolvedAtCap { cap, free_witness: witness },
        None => GOutcome::Exact {
            value: state.best_len + 1,
            longest_free: state.best,
        },
    }
}

/// All of Z_t^r in lexicographic order.
fn all_vectors(r: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..t).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

struct GSearch {
    t: usize,
    d: usize,
    vectors: Vec<Vec<usize>>,
    best_len: usize,
    best: Vec<Vec<usize>>,
    stack: Vec<Vec<usize>>,
}

impl GSearch {
    /// Extend the current zero-sum-free sorted sequence; `Some(witness)`
    /// means a free sequence reached the cap.
    fn grow(&mut self, from: usize, cap: usize) -> Option<Vec<Vec<usize>>> {
        if self.stack.len() > self.best_len {
            self.best_len = self.stack.len();
            self.best = self.stack.clone();
        }
        if self.stack.len() == cap {
            return Some(self.stack.clone());
        }
        for vi in from..self.vectors.len() {
            self.stack.push(self.vectors[vi].clone());
            if self.still_free() {
                if let Some(witness) = self.grow(vi, cap) {
                    return Some(witness);
                }
            }
            self.stack.pop();
        }
        None
    }

    /// The stack stayed zero-sum-free after the last push.
    fn still_free(&self) -> bool {
        let seq = VectorSequence {
            t: self.t,
            d: self.d,
            items: self.stack.clone(),
        };
        seq.zero_sum_subsequence(self.t).is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn all_zeros_sum_to_zero() {
        let seq = VectorSequence::new(3, 1, vec![vec![0], vec![0], vec![0]]).unwrap();
        assert_eq!(seq.zero_sum_subsequence(3), Some(vec![0, 1, 2]));
    }

    #[test]
    fn complementary_pair_is_found() {
        let seq = VectorSequence::new(3, 1, vec![vec![1], vec![2]]).unwrap();
        assert_eq!(seq.zero_sum_subsequence(2), Some(vec![0, 1]));
    }

    #[test]
    fn no_triple_in_two_zeros_two_ones() {
        let seq =
            VectorSequence::new(3, 1, vec![vec![0], vec![0], vec![1], vec![1]]).unwrap();
        assert_eq!(seq.zero_sum_subsequence(3), None);
    }

    #[test]
    fn oversized_and_empty_targets_give_none() {
        let seq = VectorSequence::new(2, 1, vec![vec![1]]).unwrap();
        assert_eq!(seq.zero_sum_subsequence(2), None);
        assert_eq!(seq.zero_sum_subsequence(0), None);
    }

    #[test]
    fn witness_is_lexicographically_least() {
        let seq = VectorSequence::new(
            3,
            1,
            vec![vec![1], vec![2], vec![0], vec![0], vec![0]],
        )
        .unwrap();
        assert_eq!(seq.zero_sum_subsequence(3), Some(vec![0, 1, 2]));
    }

    #[test]
    fn construction_rejects_bad_items() {
        assert_eq!(
            VectorSequence::new(3, 2, vec![vec![0]]),
            Err(SequenceError::WrongDimension { index: 0, len: 1, d: 2 })
        );
        assert_eq!(
            VectorSequence::new(3, 1, vec![vec![3]]),
            Err(SequenceError::CoordinateOutOfRange { index: 0, value: 3, t: 3 })
        );
    }

    #[test]
    fn threshold_for_pairs_mod_two() {
        match g_exact(1, 2, default_cap(2)) {
            GOutcome::Exact { value, longest_free } => {
                assert_eq!(value, 3);
                assert_eq!(longest_free, vec![vec![0], vec![1]]);
            }
            other => panic!("expected exact value, got {other:?}"),
        }
    }

    #[test]
    fn threshold_for_triples_mod_three() {
        match g_exact(1, 3, 12) {
            GOutcome::Exact { value, longest_free } => {
                assert_eq!(value, 5);
                assert_eq!(longest_free, vec![vec![0], vec![0], vec![1], vec![1]]);
            }
            other => panic!("expected exact value, got {other:?}"),
        }
    }

    #[test]
    fn threshold_for_pairs_in_dimension_two() {
        match g_exact(2, 2, default_cap(2)) {
            GOutcome::Exact { value, longest_free } => {
                assert_eq!(value, 5);
                // A zero-sum pair mod 2 is a repeated item, so the four
                // distinct vectors form the longest free sequence.
                assert_eq!(
                    longest_free,
                    vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
                );
            }
            other => panic!("expected exact value, got {other:?}"),
        }
    }

    #[test]
    fn tight_cap_is_reported_as_unresolved() {
        match g_exact(1, 2, 2) {
            GOutcome::UnresolvedAtCap { cap, free_witness } => {
                assert_eq!(cap, 2);
                assert_eq!(free_witness.len(), 2);
                let seq = VectorSequence::new(2, 1, free_witness).unwrap();
                assert_eq!(seq.zero_sum_subsequence(2), None);
            }
            other => panic!("expected unresolved, got {other:?}"),
        }
    }

    #[test]
    fn modulus_one_is_immediate() {
        match g_exact(1, 1, 4) {
            GOutcome::Exact { value, longest_free } => {
                assert_eq!(value, 1);
                assert!(longest_free.is_empty());
            }
            other => panic!("expected exact value, got {other:?}"),
        }
    }

    proptest! {
        /// Whether a zero-sum t-subsequence exists is invariant under
        /// reordering the sequence.
        #[test]
        fn existence_is_permutation_invariant(
            raw in proptest::collection::vec(proptest::collection::vec(0usize..3, 2), 1..=6),
            rotate in 0usize..6,
        ) {
            let seq = VectorSequence::new(3, 2, raw.clone()).unwrap();
            let mut rotated = raw;
            let n = rotated.len();
            rotated.rotate_left(rotate % n);
            rotated.reverse();
            let other = VectorSequence::new(3, 2, rotated).unwrap();
            prop_assert_eq!(
                seq.zero_sum_subsequence(3).is_some(),
                other.zero_sum_subsequence(3).is_some()
            );
        }
    }
}
