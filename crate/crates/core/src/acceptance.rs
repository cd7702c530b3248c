//! The self-check suite: ten criteria covering constructions, exact small
//! values, the zero-sum machinery, every finder's guarantee, the reduction
//! and decomposition invariants, the survival probability, duality, and a
//! final soundness sweep over every certificate the earlier criteria
//! produced.
//!
//! [`run_all`] executes the criteria in order and returns one report each;
//! it never panics on a failing criterion — failures come back as reports.

use crate::constructs::zerosum::{default_cap, g_exact, GOutcome, VectorSequence};
use crate::constructs::{tight_rainbow_free, from_vector_sequence, random_instance};
use crate::extremal::{canonical_form, exact_f_s, exists_rainbow_free, ExtremalQuery, SearchOutcome};
use crate::graph::{ColoredHypergraph, Hypergraph, Mode, VertexId};
use crate::naive;
use crate::proof::cores::{core_decomposition, observation_path};
use crate::proof::cover::{cover_partition, CoverError};
use crate::proof::reduce::{pigeonhole_find, reduce_parts};
use crate::proof::split::split_survivors;
use crate::proof::ProofFailure;
use crate::solve::RainbowCertificate;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Everything the criteria assert about afterwards: positive certificates
/// with their instances and targets, and instances a solver declared
/// rainbow-free.
#[derive(Default)]
struct Evidence {
    certificates: Vec<(ColoredHypergraph, usize, RainbowCertificate)>,
    nonexistence: Vec<(ColoredHypergraph, usize)>,
}

/// Run the ten criteria in order. The final criterion sweeps the artifacts
/// of the first nine, so the list is always complete and ordered by id.
pub fn run_all() -> Vec<CriterionReport> {
    let mut evidence = Evidence::default();
    let mut reports = vec![
        construction_rainbow_freeness(&mut evidence),
        exact_small_value(&mut evidence),
        zero_sum_equivalence(&mut evidence),
        zero_sum_constants(),
        pigeonhole_guarantee(&mut evidence),
        reduction_step_bound(&mut evidence),
        cover_and_core_properties(&mut evidence),
        survival_probability(),
        duality(),
    ];
    reports.push(soundness_sweep(&evidence));
    reports
}

fn report(
    id: usize,
    name: &'static str,
    body: impl FnOnce() -> Result<String, String>,
) -> CriterionReport {
    match body() {
        Ok(detail) => CriterionReport {
            id,
            name,
            pass: true,
            detail,
        },
        Err(detail) => CriterionReport {
            id,
            name,
            pass: false,
            detail,
        },
    }
}

/// 1. The classic construction is rainbow-free at its full color count for
/// a grid of small parameters, and survives a file-format round trip.
fn construction_rainbow_freeness(evidence: &mut Evidence) -> CriterionReport {
    report(1, "construction-rainbow-freeness", || {
        let mut counts = Vec::new();
        for (r, t) in [(2usize, 2usize), (2, 3), (3, 2), (3, 3)] {
            let g = tight_rainbow_free(r, t);
            let expected = (1usize << (r - 1)) * (t - 1);
            if g.num_colors() != expected {
                return Err(format!(
                    "({r},{t}): {} colors, expected {expected}",
                    g.num_colors()
                ));
            }
            let violations = g.validate();
            if !violations.is_empty() {
                return Err(format!("({r},{t}): invalid instance: {violations:?}"));
            }
            let round = crate::rch::parse(&crate::rch::write(&g))
                .map_err(|e| format!("({r},{t}): round trip failed: {e}"))?;
            if crate::rch::write(&round) != crate::rch::write(&g) {
                return Err(format!("({r},{t}): round trip changed the instance"));
            }
            let search = g.search_rainbow(t);
            if search.is_found() {
                return Err(format!("({r},{t}): rainbow {t}-matching found"));
            }
            counts.push(format!("({r},{t})={expected}"));
            evidence.nonexistence.push((g, t));
        }
        Ok(format!(
            "rainbow-free with color counts {}",
            counts.join(" ")
        ))
    })
}

/// 2. The exact extremal value for pairs of 2-matchings is 2, with a
/// witness isomorphic to the construction, and three classes are impossible
/// even in parts of six.
fn exact_small_value(evidence: &mut Evidence) -> CriterionReport {
    report(2, "exact-small-value", || {
        let result = exact_f_s(&ExtremalQuery {
            mode: Mode::Partite,
            r: 2,
            t: 2,
            s: 6,
            f_max: 4,
        });
        if result.value != 2 || result.ceiling_hit || result.inconclusive {
            return Err(format!(
                "value {} (ceiling {}, inconclusive {}), expected exact 2",
                result.value, result.ceiling_hit, result.inconclusive
            ));
        }
        let witness = result.witness.ok_or("value 2 without a witness")?;
        if canonical_form(&witness) != canonical_form(&tight_rainbow_free(2, 2)) {
            return Err("witness is not isomorphic to the construction".into());
        }
        let (outcome, stats) = exists_rainbow_free(Mode::Partite, 2, 2, 6, 3);
        if !matches!(outcome, SearchOutcome::Exhausted) {
            return Err("three classes were not exhaustively ruled out".into());
        }
        evidence.nonexistence.push((witness, 2));
        Ok(format!(
            "value 2 with construction witness; 3 classes exhausted in {} nodes ({} duplicates)",
            result.stats.nodes + stats.nodes,
            result.stats.duplicate_hits + stats.duplicate_hits,
        ))
    })
}

/// Every tuple of the given length over the alphabet.
fn all_tuples(alphabet: &[Vec<usize>], len: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                alphabet.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v.clone());
                    p
                })
            })
            .collect();
    }
    out
}

/// 3. On every short sequence over Z_3 and over Z_2², the instance built
/// from the sequence has a rainbow t-matching exactly when the sequence has
/// a zero-sum t-subsequence.
fn zero_sum_equivalence(evidence: &mut Evidence) -> CriterionReport {
    report(3, "zero-sum-equivalence", || {
        let grids: [(usize, usize, usize, Vec<Vec<usize>>); 2] = [
            (3, 1, 5, vec![vec![0], vec![1], vec![2]]),
            (2, 2, 4, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]),
        ];
        let mut cases = 0usize;
        for (t, d, max_len, alphabet) in grids {
            for len in 1..=max_len {
                for items in all_tuples(&alphabet, len) {
                    let seq = VectorSequence::new(t, d, items).map_err(|e| e.to_string())?;
                    let g = from_vector_sequence(&seq);
                    let search = g.search_rainbow(t);
                    let zero_sum = seq.zero_sum_subsequence(t).is_some();
                    if search.is_found() != zero_sum {
                        return Err(format!(
                            "Z_{t}^{d} sequence {:?}: rainbow {} but zero-sum {}",
                            seq.items,
                            search.is_found(),
                            zero_sum
                        ));
                    }
                    match search.certificate() {
                        Some(cert) => evidence.certificates.push((g, t, cert.clone())),
                        None => evidence.nonexistence.push((g, t)),
                    }
                    cases += 1;
                }
            }
        }
        Ok(format!("agreement on all {cases} sequences"))
    })
}

/// Direct check over index subsets, independent of the sequence solver.
fn has_zero_sum_subset(items: &[Vec<usize>], t: usize, modulus: usize) -> bool {
    let n = items.len();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize != t {
            continue;
        }
        let d = items[0].len();
        let mut sums = vec![0usize; d];
        for (i, item) in items.iter().enumerate() {
            if mask & (1 << i) != 0 {
                for (acc, &x) in sums.iter_mut().zip(item) {
                    *acc += x;
                }
            }
        }
        if sums.iter().all(|&x| x % modulus == 0) {
            return true;
        }
    }
    false
}

/// 4. The exact zero-sum thresholds for the three smallest parameter pairs,
/// each confirmed against a brute-force scan of every tuple.
fn zero_sum_constants() -> CriterionReport {
    report(4, "zero-sum-constants", || {
        let mut values = Vec::new();
        for (d, t, expected) in [(1usize, 2usize, 3usize), (1, 3, 5), (2, 2, 5)] {
            match g_exact(d, t, default_cap(t)) {
                GOutcome::Exact { value, .. } if value == expected => {}
                other => {
                    return Err(format!(
                        "g({d},{t}): solver returned {other:?}, expected exact {expected}"
                    ))
                }
            }
            let alphabet = all_tuples(&(0..t).map(|x| vec![x]).collect::<Vec<_>>(), d)
                .into_iter()
                .map(|tuple| tuple.into_iter().flatten().collect::<Vec<usize>>())
                .collect::<Vec<_>>();
            if !all_tuples(&alphabet, expected)
                .iter()
                .all(|seq| has_zero_sum_subset(seq, t, t))
            {
                return Err(format!(
                    "g({d},{t}): a length-{expected} tuple avoids zero sums"
                ));
            }
            if !all_tuples(&alphabet, expected - 1)
                .iter()
                .any(|seq| !has_zero_sum_subset(seq, t, t))
            {
                return Err(format!(
                    "g({d},{t}): every length-{} tuple already forces a zero sum",
                    expected - 1
                ));
            }
            values.push(format!("g({d},{t})={expected}"));
        }
        Ok(format!("{} confirmed by tuple scan", values.join(" ")))
    })
}

/// 5. With more classes than (t−1)s^r, the pigeonhole extraction always
/// returns a valid certificate: 100 seeded instances at (2,2,3) with 10
/// classes.
fn pigeonhole_guarantee(evidence: &mut Evidence) -> CriterionReport {
    report(5, "pigeonhole-guarantee", || {
        for seed in 0..100u64 {
            let g = random_instance(2, 2, 10, 3, seed).map_err(|e| e.to_string())?;
            let certificate = match pigeonhole_find(&g) {
                Ok(c) => c,
                Err(failure) => return Err(format!("seed {seed}: {failure:?}")),
            };
            certificate
                .verify(&g, 2)
                .map_err(|e| format!("seed {seed}: invalid certificate: {e}"))?;
            evidence.certificates.push((g, 2, certificate));
        }
        Ok("100/100 seeded instances yielded valid certificates".into())
    })
}

/// The construction with `pad` extra isolated vertices in every part.
fn padded_construction(r: usize, t: usize, pad: usize) -> ColoredHypergraph {
    let g = tight_rainbow_free(r, t);
    let next = g.vertices().iter().next_back().map_or(0, |&m| m + 1);
    let mut extra = next..;
    let parts: Vec<BTreeSet<VertexId>> = g
        .parts()
        .iter()
        .map(|part| {
            let mut p = part.clone();
            for _ in 0..pad {
                p.insert(extra.next().expect("unbounded range"));
            }
            p
        })
        .collect();
    let classes: Vec<Vec<Vec<VertexId>>> = (0..g.num_colors())
        .map(|c| g.class(c).iter().map(|e| e.vertices.clone()).collect())
        .collect();
    ColoredHypergraph::new_partite(r, t, parts, classes)
}

/// 6. Every contraction step of fifty reductions deletes strictly fewer
/// classes than f̂t²/ℓ², and reducing padded rainbow-free instances
/// preserves rainbow-freeness.
fn reduction_step_bound(evidence: &mut Evidence) -> CriterionReport {
    report(6, "reduction-step-bound", || {
        let mut runs = 0usize;
        let mut steps_checked = 0usize;
        let check_steps = |report: &crate::proof::reduce::ReduceReport,
                               t: usize,
                               label: &str|
         -> Result<usize, String> {
            let mut deleted_total = 0;
            for step in &report.steps {
                deleted_total += step.deleted;
                let lhs = step.deleted * step.pool_size * step.pool_size;
                let rhs = step.colors_before * t * t;
                if lhs >= rhs {
                    return Err(format!(
                        "{label}: step at part {:?} deleted {} of {} classes with pool {} (needs {lhs} < {rhs})",
                        step.part, step.deleted, step.colors_before, step.pool_size
                    ));
                }
            }
            if report.retained_colors != report.initial_colors - deleted_total {
                return Err(format!("{label}: retained-color arithmetic is off"));
            }
            Ok(report.steps.len())
        };
        for seed in 0..38u64 {
            let g = random_instance(2, 2, 12, 8, seed).map_err(|e| e.to_string())?;
            let (_, rep) = reduce_parts(&g, 4).map_err(|e| e.to_string())?;
            steps_checked += check_steps(&rep, 2, &format!("seed {seed}"))?;
            runs += 1;
        }
        for (r, t) in [(2usize, 2usize), (2, 3), (3, 2)] {
            for pad in 1..=4usize {
                let g = padded_construction(r, t, pad);
                let (reduced, rep) =
                    reduce_parts(&g, t).map_err(|e| e.to_string())?;
                steps_checked += check_steps(&rep, t, &format!("padded ({r},{t}) +{pad}"))?;
                if rep.retained_colors != rep.initial_colors {
                    return Err(format!(
                        "padded ({r},{t}) +{pad}: lost {} classes merging isolated vertices",
                        rep.initial_colors - rep.retained_colors
                    ));
                }
                if reduced.search_rainbow(t).is_found() {
                    return Err(format!(
                        "padded ({r},{t}) +{pad}: reduction created a rainbow matching"
                    ));
                }
                evidence.nonexistence.push((reduced, t));
                runs += 1;
            }
        }
        Ok(format!(
            "{runs} reductions, {steps_checked} contraction steps within the strict bound"
        ))
    })
}

/// 7. The cover partition and the core decomposition hold their documented
/// properties on 200 random instances each; instances whose covering number
/// exceeds the threshold instead yield a direct certificate.
fn cover_and_core_properties(evidence: &mut Evidence) -> CriterionReport {
    report(7, "cover-and-core-properties", || {
        let mut partitions = 0usize;
        let mut rejections = 0usize;
        for seed in 0..200u64 {
            let r = 2 + (seed % 2) as usize;
            let t = 2usize;
            let f = 2 + (seed % 6) as usize;
            let s = 2 + ((seed / 2) % 3) as usize;
            let g = random_instance(r, t, f, s, seed).map_err(|e| e.to_string())?;
            let h = g.as_hypergraph();
            let tau = h.min_vertex_cover().map_err(|e| e.to_string())?.vertices.len();
            let b = t * (r + 1);
            match cover_partition(&h, tau, b) {
                Ok(partition) => {
                    partition
                        .verify(&h)
                        .map_err(|e| format!("seed {seed}: partition invariant broken: {e}"))?;
                    partitions += 1;
                }
                Err(e) => return Err(format!("seed {seed}: partition at τ failed: {e}")),
            }
            if tau > 0 {
                match cover_partition(&h, tau - 1, b) {
                    Err(CoverError::TauTooLarge { tau: found, .. }) if found == tau => {
                        rejections += 1;
                    }
                    other => {
                        return Err(format!(
                            "seed {seed}: bound τ−1 should be rejected with the true covering number, got {other:?}"
                        ))
                    }
                }
            }
        }
        let mut decompositions = 0usize;
        let mut shortcuts = 0usize;
        for seed in 200..400u64 {
            let t = 2usize;
            // Every fifth instance is wide and crowded so its covering
            // number clears the threshold and the direct certificate path
            // runs; the rest stay small enough for the full decomposition.
            let (r, f, s) = if seed % 5 == 0 {
                (2, 12, 6)
            } else {
                (2 + (seed % 2) as usize, 2 + (seed % 6) as usize, 2 + (seed % 3) as usize)
            };
            let g = random_instance(r, t, f, s, seed).map_err(|e| e.to_string())?;
            match core_decomposition(&g).map_err(|e| e.to_string())? {
                Ok(levels) => {
                    for level in &levels {
                        level
                            .check(&g)
                            .map_err(|e| format!("seed {seed}: level invariant broken: {e}"))?;
                    }
                    decompositions += 1;
                }
                Err(ProofFailure::CoverPrecondition { tau, bound, .. }) => {
                    if tau <= bound {
                        return Err(format!(
                            "seed {seed}: precondition failure with τ = {tau} ≤ bound {bound}"
                        ));
                    }
                    let obs = observation_path(&g).map_err(|e| e.to_string())?;
                    let certificate = obs.certificate.ok_or(format!(
                        "seed {seed}: τ = {tau} above threshold but no direct certificate"
                    ))?;
                    certificate
                        .verify(&g, t)
                        .map_err(|e| format!("seed {seed}: invalid certificate: {e}"))?;
                    evidence.certificates.push((g, t, certificate));
                    shortcuts += 1;
                }
                Err(other) => return Err(format!("seed {seed}: unexpected failure {other:?}")),
            }
        }
        if decompositions == 0 || shortcuts == 0 {
            return Err(format!(
                "both branches must be exercised: {decompositions} decompositions, {shortcuts} shortcuts"
            ));
        }
        Ok(format!(
            "{partitions} partitions verified, {rejections} tight bounds rejected honestly; {decompositions} decompositions checked at every level, {shortcuts} covering-number shortcuts certified"
        ))
    })
}

/// 8. Monte Carlo survival: under uniform vertex 2-colorings of a 10-class
/// instance, each class survives with frequency within three standard
/// errors of 1/8.
fn survival_probability() -> CriterionReport {
    report(8, "survival-probability", || {
        const TRIALS: usize = 100_000;
        const SEED: u64 = 5;
        let expected = 0.125f64;
        let tolerance = 3.0 * (expected * (1.0 - expected) / TRIALS as f64).sqrt();
        let g = random_instance(2, 2, 10, 5, 42).map_err(|e| e.to_string())?;
        let vertices: Vec<VertexId> = g.vertices().iter().copied().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let mut survivals = vec![0usize; g.num_colors()];
        for _ in 0..TRIALS {
            let black: BTreeSet<VertexId> = vertices
                .iter()
                .copied()
                .filter(|_| rng.gen::<bool>())
                .collect();
            for color in split_survivors(&g, &black) {
                survivals[color] += 1;
            }
        }
        let mut worst = 0.0f64;
        for (color, &count) in survivals.iter().enumerate() {
            let freq = count as f64 / TRIALS as f64;
            let dev = (freq - expected).abs();
            worst = worst.max(dev);
            if dev > tolerance {
                return Err(format!(
                    "class {color}: frequency {freq:.5} deviates {dev:.5} from 1/8 (allowed {tolerance:.5})"
                ));
            }
        }
        Ok(format!(
            "10 classes within {tolerance:.5} of 1/8 over {TRIALS} colorings (worst deviation {worst:.5})"
        ))
    })
}

/// 9. Duality between covering and matching numbers on 500 random
/// multi-hypergraphs: ν ≥ τ/r and ν ≤ τ.
fn duality() -> CriterionReport {
    report(9, "duality", || {
        for seed in 0..500u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let r = rng.gen_range(2..=4usize);
            let n = rng.gen_range(r..=14usize);
            let m = rng.gen_range(1..=8usize);
            let edges: Vec<Vec<VertexId>> = (0..m)
                .map(|_| {
                    let picks = rand::seq::index::sample(&mut rng, n, r);
                    picks.into_iter().map(|v| v as VertexId).collect()
                })
                .collect();
            let h = Hypergraph::new((0..n as VertexId).collect(), edges);
            let tau = h.min_vertex_cover().map_err(|e| e.to_string())?.vertices.len();
            let nu = h.max_matching().edges.len();
            if nu * r < tau {
                return Err(format!(
                    "seed {seed}: ν = {nu} < τ/r = {tau}/{r}"
                ));
            }
            if nu > tau {
                return Err(format!("seed {seed}: ν = {nu} exceeds τ = {tau}"));
            }
        }
        Ok("ν ≥ τ/r and ν ≤ τ on 500 random multi-hypergraphs".into())
    })
}

/// 10. Sweep everything the other criteria produced: every certificate
/// passes independent validation and agrees with the naive enumerator;
/// every nonexistence answer on at most six colors matches the naive
/// enumerator.
fn soundness_sweep(evidence: &Evidence) -> CriterionReport {
    report(10, "soundness-sweep", || {
        for (index, (g, k, certificate)) in evidence.certificates.iter().enumerate() {
            certificate
                .verify(g, *k)
                .map_err(|e| format!("certificate {index}: {e}"))?;
            if naive::rainbow_by_enumeration(g, *k).is_none() {
                return Err(format!(
                    "certificate {index}: naive enumeration finds no rainbow {k}-matching"
                ));
            }
        }
        let mut crosschecked = 0usize;
        let mut skipped = 0usize;
        for (index, (g, k)) in evidence.nonexistence.iter().enumerate() {
            if g.num_colors() > 6 {
                skipped += 1;
                continue;
            }
            if naive::rainbow_by_enumeration(g, *k).is_some() {
                return Err(format!(
                    "nonexistence answer {index}: naive enumeration finds a rainbow {k}-matching"
                ));
            }
            crosschecked += 1;
        }
        Ok(format!(
            "{} certificates validated; {crosschecked} nonexistence answers cross-checked ({skipped} above six colors skipped)",
            evidence.certificates.len()
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_enumeration_counts_match_powers() {
        let alphabet = vec![vec![0], vec![1], vec![2]];
        assert_eq!(all_tuples(&alphabet, 0).len(), 1);
        assert_eq!(all_tuples(&alphabet, 3).len(), 27);
    }

    #[test]
    fn subset_scan_finds_and_rejects_zero_sums() {
        assert!(has_zero_sum_subset(&[vec![1], vec![2]], 2, 3));
        assert!(!has_zero_sum_subset(&[vec![1], vec![1]], 2, 3));
        assert!(has_zero_sum_subset(
            &[vec![0, 1], vec![0, 1]],
            2,
            2
        ));
    }

    #[test]
    fn padding_adds_isolated_vertices_only() {
        let g = padded_construction(2, 2, 3);
        assert_eq!(g.num_colors(), 2);
        assert_eq!(g.parts()[0].len(), 5);
        assert_eq!(g.parts()[1].len(), 5);
        assert_eq!(g.edge_count(), 4);
        assert!(g.validate().is_empty());
    }
}
