//! `rainbow` — command-line front end for the rainbow-matching toolkit.
//!
//! Every verb prints exactly one JSON document to stdout (selftest prints a
//! line per check instead) and is byte-deterministic for a fixed argument
//! vector. Timing goes to stderr so stdout stays reproducible.
//!
//! Exit codes: 0 = success, including an honest "the method could not finish"
//! report; 1 = unreadable or malformed input file (also a failed selftest);
//! 2 = precondition or usage violation; 3 = inconclusive under a resource
//! guard (node limits, solver guards, unresolved caps).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rainbow_core::constructs::bounds::bounds;
use rainbow_core::constructs::zerosum::{g_exact, GOutcome, VectorSequence};
use rainbow_core::constructs::{tight_rainbow_free, from_vector_sequence, random_instance};
use rainbow_core::extremal::{exact_f_s, ExtremalQuery};
use rainbow_core::proof::cores::theorem1_find;
use rainbow_core::proof::reduce::{
    pigeonhole_find, reduce_parts, reduce_vertices, theorem2_find, ReduceReport,
};
use rainbow_core::proof::split::{random_split_find, DEFAULT_SPLIT_BUDGET};
use rainbow_core::proof::{FinderOutcome, ProofError, ProofFailure, Trace};
use rainbow_core::rch;
use rainbow_core::{
    acceptance, ColoredHypergraph, Mode, RainbowCertificate, RainbowSearch, SolveError, VertexId,
};

const EXIT_MALFORMED: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "rainbow",
    about = "Construct, analyze, and solve colored hypergraph instances for rainbow matchings",
    version
)]
struct Cli {
    /// Worker cap for verbs that could parallelize (all current solvers are
    /// sequential; the value is validated and recorded, never exceeded).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Write an instance file.
    Construct {
        #[command(subcommand)]
        what: ConstructWhat,
    },
    /// Look for a rainbow matching with the chosen method.
    Find {
        /// Instance file to read.
        #[arg(short = 'i', long)]
        input: PathBuf,
        /// Matching size to look for.
        #[arg(long)]
        t: usize,
        /// Search strategy.
        #[arg(long, value_enum)]
        method: Method,
        /// RNG seed (split method only, where it is required).
        #[arg(long)]
        seed: Option<u64>,
        /// Attempt budget (split method only).
        #[arg(long)]
        budget: Option<u64>,
        /// Include the stage-by-stage trace in the document.
        #[arg(long)]
        trace: bool,
    },
    /// Decide exhaustively whether a rainbow matching of the given size exists.
    Certify {
        #[arg(short = 'i', long)]
        input: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Structural numbers of an instance: sizes, covering and matching numbers.
    Stats {
        #[arg(short = 'i', long)]
        input: PathBuf,
    },
    /// Shrink part sizes (or the vertex pool) while keeping enough colors.
    Reduce {
        #[arg(short = 'i', long)]
        input: PathBuf,
        /// Target part size (or vertex-pool size with --nonpartite).
        #[arg(long)]
        s: usize,
        /// Reduce the total vertex pool instead of per-part sizes.
        #[arg(long)]
        nonpartite: bool,
        /// Where to write the reduced instance.
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
    /// Zero-sum sequence computations over Z_t^r.
    Zerosum {
        #[command(subcommand)]
        what: ZerosumWhat,
    },
    /// Exact extremal class count by exhaustive search over capped instances.
    ExactF {
        /// Edge size.
        #[arg(long)]
        r: usize,
        /// Matching size.
        #[arg(long)]
        t: usize,
        /// Part-size cap (vertex-pool cap with --general).
        #[arg(long)]
        s: usize,
        /// Largest class count to try.
        #[arg(long)]
        fmax: usize,
        /// Search over general (non-partite) instances.
        #[arg(long)]
        general: bool,
        /// Optional file for the extremal witness instance.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Closed-form bound table for the extremal class count.
    Bounds {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
    },
    /// Run the built-in acceptance checks; exit 0 only if every one passes.
    Selftest,
}

#[derive(Subcommand)]
enum ConstructWhat {
    /// The tight rainbow-free construction with 2^(r-1)(t-1) classes.
    Ab {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
    /// One color class per vector read from a file (one vector per line,
    /// comma-separated coordinates; blank lines and # comments are skipped).
    Zerosum {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        vectors: PathBuf,
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
    /// Seeded random partite instance.
    Random {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        /// Number of color classes.
        #[arg(long)]
        f: usize,
        /// Size of every part.
        #[arg(long)]
        s: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum ZerosumWhat {
    /// Smallest length forcing a zero-sum t-subsequence in Z_t^r.
    G {
        /// Dimension of the vectors.
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        /// Give up (exit 3) if a free sequence of this length exists.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Test a vector file for a zero-sum k-subsequence mod t.
    Check {
        #[arg(long)]
        t: usize,
        /// Subsequence length to look for.
        #[arg(long)]
        k: usize,
        #[arg(long)]
        vectors: PathBuf,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Complete backtracking over color-distinct matchings.
    Exhaustive,
    /// Cover partition, disjoint cores, then greedy extension.
    Theorem1,
    /// Part reduction to s = t followed by the core argument.
    Theorem2,
    /// Random vertex splits; needs --seed.
    Split,
    /// Repeated-edge classes when the class count beats the census bound.
    Pigeonhole,
}

/// A terminating condition with its exit code; the message goes to stderr.
struct Failure {
    code: u8,
    message: String,
}

fn malformed(message: String) -> Failure {
    Failure {
        code: EXIT_MALFORMED,
        message,
    }
}

fn precondition(message: String) -> Failure {
    Failure {
        code: EXIT_PRECONDITION,
        message,
    }
}

fn inconclusive(message: String) -> Failure {
    Failure {
        code: EXIT_INCONCLUSIVE,
        message,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(cli);
    eprintln!("wall-time-ms {}", start.elapsed().as_millis());
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    if cli.jobs == 0 {
        return Err(precondition("--jobs must be at least 1".into()));
    }
    match cli.verb {
        Verb::Construct { what } => construct(what),
        Verb::Find {
            input,
            t,
            method,
            seed,
            budget,
            trace,
        } => find(&input, t, method, seed, budget, trace),
        Verb::Certify { input, t } => certify(&input, t),
        Verb::Stats { input } => stats(&input),
        Verb::Reduce {
            input,
            s,
            nonpartite,
            output,
        } => reduce(&input, s, nonpartite, &output),
        Verb::Zerosum { what } => zerosum(what),
        Verb::ExactF {
            r,
            t,
            s,
            fmax,
            general,
            output,
        } => exact_f(r, t, s, fmax, general, output.as_deref()),
        Verb::Bounds { r, t } => bound_table(r, t),
        Verb::Selftest => selftest(),
    }
}

// ---------------------------------------------------------------------------
// shared helpers

fn emit<T: Serialize>(doc: &T) {
    println!(
        "{}",
        serde_json::to_string(doc).expect("documents contain only serializable data")
    );
}

fn read_instance(path: &Path) -> Result<ColoredHypergraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| malformed(format!("cannot read {}: {e}", path.display())))?;
    rch::parse(&text).map_err(|e| {
        if e.line == 0 {
            malformed(format!("{}: {}", path.display(), e.message))
        } else {
            malformed(format!("{} line {}: {}", path.display(), e.line, e.message))
        }
    })
}

fn write_instance(path: &Path, g: &ColoredHypergraph) -> Result<(), Failure> {
    std::fs::write(path, rch::write(g))
        .map_err(|e| precondition(format!("cannot write {}: {e}", path.display())))
}

/// Human-readable vertex name matching the instance file format: `part.rank`
/// in partite mode (rank = position within the sorted part), the plain vertex
/// number otherwise.
fn vertex_label(g: &ColoredHypergraph, v: VertexId) -> String {
    match g.mode() {
        Mode::Partite => {
            let part = g.part_of(v).expect("partite vertices belong to a part");
            let rank = g.parts()[part]
                .iter()
                .position(|&u| u == v)
                .expect("vertex is in its own part");
            format!("{part}.{rank}")
        }
        Mode::General => v.to_string(),
    }
}

fn certificate_pairs(g: &ColoredHypergraph, cert: &RainbowCertificate) -> Vec<(usize, Vec<String>)> {
    cert.pairs
        .iter()
        .map(|&(color, id)| {
            let edge = g.edge(id).expect("certificate edges exist in the instance");
            let labels = edge.vertices.iter().map(|&v| vertex_label(g, v)).collect();
            (color, labels)
        })
        .collect()
}

fn read_vectors(path: &Path) -> Result<Vec<Vec<usize>>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| malformed(format!("cannot read {}: {e}", path.display())))?;
    let mut items = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut vector = Vec::new();
        for token in line.split(',') {
            let coord = token.trim().parse::<usize>().map_err(|e| {
                malformed(format!(
                    "{} line {}: bad coordinate {token:?}: {e}",
                    path.display(),
                    idx + 1
                ))
            })?;
            vector.push(coord);
        }
        items.push(vector);
    }
    if items.is_empty() {
        return Err(malformed(format!(
            "{}: no vectors found",
            path.display()
        )));
    }
    Ok(items)
}

fn map_proof_error(e: ProofError) -> Failure {
    match e {
        ProofError::Solver(SolveError::GuardExceeded { vertices, limit }) => inconclusive(format!(
            "covering-number solver guard: {vertices} vertices exceeds the limit of {limit}"
        )),
        other => precondition(other.to_string()),
    }
}

// ---------------------------------------------------------------------------
// documents

#[derive(Serialize)]
struct WrittenDoc {
    written: String,
    mode: String,
    r: usize,
    t: usize,
    f: usize,
}

impl WrittenDoc {
    fn new(path: &Path, g: &ColoredHypergraph) -> Self {
        WrittenDoc {
            written: path.display().to_string(),
            mode: g.mode().to_string(),
            r: g.r(),
            t: g.t(),
            f: g.num_colors(),
        }
    }
}

#[derive(Serialize)]
struct ResultDoc {
    result: &'static str,
    target: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pairs: Option<Vec<(usize, Vec<String>)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nodes_explored: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    failure: Option<ProofFailure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduction: Option<ReduceReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduced_instance: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Trace>,
}

impl ResultDoc {
    fn new(result: &'static str, target: usize) -> Self {
        ResultDoc {
            result,
            target,
            pairs: None,
            nodes_explored: None,
            failure: None,
            reduction: None,
            reduced_instance: None,
            trace: None,
        }
    }
}

// ---------------------------------------------------------------------------
// verbs

fn construct(what: ConstructWhat) -> Result<u8, Failure> {
    let (g, output) = match what {
        ConstructWhat::Ab { r, t, output } => {
            if r < 1 || t < 1 {
                return Err(precondition("construct ab needs r >= 1 and t >= 1".into()));
            }
            (tight_rainbow_free(r, t), output)
        }
        ConstructWhat::Zerosum { t, vectors, output } => {
            if t < 1 {
                return Err(precondition("construct zerosum needs t >= 1".into()));
            }
            let items = read_vectors(&vectors)?;
            let d = items[0].len();
            let seq = VectorSequence::new(t, d, items)
                .map_err(|e| malformed(format!("{}: {e}", vectors.display())))?;
            (from_vector_sequence(&seq), output)
        }
        ConstructWhat::Random {
            r,
            t,
            f,
            s,
            seed,
            output,
        } => {
            if r < 1 || t < 1 || f < 1 {
                return Err(precondition(
                    "construct random needs r >= 1, t >= 1, f >= 1".into(),
                ));
            }
            let g = random_instance(r, t, f, s, seed).map_err(|e| precondition(e.to_string()))?;
            (g, output)
        }
    };
    write_instance(&output, &g)?;
    emit(&WrittenDoc::new(&output, &g));
    Ok(0)
}

fn find(
    input: &Path,
    t: usize,
    method: Method,
    seed: Option<u64>,
    budget: Option<u64>,
    trace: bool,
) -> Result<u8, Failure> {
    if t < 1 {
        return Err(precondition("--t must be at least 1".into()));
    }
    if method != Method::Split {
        if seed.is_some() {
            return Err(precondition("--seed applies only to the split method".into()));
        }
        if budget.is_some() {
            return Err(precondition(
                "--budget applies only to the split method".into(),
            ));
        }
    }
    let g = read_instance(input)?;
    if method != Method::Exhaustive && t != g.t() {
        return Err(precondition(format!(
            "the {} method proves matchings of the instance's own class size t = {}, not {t}",
            method_name(method),
            g.t()
        )));
    }
    let mut doc = ResultDoc::new("failure", t);
    match method {
        Method::Exhaustive => match g.search_rainbow(t) {
            RainbowSearch::Found {
                certificate,
                nodes_explored,
            } => {
                doc.result = "rainbow";
                doc.pairs = Some(certificate_pairs(&g, &certificate));
                doc.nodes_explored = Some(nodes_explored);
            }
            RainbowSearch::None(cert) => {
                doc.result = "none";
                doc.nodes_explored = Some(cert.nodes_explored);
            }
        },
        Method::Theorem1 => {
            let run = theorem1_find(&g).map_err(map_proof_error)?;
            fill_outcome(&mut doc, &g, run.outcome, run.trace, trace);
        }
        Method::Theorem2 => {
            let run = theorem2_find(&g).map_err(map_proof_error)?;
            doc.reduction = Some(run.reduction);
            doc.reduced_instance = Some(rch::write(&run.reduced));
            fill_outcome(&mut doc, &run.reduced, run.outcome, run.trace, trace);
        }
        Method::Split => {
            let seed =
                seed.ok_or_else(|| precondition("the split method requires --seed".into()))?;
            let run = random_split_find(&g, seed, budget.unwrap_or(DEFAULT_SPLIT_BUDGET));
            fill_outcome(&mut doc, &g, run.outcome, run.trace, trace);
        }
        Method::Pigeonhole => match pigeonhole_find(&g) {
            Ok(certificate) => {
                doc.result = "rainbow";
                doc.pairs = Some(certificate_pairs(&g, &certificate));
            }
            Err(failure) => {
                doc.failure = Some(failure);
            }
        },
    }
    emit(&doc);
    Ok(0)
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Exhaustive => "exhaustive",
        Method::Theorem1 => "theorem1",
        Method::Theorem2 => "theorem2",
        Method::Split => "split",
        Method::Pigeonhole => "pigeonhole",
    }
}

/// Copy a finder outcome into the document. `host` is the instance the
/// certificate's edge ids refer to (the reduced one for reducing methods).
fn fill_outcome(
    doc: &mut ResultDoc,
    host: &ColoredHypergraph,
    outcome: FinderOutcome,
    trace: Trace,
    want_trace: bool,
) {
    match outcome {
        FinderOutcome::Found(certificate) => {
            doc.result = "rainbow";
            doc.pairs = Some(certificate_pairs(host, &certificate));
        }
        FinderOutcome::Failed(failure) => {
            doc.failure = Some(failure);
        }
    }
    if want_trace {
        doc.trace = Some(trace);
    }
}

fn certify(input: &Path, t: usize) -> Result<u8, Failure> {
    if t < 1 {
        return Err(precondition("--t must be at least 1".into()));
    }
    let g = read_instance(input)?;
    let mut doc = ResultDoc::new("none", t);
    match g.search_rainbow(t) {
        RainbowSearch::Found {
            certificate,
            nodes_explored,
        } => {
            doc.result = "rainbow";
            doc.pairs = Some(certificate_pairs(&g, &certificate));
            doc.nodes_explored = Some(nodes_explored);
        }
        RainbowSearch::None(cert) => {
            doc.nodes_explored = Some(cert.nodes_explored);
        }
    }
    emit(&doc);
    Ok(0)
}

#[derive(Serialize)]
struct StatsDoc {
    mode: String,
    r: usize,
    t: usize,
    f: usize,
    vertices: usize,
    edges: usize,
    covering_number: usize,
    matching_number: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    part_sizes: Option<Vec<usize>>,
    /// multiplicity -> how many distinct vertex sets appear that many times.
    multiplicity_histogram: BTreeMap<usize, usize>,
}

fn stats(input: &Path) -> Result<u8, Failure> {
    let g = read_instance(input)?;
    let h = g.as_hypergraph();
    let cover = h.min_vertex_cover().map_err(|e| match e {
        SolveError::GuardExceeded { vertices, limit } => inconclusive(format!(
            "covering-number solver guard: {vertices} vertices exceeds the limit of {limit}"
        )),
        other => precondition(other.to_string()),
    })?;
    let matching = h.max_matching();
    let mut histogram = BTreeMap::new();
    for (_, count) in g.multiplicity_map() {
        *histogram.entry(count).or_insert(0) += 1;
    }
    let part_sizes = match g.mode() {
        Mode::Partite => Some(g.parts().iter().map(|p| p.len()).collect()),
        Mode::General => None,
    };
    emit(&StatsDoc {
        mode: g.mode().to_string(),
        r: g.r(),
        t: g.t(),
        f: g.num_colors(),
        vertices: g.vertices().len(),
        edges: g.edge_count(),
        covering_number: cover.vertices.len(),
        matching_number: matching.edges.len(),
        part_sizes,
        multiplicity_histogram: histogram,
    });
    Ok(0)
}

#[derive(Serialize)]
struct ReduceDoc {
    written: String,
    report: ReduceReport,
}

fn reduce(input: &Path, s: usize, nonpartite: bool, output: &Path) -> Result<u8, Failure> {
    let g = read_instance(input)?;
    let (reduced, report) = if nonpartite {
        reduce_vertices(&g, s)
    } else {
        reduce_parts(&g, s)
    }
    .map_err(|e| precondition(e.to_string()))?;
    write_instance(output, &reduced)?;
    emit(&ReduceDoc {
        written: output.display().to_string(),
        report,
    });
    Ok(0)
}

#[derive(Serialize)]
struct GDoc {
    r: usize,
    t: usize,
    cap: usize,
    result: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    longest_free: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    free_witness: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize)]
struct CheckDoc {
    t: usize,
    k: usize,
    d: usize,
    length: usize,
    result: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    indices: Option<Vec<usize>>,
}

fn zerosum(what: ZerosumWhat) -> Result<u8, Failure> {
    match what {
        ZerosumWhat::G { r, t, cap } => {
            if r < 1 || t < 1 {
                return Err(precondition("zerosum g needs r >= 1 and t >= 1".into()));
            }
            let cap = cap.unwrap_or_else(|| rainbow_core::constructs::zerosum::default_cap(t));
            if cap < 1 {
                return Err(precondition("--cap must be at least 1".into()));
            }
            let mut doc = GDoc {
                r,
                t,
                cap,
                result: "exact",
                value: None,
                longest_free: None,
                free_witness: None,
            };
            match g_exact(r, t, cap) {
                GOutcome::Exact {
                    value,
                    longest_free,
                } => {
                    doc.value = Some(value);
                    doc.longest_free = Some(longest_free);
                    emit(&doc);
                    Ok(0)
                }
                GOutcome::UnresolvedAtCap { cap, free_witness } => {
                    doc.result = "unresolved_at_cap";
                    doc.cap = cap;
                    doc.free_witness = Some(free_witness);
                    emit(&doc);
                    Ok(EXIT_INCONCLUSIVE)
                }
            }
        }
        ZerosumWhat::Check { t, k, vectors } => {
            if t < 1 || k < 1 {
                return Err(precondition("zerosum check needs t >= 1 and k >= 1".into()));
            }
            let items = read_vectors(&vectors)?;
            let d = items[0].len();
            let seq = VectorSequence::new(t, d, items)
                .map_err(|e| malformed(format!("{}: {e}", vectors.display())))?;
            let hit = seq.zero_sum_subsequence(k);
            emit(&CheckDoc {
                t,
                k,
                d,
                length: seq.items.len(),
                result: if hit.is_some() { "zero_sum" } else { "none" },
                indices: hit,
            });
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct ExactFDoc {
    mode: String,
    r: usize,
    t: usize,
    s: usize,
    f_max: usize,
    value: usize,
    /// True when the witness sits at f_max itself, so the true value may be
    /// larger than reported.
    ceiling_hit: bool,
    inconclusive: bool,
    nodes: u64,
    duplicate_hits: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_file: Option<String>,
}

fn exact_f(
    r: usize,
    t: usize,
    s: usize,
    fmax: usize,
    general: bool,
    output: Option<&Path>,
) -> Result<u8, Failure> {
    if r < 1 || t < 1 || fmax < 1 {
        return Err(precondition(
            "exact-f needs r >= 1, t >= 1, and fmax >= 1".into(),
        ));
    }
    if s < t {
        return Err(precondition(format!(
            "part size {s} cannot host a {t}-matching; need s >= t"
        )));
    }
    let query = ExtremalQuery {
        mode: if general { Mode::General } else { Mode::Partite },
        r,
        t,
        s,
        f_max: fmax,
    };
    let result = exact_f_s(&query);
    let witness_file = match (output, &result.witness) {
        (Some(path), Some(w)) => {
            write_instance(path, w)?;
            Some(path.display().to_string())
        }
        _ => None,
    };
    let code = if result.inconclusive {
        EXIT_INCONCLUSIVE
    } else {
        0
    };
    emit(&ExactFDoc {
        mode: query.mode.to_string(),
        r,
        t,
        s,
        f_max: fmax,
        value: result.value,
        ceiling_hit: result.ceiling_hit,
        inconclusive: result.inconclusive,
        nodes: result.stats.nodes,
        duplicate_hits: result.stats.duplicate_hits,
        witness_file,
    });
    Ok(code)
}

#[derive(Serialize)]
struct BoundsDoc {
    r: usize,
    t: usize,
    bounds: BTreeMap<&'static str, String>,
}

fn bound_table(r: usize, t: usize) -> Result<u8, Failure> {
    if r < 2 || t < 2 {
        return Err(precondition("bounds needs r >= 2 and t >= 2".into()));
    }
    let report = bounds(r, t);
    emit(&BoundsDoc {
        r,
        t,
        bounds: report.rows().into_iter().collect(),
    });
    Ok(0)
}

fn selftest() -> Result<u8, Failure> {
    let reports = acceptance::run_all();
    let mut failures = 0;
    for rep in &reports {
        let status = if rep.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2}  {status}  {:<32} {}",
            rep.id, rep.name, rep.detail
        );
        if !rep.pass {
            failures += 1;
        }
    }
    if failures == 0 {
        println!("selftest: all {} checks passed", reports.len());
        Ok(0)
    } else {
        println!(
            "selftest: {failures} of {} checks failed",
            reports.len()
        );
        Ok(EXIT_MALFORMED)
    }
}
