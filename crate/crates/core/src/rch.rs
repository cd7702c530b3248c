//! The RCH text format: a line-oriented instance file.
//!
//! ```text
//! rch 1
//! mode partite
//! r 2 t 2 f 2
//! part 0 2
//! part 1 2
//! color 0: 0.0,1.0 ; 0.1,1.1
//! color 1: 0.0,1.1 ; 0.1,1.0
//! ```
//!
//! `#` starts a comment anywhere on a line. Partite files declare `part k
//! size` for k = 0..r−1 and write vertex `j` of part `k` as `k.j`. General
//! files write plain vertex ids and may declare the full vertex set with an
//! optional `vertices v,v,…` line (needed only when some vertices are
//! isolated). Each `color` line lists one class: `;`-separated edges, each a
//! `,`-separated tuple.
//!
//! The parser is deliberately permissive about structural defects that the
//! model can represent (wrong arity, oversized classes, repeated vertices):
//! those are reported by `ColoredHypergraph::validate`, not here. Errors here
//! are purely syntactic or about unresolvable references, and carry the line
//! number.

use crate::graph::{ColorId, ColoredEdge, ColoredHypergraph, Mode, VertexId};
use std::collections::BTreeSet;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct RchError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, RchError> {
    Err(RchError {
        line,
        message: message.into(),
    })
}

/// Parse an instance from RCH text.
pub fn parse(input: &str) -> Result<ColoredHypergraph, RchError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("").trim();
            (i + 1, content)
        })
        .filter(|(_, content)| !content.is_empty());

    let (line, header) = lines.next().ok_or(RchError {
        line: 1,
        message: "empty file, expected `rch 1`".into(),
    })?;
    if header != "rch 1" {
        return err(line, format!("expected `rch 1`, found `{header}`"));
    }

    let (line, mode_line) = next_line(&mut lines, "mode")?;
    let mode = match mode_line {
        "mode partite" => Mode::Partite,
        "mode general" => Mode::General,
        other => return err(line, format!("expected `mode partite|general`, found `{other}`")),
    };

    let (line, dims) = next_line(&mut lines, "r/t/f header")?;
    let fields: Vec<&str> = dims.split_whitespace().collect();
    if fields.len() != 6 || fields[0] != "r" || fields[2] != "t" || fields[4] != "f" {
        return err(line, format!("expected `r <r> t <t> f <f>`, found `{dims}`"));
    }
    let r: usize = parse_number(line, fields[1], "r")?;
    let t: usize = parse_number(line, fields[3], "t")?;
    let f: usize = parse_number(line, fields[5], "f")?;
    if r == 0 || t == 0 {
        return err(line, "r and t must be positive");
    }

    let mut parts: Vec<BTreeSet<VertexId>> = Vec::new();
    let mut offsets: Vec<u32> = Vec::new();
    let mut sizes: Vec<usize> = Vec::new();
    if mode == Mode::Partite {
        let mut offset: u32 = 0;
        for k in 0..r {
            let (line, decl) = next_line(&mut lines, "part declaration")?;
            let fields: Vec<&str> = decl.split_whitespace().collect();
            if fields.len() != 3 || fields[0] != "part" {
                return err(line, format!("expected `part {k} <size>`, found `{decl}`"));
            }
            let index: usize = parse_number(line, fields[1], "part index")?;
            if index != k {
                return err(line, format!("parts must appear in order, expected part {k}"));
            }
            let size: usize = parse_number(line, fields[2], "part size")?;
            if size == 0 {
                return err(line, "part size must be positive");
            }
            offsets.push(offset);
            sizes.push(size);
            parts.push((0..size).map(|j| offset + j as u32).collect());
            offset += size as u32;
        }
    }

    let mut declared: Option<BTreeSet<VertexId>> = None;
    let mut classes: Vec<Option<(usize, Vec<Vec<VertexId>>)>> = vec![None; f];
    for (line, content) in lines {
        if let Some(rest) = content.strip_prefix("vertices") {
            if mode != Mode::General {
                return err(line, "`vertices` is only valid in general mode");
            }
            if declared.is_some() {
                return err(line, "duplicate `vertices` line");
            }
            let mut set = BTreeSet::new();
            for token in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let v: u32 = parse_number(line, token, "vertex id")?;
                if !set.insert(v) {
                    return err(line, format!("vertex {v} listed twice"));
                }
            }
            declared = Some(set);
            continue;
        }
        let Some(rest) = content.strip_prefix("color") else {
            return err(line, format!("unrecognized line `{content}`"));
        };
        let Some((cid_text, body)) = rest.split_once(':') else {
            return err(line, "expected `color <id>: …`");
        };
        let cid: ColorId = parse_number(line, cid_text.trim(), "color id")?;
        if cid >= f {
            return err(line, format!("color id {cid} out of range, header says f {f}"));
        }
        if classes[cid].is_some() {
            return err(line, format!("duplicate color {cid}"));
        }
        let mut edges = Vec::new();
        for edge_text in body.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let mut tuple = Vec::new();
            for token in edge_text.split(',').map(str::trim) {
                if token.is_empty() {
                    return err(line, "empty vertex token");
                }
                tuple.push(parse_vertex(line, token, mode, &offsets, &sizes)?);
            }
            edges.push(tuple);
        }
        classes[cid] = Some((line, edges));
    }

    let mut vertices: BTreeSet<VertexId> = parts.iter().flatten().copied().collect();
    if let Some(declared) = declared {
        for (line, class) in classes.iter().flatten() {
            for v in class.iter().flatten() {
                if !declared.contains(v) {
                    return err(
                        *line,
                        format!("vertex {v} is not in the declared vertex set"),
                    );
                }
            }
        }
        vertices = declared;
    }

    let mut partial = false;
    let mut edges: Vec<ColoredEdge> = Vec::new();
    for (cid, entry) in classes.into_iter().enumerate() {
        let class = entry.map(|(_, edges)| edges).unwrap_or_default();
        if class.len() != t {
            partial = true;
        }
        for tuple in class {
            edges.push(ColoredEdge {
                id: edges.len(),
                color: cid,
                vertices: tuple,
            });
        }
    }
    Ok(ColoredHypergraph::from_raw_with_colors(
        mode, r, t, parts, vertices, edges, f, partial,
    ))
}

fn next_line<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    what: &str,
) -> Result<(usize, &'a str), RchError> {
    lines.next().ok_or(RchError {
        line: 0,
        message: format!("file ended early, expected {what}"),
    })
}

fn parse_number<T: std::str::FromStr>(
    line: usize,
    token: &str,
    what: &str,
) -> Result<T, RchError> {
    token
        .parse()
        .map_err(|_| RchError {
            line,
            message: format!("invalid {what} `{token}`"),
        })
}

fn parse_vertex(
    line: usize,
    token: &str,
    mode: Mode,
    offsets: &[u32],
    sizes: &[usize],
) -> Result<VertexId, RchError> {
    match mode {
        Mode::General => parse_number(line, token, "vertex id"),
        Mode::Partite => {
            let Some((part_text, rank_text)) = token.split_once('.') else {
                return err(line, format!("expected `part.index` vertex token, found `{token}`"));
            };
            let part: usize = parse_number(line, part_text, "part index")?;
            if part >= offsets.len() {
                return err(line, format!("part {part} does not exist"));
            }
            let rank: usize = parse_number(line, rank_text, "vertex index")?;
            if rank >= sizes[part] {
                return err(
                    line,
                    format!("vertex {part}.{rank} is outside the declared part size {}", sizes[part]),
                );
            }
            Ok(offsets[part] + rank as u32)
        }
    }
}

/// Render an instance as canonical RCH text: parts and classes in ascending
/// order, partite vertices re-normalized to their rank within the part, and a
/// `vertices` line only when a general-mode instance has isolated vertices.
pub fn write(g: &ColoredHypergraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "rch 1");
    let _ = writeln!(out, "mode {}", g.mode());
    let _ = writeln!(out, "r {} t {} f {}", g.r(), g.t(), g.num_colors());
    match g.mode() {
        Mode::Partite => {
            for (k, part) in g.parts().iter().enumerate() {
                let _ = writeln!(out, "part {k} {}", part.len());
            }
        }
        Mode::General => {
            let mentioned: BTreeSet<VertexId> = g
                .edges()
                .iter()
                .flat_map(|e| e.vertices.iter().copied())
                .collect();
            if mentioned != *g.vertices() {
                let listed: Vec<String> =
                    g.vertices().iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "vertices {}", listed.join(","));
            }
        }
    }
    for cid in 0..g.num_colors() {
        let rendered: Vec<String> = g
            .class(cid)
            .iter()
            .map(|e| {
                e.vertices
                    .iter()
                    .map(|&v| render_vertex(g, v))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        let _ = writeln!(out, "color {cid}: {}", rendered.join(" ; "));
    }
    out
}

fn render_vertex(g: &ColoredHypergraph, v: VertexId) -> String {
    match g.mode() {
        Mode::General => v.to_string(),
        Mode::Partite => {
            let part = g
                .part_of(v)
                .expect("partite instances keep every vertex inside a part");
            let rank = g.parts()[part]
                .iter()
                .position(|&u| u == v)
                .expect("part_of returned the containing part");
            format!("{part}.{rank}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructs::tight_rainbow_free;

    #[test]
    fn construction_round_trips_byte_stably() {
        let g = tight_rainbow_free(2, 2);
        let text = write(&g);
        assert_eq!(
            text,
            "rch 1\nmode partite\nr 2 t 2 f 2\npart 0 2\npart 1 2\n\
             color 0: 0.0,1.0 ; 0.1,1.1\ncolor 1: 0.0,1.1 ; 0.1,1.0\n"
        );
        let parsed = parse(&text).unwrap();
        assert!(parsed.validate().is_empty());
        assert_eq!(write(&parsed), text);
    }

    #[test]
    fn comments_and_whitespace_are_tolerated() {
        let text = "# instance\nrch 1\n  mode general # general graphs\n\nr 2 t 2 f 1\n\
                    color 0:  0 , 1 ;  2,3  # a perfect matching\n";
        let g = parse(text).unwrap();
        assert_eq!(g.num_colors(), 1);
        assert_eq!(g.edge_count(), 2);
        assert!(g.validate().is_empty());
    }

    #[test]
    fn general_mode_keeps_isolated_vertices() {
        let g = crate::graph::ColoredHypergraph::new_general(
            2,
            2,
            BTreeSet::from([0, 1, 2, 3, 9]),
            vec![vec![vec![0, 1], vec![2, 3]]],
        );
        let text = write(&g);
        assert!(text.contains("vertices 0,1,2,3,9\n"));
        let parsed = parse(&text).unwrap();
        assert_eq!(parsed.vertices().len(), 5);
        assert_eq!(write(&parsed), text);
    }

    #[test]
    fn structural_defects_parse_and_fail_validation() {
        // Wrong arity and an oversized class are model-level violations, not
        // syntax errors.
        let text = "rch 1\nmode general\nr 2 t 1 f 1\ncolor 0: 0,1,2 ; 3,4\n";
        let g = parse(text).unwrap();
        assert!(!g.validate().is_empty());
    }

    #[test]
    fn missing_classes_flag_a_partial_coloring() {
        let text = "rch 1\nmode general\nr 2 t 2 f 2\ncolor 1: 0,1 ; 2,3\n";
        let g = parse(text).unwrap();
        assert!(g.is_partial());
        assert_eq!(g.class(0).len(), 0);
        assert_eq!(g.class(1).len(), 2);
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let cases: Vec<(&str, usize, &str)> = vec![
            ("rch 2\n", 1, "expected `rch 1`"),
            ("rch 1\nmode sideways\n", 2, "expected `mode partite|general`"),
            ("rch 1\nmode general\nr 2 t 2\n", 3, "expected `r <r> t <t> f <f>`"),
            ("rch 1\nmode general\nr 0 t 2 f 1\n", 3, "must be positive"),
            (
                "rch 1\nmode partite\nr 2 t 2 f 0\npart 1 2\n",
                4,
                "parts must appear in order",
            ),
            (
                "rch 1\nmode partite\nr 1 t 1 f 1\npart 0 1\ncolor 0: 0.1\n",
                5,
                "outside the declared part size",
            ),
            (
                "rch 1\nmode partite\nr 1 t 1 f 1\npart 0 1\ncolor 0: 1.0\n",
                5,
                "part 1 does not exist",
            ),
            (
                "rch 1\nmode general\nr 2 t 2 f 1\ncolor 1: 0,1 ; 2,3\n",
                4,
                "out of range",
            ),
            (
                "rch 1\nmode general\nr 2 t 2 f 1\ncolor 0: 0,1\ncolor 0: 2,3\n",
                5,
                "duplicate color 0",
            ),
            (
                "rch 1\nmode general\nr 2 t 2 f 1\nvertices 0,1\ncolor 0: 0,1 ; 2,3\n",
                5,
                "not in the declared vertex set",
            ),
            (
                "rch 1\nmode partite\nr 1 t 1 f 0\npart 0 1\nvertices 3\n",
                5,
                "only valid in general mode",
            ),
            ("rch 1\nmode general\nr 2 t 2 f 0\nhello\n", 4, "unrecognized line"),
        ];
        for (text, line, needle) in cases {
            let e = parse(text).unwrap_err();
            assert_eq!(e.line, line, "input: {text:?}, got {e}");
            assert!(
                e.message.contains(needle),
                "input: {text:?}: `{}` should mention `{needle}`",
                e.message
            );
        }
    }

    #[test]
    fn truncated_files_are_rejected() {
        assert!(parse("").is_err());
        assert!(parse("rch 1\n").is_err());
        assert!(parse("rch 1\nmode partite\nr 2 t 2 f 0\npart 0 2\n").is_err());
    }

    #[test]
    fn empty_coloring_round_trips() {
        let g = tight_rainbow_free(3, 1);
        let text = write(&g);
        let parsed = parse(&text).unwrap();
        assert_eq!(parsed.num_colors(), 0);
        assert_eq!(parsed.r(), 3);
        assert_eq!(write(&parsed), text);
    }
}
