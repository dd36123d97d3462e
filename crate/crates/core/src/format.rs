//! Line-oriented text formats for instances and solutions.
//!
//! ```text
//! mstp 1
//! n 3
//! tau 1
//! s 0
//! t 2
//! k 3
//! ell 0
//! measure vdv
//! snapshot 1
//! 0 1
//! 1 2
//! end
//! ```
//!
//! Solutions:
//!
//! ```text
//! mstp-solution 1
//! tau 1
//! path 1: 0 1 2
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. Snapshots are numbered
//! from 1 in files.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{Edge, Measure, PathSequence, ProblemInstance, StPath, TemporalGraph, VertexId};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
    end_column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in raw.char_indices().chain([(raw.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &raw[s..pos],
                        column: raw[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        Some(Line {
            number: i + 1,
            tokens,
            end_column: raw.chars().count() + 1,
        })
    })
}

struct Cursor<'a, I: Iterator<Item = Line<'a>>> {
    lines: I,
    last_line: usize,
}

impl<'a, I: Iterator<Item = Line<'a>>> Cursor<'a, I> {
    fn next(&mut self, expecting: &str) -> Result<Line<'a>> {
        match self.lines.next() {
            Some(l) => {
                self.last_line = l.number;
                Ok(l)
            }
            None => Err(err(self.last_line + 1, 1, format!("unexpected end of input, expected {expecting}"))),
        }
    }
}

fn number(tok: &Token<'_>, line: usize) -> Result<usize> {
    if !tok.text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(line, tok.column, format!("expected a non-negative integer, found `{}`", tok.text)));
    }
    tok.text
        .parse()
        .map_err(|_| err(line, tok.column, format!("integer `{}` is too large", tok.text)))
}

fn vertex(tok: &Token<'_>, line: usize, n: usize) -> Result<usize> {
    let v = number(tok, line)?;
    if v >= n {
        return Err(err(line, tok.column, format!("vertex {v} out of range (n = {n})")));
    }
    Ok(v)
}

/// Checks that `line` is exactly `key <value>` and returns the value token.
fn key_line<'a>(line: &'a Line<'a>, key: &str) -> Result<&'a Token<'a>> {
    let first = &line.tokens[0];
    if first.text != key {
        return Err(err(line.number, first.column, format!("missing header key `{key}`, found `{}`", first.text)));
    }
    match line.tokens.len() {
        1 => Err(err(line.number, line.end_column, format!("missing value for `{key}`"))),
        2 => Ok(&line.tokens[1]),
        _ => Err(err(line.number, line.tokens[2].column, "unexpected trailing token")),
    }
}

fn header(line: &Line<'_>, magic: &str) -> Result<()> {
    let ok = line.tokens.len() == 2 && line.tokens[0].text == magic && line.tokens[1].text == "1";
    if ok {
        Ok(())
    } else {
        Err(err(line.number, 1, format!("expected header `{magic} 1`")))
    }
}

/// Parses an instance document.
pub fn parse_instance(text: &str) -> Result<ProblemInstance> {
    let mut cur = Cursor {
        lines: tokenize(text),
        last_line: 0,
    };
    header(&cur.next("header")?, "mstp")?;
    let mut values = [0usize; 6];
    for (i, key) in ["n", "tau", "s", "t", "k", "ell"].into_iter().enumerate() {
        let line = cur.next(key)?;
        let tok = key_line(&line, key)?;
        values[i] = match key {
            "s" | "t" => vertex(tok, line.number, values[0])?,
            _ => number(tok, line.number)?,
        };
    }
    let [n, tau, s, t, k, ell] = values;
    let line = cur.next("measure")?;
    let tok = key_line(&line, "measure")?;
    let measure: Measure = tok
        .text
        .parse()
        .map_err(|_| err(line.number, tok.column, format!("unknown measure `{}`", tok.text)))?;
    if tau == 0 {
        return Err(err(line.number, 1, "tau must be at least 1"));
    }

    let mut snapshots: Vec<Vec<Edge>> = Vec::with_capacity(tau);
    let mut seen = HashSet::new();
    let mut line = cur.next("snapshot 1")?;
    loop {
        let first = &line.tokens[0];
        if first.text == "end" {
            if line.tokens.len() > 1 {
                return Err(err(line.number, line.tokens[1].column, "unexpected trailing token"));
            }
            if snapshots.len() != tau {
                return Err(err(line.number, 1, format!("expected {tau} snapshots, found {}", snapshots.len())));
            }
            break;
        }
        if first.text == "snapshot" {
            let want = snapshots.len() + 1;
            let tok = key_line(&line, "snapshot")?;
            let got = number(tok, line.number)?;
            if got != want || want > tau {
                return Err(err(line.number, tok.column, format!("expected snapshot {want} of {tau}, found {got}")));
            }
            snapshots.push(Vec::new());
            seen.clear();
        } else {
            let snap = snapshots.len();
            let Some(edges) = snapshots.last_mut() else {
                return Err(err(line.number, first.column, format!("expected `snapshot 1`, found `{}`", first.text)));
            };
            if line.tokens.len() != 2 {
                let col = line.tokens.get(2).map_or(line.end_column, |t| t.column);
                return Err(err(line.number, col, "edge lines have exactly two vertices"));
            }
            let u = vertex(&line.tokens[0], line.number, n)?;
            let v = vertex(&line.tokens[1], line.number, n)?;
            if u == v {
                return Err(err(line.number, line.tokens[1].column, format!("self-loop at vertex {u}")));
            }
            if !seen.insert(Edge::new(u, v)) {
                return Err(err(line.number, 1, format!("duplicate edge {} {} in snapshot {}", u.min(v), u.max(v), snap)));
            }
            edges.push(Edge::new(u, v));
        }
        line = cur.next("`end`")?;
    }
    if let Some(extra) = cur.lines.next() {
        return Err(err(extra.number, 1, "content after `end`"));
    }
    let end_line = cur.last_line;

    for edges in &mut snapshots {
        edges.sort_unstable();
    }
    let graph = TemporalGraph::from_parts_unchecked(n, snapshots);
    ProblemInstance::new(graph, s, t, k, ell, measure).map_err(|e| err(end_line, 1, e.to_string()))
}

/// Canonical text of an instance: sorted edges, one per line.
pub fn write_instance(inst: &ProblemInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "mstp 1");
    let _ = writeln!(out, "n {}", inst.n());
    let _ = writeln!(out, "tau {}", inst.tau());
    let _ = writeln!(out, "s {}", inst.s);
    let _ = writeln!(out, "t {}", inst.t);
    let _ = writeln!(out, "k {}", inst.k);
    let _ = writeln!(out, "ell {}", inst.ell);
    let _ = writeln!(out, "measure {}", inst.measure);
    for (i, snap) in inst.graph.snapshots().iter().enumerate() {
        let _ = writeln!(out, "snapshot {}", i + 1);
        for e in snap {
            let _ = writeln!(out, "{} {}", e.u, e.v);
        }
    }
    out.push_str("end\n");
    out
}

/// Parses a solution document. Paths are checked to be nonempty and
/// repetition-free, but not against any instance.
pub fn parse_solution(text: &str) -> Result<PathSequence> {
    let mut cur = Cursor {
        lines: tokenize(text),
        last_line: 0,
    };
    header(&cur.next("header")?, "mstp-solution")?;
    let line = cur.next("tau")?;
    let tau = number(key_line(&line, "tau")?, line.number)?;
    let mut paths = Vec::with_capacity(tau);
    for i in 1..=tau {
        let line = cur.next(&format!("path {i}"))?;
        let label = format!("{i}:");
        if line.tokens[0].text != "path" {
            return Err(err(line.number, line.tokens[0].column, format!("expected `path {i}:`")));
        }
        match line.tokens.get(1) {
            Some(tok) if tok.text == label => {}
            Some(tok) => return Err(err(line.number, tok.column, format!("expected `{label}`, found `{}`", tok.text))),
            None => return Err(err(line.number, line.end_column, format!("expected `{label}`"))),
        }
        if line.tokens.len() == 2 {
            return Err(err(line.number, line.end_column, format!("path {i} is empty")));
        }
        let mut vertices = Vec::with_capacity(line.tokens.len() - 2);
        for tok in &line.tokens[2..] {
            let v = number(tok, line.number)?;
            let v = u32::try_from(v).map_err(|_| err(line.number, tok.column, format!("vertex {v} is too large")))?;
            if vertices.contains(&VertexId(v)) {
                return Err(err(line.number, tok.column, format!("vertex {v} repeated in path {i}")));
            }
            vertices.push(VertexId(v));
        }
        paths.push(StPath::new(vertices).map_err(|e| err(line.number, 1, e.to_string()))?);
    }
    if let Some(extra) = cur.lines.next() {
        return Err(err(extra.number, 1, format!("expected exactly {tau} paths")));
    }
    Ok(PathSequence::new(paths))
}

pub fn write_solution(seq: &PathSequence) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "mstp-solution 1");
    let _ = writeln!(out, "tau {}", seq.len());
    for (i, p) in seq.paths.iter().enumerate() {
        let _ = write!(out, "path {}:", i + 1);
        for v in p.vertices() {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = "mstp 1\nn 2\ntau 1\ns 0\nt 1\nk 2\nell 0\nmeasure vdv\nsnapshot 1\n0 1\nend\n";

    fn message(e: Error) -> (usize, usize, String) {
        match e {
            Error::Parse { line, column, message } => (line, column, message),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn minimal_instance() {
        let inst = parse_instance(MINIMAL).unwrap();
        assert_eq!((inst.n(), inst.tau(), inst.k), (2, 1, 2));
        assert_eq!(inst.graph.snapshot(0), &[Edge::new(0usize, 1usize)]);
        assert_eq!(write_instance(&inst), MINIMAL);
    }

    #[test]
    fn comments_blank_lines_and_reversed_edges() {
        let text = "# header\nmstp 1\n\nn 3\ntau 2\ns 0\nt 2\nk 3\nell 1\nmeasure eie\n  # first\nsnapshot 1\n2 1\n1 0\nsnapshot 2\nend\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.graph.snapshot(0), &[Edge::new(0usize, 1usize), Edge::new(1usize, 2usize)]);
        assert!(inst.graph.snapshot(1).is_empty());
    }

    #[test]
    fn unknown_measure() {
        let text = MINIMAL.replace("measure vdv", "measure xyz");
        let (line, col, msg) = message(parse_instance(&text).unwrap_err());
        assert_eq!((line, col), (8, 9));
        assert!(msg.contains("unknown measure"));
    }

    #[test]
    fn structural_errors_have_positions() {
        let (line, _, msg) = message(parse_instance(&MINIMAL.replace("tau 1\n", "")).unwrap_err());
        assert_eq!(line, 3);
        assert!(msg.contains("missing header key `tau`"));

        let (line, col, msg) = message(parse_instance(&MINIMAL.replace("0 1\n", "0 5\n")).unwrap_err());
        assert_eq!((line, col), (10, 3));
        assert!(msg.contains("out of range"));

        let dup = MINIMAL.replace("0 1\n", "0 1\n1 0\n");
        assert!(message(parse_instance(&dup).unwrap_err()).2.contains("duplicate edge"));

        assert!(parse_instance(&MINIMAL.replace("end\n", "")).is_err());
        assert!(parse_instance(&MINIMAL.replace("0 1\n", "0 0\n")).is_err());
        assert!(parse_instance(&MINIMAL.replace("snapshot 1", "snapshot 2")).is_err());
        assert!(parse_instance(&format!("{MINIMAL}0 1\n")).is_err());
        assert!(parse_instance(&MINIMAL.replace("mstp 1", "mstp 2")).is_err());
        assert!(parse_instance(&MINIMAL.replace("n 2", "n -2")).is_err());
    }

    #[test]
    fn solution_round_trip() {
        let seq = PathSequence::new(vec![
            StPath::from_indices(&[0, 1, 2]).unwrap(),
            StPath::from_indices(&[0, 2]).unwrap(),
        ]);
        let text = write_solution(&seq);
        assert_eq!(text, "mstp-solution 1\ntau 2\npath 1: 0 1 2\npath 2: 0 2\n");
        assert_eq!(parse_solution(&text).unwrap(), seq);
    }

    #[test]
    fn solution_errors() {
        assert!(parse_solution("mstp-solution 1\ntau 1\npath 1:\n").is_err());
        assert!(parse_solution("mstp-solution 1\ntau 1\npath 2: 0 1\n").is_err());
        assert!(parse_solution("mstp-solution 1\ntau 1\npath 1: 0 1 0\n").is_err());
        assert!(parse_solution("mstp-solution 1\ntau 2\npath 1: 0 1\n").is_err());
        assert!(parse_solution("mstp-solution 1\ntau 1\npath 1: 0 1\npath 2: 0 1\n").is_err());
        // wrong start is a verification concern, not a syntax one
        assert!(parse_solution("mstp-solution 1\ntau 1\npath 1: 5 1\n").is_ok());
    }
}
