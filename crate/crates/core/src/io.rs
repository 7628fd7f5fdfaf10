//! Plain-text edge lists.
//!
//! ```text
//! c optional comment lines
//! p <n> <m>
//! e <u> <v>      (m lines, 0-based ids)
//! ```
//!
//! The writer emits the header and edges in lexicographic order and nothing
//! else, so `write(parse(write(g))) == write(g)` byte for byte.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p {} {}", g.order(), g.size());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {}", e.0, e.1);
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn field(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let t = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    t.parse()
        .map_err(|_| parse_err(line, format!("{what} `{t}` is not a nonnegative integer")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let mut toks = raw.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line, "second `p` line"));
                }
                let n = field(toks.next(), line, "vertex count")?;
                let m = field(toks.next(), line, "edge count")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens after `p <n> <m>`"));
                }
                header = Some((n, m));
            }
            "e" => {
                let Some((n, m)) = header else {
                    return Err(parse_err(line, "edge before `p` line"));
                };
                let u = field(toks.next(), line, "endpoint")?;
                let v = field(toks.next(), line, "endpoint")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens after `e <u> <v>`"));
                }
                if edges.len() == m {
                    return Err(parse_err(line, format!("more than {m} edges")));
                }
                // validate per line so errors carry the line number
                Graph::new(n, [(u, v)]).map_err(|e| parse_err(line, e.to_string()))?;
                edges.push((u, v, line));
            }
            other => return Err(parse_err(line, format!("unknown line tag `{other}`"))),
        }
    }
    let Some((n, m)) = header else {
        return Err(parse_err(last_line.max(1), "missing `p <n> <m>` line"));
    };
    if edges.len() != m {
        return Err(parse_err(
            last_line.max(1),
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    let mut seen = std::collections::HashMap::new();
    for &(u, v, line) in &edges {
        if let Some(first) = seen.insert((u.min(v), u.max(v)), line) {
            return Err(parse_err(
                line,
                format!("duplicate edge {}-{} (first on line {first})", u.min(v), u.max(v)),
            ));
        }
    }
    Graph::new(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    parse_edge_list(&text)
}

pub fn write_edge_list_file(path: impl AsRef<Path>, g: &Graph) -> Result<()> {
    std::fs::write(path, write_edge_list(g))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_sorted_edges() {
        let g = Graph::new(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(write_edge_list(&g), "p 3 2\ne 0 1\ne 1 2\n");
    }

    #[test]
    fn parses_comments_and_blank_lines() {
        let g = parse_edge_list("c path\n\np 3 2\ne 1 2\nc mid\ne 0 1\n").unwrap();
        assert_eq!(g, Graph::new(3, [(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn empty_graph_round_trip() {
        let text = "p 0 0\n";
        assert_eq!(write_edge_list(&parse_edge_list(text).unwrap()), text);
    }

    #[test]
    fn reports_line_numbers() {
        let cases = [
            ("p 3 1\ne 0 3\n", 2),
            ("p 3 2\ne 0 1\ne 1 0\n", 3),
            ("e 0 1\n", 1),
            ("p 3 1\nx\n", 2),
            ("p 3 2\ne 0 1\n", 2),
            ("p 3 1\ne 1 1\n", 2),
            ("p 3 one\n", 1),
            ("", 1),
        ];
        for (text, want) in cases {
            match parse_edge_list(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }
}
