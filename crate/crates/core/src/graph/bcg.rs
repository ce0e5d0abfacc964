//! The `.bcg` bicolored-graph text format.
//!
//! ```text
//! # optional comments
//! n 3
//! c BWB
//! e 1 2
//! e 2 3
//! ```
//!
//! Vertices are 1-indexed and every edge line has `u < v`. The writer emits
//! no comments and lists edges lexicographically, so writing a parsed
//! canonical file reproduces it byte for byte.

use super::{BicoloredGraph, Color};
use crate::error::{Error, Result};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_bcg(text: &str) -> Result<BicoloredGraph> {
    let mut n: Option<usize> = None;
    let mut colors: Option<Vec<Color>> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let tag = parts.next().unwrap_or_default();
        let args: Vec<&str> = parts.collect();
        match tag {
            "n" => {
                if n.is_some() {
                    return Err(err(line_no, "duplicate \"n\" line"));
                }
                let [value] = args[..] else {
                    return Err(err(line_no, "expected \"n <int>\""));
                };
                let value: usize = value
                    .parse()
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| err(line_no, format!("invalid vertex count {value:?}")))?;
                n = Some(value);
            }
            "c" => {
                let n = n.ok_or_else(|| err(line_no, "\"c\" line before \"n\" line"))?;
                if colors.is_some() {
                    return Err(err(line_no, "duplicate \"c\" line"));
                }
                let [s] = args[..] else {
                    return Err(err(line_no, "expected \"c <B/W string>\""));
                };
                let parsed: Option<Vec<Color>> = s.chars().map(Color::from_char).collect();
                let parsed = parsed.ok_or_else(|| err(line_no, "colors must be B or W"))?;
                if parsed.len() != n {
                    return Err(err(
                        line_no,
                        format!("expected {n} colors, found {}", parsed.len()),
                    ));
                }
                colors = Some(parsed);
            }
            "e" => {
                let n = n.ok_or_else(|| err(line_no, "\"e\" line before \"n\" line"))?;
                let [u, v] = args[..] else {
                    return Err(err(line_no, "expected \"e <u> <v>\""));
                };
                let parse_vertex = |s: &str| {
                    s.parse::<usize>()
                        .ok()
                        .filter(|&x| (1..=n).contains(&x))
                        .ok_or_else(|| err(line_no, format!("invalid vertex {s:?}")))
                };
                let (u, v) = (parse_vertex(u)?, parse_vertex(v)?);
                if u >= v {
                    return Err(err(
                        line_no,
                        format!("edge must satisfy u < v, got {u} {v}"),
                    ));
                }
                if edges.contains(&(u - 1, v - 1)) {
                    return Err(err(line_no, format!("duplicate edge {u} {v}")));
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(err(line_no, format!("unknown line tag {other:?}"))),
        }
    }

    if n.is_none() {
        return Err(err(last_line.max(1), "missing \"n\" line"));
    }
    let colors = colors.ok_or_else(|| err(last_line.max(1), "missing \"c\" line"))?;
    BicoloredGraph::new(&colors, &edges)
}

#[must_use]
pub fn to_bcg(g: &BicoloredGraph) -> String {
    let mut s = format!("n {}\nc {}\n", g.n(), super::color_string(&g.colors()));
    for (u, v) in g.edges() {
        s.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    s
}
