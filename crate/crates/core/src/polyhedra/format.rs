//! Plain-text polyhedron description files.
//!
//! ```text
//! # comment
//! vertices 8
//! face 0 3 2 1
//! face 4 5 6 7
//! ```
//!
//! The `vertices` line comes first; each `face` line lists one cyclic
//! boundary. Blank lines and `#` comments are ignored.

use std::fmt::Write;

use super::{boundary_pairs, PlanarMap};
use crate::error::{Error, Result};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_poly(text: &str) -> Result<PlanarMap> {
    let mut vertex_count: Option<usize> = None;
    let mut faces = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let keyword = words.next().expect("non-empty line has a word");
        match (keyword, vertex_count) {
            ("vertices", None) => {
                let count = words
                    .next()
                    .ok_or_else(|| parse_error(line_no, "missing vertex count"))?;
                let count: usize = count
                    .parse()
                    .map_err(|_| parse_error(line_no, format!("invalid vertex count `{count}`")))?;
                if let Some(extra) = words.next() {
                    return Err(parse_error(line_no, format!("unexpected token `{extra}`")));
                }
                vertex_count = Some(count);
            }
            ("vertices", Some(_)) => return Err(parse_error(line_no, "duplicate `vertices` line")),
            ("face", None) => {
                return Err(parse_error(line_no, "`face` before `vertices` line"));
            }
            ("face", Some(v)) => {
                let ids = words
                    .map(|w| {
                        let id: usize = w.parse().map_err(|_| {
                            parse_error(line_no, format!("invalid vertex id `{w}`"))
                        })?;
                        if id >= v {
                            return Err(parse_error(
                                line_no,
                                format!("vertex id {id} out of range (vertices {v})"),
                            ));
                        }
                        Ok(id)
                    })
                    .collect::<Result<Vec<_>>>()?;
                if ids.len() < 3 {
                    return Err(parse_error(line_no, "a face needs at least 3 vertices"));
                }
                if let Some((a, _)) = boundary_pairs(&ids).find(|(a, b)| a == b) {
                    return Err(parse_error(
                        line_no,
                        format!("vertex {a} repeated consecutively"),
                    ));
                }
                faces.push(ids);
            }
            (other, _) => return Err(parse_error(line_no, format!("unknown keyword `{other}`"))),
        }
    }
    let vertex_count = vertex_count.ok_or_else(|| parse_error(1, "missing `vertices` line"))?;
    let last_line = text.lines().count();
    PlanarMap::new(vertex_count, faces).map_err(|e| parse_error(last_line, e.to_string()))
}

pub fn write_poly(p: &PlanarMap) -> String {
    let mut out = String::new();
    writeln!(out, "vertices {}", p.vertex_count()).unwrap();
    for face in p.faces() {
        out.push_str("face");
        for v in face {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}
