//! Text formats for surfaces and graphs.
//!
//! Surfaces are written either as one face per line (`a b c`, vertex ids)
//! or as one umbrella per line (`v: f1 f2 ... fk`, a vertex id followed by
//! its cyclic face sequence). A text is read as umbrellas iff any
//! non-comment line contains a colon. Graphs are one arc `u v` per line.
//! Lines starting with `#` are comments everywhere.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::surface::{SimplicialSurface, UmbrellaDescriptor};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_id(token: &str, line: usize) -> Result<u32> {
    match token.parse::<u32>() {
        Ok(0) => Err(Error::Parse {
            line,
            msg: "ids must be positive".into(),
        }),
        Ok(x) => Ok(x),
        Err(_) => Err(Error::Parse {
            line,
            msg: format!("expected a positive integer, found {token:?}"),
        }),
    }
}

/// Reads one surface in face or umbrella format.
pub fn parse_surface(text: &str) -> Result<SimplicialSurface> {
    parse_block(text, 0)
}

fn parse_block(text: &str, offset: usize) -> Result<SimplicialSurface> {
    let lines: Vec<(usize, &str)> = content_lines(text).map(|(n, l)| (n + offset, l)).collect();
    if lines.is_empty() {
        return Err(Error::Parse {
            line: offset + 1,
            msg: "no faces or umbrellas".into(),
        });
    }
    if lines.iter().any(|(_, l)| l.contains(':')) {
        parse_umbrella_lines(&lines)
    } else {
        parse_face_lines(&lines)
    }
}

fn parse_face_lines(lines: &[(usize, &str)]) -> Result<SimplicialSurface> {
    let mut faces = Vec::with_capacity(lines.len());
    for &(n, l) in lines {
        let ids = l
            .split_whitespace()
            .map(|t| parse_id(t, n))
            .collect::<Result<Vec<u32>>>()?;
        let face: [u32; 3] = ids.try_into().map_err(|ids: Vec<u32>| Error::Parse {
            line: n,
            msg: format!("a face needs 3 vertex ids, found {}", ids.len()),
        })?;
        faces.push(face);
    }
    SimplicialSurface::build_from_faces(&faces)
}

fn parse_umbrella_lines(lines: &[(usize, &str)]) -> Result<SimplicialSurface> {
    let mut umbrellas = BTreeMap::new();
    for &(n, l) in lines {
        let (head, tail) = l.split_once(':').ok_or_else(|| Error::Parse {
            line: n,
            msg: "expected `vertex: faces...`".into(),
        })?;
        let v = parse_id(head.trim(), n)?;
        let seq = tail
            .split_whitespace()
            .map(|t| parse_id(t, n))
            .collect::<Result<Vec<u32>>>()?;
        if seq.is_empty() {
            return Err(Error::Parse {
                line: n,
                msg: format!("vertex {v} has an empty umbrella"),
            });
        }
        if umbrellas.insert(v, seq).is_some() {
            return Err(Error::Parse {
                line: n,
                msg: format!("vertex {v} listed twice"),
            });
        }
    }
    SimplicialSurface::build_from_umbrellas(&UmbrellaDescriptor::new(umbrellas))
}

/// Reads a stream of surfaces separated by blank lines.
pub fn parse_surfaces(text: &str) -> Result<Vec<SimplicialSurface>> {
    let mut out = Vec::new();
    let mut block = String::new();
    let mut start = 0;
    let mut has_content = false;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            if has_content {
                out.push(parse_block(&block, start)?);
            }
            block.clear();
            has_content = false;
            start = i + 1;
            continue;
        }
        if !line.trim_start().starts_with('#') {
            has_content = true;
        }
        block.push_str(line);
        block.push('\n');
    }
    if has_content {
        out.push(parse_block(&block, start)?);
    }
    Ok(out)
}

pub fn write_faces(s: &SimplicialSurface) -> String {
    let mut out = String::new();
    for [a, b, c] in s.face_triples() {
        let _ = writeln!(out, "{a} {b} {c}");
    }
    out
}

pub fn write_umbrellas(s: &SimplicialSurface) -> String {
    let mut out = String::new();
    for (v, seq) in s.umbrella_descriptor().iter() {
        let faces: Vec<String> = seq.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{v}: {}", faces.join(" "));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut arcs = Vec::new();
    for (n, l) in content_lines(text) {
        let ids = l
            .split_whitespace()
            .map(|t| parse_id(t, n))
            .collect::<Result<Vec<u32>>>()?;
        match ids[..] {
            [u, v] => arcs.push((u, v)),
            _ => {
                return Err(Error::Parse {
                    line: n,
                    msg: format!("an arc needs 2 node ids, found {}", ids.len()),
                })
            }
        }
    }
    if arcs.is_empty() {
        return Err(Error::Parse {
            line: 1,
            msg: "no arcs".into(),
        });
    }
    Graph::from_labeled_arcs(&arcs)
}

pub fn write_graph(g: &Graph) -> String {
    let mut arcs: Vec<(u32, u32)> = g
        .labeled_arcs()
        .into_iter()
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    arcs.sort_unstable();
    let mut out = String::new();
    for (u, v) in arcs {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
