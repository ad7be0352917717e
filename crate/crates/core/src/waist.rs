//! Waists: short closed vertex-edge paths that behave like separating
//! curves.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::surface::{normalize_cycle, SimplicialSurface};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Waist {
    pub n: usize,
    /// Vertex labels along the path, rotated/reflected to the least sequence.
    pub vertices: Vec<u32>,
    /// `edges[i]` joins `vertices[i]` and `vertices[i + 1]` (cyclically).
    pub edges: Vec<u32>,
    pub separating: bool,
}

/// All `n`-waists of `s`, up to rotation and reflection of the path.
///
/// For `n = 2` this reports pairs of distinct edges on the same two
/// vertices, which only exist on surfaces that are not vertex-faithful. For
/// `n >= 3` the surface must be vertex-faithful; `n = 3` gives triangles of
/// the edge graph that do not bound a face, and `n >= 4` gives the
/// distance-faithful cycles of length `n`, provided there is no 3-waist.
pub fn find_waists(s: &SimplicialSurface, n: usize) -> Result<Vec<Waist>> {
    if n < 2 {
        return Err(Error::Waist(format!(
            "waist length must be at least 2, got {n}"
        )));
    }
    let mut out = Vec::new();
    if n == 2 {
        for e in 0..s.num_edges() {
            for f in e + 1..s.num_edges() {
                if s.edge_vertices(e) == s.edge_vertices(f) && !share_face(s, e, f) {
                    out.push(make_waist(s, &s.edge_vertices(e), &[e, f]));
                }
            }
        }
        out.sort();
        return Ok(out);
    }
    if !s.is_vertex_faithful() {
        return Err(Error::NotVertexFaithful);
    }
    if n == 3 {
        for cyc in vertex_cycles(s, 3) {
            let edges = cycle_edges(s, &cyc);
            let clean = (0..3).all(|i| (i + 1..3).all(|j| !share_face(s, edges[i], edges[j])));
            if clean {
                out.push(make_waist(s, &cyc, &edges));
            }
        }
    } else if find_waists(s, 3)?.is_empty() {
        let dist = distances(s);
        for cyc in vertex_cycles(s, n) {
            let faithful = (0..n).all(|i| {
                (i + 1..n).all(|j| {
                    let along = (j - i).min(n - (j - i));
                    dist[cyc[i]][cyc[j]] == along
                })
            });
            if faithful {
                let edges = cycle_edges(s, &cyc);
                out.push(make_waist(s, &cyc, &edges));
            }
        }
    }
    out.sort();
    Ok(out)
}

fn share_face(s: &SimplicialSurface, e: usize, f: usize) -> bool {
    let [a, b] = s.edge_faces(e);
    s.edge_faces(f).iter().any(|&x| x == a || x == b)
}

fn neighbours(s: &SimplicialSurface) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); s.num_vertices()];
    for e in 0..s.num_edges() {
        let [a, b] = s.edge_vertices(e);
        adj[a].push(b);
        adj[b].push(a);
    }
    for l in &mut adj {
        l.sort_unstable();
        l.dedup();
    }
    adj
}

fn distances(s: &SimplicialSurface) -> Vec<Vec<usize>> {
    let adj = neighbours(s);
    let n = adj.len();
    (0..n)
        .map(|src| {
            let mut d = vec![usize::MAX; n];
            d[src] = 0;
            let mut queue = VecDeque::from([src]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if d[w] == usize::MAX {
                        d[w] = d[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

/// Simple cycles of length `n` in the edge graph, each listed once, starting
/// at its least vertex.
fn vertex_cycles(s: &SimplicialSurface, n: usize) -> Vec<Vec<usize>> {
    let adj = neighbours(s);
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(n);
    for start in 0..adj.len() {
        path.clear();
        path.push(start);
        grow(&adj, n, &mut path, &mut out);
    }
    out
}

fn grow(adj: &[Vec<usize>], n: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let start = path[0];
    let last = *path.last().expect("non-empty path");
    if path.len() == n {
        if adj[last].contains(&start) && path[1] < last {
            out.push(path.clone());
        }
        return;
    }
    for &w in &adj[last] {
        if w > start && !path.contains(&w) {
            path.push(w);
            grow(adj, n, path, out);
            path.pop();
        }
    }
}

fn cycle_edges(s: &SimplicialSurface, cyc: &[usize]) -> Vec<usize> {
    let k = cyc.len();
    (0..k)
        .map(|i| {
            let mut pair = [cyc[i], cyc[(i + 1) % k]];
            pair.sort_unstable();
            (0..s.num_edges())
                .find(|&e| s.edge_vertices(e) == pair)
                .expect("cycle of the edge graph")
        })
        .collect()
}

fn make_waist(s: &SimplicialSurface, cyc: &[usize], edges: &[usize]) -> Waist {
    let k = cyc.len();
    let labels: Vec<u32> = cyc.iter().map(|&v| s.vertex_label(v)).collect();
    let norm = normalize_cycle(&labels);
    // recover the edge order matching the normalised vertex order
    let pos = |l: u32| labels.iter().position(|&x| x == l).expect("label on cycle");
    let ordered_edges: Vec<u32> = (0..k)
        .map(|i| {
            let (a, b) = (pos(norm[i]), pos(norm[(i + 1) % k]));
            let e = if (a + 1) % k == b { edges[a] } else { edges[b] };
            s.edge_label(e)
        })
        .collect();
    let cut: BTreeSet<usize> = edges.iter().copied().collect();
    Waist {
        n: k,
        vertices: norm,
        edges: ordered_edges,
        separating: s.face_components(&cut).len() == 2,
    }
}

/// Cuts `s` along a separating 3-waist and caps both holes with a face on
/// the waist's vertices.
pub fn cut_along_3waist(
    s: &SimplicialSurface,
    w: &Waist,
) -> Result<(SimplicialSurface, SimplicialSurface)> {
    if w.n != 3 {
        return Err(Error::Waist(format!(
            "expected a 3-waist, got length {}",
            w.n
        )));
    }
    let cut: BTreeSet<usize> = w
        .edges
        .iter()
        .map(|&l| {
            s.edge_by_label(l)
                .ok_or_else(|| Error::Waist(format!("no edge with id {l}")))
        })
        .collect::<Result<_>>()?;
    let parts = s.face_components(&cut);
    if parts.len() != 2 {
        return Err(Error::Waist(format!(
            "waist {:?} is not separating",
            w.vertices
        )));
    }
    let cap = [w.vertices[0], w.vertices[1], w.vertices[2]];
    let build = |faces: &[usize]| -> Result<SimplicialSurface> {
        let mut triples: Vec<[u32; 3]> = faces
            .iter()
            .map(|&f| s.face_vertices(f).map(|v| s.vertex_label(v)))
            .collect();
        triples.push(cap);
        SimplicialSurface::build_from_faces(&triples)
    };
    Ok((build(&parts[0])?, build(&parts[1])?))
}
