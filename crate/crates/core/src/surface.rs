//! Closed simplicial surfaces as incidence structures.
//!
//! A [`SimplicialSurface`] stores vertices, edges and faces under dense
//! internal indices together with the external (positive integer) labels they
//! were constructed with. Every constructor validates the four simplicial
//! surface axioms, rejects vertices of degree two and requires the surface
//! to be connected through edge-face paths.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::canon::{self, ColoredGraph};
use crate::error::{Axiom, Error, Result};

#[derive(Debug, Clone)]
pub struct SimplicialSurface {
    vertex_labels: Vec<u32>,
    edge_labels: Vec<u32>,
    face_labels: Vec<u32>,
    edge_vertices: Vec<[usize; 2]>,
    edge_faces: Vec<[usize; 2]>,
    face_edges: Vec<[usize; 3]>,
    face_vertices: Vec<[usize; 3]>,
    /// Faces around each vertex in cyclic order.
    umbrellas: Vec<Vec<usize>>,
    /// `umbrella_edges[v][i]` joins `umbrellas[v][i]` and `umbrellas[v][i + 1]`.
    umbrella_edges: Vec<Vec<usize>>,
    vertex_index: HashMap<u32, usize>,
    edge_index: HashMap<u32, usize>,
    face_index: HashMap<u32, usize>,
}

/// Cyclic face sequences around each vertex, keyed by vertex label.
///
/// Sequences are normalised to the lexicographically least rotation or
/// reflection, so equality of descriptors is equality up to the dihedral
/// action on each umbrella.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UmbrellaDescriptor {
    umbrellas: BTreeMap<u32, Vec<u32>>,
}

/// A consistent cyclic vertex order for every face, keyed by face label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    cycles: BTreeMap<u32, [u32; 3]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurfaceKind {
    Sphere,
    ProjectivePlane,
    Torus,
    KleinBottle,
    Other { genus: u32, orientable: bool },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceClass {
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub genus: u32,
    pub kind: SurfaceKind,
}

/// Label maps of an isomorphism between two surfaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceIsomorphism {
    pub vertices: BTreeMap<u32, u32>,
    pub edges: BTreeMap<u32, u32>,
    pub faces: BTreeMap<u32, u32>,
}

/// Rotates and reflects a cyclic sequence to its lexicographic minimum.
pub fn normalize_cycle<T: Ord + Copy>(seq: &[T]) -> Vec<T> {
    let n = seq.len();
    if n == 0 {
        return Vec::new();
    }
    let mut best: Option<Vec<T>> = None;
    let reversed: Vec<T> = seq.iter().rev().copied().collect();
    for s in [seq, &reversed[..]] {
        for start in 0..n {
            let cand: Vec<T> = (0..n).map(|i| s[(start + i) % n]).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

fn index_map(labels: &[u32]) -> HashMap<u32, usize> {
    labels.iter().enumerate().map(|(i, &l)| (l, i)).collect()
}

impl SimplicialSurface {
    /// Builds a surface from explicit incidences and validates every axiom.
    ///
    /// `edge_vertices[e]` are the vertex indices of edge `e` and
    /// `face_edges[f]` the edge indices of face `f`; the label slices give
    /// the external id of each element.
    pub fn from_incidence(
        vertex_labels: Vec<u32>,
        edge_labels: Vec<u32>,
        face_labels: Vec<u32>,
        edge_vertices: Vec<[usize; 2]>,
        face_edges: Vec<[usize; 3]>,
    ) -> Result<Self> {
        let nv = vertex_labels.len();
        let ne = edge_labels.len();
        let nf = face_labels.len();
        if edge_vertices.len() != ne || face_edges.len() != nf {
            return Err(Error::Internal("label and incidence lengths differ".into()));
        }
        if nv == 0 || ne == 0 || nf == 0 {
            return Err(Error::Invalid(
                "surface needs vertices, edges and faces".into(),
            ));
        }
        for labels in [&vertex_labels, &edge_labels, &face_labels] {
            let distinct: BTreeSet<_> = labels.iter().collect();
            if distinct.len() != labels.len() {
                return Err(Error::Invalid("repeated element label".into()));
            }
        }

        let mut edge_vertices = edge_vertices;
        for (e, pair) in edge_vertices.iter_mut().enumerate() {
            if pair[0] == pair[1] || pair[0] >= nv || pair[1] >= nv {
                return Err(Error::axiom(
                    Axiom::EdgeVertices,
                    format!(
                        "edge {} does not have two distinct vertices",
                        edge_labels[e]
                    ),
                ));
            }
            pair.sort_unstable();
        }

        let mut faces_of_edge: Vec<Vec<usize>> = vec![Vec::new(); ne];
        let mut face_vertices = Vec::with_capacity(nf);
        for (f, edges) in face_edges.iter().enumerate() {
            let distinct: BTreeSet<usize> = edges.iter().copied().collect();
            if distinct.len() != 3 || edges.iter().any(|&e| e >= ne) {
                return Err(Error::axiom(
                    Axiom::FaceShape,
                    format!("face {} does not have three distinct edges", face_labels[f]),
                ));
            }
            let mut count: BTreeMap<usize, usize> = BTreeMap::new();
            for &e in edges {
                faces_of_edge[e].push(f);
                for &v in &edge_vertices[e] {
                    *count.entry(v).or_default() += 1;
                }
            }
            if count.len() != 3 || count.values().any(|&c| c != 2) {
                return Err(Error::axiom(
                    Axiom::FaceShape,
                    format!(
                        "face {} does not have three vertices each on two of its edges",
                        face_labels[f]
                    ),
                ));
            }
            let vs: Vec<usize> = count.keys().copied().collect();
            face_vertices.push([vs[0], vs[1], vs[2]]);
        }

        let mut edge_faces = Vec::with_capacity(ne);
        for (e, fs) in faces_of_edge.iter().enumerate() {
            if fs.len() != 2 || fs[0] == fs[1] {
                return Err(Error::axiom(
                    Axiom::EdgeFaces,
                    format!(
                        "edge {} lies on {} faces instead of two",
                        edge_labels[e],
                        fs.len()
                    ),
                ));
            }
            edge_faces.push([fs[0].min(fs[1]), fs[0].max(fs[1])]);
        }

        let mut edges_at: Vec<Vec<usize>> = vec![Vec::new(); nv];
        for (e, pair) in edge_vertices.iter().enumerate() {
            edges_at[pair[0]].push(e);
            edges_at[pair[1]].push(e);
        }

        let mut umbrellas = Vec::with_capacity(nv);
        let mut umbrella_edges = Vec::with_capacity(nv);
        for v in 0..nv {
            // Local graph at v: faces joined by the edges at v. Every face at v
            // has exactly two edges at v, so the local graph is 2-regular.
            let edges = &edges_at[v];
            if edges.is_empty() {
                return Err(Error::axiom(
                    Axiom::Umbrella,
                    format!("vertex {} lies on no face", vertex_labels[v]),
                ));
            }
            let mut at_face: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for &e in edges {
                for &f in &edge_faces[e] {
                    at_face.entry(f).or_default().push(e);
                }
            }
            let degree = at_face.len();
            let start = *at_face.keys().next().unwrap();
            let mut seq = vec![start];
            let mut seq_edges = Vec::new();
            let mut prev_edge = usize::MAX;
            let mut cur = start;
            loop {
                let pair = &at_face[&cur];
                let e = if pair[0] != prev_edge {
                    pair[0]
                } else {
                    pair[1]
                };
                seq_edges.push(e);
                let [a, b] = edge_faces[e];
                let next = if a == cur { b } else { a };
                if next == start {
                    break;
                }
                seq.push(next);
                prev_edge = e;
                cur = next;
                if seq.len() > degree {
                    return Err(Error::Internal("umbrella walk did not close".into()));
                }
            }
            if seq.len() != degree {
                return Err(Error::axiom(
                    Axiom::Umbrella,
                    format!(
                        "faces around vertex {} do not form a single cycle",
                        vertex_labels[v]
                    ),
                ));
            }
            if degree < 3 {
                return Err(Error::DegreeTwo(vertex_labels[v]));
            }
            umbrellas.push(seq);
            umbrella_edges.push(seq_edges);
        }

        let surface = Self {
            vertex_index: index_map(&vertex_labels),
            edge_index: index_map(&edge_labels),
            face_index: index_map(&face_labels),
            vertex_labels,
            edge_labels,
            face_labels,
            edge_vertices,
            edge_faces,
            face_edges,
            face_vertices,
            umbrellas,
            umbrella_edges,
        };
        let components = surface.face_components(&BTreeSet::new());
        if components.len() != 1 {
            return Err(Error::Disconnected(components.len()));
        }
        Ok(surface)
    }

    /// Builds a vertex-faithful surface from the vertex triples of its faces.
    pub fn build_from_faces(faces: &[[u32; 3]]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut pair_count: BTreeMap<(u32, u32), usize> = BTreeMap::new();
        for (i, t) in faces.iter().enumerate() {
            if t.contains(&0) {
                return Err(Error::Invalid(format!("face {} uses vertex id 0", i + 1)));
            }
            let mut s = *t;
            s.sort_unstable();
            if s[0] == s[1] || s[1] == s[2] {
                return Err(Error::axiom(
                    Axiom::FaceShape,
                    format!("face {:?} repeats a vertex", t),
                ));
            }
            if !seen.insert(s) {
                return Err(Error::Invalid(format!("face {:?} is repeated", t)));
            }
            for (a, b) in [(s[0], s[1]), (s[0], s[2]), (s[1], s[2])] {
                *pair_count.entry((a, b)).or_default() += 1;
            }
        }
        if let Some(((a, b), c)) = pair_count.iter().find(|(_, &c)| c != 2) {
            return Err(Error::axiom(
                Axiom::EdgeFaces,
                format!("vertex pair {{{a}, {b}}} occurs in {c} faces"),
            ));
        }
        let vertex_labels: Vec<u32> = {
            let set: BTreeSet<u32> = faces.iter().flatten().copied().collect();
            set.into_iter().collect()
        };
        let vindex = index_map(&vertex_labels);
        let pairs: Vec<(u32, u32)> = pair_count.keys().copied().collect();
        let pindex: HashMap<(u32, u32), usize> =
            pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let edge_vertices = pairs
            .iter()
            .map(|&(a, b)| [vindex[&a], vindex[&b]])
            .collect();
        let face_edges = faces
            .iter()
            .map(|t| {
                let mut s = *t;
                s.sort_unstable();
                [
                    pindex[&(s[0], s[1])],
                    pindex[&(s[1], s[2])],
                    pindex[&(s[0], s[2])],
                ]
            })
            .collect();
        Self::from_incidence(
            vertex_labels,
            (1..=pairs.len() as u32).collect(),
            (1..=faces.len() as u32).collect(),
            edge_vertices,
            face_edges,
        )
    }

    /// Builds the surface whose vertices have the given umbrellas.
    pub fn build_from_umbrellas(descriptor: &UmbrellaDescriptor) -> Result<Self> {
        let vertex_labels: Vec<u32> = descriptor.umbrellas.keys().copied().collect();
        let mut face_uses: BTreeMap<u32, usize> = BTreeMap::new();
        let mut adjacent: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
        for (v, (&label, seq)) in descriptor.umbrellas.iter().enumerate() {
            match seq.len() {
                2 => return Err(Error::DegreeTwo(label)),
                0 | 1 => {
                    return Err(Error::Umbrella(format!(
                        "umbrella of vertex {label} has {} faces",
                        seq.len()
                    )))
                }
                _ => {}
            }
            let distinct: BTreeSet<u32> = seq.iter().copied().collect();
            if distinct.len() != seq.len() {
                return Err(Error::Umbrella(format!(
                    "umbrella of vertex {label} repeats a face"
                )));
            }
            for &f in seq {
                *face_uses.entry(f).or_default() += 1;
            }
            for i in 0..seq.len() {
                let (a, b) = (seq[i], seq[(i + 1) % seq.len()]);
                adjacent.entry((a.min(b), a.max(b))).or_default().push(v);
            }
        }
        if let Some((f, c)) = face_uses.iter().find(|(_, &c)| c != 3) {
            return Err(Error::Umbrella(format!(
                "face {f} appears in {c} umbrellas"
            )));
        }
        if let Some(((a, b), vs)) = adjacent.iter().find(|(_, vs)| vs.len() != 2) {
            return Err(Error::Umbrella(format!(
                "adjacent faces {a}, {b} appear in {} umbrellas",
                vs.len()
            )));
        }
        let face_labels: Vec<u32> = face_uses.keys().copied().collect();
        let findex = index_map(&face_labels);
        let mut edge_vertices = Vec::with_capacity(adjacent.len());
        let mut edges_of_face: Vec<Vec<usize>> = vec![Vec::new(); face_labels.len()];
        for (e, ((a, b), vs)) in adjacent.iter().enumerate() {
            edge_vertices.push([vs[0], vs[1]]);
            edges_of_face[findex[a]].push(e);
            edges_of_face[findex[b]].push(e);
        }
        let mut face_edges = Vec::with_capacity(face_labels.len());
        for (f, es) in edges_of_face.iter().enumerate() {
            if es.len() != 3 {
                return Err(Error::axiom(
                    Axiom::FaceShape,
                    format!("face {} has {} edges", face_labels[f], es.len()),
                ));
            }
            face_edges.push([es[0], es[1], es[2]]);
        }
        Self::from_incidence(
            vertex_labels,
            (1..=adjacent.len() as u32).collect(),
            face_labels,
            edge_vertices,
            face_edges,
        )
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_labels.len()
    }

    pub fn num_faces(&self) -> usize {
        self.face_labels.len()
    }

    pub fn vertex_label(&self, v: usize) -> u32 {
        self.vertex_labels[v]
    }

    pub fn edge_label(&self, e: usize) -> u32 {
        self.edge_labels[e]
    }

    pub fn face_label(&self, f: usize) -> u32 {
        self.face_labels[f]
    }

    pub fn vertex_labels(&self) -> &[u32] {
        &self.vertex_labels
    }

    pub fn face_labels(&self) -> &[u32] {
        &self.face_labels
    }

    pub fn edge_labels(&self) -> &[u32] {
        &self.edge_labels
    }

    pub fn vertex_by_label(&self, label: u32) -> Option<usize> {
        self.vertex_index.get(&label).copied()
    }

    pub fn edge_by_label(&self, label: u32) -> Option<usize> {
        self.edge_index.get(&label).copied()
    }

    pub fn face_by_label(&self, label: u32) -> Option<usize> {
        self.face_index.get(&label).copied()
    }

    /// Vertex indices of edge `e`, ascending.
    pub fn edge_vertices(&self, e: usize) -> [usize; 2] {
        self.edge_vertices[e]
    }

    /// Face indices of edge `e`, ascending.
    pub fn edge_faces(&self, e: usize) -> [usize; 2] {
        self.edge_faces[e]
    }

    pub fn face_edges(&self, f: usize) -> [usize; 3] {
        self.face_edges[f]
    }

    /// Vertex indices of face `f`, ascending.
    pub fn face_vertices(&self, f: usize) -> [usize; 3] {
        self.face_vertices[f]
    }

    /// Faces around `v` in cyclic order.
    pub fn umbrella(&self, v: usize) -> &[usize] {
        &self.umbrellas[v]
    }

    /// Edges at `v`; entry `i` joins umbrella faces `i` and `i + 1`.
    pub fn umbrella_edges(&self, v: usize) -> &[usize] {
        &self.umbrella_edges[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.umbrellas[v].len()
    }

    /// Edge of face `f` that joins vertices `a` and `b`, if any.
    pub fn edge_of_face(&self, f: usize, a: usize, b: usize) -> Option<usize> {
        self.face_edges[f].iter().copied().find(|&e| {
            let [x, y] = self.edge_vertices[e];
            (x == a && y == b) || (x == b && y == a)
        })
    }

    /// Vertex triples of all faces (labels), each ascending, sorted.
    pub fn face_triples(&self) -> Vec<[u32; 3]> {
        let mut out: Vec<[u32; 3]> = self
            .face_vertices
            .iter()
            .map(|vs| {
                let mut t = vs.map(|v| self.vertex_labels[v]);
                t.sort_unstable();
                t
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn umbrella_descriptor(&self) -> UmbrellaDescriptor {
        UmbrellaDescriptor::new(
            self.umbrellas
                .iter()
                .enumerate()
                .map(|(v, seq)| {
                    (
                        self.vertex_labels[v],
                        seq.iter().map(|&f| self.face_labels[f]).collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64 + self.num_faces() as i64
    }

    /// Searches for an orientation by propagating a seed cycle breadth-first
    /// across edges; returns `None` for non-orientable surfaces.
    pub fn orientation(&self) -> Option<Orientation> {
        let cycles = self.orient_internal()?;
        Some(Orientation {
            cycles: cycles
                .iter()
                .enumerate()
                .map(|(f, c)| (self.face_labels[f], c.map(|v| self.vertex_labels[v])))
                .collect(),
        })
    }

    /// Orientation as cyclic vertex-index triples, seeded by the ascending
    /// vertex order of face 0.
    pub(crate) fn orient_internal(&self) -> Option<Vec<[usize; 3]>> {
        let nf = self.num_faces();
        let mut cycles: Vec<Option<[usize; 3]>> = vec![None; nf];
        cycles[0] = Some(self.face_vertices[0]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(f) = queue.pop_front() {
            let c = cycles[f].unwrap();
            for i in 0..3 {
                let (a, b) = (c[i], c[(i + 1) % 3]);
                let e = self.edge_of_face(f, a, b).expect("face edge");
                let [g0, g1] = self.edge_faces[e];
                let g = if g0 == f { g1 } else { g0 };
                let w = self.face_vertices[g]
                    .iter()
                    .copied()
                    .find(|&x| x != a && x != b)
                    .unwrap();
                let want = [b, a, w];
                match cycles[g] {
                    None => {
                        cycles[g] = Some(want);
                        queue.push_back(g);
                    }
                    Some(have) => {
                        if !same_cycle(&have, &want) {
                            return None;
                        }
                    }
                }
            }
        }
        Some(cycles.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_orientable(&self) -> bool {
        self.orient_internal().is_some()
    }

    pub fn classify(&self) -> Result<SurfaceClass> {
        SurfaceClass::new(self.euler_characteristic(), self.is_orientable())
    }

    /// Edges and faces are determined by their vertex sets.
    pub fn is_vertex_faithful(&self) -> bool {
        let edges: BTreeSet<[usize; 2]> = self.edge_vertices.iter().copied().collect();
        let faces: BTreeSet<[usize; 3]> = self.face_vertices.iter().copied().collect();
        edges.len() == self.num_edges() && faces.len() == self.num_faces()
    }

    /// Connected components of faces, where faces are joined across every
    /// edge not in `cut`.
    pub fn face_components(&self, cut: &BTreeSet<usize>) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.num_faces());
        for (e, &[a, b]) in self.edge_faces.iter().enumerate() {
            if !cut.contains(&e) {
                uf.union(a, b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for f in 0..self.num_faces() {
            groups.entry(uf.find(f)).or_default().push(f);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }

    fn incidence_graph(&self) -> ColoredGraph {
        let (nv, ne, nf) = (self.num_vertices(), self.num_edges(), self.num_faces());
        let mut colors = vec![0u32; nv];
        colors.extend(std::iter::repeat_n(1, ne));
        colors.extend(std::iter::repeat_n(2, nf));
        let mut g = ColoredGraph::with_colors(colors);
        for (e, vs) in self.edge_vertices.iter().enumerate() {
            for &v in vs {
                g.add_arc(v, nv + e);
            }
        }
        for (f, es) in self.face_edges.iter().enumerate() {
            for &e in es {
                g.add_arc(nv + e, nv + ne + f);
            }
        }
        g
    }

    /// Byte string that is equal for two surfaces iff they are isomorphic.
    pub fn canonical_form(&self) -> Vec<u8> {
        canon::canonize(&self.incidence_graph())
            .certificate
            .iter()
            .flat_map(|x| x.to_le_bytes())
            .collect()
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    /// An isomorphism from `self` to `other`, if one exists.
    pub fn isomorphism_to(&self, other: &Self) -> Option<SurfaceIsomorphism> {
        let a = canon::canonize(&self.incidence_graph());
        let b = canon::canonize(&other.incidence_graph());
        if a.certificate != b.certificate {
            return None;
        }
        let mut b_inverse = vec![0; b.labeling.len()];
        for (x, &p) in b.labeling.iter().enumerate() {
            b_inverse[p] = x;
        }
        let (nv, ne) = (self.num_vertices(), self.num_edges());
        let mut iso = SurfaceIsomorphism {
            vertices: BTreeMap::new(),
            edges: BTreeMap::new(),
            faces: BTreeMap::new(),
        };
        for (x, &p) in a.labeling.iter().enumerate() {
            let y = b_inverse[p];
            if x < nv {
                iso.vertices
                    .insert(self.vertex_labels[x], other.vertex_labels[y]);
            } else if x < nv + ne {
                iso.edges
                    .insert(self.edge_labels[x - nv], other.edge_labels[y - nv]);
            } else {
                iso.faces.insert(
                    self.face_labels[x - nv - ne],
                    other.face_labels[y - nv - ne],
                );
            }
        }
        Some(iso)
    }

    /// Same surface with vertex, edge and face labels replaced through the
    /// given maps; elements missing from a map keep their label.
    pub fn relabeled(
        &self,
        vertices: &BTreeMap<u32, u32>,
        edges: &BTreeMap<u32, u32>,
        faces: &BTreeMap<u32, u32>,
    ) -> Result<Self> {
        let map = |m: &BTreeMap<u32, u32>, labels: &[u32]| -> Vec<u32> {
            labels.iter().map(|l| *m.get(l).unwrap_or(l)).collect()
        };
        Self::from_incidence(
            map(vertices, &self.vertex_labels),
            map(edges, &self.edge_labels),
            map(faces, &self.face_labels),
            self.edge_vertices.clone(),
            self.face_edges.clone(),
        )
    }
}

fn same_cycle(a: &[usize; 3], b: &[usize; 3]) -> bool {
    (0..3).any(|r| (0..3).all(|i| a[(i + r) % 3] == b[i]))
}

impl UmbrellaDescriptor {
    pub fn new(umbrellas: BTreeMap<u32, Vec<u32>>) -> Self {
        Self {
            umbrellas: umbrellas
                .into_iter()
                .map(|(v, seq)| (v, normalize_cycle(&seq)))
                .collect(),
        }
    }

    pub fn umbrella(&self, vertex: u32) -> Option<&[u32]> {
        self.umbrellas.get(&vertex).map(|v| v.as_slice())
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &[u32])> {
        self.umbrellas.iter().map(|(&v, s)| (v, s.as_slice()))
    }

    pub fn len(&self) -> usize {
        self.umbrellas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.umbrellas.is_empty()
    }
}

impl FromIterator<(u32, Vec<u32>)> for UmbrellaDescriptor {
    fn from_iter<I: IntoIterator<Item = (u32, Vec<u32>)>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl Orientation {
    pub fn cycle(&self, face: u32) -> Option<[u32; 3]> {
        self.cycles.get(&face).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, [u32; 3])> + '_ {
        self.cycles.iter().map(|(&f, &c)| (f, c))
    }

    /// The opposite orientation.
    pub fn reversed(&self) -> Self {
        Self {
            cycles: self
                .cycles
                .iter()
                .map(|(&f, &[a, b, c])| (f, [a, c, b]))
                .collect(),
        }
    }

    /// Checks the compatibility condition on every edge of `s`.
    pub fn is_valid_for(&self, s: &SimplicialSurface) -> bool {
        if self.cycles.len() != s.num_faces() {
            return false;
        }
        let directed = |f: usize, a: u32, b: u32| -> Option<bool> {
            let c = self.cycles.get(&s.face_label(f))?;
            let i = c.iter().position(|&x| x == a)?;
            Some(c[(i + 1) % 3] == b)
        };
        for e in 0..s.num_edges() {
            let [v, w] = s.edge_vertices(e).map(|x| s.vertex_label(x));
            let [f, g] = s.edge_faces(e);
            match (directed(f, v, w), directed(g, v, w)) {
                (Some(x), Some(y)) if x != y => {}
                _ => return false,
            }
        }
        true
    }
}

impl SurfaceClass {
    pub fn new(euler_characteristic: i64, orientable: bool) -> Result<Self> {
        let chi = euler_characteristic;
        if chi > 2 || (orientable && chi % 2 != 0) || (!orientable && chi > 1) {
            return Err(Error::Internal(format!(
                "no closed surface with chi={chi}, orientable={orientable}"
            )));
        }
        let genus = if orientable { (2 - chi) / 2 } else { 2 - chi } as u32;
        let kind = match (genus, orientable) {
            (0, true) => SurfaceKind::Sphere,
            (1, false) => SurfaceKind::ProjectivePlane,
            (1, true) => SurfaceKind::Torus,
            (2, false) => SurfaceKind::KleinBottle,
            (genus, orientable) => SurfaceKind::Other { genus, orientable },
        };
        Ok(Self {
            euler_characteristic: chi,
            orientable,
            genus,
            kind,
        })
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceKind::Sphere => f.write_str("sphere"),
            SurfaceKind::ProjectivePlane => f.write_str("projective-plane"),
            SurfaceKind::Torus => f.write_str("torus"),
            SurfaceKind::KleinBottle => f.write_str("klein-bottle"),
            SurfaceKind::Other { genus, orientable } => write!(
                f,
                "other(genus={genus},{})",
                if *orientable {
                    "orientable"
                } else {
                    "non-orientable"
                }
            ),
        }
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = x;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn tetrahedron() -> SimplicialSurface {
        SimplicialSurface::build_from_faces(&[[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]).unwrap()
    }

    pub(crate) fn double_tetrahedron() -> SimplicialSurface {
        SimplicialSurface::build_from_faces(&[
            [1, 2, 3],
            [1, 3, 4],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 5],
            [2, 4, 5],
        ])
        .unwrap()
    }

    pub(crate) fn projective_plane_4() -> SimplicialSurface {
        // the three 4-cycles of K4 on faces 1..4
        let d: UmbrellaDescriptor = [
            (1, vec![1, 2, 3, 4]),
            (2, vec![1, 3, 2, 4]),
            (3, vec![1, 2, 4, 3]),
        ]
        .into_iter()
        .collect();
        SimplicialSurface::build_from_umbrellas(&d).unwrap()
    }

    #[test]
    fn tetrahedron_counts() {
        let t = tetrahedron();
        assert_eq!((t.num_vertices(), t.num_edges(), t.num_faces()), (4, 6, 4));
        assert_eq!(t.euler_characteristic(), 2);
        let c = t.classify().unwrap();
        assert_eq!(c.kind, SurfaceKind::Sphere);
        assert!(c.orientable);
        assert!(t.is_vertex_faithful());
    }

    #[test]
    fn double_tetrahedron_counts() {
        let s = double_tetrahedron();
        assert_eq!(s.num_edges(), 9);
        assert_eq!(s.euler_characteristic(), 2);
        assert_eq!(s.classify().unwrap().kind, SurfaceKind::Sphere);
        let v1 = s.vertex_by_label(1).unwrap();
        let mut faces: Vec<[u32; 3]> = s
            .umbrella(v1)
            .iter()
            .map(|&f| s.face_vertices(f).map(|v| s.vertex_label(v)))
            .collect();
        faces.sort();
        assert_eq!(faces, vec![[1, 2, 3], [1, 2, 4], [1, 3, 4]]);
    }

    #[test]
    fn open_surface_rejected() {
        let err =
            SimplicialSurface::build_from_faces(&[[1, 2, 3], [1, 2, 4], [1, 3, 4]]).unwrap_err();
        assert!(matches!(
            err,
            Error::Axiom {
                axiom: Axiom::EdgeFaces,
                ..
            }
        ));
        assert!(err.to_string().contains("{2, 3}"));
    }

    #[test]
    fn pinched_vertex_fails_umbrella_condition() {
        // two tetrahedra sharing vertex 1
        let err = SimplicialSurface::build_from_faces(&[
            [1, 2, 3],
            [1, 2, 4],
            [1, 3, 4],
            [2, 3, 4],
            [1, 5, 6],
            [1, 5, 7],
            [1, 6, 7],
            [5, 6, 7],
        ])
        .unwrap_err();
        assert!(matches!(
            err,
            Error::Axiom {
                axiom: Axiom::Umbrella,
                ..
            }
        ));
    }

    #[test]
    fn disconnected_rejected() {
        let err = SimplicialSurface::build_from_faces(&[
            [1, 2, 3],
            [1, 2, 4],
            [1, 3, 4],
            [2, 3, 4],
            [5, 6, 7],
            [5, 6, 8],
            [5, 7, 8],
            [6, 7, 8],
        ])
        .unwrap_err();
        assert!(matches!(err, Error::Disconnected(2)));
    }

    #[test]
    fn tetrahedron_from_umbrellas() {
        let d: UmbrellaDescriptor = [
            (1, vec![1, 2, 4]),
            (2, vec![1, 2, 3]),
            (3, vec![1, 3, 4]),
            (4, vec![2, 3, 4]),
        ]
        .into_iter()
        .collect();
        let s = SimplicialSurface::build_from_umbrellas(&d).unwrap();
        assert!(s.is_isomorphic(&tetrahedron()));
        assert_eq!(s.umbrella_descriptor(), d);
        assert_eq!(d.umbrella(1), Some(&[1, 2, 4][..]));
    }

    #[test]
    fn projective_plane_on_four_faces() {
        let p = projective_plane_4();
        assert_eq!((p.num_vertices(), p.num_edges(), p.num_faces()), (3, 6, 4));
        let c = p.classify().unwrap();
        assert_eq!(c.euler_characteristic, 1);
        assert!(!c.orientable);
        assert_eq!(c.genus, 1);
        assert_eq!(c.kind, SurfaceKind::ProjectivePlane);
        assert!(!p.is_vertex_faithful());
        assert!(p.orientation().is_none());
        assert!(!p.is_isomorphic(&tetrahedron()));
    }

    #[test]
    fn umbrella_round_trip_double_tetrahedron() {
        let s = double_tetrahedron();
        let d = s.umbrella_descriptor();
        let back = SimplicialSurface::build_from_umbrellas(&d).unwrap();
        assert_eq!(back.umbrella_descriptor(), d);
        assert!(back.is_isomorphic(&s));
    }

    #[test]
    fn bad_umbrella_descriptors() {
        let missing: UmbrellaDescriptor =
            [(1, vec![1, 2, 4]), (2, vec![1, 2, 3]), (3, vec![1, 3, 4])]
                .into_iter()
                .collect();
        assert!(matches!(
            SimplicialSurface::build_from_umbrellas(&missing),
            Err(Error::Umbrella(_))
        ));
        let short: UmbrellaDescriptor = [(1, vec![1, 2])].into_iter().collect();
        assert!(SimplicialSurface::build_from_umbrellas(&short).is_err());
    }

    #[test]
    fn orientation_is_compatible_and_flips() {
        let s = double_tetrahedron();
        let o = s.orientation().unwrap();
        assert!(o.is_valid_for(&s));
        let r = o.reversed();
        assert!(r.is_valid_for(&s));
        assert_ne!(o, r);
        // mixing the two is never valid
        let mut mixed = o.clone();
        let (f, c) = r.iter().next().unwrap();
        mixed.cycles.insert(f, c);
        assert!(!mixed.is_valid_for(&s));
    }

    #[test]
    fn relabelling_invariance() {
        let t = tetrahedron();
        let vmap: BTreeMap<u32, u32> = [(1, 40), (2, 10), (3, 30), (4, 20)].into();
        let fmap: BTreeMap<u32, u32> = [(1, 4), (2, 3), (3, 2), (4, 1)].into();
        let r = t.relabeled(&vmap, &BTreeMap::new(), &fmap).unwrap();
        assert_eq!(r.canonical_form(), t.canonical_form());
        let iso = t.isomorphism_to(&r).unwrap();
        assert_eq!(iso.vertices.len(), 4);
    }

    #[test]
    fn genus_formula() {
        let c = SurfaceClass::new(0, true).unwrap();
        assert_eq!((c.genus, c.kind), (1, SurfaceKind::Torus));
        let c = SurfaceClass::new(0, false).unwrap();
        assert_eq!((c.genus, c.kind), (2, SurfaceKind::KleinBottle));
        let c = SurfaceClass::new(-2, true).unwrap();
        assert_eq!(
            c.kind,
            SurfaceKind::Other {
                genus: 2,
                orientable: true
            }
        );
        assert!(SurfaceClass::new(1, true).is_err());
    }

    #[test]
    fn normalize_cycle_dihedral() {
        assert_eq!(normalize_cycle(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(normalize_cycle(&[2, 1, 3]), vec![1, 2, 3]);
        assert_eq!(normalize_cycle(&[4, 2, 5, 1]), vec![1, 4, 2, 5]);
    }
}
