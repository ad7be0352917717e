//! Face graphs, edge graphs and the planar rotation system of a sphere.

use crate::embedding::RotationSystem;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::surface::{SimplicialSurface, SurfaceKind};

/// Correspondence between the arcs of a face or edge graph and the edges of
/// the surface it was built from.
///
/// Face graph and edge graph of one surface both number their arcs by
/// surface edge, so an arc of one and the arc of the other with the same
/// surface edge are dual to each other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualArcMap {
    edge_of_arc: Vec<usize>,
    arc_of_edge: Vec<usize>,
}

impl DualArcMap {
    fn identity(n: usize) -> Self {
        Self {
            edge_of_arc: (0..n).collect(),
            arc_of_edge: (0..n).collect(),
        }
    }

    pub fn edge_of_arc(&self, arc: usize) -> usize {
        self.edge_of_arc[arc]
    }

    pub fn arc_of_edge(&self, edge: usize) -> usize {
        self.arc_of_edge[edge]
    }

    pub fn len(&self) -> usize {
        self.edge_of_arc.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_of_arc.is_empty()
    }

    /// Maps an arc of this graph to the arc of `other` over the same edge.
    pub fn dual_arc(&self, other: &DualArcMap, arc: usize) -> usize {
        other.arc_of_edge(self.edge_of_arc(arc))
    }
}

/// Nodes are faces, one arc per edge joining its two faces.
pub fn face_graph(s: &SimplicialSurface) -> Result<(Graph, DualArcMap)> {
    let arcs: Vec<[usize; 2]> = (0..s.num_edges()).map(|e| s.edge_faces(e)).collect();
    let g = Graph::new(s.face_labels().to_vec(), arcs).map_err(|_| {
        let (a, b) = first_repeat(
            &(0..s.num_edges())
                .map(|e| s.edge_faces(e))
                .collect::<Vec<_>>(),
        );
        Error::MultiArc(s.face_label(a), s.face_label(b))
    })?;
    Ok((g, DualArcMap::identity(s.num_edges())))
}

/// Nodes are vertices, one arc per edge joining its two vertices.
pub fn edge_graph(s: &SimplicialSurface) -> Result<(Graph, DualArcMap)> {
    let arcs: Vec<[usize; 2]> = (0..s.num_edges()).map(|e| s.edge_vertices(e)).collect();
    let g = Graph::new(s.vertex_labels().to_vec(), arcs).map_err(|_| {
        let (a, b) = first_repeat(
            &(0..s.num_edges())
                .map(|e| s.edge_vertices(e))
                .collect::<Vec<_>>(),
        );
        Error::Graph(format!(
            "edge graph would repeat the arc {{{}, {}}}",
            s.vertex_label(a),
            s.vertex_label(b)
        ))
    })?;
    Ok((g, DualArcMap::identity(s.num_edges())))
}

fn first_repeat(pairs: &[[usize; 2]]) -> (usize, usize) {
    let mut seen = std::collections::BTreeSet::new();
    for p in pairs {
        if !seen.insert(*p) {
            return (p[0], p[1]);
        }
    }
    (0, 0)
}

/// Rotation system of the face graph induced by an orientation of the
/// sphere: at face `(V1, V2, V3)` the arcs are ordered
/// `edge{V1,V2}, edge{V2,V3}, edge{V3,V1}`.
///
/// Of the two orientations, the one whose normalised rotation sequence is
/// lexicographically smaller is used. Tracing this rotation with no twisted
/// arcs yields the umbrellas of `s`.
pub fn rotation_system_from_sphere(s: &SimplicialSurface) -> Result<RotationSystem> {
    let class = s.classify()?;
    if class.kind != SurfaceKind::Sphere {
        return Err(Error::NotSphere(class.kind.to_string()));
    }
    let cycles = s
        .orient_internal()
        .ok_or_else(|| Error::Internal("sphere without orientation".into()))?;
    let build = |reverse: bool| -> Vec<Vec<usize>> {
        cycles
            .iter()
            .enumerate()
            .map(|(f, &[a, b, c])| {
                let order = if reverse { [a, c, b] } else { [a, b, c] };
                let rot: Vec<usize> = (0..3)
                    .map(|i| {
                        s.edge_of_face(f, order[i], order[(i + 1) % 3])
                            .expect("face edge")
                    })
                    .collect();
                rotate_to_min(rot)
            })
            .collect()
    };
    let forward = build(false);
    let backward = build(true);
    let chosen = if backward < forward {
        backward
    } else {
        forward
    };
    let (g, _) = face_graph(s)?;
    RotationSystem::new(&g, chosen)
}

fn rotate_to_min(mut seq: Vec<usize>) -> Vec<usize> {
    if let Some(pos) = seq
        .iter()
        .enumerate()
        .min_by_key(|(_, &x)| x)
        .map(|(i, _)| i)
    {
        seq.rotate_left(pos);
    }
    seq
}
