//! Python module `surfgeo`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use surfgeo_core as core;

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn target(name: &str) -> PyResult<core::TargetSurface> {
    name.parse().map_err(err)
}

/// A closed simplicial surface.
#[pyclass(frozen, skip_from_py_object, name = "Surface", module = "surfgeo")]
#[derive(Clone)]
pub struct Surface(core::SimplicialSurface);

#[pymethods]
impl Surface {
    /// Builds a surface from vertex triples, one per face.
    #[new]
    fn new(faces: Vec<[u32; 3]>) -> PyResult<Self> {
        core::SimplicialSurface::build_from_faces(&faces)
            .map(Surface)
            .map_err(err)
    }

    /// Reads a surface in face or umbrella text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        core::parse_surface(text).map(Surface).map_err(err)
    }

    #[getter]
    fn num_vertices(&self) -> usize {
        self.0.num_vertices()
    }

    #[getter]
    fn num_edges(&self) -> usize {
        self.0.num_edges()
    }

    #[getter]
    fn num_faces(&self) -> usize {
        self.0.num_faces()
    }

    #[getter]
    fn euler_characteristic(&self) -> i64 {
        self.0.euler_characteristic()
    }

    #[getter]
    fn orientable(&self) -> bool {
        self.0.is_orientable()
    }

    #[getter]
    fn vertex_faithful(&self) -> bool {
        self.0.is_vertex_faithful()
    }

    /// One of `sphere`, `projective-plane`, `torus`, `klein-bottle` or
    /// `other(...)`.
    fn kind(&self) -> PyResult<String> {
        Ok(self.0.classify().map_err(err)?.kind.to_string())
    }

    fn faces(&self) -> Vec<[u32; 3]> {
        self.0.face_triples()
    }

    /// Map from vertex id to its cyclic face sequence.
    fn umbrellas(&self) -> Vec<(u32, Vec<u32>)> {
        self.0
            .umbrella_descriptor()
            .iter()
            .map(|(v, seq)| (v, seq.to_vec()))
            .collect()
    }

    fn canonical_form(&self) -> Vec<u8> {
        self.0.canonical_form()
    }

    fn is_isomorphic(&self, other: &Surface) -> bool {
        self.0.is_isomorphic(&other.0)
    }

    fn face_graph(&self) -> PyResult<Graph> {
        core::face_graph(&self.0)
            .map(|(g, _)| Graph(g))
            .map_err(err)
    }

    fn edge_graph(&self) -> PyResult<Graph> {
        core::edge_graph(&self.0)
            .map(|(g, _)| Graph(g))
            .map_err(err)
    }

    /// Number of `n`-waists.
    fn count_waists(&self, n: usize) -> PyResult<usize> {
        core::find_waists(&self.0, n).map(|w| w.len()).map_err(err)
    }

    fn to_faces_text(&self) -> String {
        core::write_faces(&self.0)
    }

    fn to_umbrella_text(&self) -> String {
        core::write_umbrellas(&self.0)
    }

    fn __repr__(&self) -> String {
        format!(
            "Surface(vertices={}, edges={}, faces={}, chi={})",
            self.0.num_vertices(),
            self.0.num_edges(),
            self.0.num_faces(),
            self.0.euler_characteristic()
        )
    }
}

/// A simple graph with labelled nodes.
#[pyclass(frozen, skip_from_py_object, name = "Graph", module = "surfgeo")]
#[derive(Clone)]
pub struct Graph(core::Graph);

#[pymethods]
impl Graph {
    #[new]
    fn new(arcs: Vec<(u32, u32)>) -> PyResult<Self> {
        core::Graph::from_labeled_arcs(&arcs)
            .map(Graph)
            .map_err(err)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        core::parse_graph(text).map(Graph).map_err(err)
    }

    #[getter]
    fn num_nodes(&self) -> usize {
        self.0.num_nodes()
    }

    #[getter]
    fn num_arcs(&self) -> usize {
        self.0.num_arcs()
    }

    /// Arcs as label pairs, sorted.
    fn arcs(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = self
            .0
            .labeled_arcs()
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        out.sort_unstable();
        out
    }

    fn automorphism_group_order(&self) -> usize {
        self.0.automorphisms().order()
    }

    fn is_cyclically_k_arc_connected(&self, k: usize) -> bool {
        self.0.is_cyclically_k_arc_connected(k)
    }

    /// Number of cycle double covers.
    #[pyo3(signature = (max_cycles = core::DEFAULT_MAX_CYCLES))]
    fn count_cycle_double_covers(&self, max_cycles: usize) -> PyResult<usize> {
        core::enumerate_cdcs(&self.0, max_cycles)
            .map(|c| c.len())
            .map_err(err)
    }

    /// All simplicial surfaces this cubic graph is the face graph of, up to
    /// isomorphism.
    #[pyo3(signature = (vertex_faithful_only = false, max_cycles = core::DEFAULT_MAX_CYCLES))]
    fn embeddings(&self, vertex_faithful_only: bool, max_cycles: usize) -> PyResult<Vec<Surface>> {
        let surfaces = if vertex_faithful_only {
            core::enumerate_vertex_faithful_surfaces(&self.0).map_err(err)?
        } else {
            let covers = core::enumerate_cdcs(&self.0, max_cycles).map_err(err)?;
            let all = covers
                .iter()
                .map(|c| core::surface_from_cycles(&self.0, c))
                .collect::<core::Result<Vec<_>>>()
                .map_err(err)?;
            core::embedding::dedup_surfaces(all)
        };
        Ok(surfaces.into_iter().map(Surface).collect())
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(nodes={}, arcs={})",
            self.0.num_nodes(),
            self.0.num_arcs()
        )
    }
}

/// One orbit of pattern node sets and the surfaces it yields.
#[pyclass(frozen, name = "ReembeddingClass", module = "surfgeo")]
pub struct ReembeddingClass(core::ReembeddingClass);

#[pymethods]
impl ReembeddingClass {
    #[getter]
    fn target(&self) -> String {
        self.0.target.to_string()
    }

    #[getter]
    fn pattern(&self) -> String {
        self.0.pattern().to_string()
    }

    #[getter]
    fn nodes(&self) -> Vec<u32> {
        self.0.nodes.clone()
    }

    #[getter]
    fn orbit_size(&self) -> usize {
        self.0.orbit_size
    }

    #[getter]
    fn arcs(&self) -> Vec<(u32, u32)> {
        self.0.arcs().to_vec()
    }

    #[getter]
    fn twisted(&self) -> Vec<(u32, u32)> {
        self.0.twisted().to_vec()
    }

    #[getter]
    fn surface(&self) -> Surface {
        Surface(self.0.surface().clone())
    }

    /// All pairwise non-isomorphic surfaces of the class.
    fn surfaces(&self) -> Vec<Surface> {
        self.0.surfaces().cloned().map(Surface).collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "ReembeddingClass(target={}, pattern={}, orbit_size={}, nodes={:?})",
            self.0.target,
            self.0.pattern(),
            self.0.orbit_size,
            self.0.nodes
        )
    }
}

/// Re-embedding classes of a vertex-faithful sphere; `target` is one of
/// `projective-plane`, `torus`, `klein-bottle`, or `None` for all three.
#[pyfunction]
#[pyo3(signature = (surface, target = None))]
fn reembeddings(surface: &Surface, target: Option<&str>) -> PyResult<Vec<ReembeddingClass>> {
    let t = target.map(self::target).transpose()?;
    let classes = core::enumerate_reembeddings(&surface.0, t).map_err(err)?;
    Ok(classes.into_iter().map(ReembeddingClass).collect())
}

/// The same surfaces computed from all cycle double covers.
#[pyfunction]
#[pyo3(signature = (surface, target, max_cycles = core::DEFAULT_MAX_CYCLES))]
fn oracle_reembeddings(
    surface: &Surface,
    target: &str,
    max_cycles: usize,
) -> PyResult<Vec<Surface>> {
    let t = self::target(target)?;
    let found = core::oracle_reembeddings(&surface.0, t, max_cycles).map_err(err)?;
    Ok(found.into_iter().map(Surface).collect())
}

#[pyfunction]
fn generate_spheres(n_faces: usize) -> PyResult<Vec<Surface>> {
    let spheres = core::generate_spheres(n_faces).map_err(err)?;
    Ok(spheres.into_iter().map(Surface).collect())
}

#[pyfunction]
fn double_ngon(k: usize) -> PyResult<Surface> {
    core::double_ngon(k).map(Surface).map_err(err)
}

#[pyfunction]
fn prop45_family(n: usize) -> PyResult<Surface> {
    core::prop45_family(n).map(Surface).map_err(err)
}

type Row = (usize, usize, usize, usize, usize);

/// Rows `(n, S, P, T, K)` for even `n` up to `max_faces`.
#[pyfunction]
#[pyo3(signature = (max_faces, isomorphism_classes = false))]
fn table(max_faces: usize, isomorphism_classes: bool) -> PyResult<Vec<Row>> {
    let counting = if isomorphism_classes {
        core::Counting::Surfaces
    } else {
        core::Counting::Orbits
    };
    let rows = core::reembedding_table(max_faces, counting).map_err(err)?;
    Ok(rows
        .into_iter()
        .map(|r| (r.faces, r.spheres, r.projective, r.torus, r.klein))
        .collect())
}

#[pymodule]
fn surfgeo(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Surface>()?;
    m.add_class::<Graph>()?;
    m.add_class::<ReembeddingClass>()?;
    m.add_function(wrap_pyfunction!(reembeddings, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_reembeddings, m)?)?;
    m.add_function(wrap_pyfunction!(generate_spheres, m)?)?;
    m.add_function(wrap_pyfunction!(double_ngon, m)?)?;
    m.add_function(wrap_pyfunction!(prop45_family, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    Ok(())
}
