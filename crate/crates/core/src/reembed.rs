//! Re-embeddings of simplicial spheres on the projective plane, the torus
//! and the Klein bottle.
//!
//! The face graph of a vertex-faithful sphere `X` has, besides its planar
//! strong embedding, finitely many strong embeddings on each of the three
//! surfaces of Euler characteristic 0 or 1. Each one is described by a set
//! `T` of twisted arcs relative to the planar rotation, and the arcs dual
//! to `T` form a subgraph of the edge graph `E(X)` of a fixed shape:
//!
//! | target           | subgraph of `E(X)`                          |
//! |------------------|---------------------------------------------|
//! | projective plane | `K4`                                        |
//! | torus            | `K2,2,2`, `K2,2m` (`m >= 1`)                |
//! | Klein bottle     | `A3`, `A5`, `A6`, `K2,2m-1` (`m >= 2`)      |
//!
//! [`enumerate_reembeddings`] finds these subgraphs, groups them into
//! orbits of node sets under `Aut(E(X))` and rebuilds the surfaces;
//! [`oracle_reembeddings`] computes the same surfaces from all cycle double
//! covers of the face graph.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::duality::{edge_graph, face_graph, rotation_system_from_sphere};
use crate::embedding::{
    cover_from_walks, enumerate_cdcs, is_strong, surface_from_cycles, trace, RotationSystem,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{find_pattern_subgraphs, PatternGraph, PatternMatch};
use crate::surface::{SimplicialSurface, SurfaceClass, SurfaceKind};
use crate::waist::find_waists;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TargetSurface {
    ProjectivePlane,
    Torus,
    KleinBottle,
}

impl TargetSurface {
    pub const ALL: [TargetSurface; 3] = [
        TargetSurface::ProjectivePlane,
        TargetSurface::Torus,
        TargetSurface::KleinBottle,
    ];

    pub fn kind(self) -> SurfaceKind {
        match self {
            TargetSurface::ProjectivePlane => SurfaceKind::ProjectivePlane,
            TargetSurface::Torus => SurfaceKind::Torus,
            TargetSurface::KleinBottle => SurfaceKind::KleinBottle,
        }
    }

    pub fn matches(self, class: &SurfaceClass) -> bool {
        class.kind == self.kind()
    }

    /// Patterns whose occurrences in an edge graph with maximum degree
    /// `max_degree` can give embeddings on this surface.
    pub fn patterns(self, max_degree: usize) -> Vec<PatternGraph> {
        match self {
            TargetSurface::ProjectivePlane => vec![PatternGraph::K4],
            TargetSurface::Torus => {
                let mut out = vec![PatternGraph::K222];
                out.extend((2..=max_degree).step_by(2).map(PatternGraph::K2m));
                out
            }
            TargetSurface::KleinBottle => {
                let mut out = vec![PatternGraph::A3, PatternGraph::A5, PatternGraph::A6];
                out.extend((3..=max_degree).step_by(2).map(PatternGraph::K2m));
                out
            }
        }
    }
}

impl fmt::Display for TargetSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TargetSurface::ProjectivePlane => "projective-plane",
            TargetSurface::Torus => "torus",
            TargetSurface::KleinBottle => "klein-bottle",
        })
    }
}

impl FromStr for TargetSurface {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "projective-plane" | "projective" => Ok(TargetSurface::ProjectivePlane),
            "torus" => Ok(TargetSurface::Torus),
            "klein-bottle" | "klein" => Ok(TargetSurface::KleinBottle),
            other => Err(Error::Invalid(format!(
                "unknown target {other:?} (expected projective-plane, torus or klein-bottle)"
            ))),
        }
    }
}

/// One surface obtained from a pattern occurrence.
#[derive(Debug, Clone)]
pub struct Realisation {
    pub pattern: PatternGraph,
    /// Arcs of the occurrence in `E(X)`, as vertex-label pairs.
    pub arcs: Vec<(u32, u32)>,
    /// Twisted arcs of the face graph, as face-label pairs.
    pub twisted: Vec<(u32, u32)>,
    pub surface: SimplicialSurface,
}

/// An orbit of pattern node sets under `Aut(E(X))`.
///
/// Occurrences in one orbit give isomorphic surfaces. Different occurrences
/// on the same node set can still give non-isomorphic surfaces, so every
/// distinct surface found on the representative node set is kept, the
/// first one being the class representative.
#[derive(Debug, Clone)]
pub struct ReembeddingClass {
    pub target: TargetSurface,
    /// Vertex labels of the lexicographically least node set in the orbit.
    pub nodes: Vec<u32>,
    pub orbit_size: usize,
    pub realisations: Vec<Realisation>,
}

impl ReembeddingClass {
    pub fn pattern(&self) -> PatternGraph {
        self.realisations[0].pattern
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.realisations[0].arcs
    }

    pub fn twisted(&self) -> &[(u32, u32)] {
        &self.realisations[0].twisted
    }

    pub fn surface(&self) -> &SimplicialSurface {
        &self.realisations[0].surface
    }

    pub fn surfaces(&self) -> impl Iterator<Item = &SimplicialSurface> {
        self.realisations.iter().map(|r| &r.surface)
    }
}

fn check_sphere(s: &SimplicialSurface) -> Result<()> {
    let class = s.classify()?;
    if class.kind != SurfaceKind::Sphere {
        return Err(Error::NotSphere(class.kind.to_string()));
    }
    Ok(())
}

fn check_vf_sphere(s: &SimplicialSurface) -> Result<()> {
    check_sphere(s)?;
    if !s.is_vertex_faithful() {
        return Err(Error::NotVertexFaithful);
    }
    Ok(())
}

struct Context {
    eg: Graph,
    fg: Graph,
    rotation: RotationSystem,
}

impl Context {
    fn realise(&self, target: TargetSurface, m: &PatternMatch) -> Result<Realisation> {
        // face and edge graph share arc numbering, so T is the arc set itself
        let mut twisted = vec![false; self.fg.num_arcs()];
        for &a in &m.arcs {
            twisted[a] = true;
        }
        let walks = trace(&self.fg, &self.rotation, &twisted);
        if !is_strong(&walks) {
            return Err(Error::Internal(format!(
                "{} occurrence gives an embedding that is not strong",
                m.pattern
            )));
        }
        let cover = cover_from_walks(&self.fg, &walks)?;
        let surface = surface_from_cycles(&self.fg, &cover)?;
        let class = surface.classify()?;
        if !target.matches(&class) {
            return Err(Error::Internal(format!(
                "{} occurrence gives a {} instead of a {target}",
                m.pattern, class.kind
            )));
        }
        let labels = |g: &Graph, a: usize| {
            let (u, v) = g.arc_labels(a);
            (u.min(v), u.max(v))
        };
        let mut arcs: Vec<(u32, u32)> = m.arcs.iter().map(|&a| labels(&self.eg, a)).collect();
        let mut tw: Vec<(u32, u32)> = m.arcs.iter().map(|&a| labels(&self.fg, a)).collect();
        arcs.sort_unstable();
        tw.sort_unstable();
        Ok(Realisation {
            pattern: m.pattern,
            arcs,
            twisted: tw,
            surface,
        })
    }
}

/// Re-embedding classes of the face graph of `s` on `target`, or on all
/// three targets when `target` is `None`.
///
/// Classes are sorted by target, pattern and representative node set.
pub fn enumerate_reembeddings(
    s: &SimplicialSurface,
    target: Option<TargetSurface>,
) -> Result<Vec<ReembeddingClass>> {
    check_vf_sphere(s)?;
    let (eg, _) = edge_graph(s)?;
    let (fg, _) = face_graph(s)?;
    let rotation = rotation_system_from_sphere(s)?;
    let ctx = Context { eg, fg, rotation };
    let aut = ctx.eg.automorphisms();
    let max_degree = (0..ctx.eg.num_nodes())
        .map(|v| ctx.eg.degree(v))
        .max()
        .unwrap_or(0);

    let targets: Vec<TargetSurface> = match target {
        Some(t) => vec![t],
        None => TargetSurface::ALL.to_vec(),
    };
    let mut jobs: Vec<(TargetSurface, Vec<usize>, usize, Vec<PatternMatch>)> = Vec::new();
    for t in targets {
        let matches: Vec<PatternMatch> = t
            .patterns(max_degree)
            .into_iter()
            .flat_map(|p| find_pattern_subgraphs(&ctx.eg, p))
            .collect();
        let sets: Vec<Vec<usize>> = matches.iter().map(|m| m.nodes.clone()).collect();
        let unique: Vec<Vec<usize>> = sets
            .iter()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        for orbit in aut.set_orbits(&unique) {
            let on_rep: Vec<PatternMatch> = matches
                .iter()
                .filter(|m| m.nodes == orbit.representative)
                .cloned()
                .collect();
            jobs.push((t, orbit.representative, orbit.size, on_rep));
        }
    }

    let mut classes: Vec<ReembeddingClass> = jobs
        .into_par_iter()
        .map(
            |(t, nodes, orbit_size, on_rep)| -> Result<ReembeddingClass> {
                let mut seen = BTreeSet::new();
                let mut realisations = Vec::new();
                for m in &on_rep {
                    let r = ctx.realise(t, m)?;
                    if seen.insert(r.surface.canonical_form()) {
                        realisations.push(r);
                    }
                }
                Ok(ReembeddingClass {
                    target: t,
                    nodes: nodes.iter().map(|&v| ctx.eg.label(v)).collect(),
                    orbit_size,
                    realisations,
                })
            },
        )
        .collect::<Result<_>>()?;

    classes
        .sort_by(|a, b| (a.target, a.pattern(), &a.nodes).cmp(&(b.target, b.pattern(), &b.nodes)));
    let mut global = BTreeSet::new();
    for c in &mut classes {
        c.realisations
            .retain(|r| global.insert(r.surface.canonical_form()));
    }
    classes.retain(|c| !c.realisations.is_empty());
    Ok(classes)
}

/// All strong embeddings of the face graph of `s` on `target`, computed
/// from its cycle double covers, up to isomorphism and sorted by canonical
/// form.
pub fn oracle_reembeddings(
    s: &SimplicialSurface,
    target: TargetSurface,
    max_cycles: usize,
) -> Result<Vec<SimplicialSurface>> {
    check_sphere(s)?;
    let (fg, _) = face_graph(s)?;
    let covers = enumerate_cdcs(&fg, max_cycles)?;
    let found: Vec<(Vec<u8>, SimplicialSurface)> = covers
        .par_iter()
        .map(|c| surface_from_cycles(&fg, c))
        .filter_map(|r| match r {
            Ok(x) => match x.classify() {
                Ok(class) if target.matches(&class) => Some(Ok((x.canonical_form(), x))),
                Ok(_) => None,
                Err(e) => Some(Err(e)),
            },
            Err(e) => Some(Err(e)),
        })
        .collect::<Result<_>>()?;
    let unique: BTreeMap<Vec<u8>, SimplicialSurface> = found.into_iter().collect();
    Ok(unique.into_values().collect())
}

/// Outcome of the waist and degree criteria.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Prefilter {
    Impossible(String),
    Unknown,
}

/// Rules out targets that the waist and degree structure of `s` excludes.
///
/// Projective plane: impossible when every vertex degree is even or there
/// is no 3-waist, unless `s` is the tetrahedron. Torus and Klein bottle:
/// impossible without 3- and 4-waists. A 4-waist does not exclude the
/// torus: the octahedron has 4-waists and two toroidal re-embeddings.
pub fn prefilter(s: &SimplicialSurface, target: TargetSurface) -> Result<Prefilter> {
    check_vf_sphere(s)?;
    let n3 = find_waists(s, 3)?.len();
    let n4 = find_waists(s, 4)?.len();
    let verdict = match target {
        TargetSurface::ProjectivePlane => {
            if s.num_faces() == 4 {
                Prefilter::Unknown
            } else if (0..s.num_vertices()).all(|v| s.degree(v).is_multiple_of(2)) {
                Prefilter::Impossible("all vertex degrees are even".into())
            } else if n3 == 0 {
                Prefilter::Impossible("no 3-waist".into())
            } else {
                Prefilter::Unknown
            }
        }
        _ if n3 == 0 && n4 == 0 => Prefilter::Impossible("no 3-waist and no 4-waist".into()),
        _ => Prefilter::Unknown,
    };
    Ok(verdict)
}

/// Whether `s` has at most `(faces - 2) / 2` projective re-embedding
/// classes.
pub fn projective_bound_check(s: &SimplicialSurface) -> Result<bool> {
    let classes = enumerate_reembeddings(s, Some(TargetSurface::ProjectivePlane))?;
    Ok(classes.len() <= (s.num_faces() - 2) / 2)
}

/// Number of classes and of non-isomorphic surfaces for one target.
pub fn count(classes: &[ReembeddingClass], target: TargetSurface) -> (usize, usize) {
    classes
        .iter()
        .filter(|c| c.target == target)
        .fold((0, 0), |(k, n), c| (k + 1, n + c.realisations.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::DEFAULT_MAX_CYCLES;
    use crate::generation::{double_ngon, generate_spheres_up_to};
    use crate::surface::tests::{double_tetrahedron, projective_plane_4, tetrahedron};

    fn forms<'a>(it: impl Iterator<Item = &'a SimplicialSurface>) -> BTreeSet<Vec<u8>> {
        it.map(SimplicialSurface::canonical_form).collect()
    }

    #[test]
    fn tetrahedron_has_one_projective_class() {
        let all = enumerate_reembeddings(&tetrahedron(), None).unwrap();
        assert_eq!(all.len(), 1);
        let c = &all[0];
        assert_eq!(c.target, TargetSurface::ProjectivePlane);
        assert_eq!(c.pattern(), PatternGraph::K4);
        assert_eq!(c.orbit_size, 1);
        assert!(c.surface().is_isomorphic(&projective_plane_4()));
        assert_eq!(c.twisted().len(), 6);
    }

    #[test]
    fn double_tetrahedron_classes() {
        let s = double_tetrahedron();
        let p = enumerate_reembeddings(&s, Some(TargetSurface::ProjectivePlane)).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].orbit_size, 2);
        assert!(enumerate_reembeddings(&s, Some(TargetSurface::Torus))
            .unwrap()
            .is_empty());
        let k = enumerate_reembeddings(&s, Some(TargetSurface::KleinBottle)).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].pattern(), PatternGraph::K2m(3));
        assert_eq!(k[0].nodes, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn class_surfaces_are_strong_and_not_vertex_faithful() {
        let s = double_ngon(4).unwrap();
        let (fg, _) = face_graph(&s).unwrap();
        for c in enumerate_reembeddings(&s, None).unwrap() {
            for x in c.surfaces() {
                assert!(c.target.matches(&x.classify().unwrap()));
                assert!(!x.is_vertex_faithful());
                let (g, _) = face_graph(x).unwrap();
                assert!(g.is_isomorphic(&fg));
            }
        }
    }

    #[test]
    fn octahedron_torus_node_set_carries_two_surfaces() {
        let s = double_ngon(4).unwrap();
        let t = enumerate_reembeddings(&s, Some(TargetSurface::Torus)).unwrap();
        let (classes, surfaces) = count(&t, TargetSurface::Torus);
        assert_eq!((classes, surfaces), (2, 3));
        let oracle = oracle_reembeddings(&s, TargetSurface::Torus, DEFAULT_MAX_CYCLES).unwrap();
        assert_eq!(
            forms(t.iter().flat_map(|c| c.surfaces())),
            forms(oracle.iter())
        );
    }

    #[test]
    fn pipeline_agrees_with_oracle_up_to_10_faces() {
        for level in generate_spheres_up_to(10).unwrap() {
            for s in &level {
                for t in TargetSurface::ALL {
                    let classes = enumerate_reembeddings(s, Some(t)).unwrap();
                    let oracle = oracle_reembeddings(s, t, DEFAULT_MAX_CYCLES).unwrap();
                    assert_eq!(
                        forms(classes.iter().flat_map(|c| c.surfaces())),
                        forms(oracle.iter()),
                        "{t} on {} faces",
                        s.num_faces()
                    );
                }
            }
        }
    }

    #[test]
    fn oracle_sphere_is_the_input() {
        let s = double_tetrahedron();
        let (fg, _) = face_graph(&s).unwrap();
        let spheres: Vec<SimplicialSurface> = enumerate_cdcs(&fg, DEFAULT_MAX_CYCLES)
            .unwrap()
            .iter()
            .map(|c| surface_from_cycles(&fg, c).unwrap())
            .filter(|x| x.classify().unwrap().kind == SurfaceKind::Sphere)
            .collect();
        assert_eq!(spheres.len(), 1);
        assert!(spheres[0].is_isomorphic(&s));
    }

    #[test]
    fn prefilter_examples() {
        let octa = double_ngon(4).unwrap();
        assert!(matches!(
            prefilter(&octa, TargetSurface::ProjectivePlane).unwrap(),
            Prefilter::Impossible(_)
        ));
        assert_eq!(
            prefilter(&tetrahedron(), TargetSurface::ProjectivePlane).unwrap(),
            Prefilter::Unknown
        );
        assert_eq!(
            prefilter(&octa, TargetSurface::Torus).unwrap(),
            Prefilter::Unknown
        );
        assert!(!enumerate_reembeddings(&octa, Some(TargetSurface::Torus))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn icosahedron_excludes_torus_and_klein() {
        let ico = crate::format::parse_surface(ICOSAHEDRON).unwrap();
        for t in [TargetSurface::Torus, TargetSurface::KleinBottle] {
            assert!(matches!(
                prefilter(&ico, t).unwrap(),
                Prefilter::Impossible(_)
            ));
        }
    }

    const ICOSAHEDRON: &str = "1 2 3\n1 3 4\n1 4 5\n1 5 6\n1 2 6\n2 3 7\n3 4 8\n4 5 9\n5 6 10\n\
        2 6 11\n3 7 8\n4 8 9\n5 9 10\n6 10 11\n2 7 11\n7 8 12\n8 9 12\n9 10 12\n10 11 12\n7 11 12\n";

    #[test]
    fn projective_bound_small() {
        assert!(projective_bound_check(&tetrahedron()).unwrap());
        assert!(projective_bound_check(&double_tetrahedron()).unwrap());
    }

    #[test]
    fn non_sphere_rejected() {
        let p = projective_plane_4();
        assert!(matches!(
            enumerate_reembeddings(&p, None),
            Err(Error::NotSphere(_))
        ));
        assert!(oracle_reembeddings(&p, TargetSurface::Torus, 100).is_err());
    }

    #[test]
    fn target_names_round_trip() {
        for t in TargetSurface::ALL {
            assert_eq!(t.to_string().parse::<TargetSurface>().unwrap(), t);
        }
        assert!("sphere".parse::<TargetSurface>().is_err());
    }
}
