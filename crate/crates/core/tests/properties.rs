use std::collections::BTreeMap;

use proptest::prelude::*;
use surfgeo_core::embedding::cover_from_walks;
use surfgeo_core::{
    enumerate_reembeddings, enumerate_vertex_faithful_surfaces, face_graph, parse_surface,
    rotation_system_from_sphere, surface_from_cycles, tetrahedral_extension, trace_facial_walks,
    write_faces, write_umbrellas, EmbeddingScheme, SimplicialSurface, SurfaceKind, TargetSurface,
};

fn tetrahedron() -> SimplicialSurface {
    SimplicialSurface::build_from_faces(&[[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]).unwrap()
}

/// A stacked sphere: the tetrahedron after a sequence of tetrahedral
/// extensions, each choice taken modulo the current face count.
fn stacked(choices: &[usize]) -> SimplicialSurface {
    choices.iter().fold(tetrahedron(), |s, &c| {
        let face = s.face_labels()[c % s.num_faces()];
        tetrahedral_extension(&s, face).unwrap()
    })
}

fn permutation(n: usize, seed: &[usize]) -> Vec<u32> {
    let mut p: Vec<u32> = (1..=n as u32).collect();
    for (i, &r) in seed.iter().enumerate().take(n) {
        p.swap(i, i + r % (n - i));
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn stacked_spheres_are_vertex_faithful_spheres(choices in prop::collection::vec(0usize..64, 0..5)) {
        let s = stacked(&choices);
        prop_assert_eq!(s.classify().unwrap().kind, SurfaceKind::Sphere);
        prop_assert!(s.is_vertex_faithful());
        prop_assert_eq!(s.num_faces(), 4 + 2 * choices.len());
    }

    #[test]
    fn canonical_form_ignores_labels(
        choices in prop::collection::vec(0usize..64, 0..4),
        seed in prop::collection::vec(0usize..1000, 16),
    ) {
        let s = stacked(&choices);
        let pv = permutation(s.num_vertices(), &seed);
        let pf = permutation(s.num_faces(), &seed[3..]);
        let vmap: BTreeMap<u32, u32> = s.vertex_labels().iter().copied().zip(pv).collect();
        let fmap: BTreeMap<u32, u32> = s.face_labels().iter().copied().zip(pf).collect();
        let r = s.relabeled(&vmap, &BTreeMap::new(), &fmap).unwrap();
        prop_assert_eq!(r.canonical_form(), s.canonical_form());
        prop_assert!(r.isomorphism_to(&s).is_some());
    }

    #[test]
    fn text_formats_round_trip(choices in prop::collection::vec(0usize..64, 0..4)) {
        let s = stacked(&choices);
        let faces = parse_surface(&write_faces(&s)).unwrap();
        prop_assert_eq!(faces.face_triples(), s.face_triples());
        let umbrellas = parse_surface(&write_umbrellas(&s)).unwrap();
        prop_assert!(umbrellas.is_isomorphic(&s));
    }

    #[test]
    fn face_graph_has_one_vertex_faithful_surface(choices in prop::collection::vec(0usize..64, 0..4)) {
        let s = stacked(&choices);
        let (g, _) = face_graph(&s).unwrap();
        let vf = enumerate_vertex_faithful_surfaces(&g).unwrap();
        prop_assert_eq!(vf.len(), 1);
        prop_assert!(vf[0].is_isomorphic(&s));
    }

    #[test]
    fn stacked_spheres_reembed_projectively(choices in prop::collection::vec(0usize..64, 1..4)) {
        // a degree-3 vertex spans a K4 in the edge graph
        let s = stacked(&choices);
        let p = enumerate_reembeddings(&s, Some(TargetSurface::ProjectivePlane)).unwrap();
        prop_assert!(!p.is_empty());
        prop_assert!(p.len() <= (s.num_faces() - 2) / 2);
    }

    #[test]
    fn random_twisted_sets_trace_consistently(
        choices in prop::collection::vec(0usize..64, 0..3),
        mask in prop::collection::vec(any::<bool>(), 24),
    ) {
        let s = stacked(&choices);
        let (g, _) = face_graph(&s).unwrap();
        let rot = rotation_system_from_sphere(&s).unwrap();
        let twisted: Vec<usize> = (0..g.num_arcs()).filter(|&a| mask[a % mask.len()]).collect();
        let traced = trace_facial_walks(&g, &EmbeddingScheme::new(rot, twisted)).unwrap();
        let total: usize = traced.walks.iter().map(|w| w.len()).sum();
        prop_assert_eq!(total, 2 * g.num_arcs());
        let chi = g.num_nodes() as i64 - g.num_arcs() as i64 + traced.walks.len() as i64;
        prop_assert_eq!(chi, traced.euler_characteristic);
        if traced.walks.iter().all(|w| w.is_cycle()) {
            let cover = cover_from_walks(&g, &traced.walks).unwrap();
            let x = surface_from_cycles(&g, &cover).unwrap();
            let class = x.classify().unwrap();
            prop_assert_eq!(class.euler_characteristic, traced.euler_characteristic);
            prop_assert_eq!(class.orientable, traced.orientable);
        }
    }
}
