//! Isomorph-free generation of vertex-faithful simplicial spheres and a few
//! named constructions.
//!
//! Every simplicial sphere other than the tetrahedron arises from a smaller
//! one by splitting a vertex, so spheres with `n` faces are produced level
//! by level from the tetrahedron, keeping one surface per canonical form.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::surface::SimplicialSurface;

/// All vertex-faithful simplicial spheres with `n_faces` faces, pairwise
/// non-isomorphic and sorted by canonical form.
pub fn generate_spheres(n_faces: usize) -> Result<Vec<SimplicialSurface>> {
    Ok(generate_spheres_up_to(n_faces)?.pop().unwrap_or_default())
}

/// Spheres for every even face count `4, 6, ..., max_faces`, one list per
/// face count.
pub fn generate_spheres_up_to(max_faces: usize) -> Result<Vec<Vec<SimplicialSurface>>> {
    check_face_count(max_faces)?;
    let mut levels = vec![vec![tetrahedron()]];
    for _ in (6..=max_faces).step_by(2) {
        let next = expand(levels.last().expect("non-empty"));
        levels.push(next);
    }
    Ok(levels)
}

fn check_face_count(n_faces: usize) -> Result<()> {
    if n_faces < 4 || n_faces % 2 == 1 {
        return Err(Error::Invalid(format!(
            "a simplicial sphere needs an even number of at least 4 faces, got {n_faces}"
        )));
    }
    Ok(())
}

fn tetrahedron() -> SimplicialSurface {
    SimplicialSurface::build_from_faces(&[[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]])
        .expect("tetrahedron")
}

fn expand(level: &[SimplicialSurface]) -> Vec<SimplicialSurface> {
    let children: Vec<(Vec<u8>, Vec<[u32; 3]>)> = level
        .par_iter()
        .flat_map_iter(vertex_splits)
        .map(|faces| {
            let s = SimplicialSurface::build_from_faces(&faces).expect("vertex split");
            (s.canonical_form(), faces)
        })
        .collect();
    let mut unique: BTreeMap<Vec<u8>, Vec<[u32; 3]>> = BTreeMap::new();
    for (form, faces) in children {
        unique.entry(form).or_insert(faces);
    }
    unique
        .into_values()
        .map(|faces| SimplicialSurface::build_from_faces(&faces).expect("vertex split"))
        .collect()
}

/// Link of a vertex as a cyclic sequence of vertex indices: the faces around
/// `v` are `{v, link[i], link[i + 1]}`.
fn link(s: &SimplicialSurface, v: usize) -> Vec<usize> {
    let umbrella = s.umbrella(v);
    let d = umbrella.len();
    (0..d)
        .map(|i| {
            let (f, g) = (umbrella[i], umbrella[(i + 1) % d]);
            let fv = s.face_vertices(f);
            let gv = s.face_vertices(g);
            *fv.iter()
                .find(|&&x| x != v && gv.contains(&x))
                .expect("consecutive umbrella faces share an edge")
        })
        .collect()
}

/// Face lists of all vertex splits of `s`.
///
/// Splitting `v` at link positions `i < j` keeps the faces
/// `{v, link[k], link[k+1]}` for `i <= k < j` at `v`, moves the others to a
/// new vertex `w`, and adds the faces `{v, w, link[i]}` and `{v, w, link[j]}`.
fn vertex_splits(s: &SimplicialSurface) -> Vec<Vec<[u32; 3]>> {
    let new = s.vertex_labels().iter().max().copied().unwrap_or(0) + 1;
    let mut out = Vec::new();
    for v in 0..s.num_vertices() {
        let cyc = link(s, v);
        let d = cyc.len();
        let vl = s.vertex_label(v);
        let lab = |k: usize| s.vertex_label(cyc[k % d]);
        let others: Vec<[u32; 3]> = (0..s.num_faces())
            .filter(|&f| !s.face_vertices(f).contains(&v))
            .map(|f| s.face_vertices(f).map(|x| s.vertex_label(x)))
            .collect();
        for i in 0..d {
            for j in i + 1..d {
                let mut faces = others.clone();
                for k in 0..d {
                    let apex = if (i..j).contains(&k) { vl } else { new };
                    faces.push([apex, lab(k), lab(k + 1)]);
                }
                faces.push([vl, new, lab(i)]);
                faces.push([vl, new, lab(j)]);
                out.push(faces);
            }
        }
    }
    out
}

/// Two cones over a `k`-gon glued along the rim. Apexes are vertices 1
/// and 2, the rim is `3, ..., k + 2`.
pub fn double_ngon(k: usize) -> Result<SimplicialSurface> {
    if k < 3 {
        return Err(Error::Invalid(format!(
            "double n-gon needs n >= 3, got {k}"
        )));
    }
    let rim = |i: usize| (3 + i % k) as u32;
    let faces: Vec<[u32; 3]> = (0..k)
        .flat_map(|i| [[1, rim(i), rim(i + 1)], [2, rim(i), rim(i + 1)]])
        .collect();
    SimplicialSurface::build_from_faces(&faces)
}

/// Replaces the face labelled `face` by three faces around a new vertex of
/// degree three. Faces are relabelled `1..` in order, with the three new
/// faces last; the new vertex gets the next free vertex label.
pub fn tetrahedral_extension(s: &SimplicialSurface, face: u32) -> Result<SimplicialSurface> {
    let (faces, _) = extend_faces(s, face)?;
    SimplicialSurface::build_from_faces(&faces)
}

fn extend_faces(s: &SimplicialSurface, face: u32) -> Result<(Vec<[u32; 3]>, u32)> {
    let target = s
        .face_by_label(face)
        .ok_or_else(|| Error::Invalid(format!("no face with id {face}")))?;
    let w = s.vertex_labels().iter().max().copied().unwrap_or(0) + 1;
    let mut faces: Vec<[u32; 3]> = (0..s.num_faces())
        .filter(|&f| f != target)
        .map(|f| s.face_vertices(f).map(|x| s.vertex_label(x)))
        .collect();
    let [a, b, c] = s.face_vertices(target).map(|x| s.vertex_label(x));
    faces.extend([[a, b, w], [b, c, w], [a, c, w]]);
    Ok((faces, w))
}

/// Double `2n`-gon refined by tetrahedral extensions so that its edge graph
/// has no non-trivial automorphism.
///
/// With apexes 1, 2 and rim `3, ..., 2n + 2`, triangle `T_i` starts as
/// `{1, i + 2, i + 3}`. For `e = 1, 3, ..., 2n - 1` each of `T_e, ..., T_{2n-1}`
/// is extended and replaced by its new face through the two rim vertices;
/// finally `T_{2n-1}` is extended once more.
pub fn prop45_family(n: usize) -> Result<SimplicialSurface> {
    if n < 2 {
        return Err(Error::Invalid(format!(
            "family parameter must be >= 2, got {n}"
        )));
    }
    let mut s = double_ngon(2 * n)?;
    let rim = |i: usize| (3 + (i - 1) % (2 * n)) as u32;
    let mut triangles: Vec<[u32; 3]> = (1..2 * n).map(|i| [1, rim(i), rim(i + 1)]).collect();
    let mut extend = |s: &mut SimplicialSurface, i: usize| -> Result<()> {
        let tri = triangles[i - 1];
        let face = face_with_vertices(s, tri)?;
        let (faces, w) = extend_faces(s, face)?;
        *s = SimplicialSurface::build_from_faces(&faces)?;
        triangles[i - 1] = [w, tri[1], tri[2]];
        Ok(())
    };
    for e in (1..2 * n).step_by(2) {
        for i in e..2 * n {
            extend(&mut s, i)?;
        }
    }
    extend(&mut s, 2 * n - 1)?;
    Ok(s)
}

fn face_with_vertices(s: &SimplicialSurface, tri: [u32; 3]) -> Result<u32> {
    let mut want = tri;
    want.sort_unstable();
    (0..s.num_faces())
        .find(|&f| {
            let mut have = s.face_vertices(f).map(|x| s.vertex_label(x));
            have.sort_unstable();
            have == want
        })
        .map(|f| s.face_label(f))
        .ok_or_else(|| Error::Internal(format!("no face on vertices {tri:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::{edge_graph, face_graph};
    use crate::surface::tests::double_tetrahedron;
    use crate::surface::SurfaceKind;

    #[test]
    fn sphere_counts() {
        let levels = generate_spheres_up_to(12).unwrap();
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14]);
    }

    #[test]
    fn generated_spheres_are_valid() {
        for s in generate_spheres(10).unwrap() {
            assert_eq!(s.num_faces(), 10);
            assert_eq!(s.classify().unwrap().kind, SurfaceKind::Sphere);
            assert!(s.is_vertex_faithful());
            let (g, _) = face_graph(&s).unwrap();
            assert!(g.is_k_connected(3).unwrap());
        }
    }

    #[test]
    fn odd_face_count_rejected() {
        assert!(generate_spheres(7).is_err());
        assert!(generate_spheres(2).is_err());
    }

    #[test]
    fn double_triangle_is_double_tetrahedron() {
        let s = double_ngon(3).unwrap();
        assert_eq!(s.num_faces(), 6);
        assert!(s.is_isomorphic(&double_tetrahedron()));
        let d = double_ngon(5).unwrap();
        assert_eq!(d.degree(d.vertex_by_label(1).unwrap()), 5);
        assert_eq!(d.degree(d.vertex_by_label(3).unwrap()), 4);
    }

    #[test]
    fn extension_adds_two_faces() {
        let t = tetrahedron();
        let e = tetrahedral_extension(&t, 1).unwrap();
        assert_eq!(e.num_faces(), 6);
        assert_eq!(e.euler_characteristic(), 2);
        assert!(e.is_isomorphic(&double_tetrahedron()));
        assert!(tetrahedral_extension(&t, 9).is_err());
    }

    #[test]
    fn extensions_of_generated_spheres_are_generated() {
        let levels = generate_spheres_up_to(10).unwrap();
        for (small, big) in levels.iter().zip(levels.iter().skip(1)) {
            let forms: Vec<Vec<u8>> = big.iter().map(SimplicialSurface::canonical_form).collect();
            for s in small {
                for &f in s.face_labels() {
                    let e = tetrahedral_extension(s, f).unwrap();
                    assert!(forms.contains(&e.canonical_form()));
                }
            }
        }
    }

    #[test]
    fn refined_double_hexagon_is_rigid() {
        let s = prop45_family(3).unwrap();
        assert_eq!(s.classify().unwrap().kind, SurfaceKind::Sphere);
        assert_eq!(s.num_faces(), 12 + 2 * 10);
        let (g, _) = edge_graph(&s).unwrap();
        assert!(g.automorphisms().is_trivial());
    }
}
