//! Counts of spheres and their re-embeddings by face count.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::Result;
use crate::generation::generate_spheres_up_to;
use crate::reembed::{count, enumerate_reembeddings, TargetSurface};

/// What the P, T and K columns count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Counting {
    /// Orbits of pattern node sets under the edge-graph automorphisms.
    #[default]
    Orbits,
    /// Pairwise non-isomorphic re-embedded surfaces.
    Surfaces,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub faces: usize,
    pub spheres: usize,
    pub projective: usize,
    pub torus: usize,
    pub klein: usize,
}

/// One row per even face count from 4 to `max_faces`.
pub fn reembedding_table(max_faces: usize, counting: Counting) -> Result<Vec<TableRow>> {
    let levels = generate_spheres_up_to(max_faces)?;
    levels
        .iter()
        .enumerate()
        .map(|(i, level)| {
            let per_sphere: Vec<[usize; 3]> = level
                .par_iter()
                .map(|s| {
                    let classes = enumerate_reembeddings(s, None)?;
                    Ok(TargetSurface::ALL.map(|t| {
                        let (orbits, surfaces) = count(&classes, t);
                        match counting {
                            Counting::Orbits => orbits,
                            Counting::Surfaces => surfaces,
                        }
                    }))
                })
                .collect::<Result<_>>()?;
            let sum = |k: usize| per_sphere.iter().map(|c| c[k]).sum();
            Ok(TableRow {
                faces: 4 + 2 * i,
                spheres: level.len(),
                projective: sum(0),
                torus: sum(1),
                klein: sum(2),
            })
        })
        .collect()
}

/// Tab-separated table with header `n S P T K`.
pub fn write_tsv(rows: &[TableRow]) -> String {
    let mut out = String::from("n\tS\tP\tT\tK\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            r.faces, r.spheres, r.projective, r.torus, r.klein
        );
    }
    out
}
