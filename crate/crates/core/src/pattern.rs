//! Pattern subgraphs of edge graphs.
//!
//! A match is a subgraph (not necessarily induced) of the host isomorphic to
//! the pattern's template, subject to the pattern's non-adjacency
//! constraints in the host. Matches are identified by their arc sets.

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternGraph {
    /// Complete graph on four nodes.
    K4,
    /// Complete tripartite graph with three parts of size two.
    K222,
    /// Complete bipartite graph with parts of size 2 and `m`.
    K2m(usize),
    /// Two disjoint copies of K4.
    A3,
    /// Two copies of K4 minus an arc, glued along the two nodes of the
    /// missing arc.
    A5,
    /// Two copies of K4 sharing one node.
    A6,
}

/// One occurrence of a pattern in a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternMatch {
    pub pattern: PatternGraph,
    /// Host nodes, ascending.
    pub nodes: Vec<usize>,
    /// Host arcs, ascending.
    pub arcs: Vec<usize>,
}

impl fmt::Display for PatternGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternGraph::K4 => f.write_str("K4"),
            PatternGraph::K222 => f.write_str("K2,2,2"),
            PatternGraph::K2m(m) => write!(f, "K2,{m}"),
            PatternGraph::A3 => f.write_str("A3"),
            PatternGraph::A5 => f.write_str("A5"),
            PatternGraph::A6 => f.write_str("A6"),
        }
    }
}

const A3_DATA: &str = include_str!("../patterns/a3.txt");
const A5_DATA: &str = include_str!("../patterns/a5.txt");
const A6_DATA: &str = include_str!("../patterns/a6.txt");

/// Reads a template stored as `u v` lines with node ids starting at 1.
fn data_template(text: &str) -> (usize, Vec<[usize; 2]>) {
    let arcs: Vec<[usize; 2]> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut it = l
                .split_whitespace()
                .map(|t| t.parse::<usize>().expect("pattern template node id") - 1);
            [it.next().expect("arc start"), it.next().expect("arc end")]
        })
        .collect();
    let n = arcs.iter().flatten().max().map_or(0, |&m| m + 1);
    (n, arcs)
}

impl PatternGraph {
    /// Node count and arcs of the template.
    pub fn template(&self) -> (usize, Vec<[usize; 2]>) {
        let k4 = |o: usize| -> Vec<[usize; 2]> {
            vec![
                [o, o + 1],
                [o, o + 2],
                [o, o + 3],
                [o + 1, o + 2],
                [o + 1, o + 3],
                [o + 2, o + 3],
            ]
        };
        match *self {
            PatternGraph::K4 => (4, k4(0)),
            PatternGraph::K222 => {
                let part = |v: usize| v / 2;
                let arcs = (0..6)
                    .flat_map(|u| (u + 1..6).map(move |v| [u, v]))
                    .filter(|&[u, v]| part(u) != part(v))
                    .collect();
                (6, arcs)
            }
            PatternGraph::K2m(m) => {
                let arcs = (2..m + 2).flat_map(|v| [[0, v], [1, v]]).collect();
                (m + 2, arcs)
            }
            PatternGraph::A3 => data_template(A3_DATA),
            PatternGraph::A5 => data_template(A5_DATA),
            PatternGraph::A6 => data_template(A6_DATA),
        }
    }

    /// Template node pairs that must not be adjacent in the host.
    pub fn non_adjacent(&self) -> Vec<[usize; 2]> {
        match *self {
            PatternGraph::K2m(1) => vec![[0, 1]],
            PatternGraph::K2m(2) => vec![[0, 1], [2, 3]],
            PatternGraph::K2m(_) => vec![[0, 1]],
            _ => Vec::new(),
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.template().0
    }
}

/// All occurrences of `p` in `g`, sorted and deduplicated by arc set.
pub fn find_pattern_subgraphs(g: &Graph, p: PatternGraph) -> Vec<PatternMatch> {
    let found = match p {
        PatternGraph::K2m(m) => complete_bipartite_matches(g, m, &p.non_adjacent()),
        _ => {
            let (n, arcs) = p.template();
            backtrack_matches(g, n, &arcs, &p.non_adjacent())
        }
    };
    let unique: BTreeSet<(Vec<usize>, Vec<usize>)> = found
        .into_iter()
        .map(|(mut nodes, mut arcs)| {
            nodes.sort_unstable();
            arcs.sort_unstable();
            (arcs, nodes)
        })
        .collect();
    let mut out: Vec<PatternMatch> = unique
        .into_iter()
        .map(|(arcs, nodes)| PatternMatch {
            pattern: p,
            nodes,
            arcs,
        })
        .collect();
    out.sort();
    out
}

/// `K_{2,m}`: a pair of nodes plus `m` of their common neighbours.
fn complete_bipartite_matches(
    g: &Graph,
    m: usize,
    non_adjacent: &[[usize; 2]],
) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    let n = g.num_nodes();
    for p in 0..n {
        for q in p + 1..n {
            let common: Vec<usize> = g.neighbors(p).filter(|&x| g.is_adjacent(q, x)).collect();
            if common.len() < m {
                continue;
            }
            for pick in crate::graph::index_combinations(common.len(), m) {
                let mut nodes = vec![p, q];
                nodes.extend(pick.iter().map(|&i| common[i]));
                if violates(g, &nodes, non_adjacent) {
                    continue;
                }
                let arcs = nodes[2..]
                    .iter()
                    .flat_map(|&x| [g.arc_between(p, x), g.arc_between(q, x)])
                    .map(|a| a.expect("common neighbour"))
                    .collect();
                out.push((nodes, arcs));
            }
        }
    }
    out
}

fn violates(g: &Graph, image: &[usize], non_adjacent: &[[usize; 2]]) -> bool {
    non_adjacent
        .iter()
        .any(|&[a, b]| g.is_adjacent(image[a], image[b]))
}

/// Injective maps of the template into `g` preserving template arcs.
fn backtrack_matches(
    g: &Graph,
    n: usize,
    arcs: &[[usize; 2]],
    non_adjacent: &[[usize; 2]],
) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut tadj = vec![Vec::new(); n];
    for &[a, b] in arcs {
        tadj[a].push(b);
        tadj[b].push(a);
    }
    // place template nodes so that each one after the first of its
    // component has an already placed neighbour where possible
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (tadj[v].len(), std::cmp::Reverse(v)))
            .expect("unplaced node");
        placed[start] = true;
        order.push(start);
        let mut i = order.len() - 1;
        while i < order.len() {
            let v = order[i];
            let mut next: Vec<usize> = tadj[v].iter().copied().filter(|&w| !placed[w]).collect();
            next.sort_by_key(|&w| std::cmp::Reverse(tadj[w].len()));
            for w in next {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; g.num_nodes()];
    let mut out = Vec::new();
    extend_match(g, &tadj, &order, 0, &mut image, &mut used, &mut |image| {
        if violates(g, image, non_adjacent) {
            return;
        }
        let host_arcs = arcs
            .iter()
            .map(|&[a, b]| g.arc_between(image[a], image[b]).expect("mapped arc"))
            .collect();
        out.push((image.to_vec(), host_arcs));
    });
    out
}

fn extend_match(
    g: &Graph,
    tadj: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
    emit: &mut dyn FnMut(&[usize]),
) {
    if depth == order.len() {
        emit(image);
        return;
    }
    let t = order[depth];
    let anchor = tadj[t].iter().copied().find(|&u| image[u] != usize::MAX);
    let candidates: Vec<usize> = match anchor {
        Some(u) => g.neighbors(image[u]).collect(),
        None => (0..g.num_nodes()).collect(),
    };
    for h in candidates {
        if used[h] || g.degree(h) < tadj[t].len() {
            continue;
        }
        let fits = tadj[t]
            .iter()
            .all(|&u| image[u] == usize::MAX || g.is_adjacent(image[u], h));
        if !fits {
            continue;
        }
        image[t] = h;
        used[h] = true;
        extend_match(g, tadj, order, depth + 1, image, used, emit);
        used[h] = false;
        image[t] = usize::MAX;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::complete;

    fn k5_minus_15() -> Graph {
        let arcs: Vec<(u32, u32)> = (1..=5)
            .flat_map(|a| (a + 1..=5).map(move |b| (a, b)))
            .filter(|&p| p != (1, 5))
            .collect();
        Graph::from_labeled_arcs(&arcs).unwrap()
    }

    fn labels(g: &Graph, m: &PatternMatch) -> Vec<u32> {
        m.nodes.iter().map(|&v| g.label(v)).collect()
    }

    #[test]
    fn k4_in_k5_minus_arc() {
        let g = k5_minus_15();
        let found = find_pattern_subgraphs(&g, PatternGraph::K4);
        let sets: Vec<Vec<u32>> = found.iter().map(|m| labels(&g, m)).collect();
        assert_eq!(sets, vec![vec![1, 2, 3, 4], vec![2, 3, 4, 5]]);
    }

    #[test]
    fn k23_in_k5_minus_arc() {
        let g = k5_minus_15();
        let found = find_pattern_subgraphs(&g, PatternGraph::K2m(3));
        assert_eq!(found.len(), 1);
        assert_eq!(labels(&g, &found[0]), vec![1, 2, 3, 4, 5]);
        assert_eq!(found[0].arcs.len(), 6);
    }

    #[test]
    fn k222_needs_six_nodes() {
        assert!(find_pattern_subgraphs(&complete(4), PatternGraph::K222).is_empty());
        assert_eq!(
            find_pattern_subgraphs(&complete(6), PatternGraph::K222).len(),
            15
        );
    }

    #[test]
    fn k4_count_in_complete_graphs() {
        assert_eq!(
            find_pattern_subgraphs(&complete(6), PatternGraph::K4).len(),
            15
        );
        assert_eq!(
            find_pattern_subgraphs(&complete(8), PatternGraph::A3).len(),
            35
        );
    }

    #[test]
    fn templates_have_expected_sizes() {
        for (p, n, m) in [
            (PatternGraph::K4, 4, 6),
            (PatternGraph::K222, 6, 12),
            (PatternGraph::K2m(4), 6, 8),
            (PatternGraph::A3, 8, 12),
            (PatternGraph::A5, 6, 10),
            (PatternGraph::A6, 7, 12),
        ] {
            let (nodes, arcs) = p.template();
            assert_eq!((nodes, arcs.len()), (n, m), "{p}");
        }
    }

    #[test]
    fn four_cycles_need_both_diagonals_missing() {
        // a 4-cycle with one chord has no admissible K2,2
        let g = Graph::from_labeled_arcs(&[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]).unwrap();
        assert!(find_pattern_subgraphs(&g, PatternGraph::K2m(2)).is_empty());
        let c4 = Graph::from_labeled_arcs(&[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert_eq!(find_pattern_subgraphs(&c4, PatternGraph::K2m(2)).len(), 1);
    }
}
