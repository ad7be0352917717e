//! Canonical labelling of small vertex-coloured graphs.
//!
//! Equitable colour refinement followed by an individualise-refine search
//! tree. Every leaf of the tree is a discrete ordered partition, i.e. a
//! labelling of the nodes; the canonical labelling is the leaf whose
//! certificate (colours and arc list under the labelling) is
//! lexicographically least. Since the tree is explored completely, the leaves
//! that reach the least certificate are in bijection with the automorphisms,
//! so the full automorphism group falls out of the same traversal.
//!
//! The search is exhaustive and meant for the desk-scale graphs of this crate
//! (up to a few hundred nodes with moderate symmetry).

use std::cmp::Ordering;

/// An undirected graph on nodes `0..n` with one colour per node.
#[derive(Debug, Clone)]
pub struct ColoredGraph {
    adj: Vec<Vec<usize>>,
    colors: Vec<u32>,
}

impl ColoredGraph {
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            colors: vec![0; n],
        }
    }

    pub fn with_colors(colors: Vec<u32>) -> Self {
        Self {
            adj: vec![Vec::new(); colors.len()],
            colors,
        }
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        self.adj[u].push(v);
        self.adj[v].push(u);
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }
}

/// Result of canonising a [`ColoredGraph`].
#[derive(Debug, Clone)]
pub struct Canonical {
    /// `labeling[v]` is the canonical position of node `v`.
    pub labeling: Vec<usize>,
    /// Isomorphism-invariant encoding; equal iff the graphs are isomorphic.
    pub certificate: Vec<u32>,
    /// All automorphisms, as node permutations `v -> perm[v]`. The identity is first.
    pub automorphisms: Vec<Vec<usize>>,
}

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a ColoredGraph,
    best: Option<(Vec<u32>, Vec<usize>)>,
    // labellings of leaves whose certificate equals `best`
    equal: Vec<Vec<usize>>,
}

pub fn canonize(g: &ColoredGraph) -> Canonical {
    let n = g.len();
    let mut nodes: Vec<usize> = (0..n).collect();
    nodes.sort_by_key(|&v| (g.colors[v], v));
    let mut cells: Cells = Vec::new();
    for v in nodes {
        match cells.last_mut() {
            Some(cell) if g.colors[cell[0]] == g.colors[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }

    let mut search = Search {
        g,
        best: None,
        equal: Vec::new(),
    };
    search.descend(cells);

    let (certificate, labeling) = search.best.expect("search tree has at least one leaf");
    // automorphism: v -> inverse(best)[leaf[v]]
    let mut inverse = vec![0; n];
    for (v, &p) in labeling.iter().enumerate() {
        inverse[p] = v;
    }
    let mut automorphisms: Vec<Vec<usize>> = search
        .equal
        .iter()
        .map(|leaf| leaf.iter().map(|&p| inverse[p]).collect())
        .collect();
    automorphisms.sort();
    automorphisms.dedup();
    let identity: Vec<usize> = (0..n).collect();
    if let Some(pos) = automorphisms.iter().position(|p| *p == identity) {
        automorphisms.swap(0, pos);
    }

    Canonical {
        labeling,
        certificate,
        automorphisms,
    }
}

impl Search<'_> {
    fn descend(&mut self, cells: Cells) {
        let cells = refine(&self.g.adj, cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(target) = target else {
            self.leaf(&cells);
            return;
        };
        for &v in &cells[target] {
            let mut next: Cells = Vec::with_capacity(cells.len() + 1);
            next.extend(cells[..target].iter().cloned());
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            next.extend(cells[target + 1..].iter().cloned());
            self.descend(next);
        }
    }

    fn leaf(&mut self, cells: &Cells) {
        let n = self.g.len();
        let mut labeling = vec![0; n];
        for (pos, cell) in cells.iter().enumerate() {
            labeling[cell[0]] = pos;
        }
        let cert = certificate(self.g, &labeling);
        let ord = match &self.best {
            None => Ordering::Less,
            Some((best, _)) => cert.cmp(best),
        };
        match ord {
            Ordering::Less => {
                self.equal.clear();
                self.equal.push(labeling.clone());
                self.best = Some((cert, labeling));
            }
            Ordering::Equal => self.equal.push(labeling),
            Ordering::Greater => {}
        }
    }
}

fn certificate(g: &ColoredGraph, labeling: &[usize]) -> Vec<u32> {
    let n = g.len();
    let mut colors = vec![0u32; n];
    for v in 0..n {
        colors[labeling[v]] = g.colors[v];
    }
    let mut arcs: Vec<(u32, u32)> = Vec::new();
    for u in 0..n {
        for &v in &g.adj[u] {
            let (a, b) = (labeling[u] as u32, labeling[v] as u32);
            if a < b {
                arcs.push((a, b));
            }
        }
    }
    arcs.sort_unstable();
    let mut cert = Vec::with_capacity(2 + n + 2 * arcs.len());
    cert.push(n as u32);
    cert.extend(colors);
    cert.push(arcs.len() as u32);
    for (a, b) in arcs {
        cert.push(a);
        cert.push(b);
    }
    cert
}

/// Refines an ordered partition until it is equitable. Cells are split by
/// the multiset of neighbouring cell indices; split parts keep the order of
/// their signatures, so the result is isomorphism-invariant.
fn refine(adj: &[Vec<usize>], mut cells: Cells) -> Cells {
    let n = adj.len();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut changed = false;
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig: Vec<usize> = adj[v].iter().map(|&w| cell_of[w]).collect();
                    sig.sort_unstable();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    changed |= start > 0;
                    start = i;
                }
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}
