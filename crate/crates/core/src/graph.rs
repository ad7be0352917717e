//! Finite simple undirected graphs.
//!
//! Nodes carry positive integer labels and are addressed internally by dense
//! indices; arcs are indexed in construction order so that face and edge
//! graphs can share the edge numbering of their surface.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use subsets::combinations;

use crate::canon::{self, ColoredGraph};
use crate::error::{Error, Result};
use crate::surface::{normalize_cycle, UnionFind};

#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<u32>,
    arcs: Vec<[usize; 2]>,
    /// `(neighbour, arc)` pairs, sorted by neighbour.
    adj: Vec<Vec<(usize, usize)>>,
    index: HashMap<u32, usize>,
}

/// A simple cycle, stored as its node sequence normalised under rotation
/// and reflection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    nodes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CyclicConnectivity {
    Connected,
    /// A minimum-size cyclic arc cut (arc indices, ascending).
    Cut(Vec<usize>),
}

/// The full automorphism group, held as an element list.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    elements: Vec<Vec<usize>>,
}

/// One orbit of node sets under the automorphism group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetOrbit {
    /// Lexicographically least set of the orbit (ascending node indices).
    pub representative: Vec<usize>,
    /// Number of distinct sets in the whole orbit.
    pub size: usize,
    /// Positions of the input sets that fall into this orbit.
    pub members: Vec<usize>,
}

impl Graph {
    /// Builds a graph from node labels and arcs between node indices.
    pub fn new(labels: Vec<u32>, arcs: Vec<[usize; 2]>) -> Result<Self> {
        let n = labels.len();
        let index: HashMap<u32, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        if index.len() != n {
            return Err(Error::Graph("repeated node label".into()));
        }
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for (a, &[u, v]) in arcs.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::Graph(format!("arc {a} has an unknown endpoint")));
            }
            if u == v {
                return Err(Error::Graph(format!("loop at node {}", labels[u])));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Graph(format!(
                    "repeated arc {{{}, {}}}",
                    labels[u], labels[v]
                )));
            }
            adj[u].push((v, a));
            adj[v].push((u, a));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self {
            labels,
            arcs,
            adj,
            index,
        })
    }

    /// Builds a graph from labelled arcs; nodes are the endpoints in
    /// ascending label order and arcs keep the given order.
    pub fn from_labeled_arcs(arcs: &[(u32, u32)]) -> Result<Self> {
        let labels: Vec<u32> = arcs
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: HashMap<u32, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let arcs = arcs.iter().map(|&(a, b)| [index[&a], index[&b]]).collect();
        Self::new(labels, arcs)
    }

    pub fn num_nodes(&self) -> usize {
        self.labels.len()
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn label(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn node_by_label(&self, label: u32) -> Option<usize> {
        self.index.get(&label).copied()
    }

    pub fn arc(&self, a: usize) -> [usize; 2] {
        self.arcs[a]
    }

    pub fn arcs(&self) -> &[[usize; 2]] {
        &self.arcs
    }

    /// Endpoint labels of arc `a`, smaller first.
    pub fn arc_labels(&self, a: usize) -> (u32, u32) {
        let [u, v] = self.arcs[a];
        let (x, y) = (self.labels[u], self.labels[v]);
        (x.min(y), x.max(y))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbour, arc)` pairs at `v`.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn arc_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.arc_between(u, v).is_some()
    }

    pub fn other_end(&self, a: usize, v: usize) -> usize {
        let [x, y] = self.arcs[a];
        if x == v {
            y
        } else {
            x
        }
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|l| l.len() == 3)
    }

    pub fn is_connected(&self) -> bool {
        self.components_without(&[], &[]).len() <= 1
    }

    /// Components (node lists) after deleting the given nodes and arcs.
    fn components_without(&self, nodes: &[usize], arcs: &[usize]) -> Vec<Vec<usize>> {
        let n = self.num_nodes();
        let mut removed = vec![false; n];
        for &v in nodes {
            removed[v] = true;
        }
        let mut uf = UnionFind::new(n);
        for (a, &[u, v]) in self.arcs.iter().enumerate() {
            if !removed[u] && !removed[v] && !arcs.contains(&a) {
                uf.union(u, v);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in (0..n).filter(|&v| !removed[v]) {
            groups.entry(uf.find(v)).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// k-node-connectivity for `k` in 1..=3, decided by deleting every node
    /// set of size below `k`.
    pub fn is_k_connected(&self, k: usize) -> Result<bool> {
        if !(1..=3).contains(&k) {
            return Err(Error::Invalid(format!("k must be 1, 2 or 3, got {k}")));
        }
        let n = self.num_nodes();
        if n <= k {
            return Ok(false);
        }
        for size in 0..k {
            for removed in combinations(n, size) {
                if self.components_without(&removed, &[]).len() != 1 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Arcs whose deletion disconnects the graph.
    pub fn bridges(&self) -> Vec<usize> {
        let base = self.components_without(&[], &[]).len();
        (0..self.num_arcs())
            .filter(|&a| self.components_without(&[], &[a]).len() > base)
            .collect()
    }

    /// Smallest cyclic arc cut of size below `k`, if any.
    ///
    /// Arc subsets are enumerated by increasing size, so the first cut found
    /// has minimum size.
    pub fn cyclic_connectivity(&self, k: usize) -> CyclicConnectivity {
        for size in 0..k {
            for cut in combinations(self.num_arcs(), size) {
                if self.cyclic_components(&cut) >= 2 {
                    return CyclicConnectivity::Cut(cut);
                }
            }
        }
        CyclicConnectivity::Connected
    }

    pub fn is_cyclically_k_arc_connected(&self, k: usize) -> bool {
        self.cyclic_connectivity(k) == CyclicConnectivity::Connected
    }

    /// Number of components containing a cycle after deleting `cut`.
    fn cyclic_components(&self, cut: &[usize]) -> usize {
        let comps = self.components_without(&[], cut);
        if comps.len() < 2 {
            return 0;
        }
        let mut comp_of = vec![0usize; self.num_nodes()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut arcs_in = vec![0usize; comps.len()];
        for (a, &[u, _]) in self.arcs.iter().enumerate() {
            if !cut.contains(&a) {
                arcs_in[comp_of[u]] += 1;
            }
        }
        comps
            .iter()
            .zip(&arcs_in)
            .filter(|(c, &m)| m >= c.len())
            .count()
    }

    /// All simple cycles, or an error once more than `limit` are found.
    pub fn simple_cycles(&self, limit: usize) -> Result<Vec<Cycle>> {
        let mut out = Vec::new();
        let n = self.num_nodes();
        let mut on_path = vec![false; n];
        for s in 0..n {
            let mut path = vec![s];
            on_path[s] = true;
            self.extend_simple(s, &mut path, &mut on_path, &mut out, limit)?;
            on_path[s] = false;
        }
        out.sort();
        Ok(out)
    }

    fn extend_simple(
        &self,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Cycle>,
        limit: usize,
    ) -> Result<()> {
        let last = *path.last().unwrap();
        for &(w, _) in &self.adj[last] {
            if w == start && path.len() >= 3 && path[1] < last {
                out.push(Cycle::from_normalized(path));
                if out.len() > limit {
                    return Err(Error::TooManyCycles {
                        found: out.len(),
                        limit,
                    });
                }
            }
            if w <= start || on_path[w] {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            self.extend_simple(start, path, on_path, out, limit)?;
            on_path[w] = false;
            path.pop();
        }
        Ok(())
    }

    /// All chordless cycles, sorted.
    pub fn chordless_cycles(&self) -> Vec<Cycle> {
        let mut out = Vec::new();
        for s in 0..self.num_nodes() {
            let mut path = vec![s];
            self.extend_chordless(s, &mut path, &mut out);
        }
        out.sort();
        out
    }

    fn extend_chordless(&self, start: usize, path: &mut Vec<usize>, out: &mut Vec<Cycle>) {
        let last = *path.last().unwrap();
        for &(w, _) in &self.adj[last] {
            if w <= start || path.contains(&w) {
                continue;
            }
            let inner = if path.len() >= 2 {
                &path[1..path.len() - 1]
            } else {
                &[][..]
            };
            if inner.iter().any(|&x| self.is_adjacent(x, w)) {
                continue;
            }
            if path.len() >= 2 && self.is_adjacent(w, start) {
                if path[1] < w {
                    path.push(w);
                    out.push(Cycle::from_normalized(path));
                    path.pop();
                }
                continue;
            }
            path.push(w);
            self.extend_chordless(start, path, out);
            path.pop();
        }
    }

    pub fn is_chordless(&self, c: &Cycle) -> bool {
        let k = c.nodes.len();
        for i in 0..k {
            for j in i + 2..k {
                if i == 0 && j == k - 1 {
                    continue;
                }
                if self.is_adjacent(c.nodes[i], c.nodes[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Chordless, and deleting its nodes leaves a connected (or empty) graph.
    pub fn is_peripheral(&self, c: &Cycle) -> bool {
        self.is_chordless(c) && self.components_without(&c.nodes, &[]).len() <= 1
    }

    pub fn peripheral_cycles(&self) -> Vec<Cycle> {
        self.chordless_cycles()
            .into_iter()
            .filter(|c| self.components_without(&c.nodes, &[]).len() <= 1)
            .collect()
    }

    pub fn automorphisms(&self) -> AutomorphismGroup {
        let mut g = ColoredGraph::new(self.num_nodes());
        for &[u, v] in &self.arcs {
            g.add_arc(u, v);
        }
        AutomorphismGroup {
            elements: canon::canonize(&g).automorphisms,
        }
    }

    /// Orbits of the given node sets under the automorphism group.
    pub fn node_set_orbits(&self, sets: &[Vec<usize>]) -> Vec<SetOrbit> {
        self.automorphisms().set_orbits(sets)
    }

    /// Arc list as sorted label pairs.
    pub fn labeled_arcs(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = (0..self.num_arcs()).map(|a| self.arc_labels(a)).collect();
        out.sort_unstable();
        out
    }

    /// Isomorphism-invariant encoding of the graph.
    pub fn canonical_form(&self) -> Vec<u32> {
        let mut g = ColoredGraph::new(self.num_nodes());
        for &[u, v] in &self.arcs {
            g.add_arc(u, v);
        }
        canon::canonize(&g).certificate
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.canonical_form() == other.canonical_form()
    }
}

impl Cycle {
    /// Checks that `nodes` form a simple cycle of `g` of length at least three.
    pub fn new(g: &Graph, nodes: &[usize]) -> Result<Self> {
        let k = nodes.len();
        if k < 3 {
            return Err(Error::Graph("cycle needs at least three nodes".into()));
        }
        let distinct: BTreeSet<usize> = nodes.iter().copied().collect();
        if distinct.len() != k {
            return Err(Error::Graph("cycle repeats a node".into()));
        }
        for i in 0..k {
            if !g.is_adjacent(nodes[i], nodes[(i + 1) % k]) {
                return Err(Error::Graph(format!(
                    "nodes {} and {} are not adjacent",
                    g.label(nodes[i]),
                    g.label(nodes[(i + 1) % k])
                )));
            }
        }
        Ok(Self::from_normalized(nodes))
    }

    pub(crate) fn from_normalized(nodes: &[usize]) -> Self {
        Self {
            nodes: normalize_cycle(nodes),
        }
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Arc indices along the cycle, in traversal order.
    pub fn arcs(&self, g: &Graph) -> Vec<usize> {
        let k = self.nodes.len();
        (0..k)
            .map(|i| {
                g.arc_between(self.nodes[i], self.nodes[(i + 1) % k])
                    .expect("cycle arcs exist")
            })
            .collect()
    }

    /// Node labels along the cycle.
    pub fn labels(&self, g: &Graph) -> Vec<u32> {
        self.nodes.iter().map(|&v| g.label(v)).collect()
    }
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// A generating set, chosen greedily from the element list.
    pub fn generators(&self) -> Vec<Vec<usize>> {
        let Some(identity) = self.elements.first() else {
            return Vec::new();
        };
        let mut gens: Vec<Vec<usize>> = Vec::new();
        let mut span: BTreeSet<Vec<usize>> = BTreeSet::from([identity.clone()]);
        for p in &self.elements {
            if span.contains(p) {
                continue;
            }
            gens.push(p.clone());
            // closure under right multiplication by the generators
            let mut frontier: Vec<Vec<usize>> = span.iter().cloned().collect();
            while let Some(q) = frontier.pop() {
                for gen in &gens {
                    let r: Vec<usize> = q.iter().map(|&x| gen[x]).collect();
                    if span.insert(r.clone()) {
                        frontier.push(r);
                    }
                }
            }
        }
        gens
    }

    pub fn set_orbits(&self, sets: &[Vec<usize>]) -> Vec<SetOrbit> {
        let mut by_rep: BTreeMap<Vec<usize>, SetOrbit> = BTreeMap::new();
        for (i, set) in sets.iter().enumerate() {
            let images: BTreeSet<Vec<usize>> = self
                .elements
                .iter()
                .map(|p| {
                    let mut img: Vec<usize> = set.iter().map(|&x| p[x]).collect();
                    img.sort_unstable();
                    img
                })
                .collect();
            let rep = images.iter().next().cloned().unwrap_or_default();
            by_rep
                .entry(rep.clone())
                .or_insert_with(|| SetOrbit {
                    representative: rep,
                    size: images.len(),
                    members: Vec::new(),
                })
                .members
                .push(i);
        }
        by_rep.into_values().collect()
    }
}

mod subsets {
    /// All `k`-subsets of `0..n` in lexicographic order.
    pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
        let mut current: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
        std::iter::from_fn(move || {
            let out = current.clone()?;
            let mut next = out.clone();
            let mut i = k;
            let mut advanced = false;
            while i > 0 {
                i -= 1;
                if next[i] < n - k + i {
                    next[i] += 1;
                    for j in i + 1..k {
                        next[j] = next[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            current = if advanced { Some(next) } else { None };
            Some(out)
        })
    }
}

pub(crate) use subsets::combinations as index_combinations;
