//! Simplicial embeddings of cubic graphs.
//!
//! An embedding is given combinatorially by an [`EmbeddingScheme`]: a
//! rotation system and a set of twisted arcs. Face tracing turns a scheme
//! into facial walks. A cubic graph is the face graph of a simplicial
//! surface exactly when it has a cycle double cover, and the cycles of the
//! cover become the umbrellas of the surface.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph};
use crate::surface::SimplicialSurface;

/// Default bound on the number of simple cycles [`enumerate_cdcs`] accepts.
pub const DEFAULT_MAX_CYCLES: usize = 50_000;

/// Cyclic order of the incident arcs at every node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rotations: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingScheme {
    pub rotation: RotationSystem,
    pub twisted: BTreeSet<usize>,
}

/// A closed walk given as `(node, arc)` steps: leave `node` along `arc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacialWalk {
    steps: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct TraceResult {
    pub walks: Vec<FacialWalk>,
    pub euler_characteristic: i64,
    pub orientable: bool,
}

/// A set of cycles covering every arc exactly twice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleDoubleCover {
    cycles: Vec<Cycle>,
}

impl RotationSystem {
    pub fn new(g: &Graph, rotations: Vec<Vec<usize>>) -> Result<Self> {
        if rotations.len() != g.num_nodes() {
            return Err(Error::Rotation(format!(
                "{} rotations for {} nodes",
                rotations.len(),
                g.num_nodes()
            )));
        }
        for (v, rot) in rotations.iter().enumerate() {
            let mut have: Vec<usize> = rot.clone();
            have.sort_unstable();
            let mut want: Vec<usize> = g.incident(v).iter().map(|&(_, a)| a).collect();
            want.sort_unstable();
            if have != want {
                return Err(Error::Rotation(format!(
                    "rotation at node {} does not list its incident arcs once each",
                    g.label(v)
                )));
            }
        }
        Ok(Self { rotations })
    }

    pub fn at(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn len(&self) -> usize {
        self.rotations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rotations.is_empty()
    }

    /// Every local rotation reversed.
    pub fn reversed(&self) -> Self {
        Self {
            rotations: self
                .rotations
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
        }
    }

    fn step(&self, v: usize, arc: usize, forward: bool) -> usize {
        let rot = &self.rotations[v];
        let d = rot.len();
        let pos = rot.iter().position(|&a| a == arc).expect("arc in rotation");
        if forward {
            rot[(pos + 1) % d]
        } else {
            rot[(pos + d - 1) % d]
        }
    }
}

impl EmbeddingScheme {
    pub fn new(rotation: RotationSystem, twisted: impl IntoIterator<Item = usize>) -> Self {
        Self {
            rotation,
            twisted: twisted.into_iter().collect(),
        }
    }
}

impl FacialWalk {
    pub fn steps(&self) -> &[(usize, usize)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn nodes(&self) -> Vec<usize> {
        self.steps.iter().map(|&(v, _)| v).collect()
    }

    pub fn arcs(&self) -> Vec<usize> {
        self.steps.iter().map(|&(_, a)| a).collect()
    }

    /// Distinct nodes and distinct arcs.
    pub fn is_cycle(&self) -> bool {
        let nodes: BTreeSet<usize> = self.steps.iter().map(|&(v, _)| v).collect();
        let arcs: BTreeSet<usize> = self.steps.iter().map(|&(_, a)| a).collect();
        nodes.len() == self.steps.len() && arcs.len() == self.steps.len()
    }
}

/// Signed face tracing.
///
/// The walk state is a directed arc together with a side flag. Leaving
/// `v` along arc `e` with flag `f`, the walk reaches the other end `w`; the
/// flag flips if `e` is twisted, and the walk continues along the successor
/// (`f = +1`) or predecessor (`f = -1`) of `e` in the rotation at `w`. Each
/// facial walk is recorded once; the states of its reverse traversal are
/// marked as used as well.
pub fn trace_facial_walks(g: &Graph, scheme: &EmbeddingScheme) -> Result<TraceResult> {
    if scheme.rotation.len() != g.num_nodes() {
        return Err(Error::Rotation("rotation does not match the graph".into()));
    }
    if let Some(&a) = scheme.twisted.iter().find(|&&a| a >= g.num_arcs()) {
        return Err(Error::Rotation(format!("twisted arc {a} is not an arc")));
    }
    let twisted: Vec<bool> = (0..g.num_arcs())
        .map(|a| scheme.twisted.contains(&a))
        .collect();
    let walks = trace(g, &scheme.rotation, &twisted);
    let chi = g.num_nodes() as i64 - g.num_arcs() as i64 + walks.len() as i64;
    Ok(TraceResult {
        walks,
        euler_characteristic: chi,
        orientable: twisted_set_orientable(g, &twisted),
    })
}

/// State index: arc, which endpoint the walk leaves from, and flag.
fn state(g: &Graph, v: usize, arc: usize, forward: bool) -> usize {
    let side = usize::from(g.arc(arc)[0] != v);
    arc * 4 + side * 2 + usize::from(!forward)
}

pub(crate) fn trace(g: &Graph, rotation: &RotationSystem, twisted: &[bool]) -> Vec<FacialWalk> {
    let mut used = vec![false; g.num_arcs() * 4];
    let mut walks = Vec::new();
    for v0 in 0..g.num_nodes() {
        for &a0 in rotation.at(v0) {
            for f0 in [true, false] {
                if used[state(g, v0, a0, f0)] {
                    continue;
                }
                let mut steps = Vec::new();
                let (mut v, mut a, mut f) = (v0, a0, f0);
                loop {
                    used[state(g, v, a, f)] = true;
                    steps.push((v, a));
                    let w = g.other_end(a, v);
                    let f_after = f != twisted[a];
                    // reverse traversal leaves w along a with the opposite flag
                    used[state(g, w, a, !f_after)] = true;
                    let next = rotation.step(w, a, f_after);
                    (v, a, f) = (w, next, f_after);
                    if (v, a, f) == (v0, a0, f0) {
                        break;
                    }
                }
                walks.push(FacialWalk { steps });
            }
        }
    }
    walks
}

/// Orientable iff the twisted set is switching-equivalent to the empty set:
/// 2-colour the nodes along a spanning forest and check every arc.
fn twisted_set_orientable(g: &Graph, twisted: &[bool]) -> bool {
    let n = g.num_nodes();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            for &(w, a) in g.incident(v) {
                let want = cv != twisted[a];
                match color[w] {
                    None => {
                        color[w] = Some(want);
                        queue.push_back(w);
                    }
                    Some(cw) if cw != want => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Every facial walk is a cycle.
pub fn is_strong(walks: &[FacialWalk]) -> bool {
    walks.iter().all(FacialWalk::is_cycle)
}

impl CycleDoubleCover {
    /// Validates that `cycles` are distinct and cover each arc of `g` twice.
    pub fn new(g: &Graph, mut cycles: Vec<Cycle>) -> Result<Self> {
        cycles.sort();
        if cycles.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Graph("cycle double cover repeats a cycle".into()));
        }
        let mut cover = vec![0usize; g.num_arcs()];
        for c in &cycles {
            for a in c.arcs(g) {
                cover[a] += 1;
            }
        }
        if let Some(a) = cover.iter().position(|&c| c != 2) {
            let (x, y) = g.arc_labels(a);
            return Err(Error::Graph(format!(
                "arc {{{x}, {y}}} is covered {} times",
                cover[a]
            )));
        }
        Ok(Self { cycles })
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// At every node of a cubic graph the three cycles through it use the
    /// three distinct pairs of incident arcs.
    pub fn has_forced_transitions(&self, g: &Graph) -> bool {
        let mut pairs: Vec<BTreeSet<(usize, usize)>> = vec![BTreeSet::new(); g.num_nodes()];
        let mut passes = vec![0usize; g.num_nodes()];
        for c in &self.cycles {
            let nodes = c.nodes();
            let arcs = c.arcs(g);
            let k = nodes.len();
            for i in 0..k {
                let (a, b) = (arcs[(i + k - 1) % k], arcs[i]);
                pairs[nodes[i]].insert((a.min(b), a.max(b)));
                passes[nodes[i]] += 1;
            }
        }
        (0..g.num_nodes()).all(|v| pairs[v].len() == 3 && passes[v] == 3)
    }
}

/// All cycle double covers of a connected bridgeless cubic graph.
///
/// Simple cycles are enumerated first (at most `max_cycles` of them), then
/// an exact-cover search assigns every arc two cycles, always branching on
/// the arc with the fewest remaining candidates.
pub fn enumerate_cdcs(g: &Graph, max_cycles: usize) -> Result<Vec<CycleDoubleCover>> {
    check_cubic(g)?;
    if let Some(&a) = g.bridges().first() {
        let (x, y) = g.arc_labels(a);
        return Err(Error::Bridge(x, y));
    }
    let cycles = g.simple_cycles(max_cycles)?;
    let arc_sets: Vec<Vec<usize>> = cycles.iter().map(|c| c.arcs(g)).collect();
    let solutions = double_cover_search(g.num_arcs(), &arc_sets, None);
    let mut out = Vec::with_capacity(solutions.len());
    for sol in solutions {
        let cdc = CycleDoubleCover::new(g, sol.iter().map(|&i| cycles[i].clone()).collect())?;
        if !cdc.has_forced_transitions(g) {
            return Err(Error::Internal(
                "cycle double cover without forced transitions".into(),
            ));
        }
        out.push(cdc);
    }
    out.sort();
    Ok(out)
}

fn check_cubic(g: &Graph) -> Result<()> {
    if !g.is_cubic() {
        return Err(Error::Graph("graph is not cubic".into()));
    }
    if !g.is_connected() {
        return Err(Error::Graph("graph is not connected".into()));
    }
    Ok(())
}

/// Exact cover of every arc by two of the given arc sets. `conflicts`, when
/// given, forbids choosing two sets marked as conflicting.
fn double_cover_search(
    num_arcs: usize,
    sets: &[Vec<usize>],
    conflicts: Option<&[Vec<bool>]>,
) -> Vec<Vec<usize>> {
    let mut sets_of_arc: Vec<Vec<usize>> = vec![Vec::new(); num_arcs];
    for (i, s) in sets.iter().enumerate() {
        for &a in s {
            sets_of_arc[a].push(i);
        }
    }
    let mut search = CoverSearch {
        sets,
        sets_of_arc,
        conflicts,
        need: vec![2; num_arcs],
        chosen: Vec::new(),
        is_chosen: vec![false; sets.len()],
        solutions: Vec::new(),
    };
    search.run();
    search.solutions
}

struct CoverSearch<'a> {
    sets: &'a [Vec<usize>],
    sets_of_arc: Vec<Vec<usize>>,
    conflicts: Option<&'a [Vec<bool>]>,
    need: Vec<u8>,
    chosen: Vec<usize>,
    is_chosen: Vec<bool>,
    solutions: Vec<Vec<usize>>,
}

impl CoverSearch<'_> {
    fn usable(&self, i: usize) -> bool {
        !self.is_chosen[i]
            && self.sets[i].iter().all(|&a| self.need[a] > 0)
            && self
                .conflicts
                .is_none_or(|c| self.chosen.iter().all(|&j| !c[i][j]))
    }

    fn run(&mut self) {
        let mut best: Option<(usize, Vec<usize>)> = None;
        for a in 0..self.need.len() {
            if self.need[a] == 0 {
                continue;
            }
            let cands: Vec<usize> = self.sets_of_arc[a]
                .iter()
                .copied()
                .filter(|&i| self.usable(i))
                .collect();
            if cands.len() < self.need[a] as usize {
                return;
            }
            if best.as_ref().is_none_or(|(_, b)| cands.len() < b.len()) {
                best = Some((a, cands));
            }
        }
        let Some((arc, cands)) = best else {
            let mut sol = self.chosen.clone();
            sol.sort_unstable();
            self.solutions.push(sol);
            return;
        };
        if self.need[arc] == 1 {
            for &i in &cands {
                self.choose(i);
                self.run();
                self.unchoose(i);
            }
        } else {
            for (x, &i) in cands.iter().enumerate() {
                self.choose(i);
                for &j in &cands[x + 1..] {
                    if self.usable(j) {
                        self.choose(j);
                        self.run();
                        self.unchoose(j);
                    }
                }
                self.unchoose(i);
            }
        }
    }

    fn choose(&mut self, i: usize) {
        self.is_chosen[i] = true;
        self.chosen.push(i);
        for &a in &self.sets[i] {
            self.need[a] -= 1;
        }
    }

    fn unchoose(&mut self, i: usize) {
        self.is_chosen[i] = false;
        self.chosen.pop();
        for &a in &self.sets[i] {
            self.need[a] += 1;
        }
    }
}

/// The surface whose umbrellas are the cycles of `cdc`: vertices are the
/// cycles, edges the arcs and faces the nodes of `g`.
///
/// Vertex labels are the 1-based positions of the cycles in the cover, edge
/// labels are arc index + 1 and face labels are the node labels.
pub fn surface_from_cycles(g: &Graph, cdc: &CycleDoubleCover) -> Result<SimplicialSurface> {
    check_cubic(g)?;
    let mut owners: Vec<Vec<usize>> = vec![Vec::new(); g.num_arcs()];
    for (i, c) in cdc.cycles().iter().enumerate() {
        if c.len() < 3 {
            return Err(Error::Graph("cycle shorter than three".into()));
        }
        for a in c.arcs(g) {
            owners[a].push(i);
        }
    }
    let mut edge_vertices = Vec::with_capacity(g.num_arcs());
    for (a, o) in owners.iter().enumerate() {
        if o.len() != 2 {
            let (x, y) = g.arc_labels(a);
            return Err(Error::Graph(format!(
                "arc {{{x}, {y}}} is covered {} times",
                o.len()
            )));
        }
        edge_vertices.push([o[0], o[1]]);
    }
    let face_edges: Vec<[usize; 3]> = (0..g.num_nodes())
        .map(|v| {
            let inc = g.incident(v);
            [inc[0].1, inc[1].1, inc[2].1]
        })
        .collect();
    SimplicialSurface::from_incidence(
        (1..=cdc.len() as u32).collect(),
        (1..=g.num_arcs() as u32).collect(),
        g.labels().to_vec(),
        edge_vertices,
        face_edges,
    )
    .map_err(|e| Error::Internal(format!("cycle double cover gave an invalid surface: {e}")))
}

/// Cycle double cover formed by the facial walks of a strong embedding.
pub fn cover_from_walks(g: &Graph, walks: &[FacialWalk]) -> Result<CycleDoubleCover> {
    if !is_strong(walks) {
        return Err(Error::Graph("embedding is not strong".into()));
    }
    let cycles = walks
        .iter()
        .map(|w| Cycle::new(g, &w.nodes()))
        .collect::<Result<Vec<_>>>()?;
    CycleDoubleCover::new(g, cycles)
}

/// Vertex-faithful surfaces with face graph `g`, up to isomorphism.
///
/// Only peripheral cycles can be umbrellas of a vertex-faithful surface, and
/// two of its umbrella cycles share at most one arc; the exact-cover search
/// runs over peripheral cycles with that pairwise restriction, and the
/// resulting surfaces are checked for vertex-faithfulness.
pub fn enumerate_vertex_faithful_surfaces(g: &Graph) -> Result<Vec<SimplicialSurface>> {
    check_cubic(g)?;
    let cycles = g.peripheral_cycles();
    let arc_sets: Vec<Vec<usize>> = cycles.iter().map(|c| c.arcs(g)).collect();
    let k = cycles.len();
    let mut conflicts = vec![vec![false; k]; k];
    for i in 0..k {
        let si: BTreeSet<usize> = arc_sets[i].iter().copied().collect();
        for j in i + 1..k {
            let shared = arc_sets[j].iter().filter(|a| si.contains(a)).count();
            if shared > 1 {
                conflicts[i][j] = true;
                conflicts[j][i] = true;
            }
        }
    }
    let solutions = double_cover_search(g.num_arcs(), &arc_sets, Some(&conflicts));
    let surfaces: Vec<SimplicialSurface> = solutions
        .par_iter()
        .map(|sol| {
            let cdc = CycleDoubleCover::new(g, sol.iter().map(|&i| cycles[i].clone()).collect())?;
            surface_from_cycles(g, &cdc)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(dedup_surfaces(
        surfaces
            .into_iter()
            .filter(|s| s.is_vertex_faithful())
            .collect(),
    ))
}

/// Keeps one surface per isomorphism class, sorted by canonical form.
pub fn dedup_surfaces(surfaces: Vec<SimplicialSurface>) -> Vec<SimplicialSurface> {
    let keyed: Vec<(Vec<u8>, SimplicialSurface)> = surfaces
        .into_par_iter()
        .map(|s| (s.canonical_form(), s))
        .collect();
    let mut by_form: BTreeMap<Vec<u8>, SimplicialSurface> = BTreeMap::new();
    for (k, s) in keyed {
        by_form.entry(k).or_insert(s);
    }
    by_form.into_values().collect()
}
