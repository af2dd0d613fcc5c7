//! Arc complexes and flip graphs.
//!
//! On the explicit models the arc complex is built twice: once by closing the
//! fan under flips, once by listing the maximal pairwise-compatible arc sets
//! directly. The two must agree. Flip graphs of arbitrary surfaces are
//! explored as finite balls around a glued triangulation.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::arcs::{Arc, ArcModel, ModelKind};
use crate::error::{Error, Result};
use crate::surface::CiliatedSurface;
use crate::triangulation::{ChainClasses, ExplicitTriangulation, GluedTriangulation};

/// Vertices beyond this do not fit the bitmask face enumeration.
pub const MAX_COMPLEX_VERTICES: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    surface: CiliatedSurface,
    vertices: Vec<Arc>,
    facets: Vec<Vec<usize>>,
    frontier: Vec<bool>,
}

impl SimplicialComplex {
    /// Complex with the given facets over `vertices`. Facets are sorted and
    /// put in canonical order.
    pub fn from_facets(surface: CiliatedSurface, vertices: Vec<Arc>, facets: Vec<Vec<usize>>) -> Result<Self> {
        if vertices.len() > MAX_COMPLEX_VERTICES {
            return Err(Error::TooLarge { size: vertices.len(), bound: MAX_COMPLEX_VERTICES });
        }
        let mut facets: Vec<Vec<usize>> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        facets.sort();
        facets.dedup();
        let frontier = vec![false; vertices.len()];
        Ok(SimplicialComplex { surface, vertices, facets, frontier })
    }

    pub fn surface(&self) -> &CiliatedSurface {
        &self.surface
    }

    pub fn vertices(&self) -> &[Arc] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Vertices on the artificial edge of a winding window.
    pub fn frontier(&self) -> &[bool] {
        &self.frontier
    }

    pub fn vertex_index(&self, arc: &Arc) -> Option<usize> {
        self.vertices.binary_search(arc).ok()
    }

    pub fn dimension(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64).max().unwrap_or(0) - 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    fn mask(face: &[usize]) -> u128 {
        face.iter().fold(0u128, |m, &v| m | (1u128 << v))
    }

    /// Number of faces of each dimension, `f[k]` = number of `k`-simplices.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut faces: HashSet<u128> = HashSet::new();
        for facet in &self.facets {
            let full = Self::mask(facet);
            // every nonempty submask of the facet
            let mut sub = full;
            while sub != 0 {
                faces.insert(sub);
                sub = (sub - 1) & full;
            }
        }
        let top = (self.dimension() + 1).max(0) as usize;
        let mut f = vec![0; top];
        for m in faces {
            f[m.count_ones() as usize - 1] += 1;
        }
        f
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Edges of the 1-skeleton as sorted index pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            for (i, &a) in f.iter().enumerate() {
                for &b in &f[i + 1..] {
                    out.insert((a, b));
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (a, b) in self.edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Number of facets containing each codimension-1 face.
    pub fn codim1_incidence(&self) -> BTreeMap<Vec<usize>, usize> {
        let mut out = BTreeMap::new();
        for f in &self.facets {
            for skip in 0..f.len() {
                let face: Vec<usize> = f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                *out.entry(face).or_insert(0) += 1;
            }
        }
        out
    }

    /// Pairs of facets sharing a codimension-1 face.
    pub fn dual_edges(&self) -> Vec<(usize, usize)> {
        let mut by_face: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (idx, f) in self.facets.iter().enumerate() {
            for skip in 0..f.len() {
                let face: Vec<usize> = f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                by_face.entry(face).or_default().push(idx);
            }
        }
        let mut out = BTreeSet::new();
        for owners in by_face.values() {
            for (i, &a) in owners.iter().enumerate() {
                for &b in &owners[i + 1..] {
                    out.insert((a.min(b), a.max(b)));
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn to_dot(&self) -> String {
        let edges = self.edges();
        let names: Vec<String> = self.vertices.iter().map(Arc::to_string).collect();
        dot_graph(&format!("arc_complex {}", self.surface), &names, &edges)
    }
}

/// One flip between two vertices of a [`FlipGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlipEdge {
    pub from: usize,
    pub to: usize,
    /// What was flipped, e.g. `C(0,2)->C(1,3)` or `side 7`.
    pub flip: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlipGraph {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<FlipEdge>,
    /// Vertices whose neighbourhood was cut off by a window or radius.
    pub frontier: Vec<bool>,
}

impl FlipGraph {
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.from.min(e.to), e.from.max(e.to))).collect()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (a, b) in self.edge_pairs() {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency().iter().map(Vec::len).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.vertices.is_empty() || bfs_distances(&self.adjacency(), 0).iter().all(Option::is_some)
    }

    pub fn diameter(&self) -> Option<usize> {
        diameter(&self.adjacency())
    }

    pub fn to_dot(&self) -> String {
        dot_graph(&self.name, &self.vertices, &self.edge_pairs())
    }
}

fn dot_graph(name: &str, nodes: &[String], edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{name}\" {{");
    for n in nodes {
        let _ = writeln!(out, "  \"{n}\";");
    }
    for &(a, b) in edges {
        let _ = writeln!(out, "  \"{}\" -- \"{}\";", nodes[a], nodes[b]);
    }
    out.push_str("}\n");
    out
}

fn bfs_distances(adj: &[Vec<usize>], start: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[start] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap_or(0);
        for &w in &adj[v] {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All-pairs BFS diameter; `None` for a disconnected or empty graph.
pub fn diameter(adj: &[Vec<usize>]) -> Option<usize> {
    if adj.is_empty() {
        return None;
    }
    let mut best = 0;
    for v in 0..adj.len() {
        for d in bfs_distances(adj, v) {
            best = best.max(d?);
        }
    }
    Some(best)
}

/// Result of closing the fan under flips.
#[derive(Debug, Clone)]
pub struct FlipClosure {
    pub triangulations: Vec<ExplicitTriangulation>,
    /// `(from, to, removed, added)` with `from < to`.
    pub flips: Vec<(usize, usize, Arc, Arc)>,
}

/// Every triangulation reachable from the fan, in canonical order, with the
/// flips between them.
pub fn flip_closure(model: &ArcModel) -> Result<FlipClosure> {
    let start = ExplicitTriangulation::fan(model.surface(), model.winding_bound())?;
    let mut seen: BTreeMap<Vec<Arc>, ExplicitTriangulation> = BTreeMap::new();
    let mut raw_flips = Vec::new();
    let mut queue = VecDeque::from([start.clone()]);
    seen.insert(start.arcs().to_vec(), start);
    while let Some(t) = queue.pop_front() {
        for a in t.arcs() {
            if !t.flippable(a)? {
                continue;
            }
            let (next, b) = t.flip_with_partner(a)?;
            raw_flips.push((t.arcs().to_vec(), next.arcs().to_vec(), *a, b));
            if !seen.contains_key(next.arcs()) {
                seen.insert(next.arcs().to_vec(), next.clone());
                queue.push_back(next);
            }
        }
    }
    let index: BTreeMap<Vec<Arc>, usize> = seen.keys().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    let mut flips = BTreeSet::new();
    for (from, to, a, b) in raw_flips {
        let (i, j) = (index[&from], index[&to]);
        if i < j {
            flips.insert((i, j, a, b));
        } else {
            flips.insert((j, i, b, a));
        }
    }
    Ok(FlipClosure { triangulations: seen.into_values().collect(), flips: flips.into_iter().collect() })
}

/// Maximal sets of pairwise compatible arcs, found by Bron–Kerbosch on the
/// compatibility graph. Independent of the flip machinery.
pub fn maximal_compatible_sets(model: &ArcModel) -> Result<Vec<Vec<Arc>>> {
    let arcs = model.arcs()?;
    if arcs.len() > MAX_COMPLEX_VERTICES {
        return Err(Error::TooLarge { size: arcs.len(), bound: MAX_COMPLEX_VERTICES });
    }
    let mut neighbours = vec![0u128; arcs.len()];
    for i in 0..arcs.len() {
        for j in i + 1..arcs.len() {
            if model.compatible(&arcs[i], &arcs[j])? {
                neighbours[i] |= 1 << j;
                neighbours[j] |= 1 << i;
            }
        }
    }
    let mut cliques = Vec::new();
    let all = if arcs.len() == 128 { u128::MAX } else { (1u128 << arcs.len()) - 1 };
    bron_kerbosch(&neighbours, 0, all, 0, &mut cliques);
    let mut out: Vec<Vec<Arc>> = cliques
        .into_iter()
        .map(|m| (0..arcs.len()).filter(|&i| m >> i & 1 == 1).map(|i| arcs[i]).collect())
        .collect();
    out.sort();
    Ok(out)
}

fn bron_kerbosch(nb: &[u128], r: u128, mut p: u128, mut x: u128, out: &mut Vec<u128>) {
    if p == 0 {
        if x == 0 && r != 0 {
            out.push(r);
        }
        return;
    }
    let pivot = (p | x).trailing_zeros() as usize;
    let mut candidates = p & !nb[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        bron_kerbosch(nb, r | 1 << v, p & nb[v], x & nb[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

fn frontier_arc(model: &ArcModel, arc: &Arc) -> bool {
    match (model.kind(), arc) {
        (ModelKind::Annulus { bound: Some(b) }, Arc::Winding(w)) => w.unsigned_abs() == b as u64,
        _ => false,
    }
}

/// Arc complex of a finite-type surface or of a winding window of the
/// annulus. Fails with `OracleMismatch` if the flip closure and the direct
/// clique enumeration disagree.
pub fn build_arc_complex(surface: &CiliatedSurface, winding_bound: Option<u32>) -> Result<SimplicialComplex> {
    let model = ArcModel::new(surface, winding_bound)?;
    surface.arc_count()?;
    let vertices = model.arcs()?;
    let closure = flip_closure(&model)?;
    let from_flips: Vec<Vec<Arc>> = closure.triangulations.iter().map(|t| t.arcs().to_vec()).collect();
    let direct = maximal_compatible_sets(&model)?;
    if from_flips != direct {
        let only_flips = from_flips.iter().filter(|f| !direct.contains(f)).count();
        let only_direct = direct.iter().filter(|f| !from_flips.contains(f)).count();
        return Err(Error::OracleMismatch(format!(
            "{surface}: {} facets by flips, {} by compatibility ({only_flips} and {only_direct} unmatched)",
            from_flips.len(),
            direct.len()
        )));
    }
    let facets = from_flips
        .iter()
        .map(|f| f.iter().map(|a| vertices.binary_search(a).expect("facet arcs are vertices")).collect())
        .collect();
    let mut complex = SimplicialComplex::from_facets(surface.clone(), vertices, facets)?;
    complex.frontier = complex.vertices.iter().map(|a| frontier_arc(&model, a)).collect();
    Ok(complex)
}

/// Flip graph of a finite-type surface (or annulus window). Vertices are the
/// triangulations in canonical order, keyed by their arc lists.
pub fn build_flip_graph(surface: &CiliatedSurface, winding_bound: Option<u32>) -> Result<FlipGraph> {
    let model = ArcModel::new(surface, winding_bound)?;
    let closure = flip_closure(&model)?;
    Ok(flip_graph_of(&model, &closure))
}

pub fn flip_graph_of(model: &ArcModel, closure: &FlipClosure) -> FlipGraph {
    FlipGraph {
        name: format!("flip_graph {}", model.surface()),
        vertices: closure.triangulations.iter().map(ExplicitTriangulation::key).collect(),
        edges: closure
            .flips
            .iter()
            .map(|&(from, to, a, b)| FlipEdge { from, to, flip: format!("{a}->{b}") })
            .collect(),
        frontier: closure
            .triangulations
            .iter()
            .map(|t| t.arcs().iter().any(|a| frontier_arc(model, a)))
            .collect(),
    }
}

/// A ball in the flip graph around a glued triangulation, with one concrete
/// representative per vertex.
#[derive(Debug, Clone)]
pub struct Ball {
    pub graph: FlipGraph,
    pub states: Vec<GluedTriangulation>,
    pub depth: Vec<usize>,
    /// `(from, to, side)`: flipping the arc of `side` in `states[from]` gives
    /// a triangulation equivalent to `states[to]`.
    pub flips: Vec<(usize, usize, u32)>,
}

/// Every triangulation within `radius` flips of `t0`. Vertices are keyed by
/// the boundary-anchored canonical form together with the relative homology
/// classes of the arcs, and ordered by distance, then key.
pub fn ball(t0: &GluedTriangulation, radius: usize) -> Result<Ball> {
    let report = t0.validate();
    if !report.ok {
        return Err(Error::InvalidTriangulation(serde_json::to_string(&report.violations).unwrap_or_default()));
    }
    let classes0 = ChainClasses::new(t0);
    let mut keys: BTreeMap<String, usize> = BTreeMap::new();
    let mut nodes: Vec<(GluedTriangulation, ChainClasses, usize, String)> = Vec::new();
    let key0 = t0.canonical_key(Some(&classes0));
    keys.insert(key0.clone(), 0);
    nodes.push((t0.clone(), classes0, 0, key0));
    let mut raw_flips = Vec::new();
    let mut i = 0;
    while i < nodes.len() {
        let (t, classes, depth) = (nodes[i].0.clone(), nodes[i].1.clone(), nodes[i].2);
        for side in t.flippable_sides() {
            let next = t.flip(side)?;
            let next_classes = classes.after_flip(&t, side)?;
            let key = next.canonical_key(Some(&next_classes));
            let j = match keys.get(&key) {
                Some(&j) => j,
                None if depth < radius => {
                    keys.insert(key.clone(), nodes.len());
                    nodes.push((next, next_classes, depth + 1, key));
                    nodes.len() - 1
                }
                None => continue,
            };
            if i != j {
                raw_flips.push((i, j, side));
            }
        }
        i += 1;
    }
    // reorder by (depth, key)
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by(|&a, &b| (nodes[a].2, &nodes[a].3).cmp(&(nodes[b].2, &nodes[b].3)));
    let mut rank = vec![0; nodes.len()];
    for (r, &old) in order.iter().enumerate() {
        rank[old] = r;
    }
    let mut seen_pairs = BTreeSet::new();
    let mut flips = Vec::new();
    let mut edges = Vec::new();
    let mut sorted_raw: Vec<(usize, usize, u32)> = raw_flips.iter().map(|&(a, b, s)| (rank[a], rank[b], s)).collect();
    sorted_raw.sort();
    for (a, b, side) in sorted_raw {
        flips.push((a, b, side));
        if seen_pairs.insert((a.min(b), a.max(b))) {
            edges.push(FlipEdge { from: a.min(b), to: a.max(b), flip: format!("side {side}") });
        }
    }
    edges.sort_by_key(|e| (e.from, e.to));
    let states: Vec<GluedTriangulation> = order.iter().map(|&o| nodes[o].0.clone()).collect();
    let depth: Vec<usize> = order.iter().map(|&o| nodes[o].2).collect();
    let graph = FlipGraph {
        name: format!("flip_ball {} r{radius}", t0.surface()),
        vertices: order.iter().map(|&o| nodes[o].3.clone()).collect(),
        edges,
        frontier: depth.iter().map(|&d| d == radius).collect(),
    };
    Ok(Ball { graph, states, depth, flips })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComplexStats {
    pub dim: i64,
    pub vertices: usize,
    pub edges: usize,
    pub facets: usize,
    pub f_vector: Vec<usize>,
    pub chi: i64,
    pub diameter: Option<usize>,
    pub degree_sequence: Vec<usize>,
    pub frontier: usize,
}

pub fn stats(c: &SimplicialComplex) -> Result<ComplexStats> {
    if c.vertices.is_empty() || c.facets.is_empty() {
        return Err(Error::EmptyComplex(c.surface.clone()));
    }
    let adj = c.adjacency();
    let mut degree_sequence: Vec<usize> = adj.iter().map(Vec::len).collect();
    degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
    Ok(ComplexStats {
        dim: c.dimension(),
        vertices: c.vertices.len(),
        edges: c.edges().len(),
        facets: c.facets.len(),
        f_vector: c.f_vector(),
        chi: c.euler_characteristic(),
        diameter: diameter(&adj),
        degree_sequence,
        frontier: c.frontier.iter().filter(|&&f| f).count(),
    })
}
