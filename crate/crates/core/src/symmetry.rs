//! Automorphism groups of arc complexes and flip graphs, the dihedral action
//! of the mapping class group on polygon arcs, and the desk-scale rigidity
//! and distinguishability checks built from them.
//!
//! Groups here are tiny, so they are stored as explicit sorted element lists
//! plus a generating set. Comparison between groups is by order and explicit
//! containment.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::arcs::Arc;
use crate::complexes::{build_arc_complex, build_flip_graph, FlipGraph, SimplicialComplex};
use crate::error::{Error, Result};
use crate::surface::CiliatedSurface;

pub const DEFAULT_VERTEX_BOUND: usize = 64;
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub vertex_bound: usize,
    pub node_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { vertex_bound: DEFAULT_VERTEX_BOUND, node_budget: DEFAULT_NODE_BUDGET }
    }
}

/// Vertex set with a family of facets. Adjacency means "share a facet".
#[derive(Debug, Clone)]
pub struct Incidence {
    n: usize,
    facets: Vec<Vec<usize>>,
    facet_set: HashSet<Vec<usize>>,
    adj: Vec<Vec<bool>>,
    invariant: Vec<(usize, usize, Vec<usize>)>,
}

impl Incidence {
    pub fn new(n: usize, facets: &[Vec<usize>]) -> Self {
        let facets: Vec<Vec<usize>> = facets
            .iter()
            .map(|f| {
                let mut f = f.clone();
                f.sort_unstable();
                f
            })
            .collect();
        let mut adj = vec![vec![false; n]; n];
        let mut facet_count = vec![0; n];
        for f in &facets {
            for (i, &a) in f.iter().enumerate() {
                facet_count[a] += 1;
                for &b in &f[i + 1..] {
                    adj[a][b] = true;
                    adj[b][a] = true;
                }
            }
        }
        let degree: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&x| x).count()).collect();
        let invariant = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&w| adj[v][w]).map(|w| degree[w]).collect();
                nb.sort_unstable();
                (degree[v], facet_count[v], nb)
            })
            .collect();
        let facet_set = facets.iter().cloned().collect();
        Incidence { n, facets, facet_set, adj, invariant }
    }

    pub fn of_complex(c: &SimplicialComplex) -> Self {
        Self::new(c.vertices().len(), c.facets())
    }

    pub fn of_graph(g: &FlipGraph) -> Self {
        let edges: Vec<Vec<usize>> = g.edge_pairs().into_iter().map(|(a, b)| vec![a, b]).collect();
        Self::new(g.vertices.len(), &edges)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Whether `perm` maps facets onto facets.
    pub fn preserves_facets(&self, perm: &[usize]) -> bool {
        self.facets.iter().all(|f| {
            let mut image: Vec<usize> = f.iter().map(|&v| perm[v]).collect();
            image.sort_unstable();
            self.facet_set.contains(&image)
        })
    }

    fn sorted_invariants(&self) -> Vec<&(usize, usize, Vec<usize>)> {
        let mut v: Vec<_> = self.invariant.iter().collect();
        v.sort();
        v
    }
}

/// Search order: rarest invariant first, then greedily the vertex with the
/// most already-placed neighbours. Ties go to the smaller index.
fn search_order(a: &Incidence, candidates: &[Vec<usize>]) -> Vec<usize> {
    let mut order = Vec::with_capacity(a.n);
    let mut placed = vec![false; a.n];
    let mut links = vec![0usize; a.n];
    for _ in 0..a.n {
        let next = (0..a.n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), candidates[v].len(), v))
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for (w, linked) in a.adj[next].iter().enumerate() {
            if *linked {
                links[w] += 1;
            }
        }
    }
    order
}

/// All facet-preserving bijections from `a` onto `b` (or the first one when
/// `first_only`), by backtracking with invariant and adjacency pruning.
pub fn isomorphisms(a: &Incidence, b: &Incidence, limits: SearchLimits, first_only: bool) -> Result<Vec<Vec<usize>>> {
    let size = a.n.max(b.n);
    if size > limits.vertex_bound {
        return Err(Error::TooLarge { size, bound: limits.vertex_bound });
    }
    if a.n != b.n || a.facets.len() != b.facets.len() || a.sorted_invariants() != b.sorted_invariants() {
        return Ok(Vec::new());
    }
    let candidates: Vec<Vec<usize>> =
        (0..a.n).map(|v| (0..b.n).filter(|&w| a.invariant[v] == b.invariant[w]).collect()).collect();
    let order = search_order(a, &candidates);
    let mut state = Search {
        a,
        b,
        order: &order,
        candidates: &candidates,
        map: vec![usize::MAX; a.n],
        used: vec![false; b.n],
        nodes: 0,
        budget: limits.node_budget,
        first_only,
        found: Vec::new(),
    };
    state.extend(0)?;
    let mut found = state.found;
    found.sort();
    Ok(found)
}

struct Search<'a> {
    a: &'a Incidence,
    b: &'a Incidence,
    order: &'a [usize],
    candidates: &'a [Vec<usize>],
    map: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
    first_only: bool,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> Result<()> {
        if depth == self.order.len() {
            if self.b.preserves_facets_from(self.a, &self.map) {
                self.found.push(self.map.clone());
            }
            return Ok(());
        }
        let v = self.order[depth];
        let candidates = self.candidates;
        for &w in &candidates[v] {
            if self.used[w] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| self.a.adj[u][v] == self.b.adj[self.map[u]][w]);
            if !consistent {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Inconclusive(self.nodes));
            }
            self.map[v] = w;
            self.used[w] = true;
            self.extend(depth + 1)?;
            self.used[w] = false;
            self.map[v] = usize::MAX;
            if self.first_only && !self.found.is_empty() {
                return Ok(());
            }
        }
        Ok(())
    }
}

impl Incidence {
    fn preserves_facets_from(&self, source: &Incidence, map: &[usize]) -> bool {
        source.facets.iter().all(|f| {
            let mut image: Vec<usize> = f.iter().map(|&v| map[v]).collect();
            image.sort_unstable();
            self.facet_set.contains(&image)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexPermutation {
    pub images: Vec<usize>,
    /// Checked against the facets, never assumed.
    pub simplicial: bool,
}

/// `(p ∘ q)(i) = p(q(i))`.
pub fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

pub fn invert(p: &[usize]) -> Vec<usize> {
    let mut out = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        out[v] = i;
    }
    out
}

/// Subgroup generated by `gens` on `degree` points, as a sorted list.
pub fn closure(degree: usize, gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let identity: Vec<usize> = (0..degree).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = compose(s, &g);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen.into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermutationGroup {
    pub degree: usize,
    pub generators: Vec<VertexPermutation>,
    pub elements: Vec<Vec<usize>>,
}

impl PermutationGroup {
    /// Group with the given (already closed) element set; generators are
    /// picked greedily in element order.
    pub fn from_elements(degree: usize, mut elements: Vec<Vec<usize>>, on: Option<&Incidence>) -> Self {
        elements.sort();
        elements.dedup();
        let mut gens: Vec<Vec<usize>> = Vec::new();
        let mut span: BTreeSet<Vec<usize>> = BTreeSet::from([(0..degree).collect()]);
        for e in &elements {
            if !span.contains(e) {
                gens.push(e.clone());
                span = closure(degree, &gens).into_iter().collect();
            }
        }
        let generators = gens
            .into_iter()
            .map(|images| {
                let simplicial = on.is_none_or(|inc| inc.preserves_facets(&images));
                VertexPermutation { images, simplicial }
            })
            .collect();
        PermutationGroup { degree, generators, elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &[usize]) -> bool {
        self.elements.binary_search_by(|e| e.as_slice().cmp(p)).is_ok()
    }

    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|p| {
            self.contains(&invert(p)) && self.elements.iter().all(|q| self.contains(&compose(p, q)))
        })
    }
}

/// Full automorphism group of a complex.
pub fn automorphisms(c: &SimplicialComplex, limits: SearchLimits) -> Result<PermutationGroup> {
    let inc = Incidence::of_complex(c);
    let elements = isomorphisms(&inc, &inc, limits, false)?;
    Ok(PermutationGroup::from_elements(inc.len(), elements, Some(&inc)))
}

/// Full automorphism group of a flip graph.
pub fn graph_automorphisms(g: &FlipGraph, limits: SearchLimits) -> Result<PermutationGroup> {
    let inc = Incidence::of_graph(g);
    let elements = isomorphisms(&inc, &inc, limits, false)?;
    Ok(PermutationGroup::from_elements(inc.len(), elements, Some(&inc)))
}

/// Dihedral symmetry of a polygon: `i -> i + shift`, preceded by `i -> -i`
/// when `reflect`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dihedral {
    pub n: u32,
    pub shift: u32,
    pub reflect: bool,
}

impl Dihedral {
    pub fn word(&self) -> String {
        match (self.shift, self.reflect) {
            (0, false) => "e".into(),
            (0, true) => "f".into(),
            (k, false) => format!("r^{k}"),
            (k, true) => format!("r^{k} f"),
        }
    }

    fn point(&self, i: u32) -> u32 {
        let base = if self.reflect { (self.n - i % self.n) % self.n } else { i };
        (base + self.shift) % self.n
    }

    /// Image of an arc. Reflections reverse orientation, so the puncture-free
    /// interval of a sided chord is read backwards after a reflection.
    pub fn apply(&self, arc: &Arc) -> Arc {
        match *arc {
            Arc::Chord(i, j) => {
                let (a, b) = (self.point(i), self.point(j));
                Arc::Chord(a.min(b), a.max(b))
            }
            Arc::Radius(i) => Arc::Radius(self.point(i)),
            Arc::Loop(i) => Arc::Loop(self.point(i)),
            Arc::SidedChord(i, j, side) => {
                // counterclockwise interval (p, q) free of the puncture
                let (p, q) = if side == 0 { (i, j) } else { (j, i) };
                let (p, q) = if self.reflect { (self.point(q), self.point(p)) } else { (self.point(p), self.point(q)) };
                if p < q {
                    Arc::SidedChord(p, q, 0)
                } else {
                    Arc::SidedChord(q, p, 1)
                }
            }
            Arc::Winding(w) => Arc::Winding(w),
        }
    }

    pub fn all(n: u32) -> Vec<Dihedral> {
        [false, true]
            .into_iter()
            .flat_map(|reflect| (0..n).map(move |shift| Dihedral { n, shift, reflect }))
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MappingClassElement {
    pub word: String,
    pub permutation: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct McgAction {
    pub surface: CiliatedSurface,
    /// Order of the dihedral mapping class group, `2n`.
    pub mod_order: usize,
    pub elements: Vec<MappingClassElement>,
    /// Image of the action, generated by the rotation and the reflection.
    pub group: PermutationGroup,
    /// Words acting trivially on every arc.
    pub kernel: Vec<String>,
}

fn polygon_size(surface: &CiliatedSurface) -> Result<u32> {
    if surface.is_polygon() || surface.is_punctured_polygon() {
        Ok(surface.marked_points()[0])
    } else {
        Err(Error::Unsupported(surface.clone()))
    }
}

/// Action of the mapping class group of a (punctured) polygon on its arc
/// complex, as vertex permutations.
pub fn mcg_action_on(c: &SimplicialComplex) -> Result<McgAction> {
    let n = polygon_size(c.surface())?;
    let inc = Incidence::of_complex(c);
    let permutation = |g: &Dihedral| -> Result<Vec<usize>> {
        c.vertices()
            .iter()
            .map(|a| {
                let image = g.apply(a);
                c.vertex_index(&image).ok_or_else(|| Error::OracleMismatch(format!("{} maps {a} to {image}", g.word())))
            })
            .collect()
    };
    let mut elements = Vec::new();
    for g in Dihedral::all(n) {
        elements.push(MappingClassElement { word: g.word(), permutation: permutation(&g)? });
    }
    let rotation = permutation(&Dihedral { n, shift: 1 % n, reflect: false })?;
    let reflection = permutation(&Dihedral { n, shift: 0, reflect: true })?;
    let span = closure(inc.len(), &[rotation.clone(), reflection.clone()]);
    let mut group = PermutationGroup::from_elements(inc.len(), span, Some(&inc));
    group.generators = [rotation, reflection]
        .into_iter()
        .map(|images| {
            let simplicial = inc.preserves_facets(&images);
            VertexPermutation { images, simplicial }
        })
        .collect();
    let identity: Vec<usize> = (0..inc.len()).collect();
    let kernel = elements.iter().filter(|e| e.permutation == identity).map(|e| e.word.clone()).collect();
    Ok(McgAction { surface: c.surface().clone(), mod_order: 2 * n as usize, elements, group, kernel })
}

pub fn mcg_action(surface: &CiliatedSurface) -> Result<McgAction> {
    polygon_size(surface)?;
    mcg_action_on(&build_arc_complex(surface, None)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RigidityReport {
    pub surface: CiliatedSurface,
    pub dim: i64,
    pub aut_a: usize,
    pub mod_order: usize,
    pub mod_image: usize,
    pub equal: bool,
    /// Every mapping class permutation is an automorphism.
    pub contained: bool,
    /// Every mapping class permutation maps facets to facets.
    pub simplicial: bool,
    pub kernel_size: usize,
    pub kernel_trivial: bool,
    /// Dimension at most one: equality is observed, not predicted.
    pub low_dimensional: bool,
}

pub fn rigidity_report(surface: &CiliatedSurface, limits: SearchLimits) -> Result<RigidityReport> {
    let complex = build_arc_complex(surface, None)?;
    let aut = automorphisms(&complex, limits)?;
    let action = mcg_action_on(&complex)?;
    let inc = Incidence::of_complex(&complex);
    let dim = complex.dimension();
    Ok(RigidityReport {
        surface: surface.clone(),
        dim,
        aut_a: aut.order(),
        mod_order: action.mod_order,
        mod_image: action.group.order(),
        equal: aut.order() == action.group.order(),
        contained: action.group.elements.iter().all(|p| aut.contains(p)),
        simplicial: action.elements.iter().all(|e| inc.preserves_facets(&e.permutation)),
        kernel_size: action.kernel.len(),
        kernel_trivial: action.kernel.len() == 1,
        low_dimensional: dim <= 1,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FlipGraphAutReport {
    pub surface: CiliatedSurface,
    pub aut_f: usize,
    pub aut_a: usize,
    pub equal: bool,
}

pub fn flipgraph_aut_check(surface: &CiliatedSurface, limits: SearchLimits) -> Result<FlipGraphAutReport> {
    if surface.complex_dim() < 1 {
        return Err(Error::Unsupported(surface.clone()));
    }
    let complex = build_arc_complex(surface, None)?;
    let graph = build_flip_graph(surface, None)?;
    let aut_a = automorphisms(&complex, limits)?.order();
    let aut_f = graph_automorphisms(&graph, limits)?.order();
    Ok(FlipGraphAutReport { surface: surface.clone(), aut_f, aut_a, equal: aut_f == aut_a })
}

/// Isomorphism invariants of an arc complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InvariantVector {
    pub vertices: usize,
    pub facets: usize,
    pub degree_sequence: Vec<usize>,
    pub facet_adjacency_degrees: Vec<usize>,
}

impl InvariantVector {
    pub fn of(c: &SimplicialComplex) -> Self {
        let desc = |mut v: Vec<usize>| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        };
        let mut dual = vec![0; c.facets().len()];
        for (a, b) in c.dual_edges() {
            dual[a] += 1;
            dual[b] += 1;
        }
        InvariantVector {
            vertices: c.vertices().len(),
            facets: c.facets().len(),
            degree_sequence: desc(c.adjacency().iter().map(Vec::len).collect()),
            facet_adjacency_degrees: desc(dual),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Certificate {
    /// The invariant vectors differ.
    Invariants,
    /// Exhaustive search found no isomorphism.
    Search,
    /// An explicit isomorphism was found.
    Isomorphism,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DistinguishReport {
    pub a: CiliatedSurface,
    pub b: CiliatedSurface,
    pub same_homeo_type: bool,
    pub isomorphic: bool,
    pub certificate: Certificate,
    pub invariants_a: InvariantVector,
    pub invariants_b: InvariantVector,
    /// Vertex map `a -> b` when isomorphic.
    pub witness: Option<Vec<String>>,
}

pub fn distinguish_complexes(ca: &SimplicialComplex, cb: &SimplicialComplex, limits: SearchLimits) -> Result<DistinguishReport> {
    let (ia, ib) = (InvariantVector::of(ca), InvariantVector::of(cb));
    let (a, b) = (ca.surface().clone(), cb.surface().clone());
    let same_homeo_type = a.same_homeo_type(&b);
    let mut report = DistinguishReport {
        a,
        b,
        same_homeo_type,
        isomorphic: false,
        certificate: Certificate::Invariants,
        invariants_a: ia.clone(),
        invariants_b: ib.clone(),
        witness: None,
    };
    if ia != ib {
        return Ok(report);
    }
    let found = isomorphisms(&Incidence::of_complex(ca), &Incidence::of_complex(cb), limits, true)?;
    match found.first() {
        Some(map) => {
            report.isomorphic = true;
            report.certificate = Certificate::Isomorphism;
            report.witness = Some(
                map.iter()
                    .enumerate()
                    .map(|(i, &j)| format!("{}->{}", ca.vertices()[i], cb.vertices()[j]))
                    .collect(),
            );
        }
        None => report.certificate = Certificate::Search,
    }
    Ok(report)
}

/// Certifies whether the arc complexes of two finite-type surfaces are
/// isomorphic.
pub fn distinguish(a: &CiliatedSurface, b: &CiliatedSurface, limits: SearchLimits) -> Result<DistinguishReport> {
    for s in [a, b] {
        if !s.is_finite_type() {
            return Err(Error::InfiniteType(s.clone()));
        }
    }
    distinguish_complexes(&build_arc_complex(a, None)?, &build_arc_complex(b, None)?, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surf(text: &str) -> CiliatedSurface {
        text.parse().unwrap()
    }

    fn aut_order(text: &str) -> usize {
        automorphisms(&build_arc_complex(&surf(text), None).unwrap(), SearchLimits::default()).unwrap().order()
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(aut_order("0,1,0;4"), 2);
        assert_eq!(aut_order("0,1,0;5"), 10);
        assert_eq!(aut_order("0,1,0;6"), 12);
    }

    #[test]
    fn mcg_examples() {
        assert_eq!(mcg_action(&surf("0,1,0;6")).unwrap().group.order(), 12);
        assert_eq!(mcg_action(&surf("0,1,1;3")).unwrap().group.order(), 6);
        assert_eq!(mcg_action(&surf("0,1,0;5")).unwrap().group.order(), 10);
        assert!(matches!(mcg_action(&surf("0,2,0;1,1")), Err(Error::Unsupported(_))));
    }

    #[test]
    fn reflection_flips_sided_chords() {
        let f = Dihedral { n: 5, shift: 0, reflect: true };
        // free interval 1..3 (vertex 2) maps to 4..2 (vertex 3)
        assert_eq!(f.apply(&Arc::SidedChord(1, 3, 0)), Arc::SidedChord(2, 4, 0));
        // free interval 3..1 going through 4, 0 maps to 2..4 backwards
        assert_eq!(f.apply(&Arc::SidedChord(1, 3, 1)), Arc::SidedChord(2, 4, 1));
        let r = Dihedral { n: 5, shift: 1, reflect: false };
        assert_eq!(r.apply(&Arc::SidedChord(2, 4, 0)), Arc::SidedChord(0, 3, 1));
    }

    #[test]
    fn rigidity_examples() {
        let hex = rigidity_report(&surf("0,1,0;6"), SearchLimits::default()).unwrap();
        assert_eq!((hex.aut_a, hex.mod_image, hex.equal, hex.kernel_trivial), (12, 12, true, true));
        let sq = rigidity_report(&surf("0,1,0;4"), SearchLimits::default()).unwrap();
        assert_eq!((sq.aut_a, sq.mod_image, sq.equal, sq.low_dimensional), (2, 2, true, true));
    }

    #[test]
    fn flip_graph_automorphisms_match() {
        for text in ["0,1,0;5", "0,1,0;6", "0,1,1;2"] {
            let r = flipgraph_aut_check(&surf(text), SearchLimits::default()).unwrap();
            assert!(r.equal, "{text}: {r:?}");
        }
        assert_eq!(flipgraph_aut_check(&surf("0,1,0;5"), SearchLimits::default()).unwrap().aut_f, 10);
    }

    #[test]
    fn distinguish_examples() {
        let lim = SearchLimits::default();
        let r = distinguish(&surf("0,1,0;6"), &surf("0,1,1;3"), lim).unwrap();
        assert!(!r.isomorphic);
        assert_eq!(r.invariants_a.vertices, r.invariants_b.vertices);
        let r = distinguish(&surf("0,1,0;5"), &surf("0,1,0;5"), lim).unwrap();
        assert!(r.isomorphic);
        assert_eq!(r.certificate, Certificate::Isomorphism);
        let r = distinguish(&surf("0,1,0;4"), &surf("0,1,1;1"), lim).unwrap();
        assert!(!r.isomorphic);
        assert_eq!((r.invariants_a.vertices, r.invariants_b.vertices), (2, 1));
    }

    #[test]
    fn search_respects_bounds() {
        let c = build_arc_complex(&surf("0,1,0;6"), None).unwrap();
        let tight = SearchLimits { vertex_bound: 4, ..Default::default() };
        assert!(matches!(automorphisms(&c, tight), Err(Error::TooLarge { size: 9, bound: 4 })));
        let starved = SearchLimits { node_budget: 3, ..Default::default() };
        assert!(matches!(automorphisms(&c, starved), Err(Error::Inconclusive(_))));
    }

    #[test]
    fn groups_are_closed() {
        let g = automorphisms(&build_arc_complex(&surf("0,1,1;3"), None).unwrap(), SearchLimits::default()).unwrap();
        assert!(g.is_closed());
        assert!(g.generators.iter().all(|p| p.simplicial));
        assert_eq!(closure(g.degree, &g.generators.iter().map(|p| p.images.clone()).collect::<Vec<_>>()), g.elements);
    }
}
