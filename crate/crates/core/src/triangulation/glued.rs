//! Triangulations as gluing data: triangles with labelled sides, and an
//! involution pairing the sides that lie on the same arc.
//!
//! Each triangle lists its sides counterclockwise. Side `k` of a triangle runs
//! from corner `k` to corner `k + 1`. Glued sides are identified with opposite
//! orientations, so every gluing is orientable. Unpaired sides are boundary
//! segments.
//!
//! Text format, one item per line:
//!
//! ```text
//! surface 0,1,0;4
//! T 0: 0 1 4
//! T 1: 2 3 5
//! G: 4~5
//! ```

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Serialize;

use crate::arcs::{Arc, ModelKind};
use crate::error::{Error, Result};
use crate::surface::CiliatedSurface;

use super::explicit::ExplicitTriangulation;
use super::homology::ChainClasses;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GluedTriangulation {
    surface: CiliatedSurface,
    triangles: Vec<Vec<u32>>,
    gluing: Vec<(u32, u32)>,
}

/// Where a side label sits: triangle index and position within it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SidePos {
    pub triangle: usize,
    pub slot: usize,
}

/// Surface data recomputed from the gluing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Topology {
    pub genus: i64,
    pub boundary: u32,
    pub punctures: i64,
    pub marked: Vec<u32>,
    pub euler: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Violation {
    DeclaredSurface { message: String },
    DuplicateSide { side: u32 },
    UnknownSide { side: u32 },
    SelfGlued { side: u32 },
    MultiplyGlued { side: u32 },
    NonIntegralTriangles { sides: usize },
    NonTriangularFace { face: usize, arity: usize },
    InteriorCountMismatch { expected: usize, found: usize },
    BoundaryCountMismatch { expected: usize, found: usize },
    TriangleCountMismatch { expected: usize, found: usize },
    Disconnected { components: usize },
    NonManifoldBoundary { vertex: usize },
    NonIntegralGenus { euler: i64, boundary: u32 },
    GenusMismatch { declared: u32, recomputed: i64 },
    BoundaryComponentMismatch { declared: u32, recomputed: u32 },
    PunctureMismatch { declared: u32, recomputed: i64 },
    MarkedPointMismatch { declared: Vec<u32>, recomputed: Vec<u32> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub declared: CiliatedSurface,
    pub recomputed: Option<Topology>,
    pub violations: Vec<Violation>,
}

impl GluedTriangulation {
    /// Builds gluing data and rejects it unless [`validate`](Self::validate)
    /// reports no violations.
    pub fn new(surface: CiliatedSurface, triangles: Vec<Vec<u32>>, gluing: Vec<(u32, u32)>) -> Result<Self> {
        let t = Self::new_unchecked(surface, triangles, gluing);
        let report = t.validate();
        if !report.ok {
            let summary = serde_json::to_string(&report.violations).unwrap_or_default();
            return Err(Error::InvalidTriangulation(summary));
        }
        Ok(t)
    }

    /// Builds gluing data without any checks; use [`validate`](Self::validate).
    pub fn new_unchecked(surface: CiliatedSurface, triangles: Vec<Vec<u32>>, gluing: Vec<(u32, u32)>) -> Self {
        GluedTriangulation { surface, triangles, gluing }
    }

    pub fn surface(&self) -> &CiliatedSurface {
        &self.surface
    }

    pub fn triangles(&self) -> &[Vec<u32>] {
        &self.triangles
    }

    /// Gluing pairs in stored order. Pair `i` is arc `i`.
    pub fn gluing(&self) -> &[(u32, u32)] {
        &self.gluing
    }

    pub fn side_positions(&self) -> BTreeMap<u32, SidePos> {
        let mut out = BTreeMap::new();
        for (t, tri) in self.triangles.iter().enumerate() {
            for (k, &side) in tri.iter().enumerate() {
                out.entry(side).or_insert(SidePos { triangle: t, slot: k });
            }
        }
        out
    }

    pub fn partner_map(&self) -> BTreeMap<u32, u32> {
        let mut out = BTreeMap::new();
        for &(a, b) in &self.gluing {
            out.insert(a, b);
            out.insert(b, a);
        }
        out
    }

    /// Sides not paired by the gluing, in label order.
    pub fn boundary_sides(&self) -> Vec<u32> {
        let partner = self.partner_map();
        let mut out: Vec<u32> = self.triangles.iter().flatten().copied().filter(|s| !partner.contains_key(s)).collect();
        out.sort_unstable();
        out
    }

    /// Index of the arc (gluing pair) carrying `side`.
    pub fn arc_of_side(&self, side: u32) -> Option<usize> {
        self.gluing.iter().position(|&(a, b)| a == side || b == side)
    }

    /// Union-find classes of triangle corners; corner `k` of triangle `t` is
    /// entry `3t + k`.
    fn corner_classes(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..3 * self.triangles.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let pos = self.side_positions();
        for &(a, b) in &self.gluing {
            let (Some(pa), Some(pb)) = (pos.get(&a), pos.get(&b)) else { continue };
            let corner = |p: &SidePos, d: usize| 3 * p.triangle + (p.slot + d) % 3;
            for (x, y) in [(corner(pa, 0), corner(pb, 1)), (corner(pa, 1), corner(pb, 0))] {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                parent[rx] = ry;
            }
        }
        (0..parent.len()).map(|x| find(&mut parent, x)).collect()
    }

    fn structural_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        let total: usize = self.triangles.iter().map(Vec::len).sum();
        if !total.is_multiple_of(3) {
            out.push(Violation::NonIntegralTriangles { sides: total });
        }
        for (face, tri) in self.triangles.iter().enumerate() {
            if tri.len() != 3 {
                out.push(Violation::NonTriangularFace { face, arity: tri.len() });
            }
            for &s in tri {
                if !seen.insert(s) {
                    out.push(Violation::DuplicateSide { side: s });
                }
            }
        }
        let mut glued = BTreeSet::new();
        for &(a, b) in &self.gluing {
            if a == b {
                out.push(Violation::SelfGlued { side: a });
            }
            for s in [a, b] {
                if !seen.contains(&s) {
                    out.push(Violation::UnknownSide { side: s });
                }
                if !glued.insert(s) && a != b {
                    out.push(Violation::MultiplyGlued { side: s });
                }
            }
        }
        out
    }

    /// Recomputes genus, boundary, punctures and marked points from the
    /// gluing, assuming the structural checks passed.
    fn recompute(&self, violations: &mut Vec<Violation>) -> Topology {
        let classes = self.corner_classes();
        let vertices: BTreeSet<usize> = classes.iter().copied().collect();
        let pos = self.side_positions();
        let boundary = self.boundary_sides();

        // boundary sides as edges between corner classes
        let mut next: BTreeMap<usize, usize> = BTreeMap::new();
        let mut into: BTreeMap<usize, usize> = BTreeMap::new();
        for &s in &boundary {
            let p = pos[&s];
            let from = classes[3 * p.triangle + p.slot];
            let to = classes[3 * p.triangle + (p.slot + 1) % 3];
            if next.insert(from, to).is_some() {
                violations.push(Violation::NonManifoldBoundary { vertex: from });
            }
            if into.insert(to, from).is_some() {
                violations.push(Violation::NonManifoldBoundary { vertex: to });
            }
        }
        let mut marked = Vec::new();
        let mut visited = BTreeSet::new();
        for &start in next.keys() {
            if visited.contains(&start) {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            while visited.insert(v) {
                len += 1;
                match next.get(&v) {
                    Some(&w) => v = w,
                    None => {
                        violations.push(Violation::NonManifoldBoundary { vertex: v });
                        break;
                    }
                }
            }
            marked.push(len);
        }
        marked.sort_unstable_by(|a, b| b.cmp(a));

        let v = vertices.len() as i64;
        let e = (self.gluing.len() + boundary.len()) as i64;
        let f = self.triangles.len() as i64;
        let euler = v - e + f;
        let b = marked.len() as u32;
        let twice_genus = 2 - b as i64 - euler;
        if twice_genus % 2 != 0 {
            violations.push(Violation::NonIntegralGenus { euler, boundary: b });
        }
        Topology {
            genus: twice_genus.div_euclid(2),
            boundary: b,
            punctures: v - visited.len() as i64,
            marked,
            euler,
        }
    }

    fn components(&self) -> usize {
        let pos = self.side_positions();
        let partner = self.partner_map();
        let mut seen = vec![false; self.triangles.len()];
        let mut count = 0;
        for start in 0..self.triangles.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(t) = queue.pop_front() {
                for s in &self.triangles[t] {
                    if let Some(p) = partner.get(s).and_then(|q| pos.get(q)) {
                        if !seen[p.triangle] {
                            seen[p.triangle] = true;
                            queue.push_back(p.triangle);
                        }
                    }
                }
            }
        }
        count
    }

    /// Checks every structural and topological invariant and reports all
    /// violations at once.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = self.structural_violations();
        let declared = self.surface.clone();
        let mut recomputed = None;
        if violations.is_empty() {
            match (declared.arc_count(), declared.triangle_count()) {
                (Ok(arcs), Ok(triangles)) => {
                    let boundary = self.boundary_sides().len();
                    let interior = 2 * self.gluing.len();
                    if interior != 2 * arcs {
                        violations.push(Violation::InteriorCountMismatch { expected: 2 * arcs, found: interior });
                    }
                    let marked = declared.total_marked() as usize;
                    if boundary != marked {
                        violations.push(Violation::BoundaryCountMismatch { expected: marked, found: boundary });
                    }
                    if self.triangles.len() != triangles {
                        violations.push(Violation::TriangleCountMismatch {
                            expected: triangles,
                            found: self.triangles.len(),
                        });
                    }
                }
                (Err(e), _) | (_, Err(e)) => violations.push(Violation::DeclaredSurface { message: e.to_string() }),
            }
            let components = self.components();
            if components != 1 {
                violations.push(Violation::Disconnected { components });
            }
            let topo = self.recompute(&mut violations);
            if topo.genus != declared.genus() as i64 {
                violations.push(Violation::GenusMismatch { declared: declared.genus(), recomputed: topo.genus });
            }
            if topo.boundary != declared.boundary_count() {
                violations.push(Violation::BoundaryComponentMismatch {
                    declared: declared.boundary_count(),
                    recomputed: topo.boundary,
                });
            }
            if topo.punctures != declared.puncture_count() as i64 {
                violations.push(Violation::PunctureMismatch {
                    declared: declared.puncture_count(),
                    recomputed: topo.punctures,
                });
            }
            let declared_marked = declared.canonical().marked_points().to_vec();
            if topo.marked != declared_marked {
                violations.push(Violation::MarkedPointMismatch {
                    declared: declared_marked,
                    recomputed: topo.marked.clone(),
                });
            }
            recomputed = Some(topo);
        }
        ValidationReport { ok: violations.is_empty(), declared, recomputed, violations }
    }

    /// Flips the arc carrying `side` by re-diagonalizing the quadrilateral
    /// formed by its two triangles. Both sides keep their labels and stay
    /// glued to each other.
    pub fn flip(&self, side: u32) -> Result<Self> {
        let (t, t2, quad) = self.quadrilateral(side)?;
        let [x, a1, a2, y, b1, b2] = quad;
        let mut triangles = self.triangles.clone();
        triangles[t] = vec![x, b2, a1];
        triangles[t2] = vec![y, a2, b1];
        Ok(GluedTriangulation { surface: self.surface.clone(), triangles, gluing: self.gluing.clone() })
    }

    /// The two triangles around the arc of `side`, rotated so that the arc
    /// comes first: `[x, a1, a2]` and `[y, b1, b2]` with `x ~ y`.
    pub fn quadrilateral(&self, side: u32) -> Result<(usize, usize, [u32; 6])> {
        let pos = self.side_positions();
        let p = *pos.get(&side).ok_or(Error::UnknownSide(side))?;
        let partner = self.partner_map();
        let other = *partner.get(&side).ok_or(Error::BoundarySide(side))?;
        if other == side {
            return Err(Error::SelfGlued(side));
        }
        let q = pos[&other];
        if p.triangle == q.triangle {
            return Err(Error::SelfFolded(side));
        }
        let rot = |pos: SidePos| {
            let tri = &self.triangles[pos.triangle];
            [tri[pos.slot], tri[(pos.slot + 1) % 3], tri[(pos.slot + 2) % 3]]
        };
        let [x, a1, a2] = rot(p);
        let [y, b1, b2] = rot(q);
        Ok((p.triangle, q.triangle, [x, a1, a2, y, b1, b2]))
    }

    /// Sides of arcs that can be flipped, one per arc, in gluing order.
    pub fn flippable_sides(&self) -> Vec<u32> {
        self.gluing
            .iter()
            .map(|&(a, _)| a)
            .filter(|&a| self.quadrilateral(a).is_ok())
            .collect()
    }

    /// Canonical form anchored at the boundary: traversal starts from the
    /// smallest boundary label, so boundary labels stay fixed while triangle
    /// order, rotation and interior labels are normalized. Two triangulations
    /// get the same key iff they differ by a relabelling that fixes every
    /// boundary side. With `classes`, every interior side also carries its
    /// relative homology class, which separates triangulations that differ by
    /// a twist.
    pub fn canonical_key(&self, classes: Option<&ChainClasses>) -> String {
        let pos = self.side_positions();
        let partner = self.partner_map();
        let boundary = self.boundary_sides();
        let start = match boundary.first() {
            Some(s) => pos[s],
            None => SidePos { triangle: 0, slot: 0 },
        };
        let mut order: Vec<(usize, usize)> = vec![(start.triangle, start.slot)];
        let mut placed = vec![false; self.triangles.len()];
        placed[start.triangle] = true;
        let mut arc_ids: BTreeMap<u32, (usize, u8)> = BTreeMap::new();
        let mut out = String::new();
        let mut i = 0;
        while i < order.len() {
            let (t, r) = order[i];
            i += 1;
            out.push('[');
            for k in 0..3 {
                let side = self.triangles[t][(r + k) % 3];
                if k > 0 {
                    out.push(' ');
                }
                match partner.get(&side) {
                    None => {
                        let _ = write!(out, "b{side}");
                    }
                    Some(&other) => {
                        let next_id = arc_ids.len() / 2;
                        let &mut (id, dir) = arc_ids.entry(side).or_insert((next_id, 0));
                        arc_ids.entry(other).or_insert((id, 1 - dir));
                        let _ = write!(out, "e{id}.{dir}");
                        if let Some(c) = classes {
                            let _ = write!(out, "{:?}", c.class(side));
                        }
                        let q = pos[&other];
                        if !placed[q.triangle] {
                            placed[q.triangle] = true;
                            order.push((q.triangle, q.slot));
                        }
                    }
                }
            }
            out.push(']');
        }
        if order.len() < self.triangles.len() {
            out.push_str("+disconnected");
        }
        out
    }

    /// Gluing data of a polygon or annulus triangulation. Polygon boundary
    /// side `i` runs from vertex `i` to `i + 1`; the arc in position `k` of the
    /// triangulation gets sides `n + 2k` (from its smaller endpoint) and
    /// `n + 2k + 1`.
    pub fn from_explicit(t: &ExplicitTriangulation) -> Result<Self> {
        match t.model().kind() {
            ModelKind::Polygon { n } => Self::polygon_gluing(t, n),
            ModelKind::Annulus { .. } => {
                // two triangles around W(w) (sides 2~3) and W(w+1) (sides 4~5)
                let triangles = vec![vec![0, 2, 5], vec![1, 3, 4]];
                Self::new(t.surface().clone(), triangles, vec![(2, 3), (4, 5)])
            }
            ModelKind::PuncturedPolygon { .. } => Err(Error::Unsupported(t.surface().clone())),
        }
    }

    fn polygon_gluing(t: &ExplicitTriangulation, n: u32) -> Result<Self> {
        let mut label: BTreeMap<(u32, u32), u32> = BTreeMap::new();
        for i in 0..n {
            label.insert((i, (i + 1) % n), i);
        }
        let mut gluing = Vec::new();
        for (k, arc) in t.arcs().iter().enumerate() {
            let Arc::Chord(i, j) = *arc else { unreachable!("polygon arcs are chords") };
            let k = k as u32;
            label.insert((i, j), n + 2 * k);
            label.insert((j, i), n + 2 * k + 1);
            gluing.push((n + 2 * k, n + 2 * k + 1));
        }
        let mut triangles = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if let (Some(&a), Some(&b), Some(&c)) = (label.get(&(i, j)), label.get(&(j, k)), label.get(&(k, i))) {
                        triangles.push(vec![a, b, c]);
                    }
                }
            }
        }
        Self::new(t.surface().clone(), triangles, gluing)
    }

    /// Reads the arcs of a polygon triangulation back from its gluing, using
    /// the boundary labels `0..n` to locate vertices.
    pub fn to_explicit_polygon(&self, model: &crate::arcs::ArcModel) -> Result<ExplicitTriangulation> {
        let ModelKind::Polygon { n } = model.kind() else {
            return Err(Error::Unsupported(self.surface.clone()));
        };
        let classes = self.corner_classes();
        let pos = self.side_positions();
        let mut vertex_of_class = BTreeMap::new();
        for i in 0..n {
            let p = pos.get(&i).ok_or(Error::UnknownSide(i))?;
            vertex_of_class.insert(classes[3 * p.triangle + p.slot], i);
        }
        let mut arcs = Vec::new();
        for &(a, _) in &self.gluing {
            let p = pos[&a];
            let from = vertex_of_class[&classes[3 * p.triangle + p.slot]];
            let to = vertex_of_class[&classes[3 * p.triangle + (p.slot + 1) % 3]];
            arcs.push(Arc::Chord(from.min(to), from.max(to)));
        }
        ExplicitTriangulation::new(model, arcs)
    }
}

impl fmt::Display for GluedTriangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "surface {}", self.surface)?;
        for (k, tri) in self.triangles.iter().enumerate() {
            write!(f, "T {k}:")?;
            for s in tri {
                write!(f, " {s}")?;
            }
            writeln!(f)?;
        }
        for (a, b) in &self.gluing {
            writeln!(f, "G: {a}~{b}")?;
        }
        Ok(())
    }
}

impl FromStr for GluedTriangulation {
    type Err = Error;

    /// Parses the line format. The result is not validated.
    fn from_str(text: &str) -> Result<Self> {
        let mut surface = None;
        let mut triangles = Vec::new();
        let mut gluing = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("surface ") {
                if surface.is_some() {
                    return Err(err("duplicate surface header"));
                }
                surface = Some(rest.parse::<CiliatedSurface>().map_err(|e| err(&e.to_string()))?);
            } else if let Some(rest) = line.strip_prefix("T ") {
                let (k, sides) = rest.split_once(':').ok_or_else(|| err("expected 'T k: s1 s2 s3'"))?;
                let k: usize = k.trim().parse().map_err(|_| err("bad triangle index"))?;
                if k != triangles.len() {
                    return Err(err("triangle indices must be consecutive from 0"));
                }
                let sides: Vec<u32> = sides
                    .split_whitespace()
                    .map(str::parse)
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| err("bad side label"))?;
                if sides.is_empty() {
                    return Err(err("triangle without sides"));
                }
                triangles.push(sides);
            } else if let Some(rest) = line.strip_prefix("G:") {
                let (a, b) = rest.split_once('~').ok_or_else(|| err("expected 'G: a~b'"))?;
                let a = a.trim().parse().map_err(|_| err("bad side label"))?;
                let b = b.trim().parse().map_err(|_| err("bad side label"))?;
                gluing.push((a, b));
            } else {
                return Err(err("unrecognized line"));
            }
        }
        let surface = surface.ok_or(Error::Parse { line: 1, msg: "missing surface header".into() })?;
        Ok(GluedTriangulation::new_unchecked(surface, triangles, gluing))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arcs::ArcModel;

    pub(crate) const TORUS: &str = "surface 1,1,0;1\nT 0: 0 1 2\nT 1: 3 4 5\nT 2: 6 7 8\nG: 1~3\nG: 2~6\nG: 4~7\nG: 5~8\n";

    fn hexagon_fan() -> GluedTriangulation {
        let t = ExplicitTriangulation::fan(&"0,1,0;6".parse().unwrap(), None).unwrap();
        GluedTriangulation::from_explicit(&t).unwrap()
    }

    #[test]
    fn hexagon_gluing_validates() {
        let g = hexagon_fan();
        let report = g.validate();
        assert!(report.ok, "{report:?}");
        let topo = report.recomputed.unwrap();
        assert_eq!((topo.genus, topo.boundary, topo.punctures, topo.marked), (0, 1, 0, vec![6]));
    }

    #[test]
    fn torus_fixture_validates_and_flips() {
        let g: GluedTriangulation = TORUS.parse().unwrap();
        let report = g.validate();
        assert!(report.ok, "{report:?}");
        assert_eq!(report.recomputed.unwrap().euler, -1);
        let flipped = g.flip(1).unwrap();
        assert!(flipped.validate().ok);
        // the flip is realized by a mapping class, so only homology tells
        // the two apart
        assert_eq!(flipped.canonical_key(None), g.canonical_key(None));
        let classes = ChainClasses::new(&g);
        let moved = classes.after_flip(&g, 1).unwrap();
        assert_ne!(flipped.canonical_key(Some(&moved)), g.canonical_key(Some(&classes)));
        let back = moved.after_flip(&flipped, 1).unwrap();
        assert_eq!(flipped.flip(1).unwrap().canonical_key(Some(&back)), g.canonical_key(Some(&classes)));
    }

    #[test]
    fn square_diagonal_flip_matches_explicit() {
        let model = ArcModel::new(&"0,1,0;4".parse().unwrap(), None).unwrap();
        let t = ExplicitTriangulation::new(&model, vec![Arc::Chord(0, 2)]).unwrap();
        let g = GluedTriangulation::from_explicit(&t).unwrap();
        let flipped = g.flip(4).unwrap();
        assert_eq!(flipped.to_explicit_polygon(&model).unwrap().arcs(), &[Arc::Chord(1, 3)]);
        assert_eq!(g.to_explicit_polygon(&model).unwrap(), t);
    }

    #[test]
    fn double_flip_restores_every_side() {
        let g = hexagon_fan();
        for side in g.flippable_sides() {
            let back = g.flip(side).unwrap().flip(side).unwrap();
            assert_eq!(back.canonical_key(None), g.canonical_key(None));
        }
    }

    #[test]
    fn violations_are_reported() {
        let odd: GluedTriangulation = "surface 0,1,0;4\nT 0: 0 1 4\nT 1: 2 3\nG: 4~5\n".parse().unwrap();
        let report = odd.validate();
        assert!(!report.ok);
        assert!(report.violations.iter().any(|v| matches!(v, Violation::NonIntegralTriangles { .. })));

        let mut text = hexagon_fan().to_string();
        text = text.replacen("surface 0,1,0;6", "surface 1,1,0;6", 1);
        let wrong: GluedTriangulation = text.parse().unwrap();
        let report = wrong.validate();
        assert!(report.violations.iter().any(|v| matches!(v, Violation::GenusMismatch { declared: 1, recomputed: 0 })));
        assert_eq!(report.recomputed.unwrap().genus, 0);

        let selfglued: GluedTriangulation = "surface 0,1,0;4\nT 0: 0 1 4\nT 1: 2 3 5\nG: 4~4\n".parse().unwrap();
        assert!(selfglued.validate().violations.contains(&Violation::SelfGlued { side: 4 }));
    }

    #[test]
    fn flip_errors() {
        let g = hexagon_fan();
        assert!(matches!(g.flip(0), Err(Error::BoundarySide(0))));
        assert!(matches!(g.flip(99), Err(Error::UnknownSide(99))));
        // a self-folded triangle: radius 4~5 inside loop 3
        let folded: GluedTriangulation =
            "surface 0,1,1;2\nT 0: 3 4 5\nT 1: 0 1 6\nG: 3~6\nG: 4~5\n".parse().unwrap();
        assert!(folded.validate().ok, "{:?}", folded.validate());
        assert!(matches!(folded.flip(4), Err(Error::SelfFolded(4))));
        assert!(folded.flip(3).unwrap().validate().ok);
    }

    #[test]
    fn text_round_trip_is_exact() {
        for text in [TORUS.to_string(), hexagon_fan().to_string()] {
            let parsed: GluedTriangulation = text.parse().unwrap();
            assert_eq!(parsed.to_string(), text);
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = "surface 0,1,0;4\nT 1: 0 1 2\n".parse::<GluedTriangulation>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!("T 0: 0 1 2\n".parse::<GluedTriangulation>().is_err());
        assert!("surface 0,1,0;4\nX\n".parse::<GluedTriangulation>().is_err());
    }
}
