use std::fmt;

use crate::arcs::{Arc, ArcModel, ModelKind};
use crate::error::{Error, Result};
use crate::surface::CiliatedSurface;

/// A triangulation given as an explicit set of arcs of an [`ArcModel`].
///
/// Arcs are kept in canonical order, so two values are equal iff they are the
/// same triangulation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExplicitTriangulation {
    model: ArcModel,
    arcs: Vec<Arc>,
}

impl ExplicitTriangulation {
    /// Checks size, pairwise compatibility and maximality.
    pub fn new(model: &ArcModel, mut arcs: Vec<Arc>) -> Result<Self> {
        arcs.sort();
        arcs.dedup();
        let expected = model.surface().arc_count()?;
        if arcs.len() != expected {
            return Err(Error::InvalidTriangulation(format!(
                "{} arcs given, {} required on {}",
                arcs.len(),
                expected,
                model.surface()
            )));
        }
        for a in &arcs {
            if !model.in_window(a) {
                return Err(Error::MixedSurface { arc: a.to_string(), surface: model.surface().clone() });
            }
        }
        for (i, a) in arcs.iter().enumerate() {
            for b in &arcs[i + 1..] {
                if !model.compatible(a, b)? {
                    return Err(Error::InvalidTriangulation(format!("{a} and {b} intersect")));
                }
            }
        }
        let t = ExplicitTriangulation { model: model.clone(), arcs };
        if let Some(extra) = t.candidates().into_iter().find(|c| !t.arcs.contains(c) && t.compatible_with_all(c, None)) {
            return Err(Error::InvalidTriangulation(format!("not maximal: {extra} fits")));
        }
        Ok(t)
    }

    /// Base triangulation: every chord from vertex 0 on a polygon, every
    /// radius on a punctured polygon, `{W(0), W(1)}` on the annulus.
    pub fn fan(surface: &CiliatedSurface, winding_bound: Option<u32>) -> Result<Self> {
        let model = ArcModel::new(surface, winding_bound)?;
        let arcs = match model.kind() {
            ModelKind::Polygon { n } => (2..n.saturating_sub(1)).map(|j| Arc::Chord(0, j)).collect(),
            ModelKind::PuncturedPolygon { n } => (0..n).map(Arc::Radius).collect(),
            ModelKind::Annulus { .. } => vec![Arc::Winding(0), Arc::Winding(1)],
        };
        Self::new(&model, arcs)
    }

    pub fn model(&self) -> &ArcModel {
        &self.model
    }

    pub fn surface(&self) -> &CiliatedSurface {
        self.model.surface()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        self.arcs.binary_search(arc).is_ok()
    }

    /// Key used for deduplication: the arcs' text forms in canonical order.
    pub fn key(&self) -> String {
        self.to_string()
    }

    /// Arcs that could replace a member. On an unbounded annulus only
    /// windings near the current ones can be compatible with them.
    fn candidates(&self) -> Vec<Arc> {
        match (self.model.kind(), self.model.arcs()) {
            (_, Ok(all)) => all,
            (ModelKind::Annulus { bound: None }, _) => {
                let ws = self.arcs.iter().filter_map(|a| match a {
                    Arc::Winding(w) => Some(*w),
                    _ => None,
                });
                let lo = ws.clone().min().unwrap_or(0) - 2;
                let hi = ws.max().unwrap_or(0) + 2;
                (lo..=hi).map(Arc::Winding).collect()
            }
            _ => Vec::new(),
        }
    }

    fn compatible_with_all(&self, candidate: &Arc, skip: Option<&Arc>) -> bool {
        self.arcs
            .iter()
            .filter(|a| Some(*a) != skip)
            .all(|a| self.model.iota(a, candidate).map(|i| i == 0).unwrap_or(false))
    }

    /// Every arc `b != a` that completes `self \ {a}` to a triangulation.
    pub fn replacements(&self, a: &Arc) -> Result<Vec<Arc>> {
        if !self.contains(a) {
            return Err(Error::ArcNotInTriangulation(a.to_string()));
        }
        Ok(self
            .candidates()
            .into_iter()
            .filter(|b| b != a && !self.contains(b) && self.compatible_with_all(b, Some(a)))
            .collect())
    }

    /// True iff exactly one other arc completes `self \ {a}`.
    pub fn flippable(&self, a: &Arc) -> Result<bool> {
        let found = self.replacements(a)?;
        if found.len() > 1 {
            return Err(Error::OracleMismatch(format!(
                "face {self} minus {a} lies in {} triangulations",
                found.len() + 1
            )));
        }
        Ok(found.len() == 1)
    }

    /// Replaces `a` by its unique partner. Returns the new triangulation and
    /// the arc that came in.
    pub fn flip_with_partner(&self, a: &Arc) -> Result<(Self, Arc)> {
        let found = self.replacements(a)?;
        let b = match found.as_slice() {
            [b] => *b,
            [] => return Err(Error::NotFlippable(a.to_string())),
            _ => return Err(Error::OracleMismatch(format!("{a} has {} replacements in {self}", found.len()))),
        };
        let crossing = self.model.iota(a, &b)?;
        if crossing != 1 {
            return Err(Error::OracleMismatch(format!("flip {a} -> {b} with intersection number {crossing}")));
        }
        let mut arcs: Vec<Arc> = self.arcs.iter().copied().filter(|x| x != a).collect();
        arcs.push(b);
        arcs.sort();
        Ok((ExplicitTriangulation { model: self.model.clone(), arcs }, b))
    }

    pub fn flip(&self, a: &Arc) -> Result<Self> {
        self.flip_with_partner(a).map(|(t, _)| t)
    }

    /// Arcs of `self` that admit a flip.
    pub fn flippable_arcs(&self) -> Result<Vec<Arc>> {
        let mut out = Vec::new();
        for a in &self.arcs {
            if self.flippable(a)? {
                out.push(*a);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for ExplicitTriangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.arcs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}
