//! Explicit models of essential arcs on the surfaces whose arcs can be listed
//! by hand: the plain `n`-gon, the once-punctured `n`-gon, and the annulus
//! with one marked point per boundary component.
//!
//! Polygon vertices are numbered `0..n` counterclockwise. Intersection
//! numbers on the punctured polygon are computed on the double cover branched
//! at the puncture, where every arc lifts to straight chords, center-passing
//! diameters, or diameters pushed off the center (see [`CoverChordSet`]).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::CiliatedSurface;

/// An isotopy class of essential arc in one of the explicit models.
///
/// The derived ordering is the canonical one: variant first, then indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Arc {
    /// Diagonal `i < j` of the plain polygon.
    Chord(u32, u32),
    /// Chord `i < j` of the punctured polygon. `side == 0` puts the puncture
    /// outside the vertex run `i+1..j`, `side == 1` puts it inside.
    SidedChord(u32, u32, u8),
    /// From boundary vertex `i` to the puncture.
    Radius(u32),
    /// Loop based at `i` whose monogon holds the puncture.
    Loop(u32),
    /// Arc across the annulus with the given winding number.
    Winding(i64),
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Arc::Chord(i, j) => write!(f, "C({i},{j})"),
            Arc::SidedChord(i, j, s) => write!(f, "SC({i},{j},{s})"),
            Arc::Radius(i) => write!(f, "R({i})"),
            Arc::Loop(i) => write!(f, "L({i})"),
            Arc::Winding(w) => write!(f, "W({w})"),
        }
    }
}

impl FromStr for Arc {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::InvalidTriangulation(format!("malformed arc {text:?}"));
        let text = text.trim();
        let (head, rest) = text.split_once('(').ok_or_else(bad)?;
        let body = rest.strip_suffix(')').ok_or_else(bad)?;
        let fields: Vec<&str> = body.split(',').map(str::trim).collect();
        let uint = |t: &str| t.parse::<u32>().map_err(|_| bad());
        match (head, fields.as_slice()) {
            ("C", [i, j]) => Ok(Arc::Chord(uint(i)?, uint(j)?)),
            ("SC", [i, j, s]) => {
                let side = s.parse::<u8>().map_err(|_| bad())?;
                Ok(Arc::SidedChord(uint(i)?, uint(j)?, side))
            }
            ("R", [i]) => Ok(Arc::Radius(uint(i)?)),
            ("L", [i]) => Ok(Arc::Loop(uint(i)?)),
            ("W", [w]) => Ok(Arc::Winding(w.parse().map_err(|_| bad())?)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Arc {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Arc {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// How a lifted chord sits relative to the branch point of the double cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoverRoute {
    Straight,
    ThroughCenter,
    /// Diameter pushed off the center to one side (0 or 1).
    AroundCenter(u8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoverChord {
    pub ends: (u32, u32),
    pub route: CoverRoute,
}

impl CoverChord {
    fn new(a: u32, b: u32, route: CoverRoute) -> Self {
        CoverChord { ends: (a.min(b), a.max(b)), route }
    }

    /// Interior crossings in minimal position. Chords meeting only at a shared
    /// endpoint, boundary or center, do not count.
    pub fn crossings(&self, other: &CoverChord) -> u32 {
        if self.route == CoverRoute::ThroughCenter && other.route == CoverRoute::ThroughCenter {
            return 0;
        }
        interleaved(self.ends, other.ends) as u32
    }
}

/// Lift of a punctured-polygon arc to the double cover: a disk with `2n`
/// boundary labels, invariant under the half turn `k -> k + n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverChordSet {
    pub labels: u32,
    pub chords: Vec<CoverChord>,
}

impl CoverChordSet {
    pub fn is_half_turn_symmetric(&self) -> bool {
        let n = self.labels / 2;
        self.chords.iter().all(|c| {
            let turned = CoverChord::new((c.ends.0 + n) % self.labels, (c.ends.1 + n) % self.labels, c.route);
            self.chords.iter().any(|d| {
                d.ends == turned.ends
                    && match (d.route, c.route) {
                        (CoverRoute::AroundCenter(x), CoverRoute::AroundCenter(y)) => x != y,
                        (x, y) => x == y,
                    }
            })
        })
    }

    /// Total pairwise crossing count between the two lifts.
    pub fn crossings(&self, other: &CoverChordSet) -> u32 {
        self.chords
            .iter()
            .flat_map(|a| other.chords.iter().map(move |b| a.crossings(b)))
            .sum()
    }
}

/// Strict cyclic interleaving of two chords given by sorted endpoint pairs.
fn interleaved(a: (u32, u32), b: (u32, u32)) -> bool {
    let inside = |x: u32| a.0 < x && x < a.1;
    let shared = a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
    !shared && (inside(b.0) != inside(b.1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    Polygon { n: u32 },
    PuncturedPolygon { n: u32 },
    /// `bound` limits enumeration to windings `|w| <= bound`.
    Annulus { bound: Option<u32> },
}

/// The explicit arc model attached to a surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArcModel {
    surface: CiliatedSurface,
    kind: ModelKind,
}

impl ArcModel {
    pub fn new(surface: &CiliatedSurface, winding_bound: Option<u32>) -> Result<Self> {
        let kind = if surface.is_polygon() {
            ModelKind::Polygon { n: surface.marked_points()[0] }
        } else if surface.is_punctured_polygon() {
            ModelKind::PuncturedPolygon { n: surface.marked_points()[0] }
        } else if surface.is_annulus_one_one() {
            ModelKind::Annulus { bound: winding_bound }
        } else {
            return Err(Error::InfiniteType(surface.clone()));
        };
        Ok(ArcModel { surface: surface.clone(), kind })
    }

    pub fn surface(&self) -> &CiliatedSurface {
        &self.surface
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn winding_bound(&self) -> Option<u32> {
        match self.kind {
            ModelKind::Annulus { bound } => bound,
            _ => None,
        }
    }

    /// Every arc of the model in canonical order.
    pub fn arcs(&self) -> Result<Vec<Arc>> {
        let mut out = Vec::new();
        match self.kind {
            ModelKind::Polygon { n } => {
                for i in 0..n {
                    for j in i + 2..n {
                        out.push(Arc::Chord(i, j));
                    }
                }
                out.retain(|a| self.contains(a));
            }
            ModelKind::PuncturedPolygon { n } => {
                for i in 0..n {
                    for j in i + 1..n {
                        out.extend([Arc::SidedChord(i, j, 0), Arc::SidedChord(i, j, 1)]);
                    }
                }
                out.extend((0..n).map(Arc::Radius));
                out.extend((0..n).map(Arc::Loop));
                out.retain(|a| self.contains(a));
            }
            ModelKind::Annulus { bound: Some(b) } => {
                out.extend((-(b as i64)..=b as i64).map(Arc::Winding));
            }
            ModelKind::Annulus { bound: None } => return Err(Error::InfiniteType(self.surface.clone())),
        }
        Ok(out)
    }

    /// Whether `arc` is a valid essential arc of this model. Window bounds are
    /// ignored: any winding number is an arc of the annulus.
    pub fn contains(&self, arc: &Arc) -> bool {
        match (self.kind, *arc) {
            (ModelKind::Polygon { n }, Arc::Chord(i, j)) => i < j && j < n && j - i >= 2 && !(i == 0 && j == n - 1),
            (ModelKind::PuncturedPolygon { n }, Arc::SidedChord(i, j, side)) => {
                // the puncture-free side must hold a vertex, or the chord is
                // boundary-parallel
                let free = if side == 0 { j - i - 1 } else { n - (j - i) - 1 };
                i < j && j < n && side <= 1 && free >= 1
            }
            (ModelKind::PuncturedPolygon { n }, Arc::Radius(i)) => i < n,
            // a loop around the puncture in the monogon is boundary-parallel
            (ModelKind::PuncturedPolygon { n }, Arc::Loop(i)) => i < n && n >= 2,
            (ModelKind::Annulus { .. }, Arc::Winding(_)) => true,
            _ => false,
        }
    }

    /// Whether `arc` belongs to the enumerated window (only differs from
    /// [`contains`](Self::contains) on a bounded annulus).
    pub fn in_window(&self, arc: &Arc) -> bool {
        match (self.kind, arc) {
            (ModelKind::Annulus { bound: Some(b) }, Arc::Winding(w)) => w.unsigned_abs() <= b as u64,
            _ => self.contains(arc),
        }
    }

    fn check(&self, arc: &Arc) -> Result<()> {
        if self.contains(arc) {
            Ok(())
        } else {
            Err(Error::MixedSurface { arc: arc.to_string(), surface: self.surface.clone() })
        }
    }

    /// Lift of a punctured-polygon arc to the branched double cover.
    pub fn lift(&self, arc: &Arc) -> Result<CoverChordSet> {
        self.check(arc)?;
        let ModelKind::PuncturedPolygon { n } = self.kind else {
            return Err(Error::Unsupported(self.surface.clone()));
        };
        let chords = match *arc {
            Arc::Radius(i) => vec![CoverChord::new(i, i + n, CoverRoute::ThroughCenter)],
            Arc::Loop(i) => vec![
                CoverChord::new(i, i + n, CoverRoute::AroundCenter(0)),
                CoverChord::new(i, i + n, CoverRoute::AroundCenter(1)),
            ],
            Arc::SidedChord(i, j, 0) => vec![
                CoverChord::new(i, j, CoverRoute::Straight),
                CoverChord::new(i + n, j + n, CoverRoute::Straight),
            ],
            Arc::SidedChord(i, j, _) => vec![
                CoverChord::new(j, i + n, CoverRoute::Straight),
                CoverChord::new(i, j + n, CoverRoute::Straight),
            ],
            _ => unreachable!("checked above"),
        };
        Ok(CoverChordSet { labels: 2 * n, chords })
    }

    /// Minimal number of interior intersections between two arcs.
    pub fn iota(&self, a: &Arc, b: &Arc) -> Result<u32> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (self.kind, *a, *b) {
            (ModelKind::Polygon { .. }, Arc::Chord(i, j), Arc::Chord(k, l)) => interleaved((i, j), (k, l)) as u32,
            (ModelKind::PuncturedPolygon { .. }, _, _) => {
                let total = self.lift(a)?.crossings(&self.lift(b)?);
                debug_assert!(total % 2 == 0, "odd cover crossing count {total} for {a} {b}");
                total / 2
            }
            (ModelKind::Annulus { .. }, Arc::Winding(w), Arc::Winding(v)) => {
                let d = w.abs_diff(v);
                d.saturating_sub(1) as u32
            }
            _ => unreachable!("arcs were checked against the model"),
        })
    }

    pub fn compatible(&self, a: &Arc, b: &Arc) -> Result<bool> {
        Ok(self.iota(a, b)? == 0)
    }
}

/// Every isotopy class of arc on a finite-type surface (or a winding window
/// of the annulus), in canonical order.
pub fn enumerate_arcs(surface: &CiliatedSurface, winding_bound: Option<u32>) -> Result<Vec<Arc>> {
    ArcModel::new(surface, winding_bound)?.arcs()
}

pub fn iota(a: &Arc, b: &Arc, surface: &CiliatedSurface) -> Result<u32> {
    ArcModel::new(surface, None)?.iota(a, b)
}

pub fn compatible(a: &Arc, b: &Arc, surface: &CiliatedSurface) -> Result<bool> {
    Ok(iota(a, b, surface)? == 0)
}
