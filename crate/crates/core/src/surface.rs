//! Topological type of a ciliated surface and the counting formulas that
//! depend only on it.
//!
//! A ciliated surface is a compact orientable surface of genus `g` with
//! `b >= 1` boundary components, `s` interior punctures and `p_i >= 1` marked
//! points on the `i`-th boundary component. Everything in this module is
//! closed-form arithmetic on `(g, b, s, P)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SurfaceRecord", into = "SurfaceRecord")]
pub struct CiliatedSurface {
    genus: u32,
    punctures: u32,
    marked: Vec<u32>,
}

/// Structured-object form used in JSON output.
#[derive(Serialize, Deserialize)]
struct SurfaceRecord {
    genus: u32,
    boundary: u32,
    punctures: u32,
    marked: Vec<u32>,
}

impl TryFrom<SurfaceRecord> for CiliatedSurface {
    type Error = Error;

    fn try_from(r: SurfaceRecord) -> Result<Self> {
        if r.boundary as usize != r.marked.len() {
            return Err(Error::InvalidSurface(format!(
                "boundary count {} but {} marked-point entries",
                r.boundary,
                r.marked.len()
            )));
        }
        CiliatedSurface::new(r.genus, r.punctures, r.marked)
    }
}

impl From<CiliatedSurface> for SurfaceRecord {
    fn from(s: CiliatedSurface) -> Self {
        SurfaceRecord {
            genus: s.genus,
            boundary: s.boundary_count(),
            punctures: s.punctures,
            marked: s.marked,
        }
    }
}

impl CiliatedSurface {
    /// Builds a surface from genus, puncture count and the marked-point vector.
    /// The boundary count is the length of `marked`.
    pub fn new(genus: u32, punctures: u32, marked: Vec<u32>) -> Result<Self> {
        if marked.is_empty() {
            return Err(Error::InvalidSurface("at least one boundary component is required".into()));
        }
        if marked.contains(&0) {
            return Err(Error::InvalidSurface("every boundary component needs a marked point".into()));
        }
        Ok(CiliatedSurface { genus, punctures, marked })
    }

    /// The `n`-gon.
    pub fn polygon(n: u32) -> Result<Self> {
        Self::new(0, 0, vec![n])
    }

    /// The once-punctured `n`-gon.
    pub fn punctured_polygon(n: u32) -> Result<Self> {
        Self::new(0, 1, vec![n])
    }

    /// Annulus with one marked point on each boundary component.
    pub fn annulus_one_one() -> Self {
        CiliatedSurface { genus: 0, punctures: 0, marked: vec![1, 1] }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn boundary_count(&self) -> u32 {
        self.marked.len() as u32
    }

    pub fn puncture_count(&self) -> u32 {
        self.punctures
    }

    pub fn marked_points(&self) -> &[u32] {
        &self.marked
    }

    pub fn total_marked(&self) -> u32 {
        self.marked.iter().sum()
    }

    /// Same surface with the marked-point vector sorted in descending order.
    pub fn canonical(&self) -> Self {
        let mut marked = self.marked.clone();
        marked.sort_unstable_by(|a, b| b.cmp(a));
        CiliatedSurface { marked, ..self.clone() }
    }

    fn raw_arc_count(&self) -> i64 {
        6 * self.genus as i64 + 3 * self.boundary_count() as i64 + 3 * self.punctures as i64
            + self.total_marked() as i64
            - 6
    }

    /// Number of arcs in any triangulation: `6g + 3b + 3s + |P| - 6`.
    ///
    /// Polygons with at most three vertices and no puncture have no arcs at
    /// all; they are reported as errors rather than as zero.
    pub fn arc_count(&self) -> Result<usize> {
        let value = self.raw_arc_count();
        match value {
            v if v < 0 => Err(Error::NegativeCount { surface: self.clone(), value: v }),
            0 => Err(Error::EmptyComplex(self.clone())),
            v => Ok(v as usize),
        }
    }

    /// Dimension of the arc complex, `6g + 3b + 3s + |P| - 7`. Negative values
    /// mean the complex is empty.
    pub fn complex_dim(&self) -> i64 {
        self.raw_arc_count() - 1
    }

    /// True iff the arc complex has finitely many vertices: a polygon with at
    /// most one puncture.
    pub fn is_finite_type(&self) -> bool {
        self.genus == 0 && self.boundary_count() == 1 && self.punctures <= 1
    }

    pub fn is_polygon(&self) -> bool {
        self.genus == 0 && self.boundary_count() == 1 && self.punctures == 0
    }

    pub fn is_punctured_polygon(&self) -> bool {
        self.genus == 0 && self.boundary_count() == 1 && self.punctures == 1
    }

    pub fn is_annulus_one_one(&self) -> bool {
        self.genus == 0 && self.punctures == 0 && self.marked == [1, 1]
    }

    pub fn classify(&self) -> SurfaceClass {
        let tag = match (self.genus, self.punctures, self.marked.as_slice()) {
            _ if self.complex_dim() < 0 => ClassTag::Empty,
            (0, 1, [1]) => ClassTag::SingleVertex,
            (0, 0, [4]) => ClassTag::TwoVertices,
            (0, 0, [5]) => ClassTag::Pentagon,
            (0, 0, [1, 1]) => ClassTag::AnnulusOneOne,
            (0, 1, [2]) => ClassTag::PuncturedDigon,
            _ => ClassTag::General,
        };
        SurfaceClass { tag, surface: self.clone() }
    }

    /// Homeomorphism type agreement: equal `g`, `b`, `s` and equal multisets
    /// of marked-point counts.
    pub fn same_homeo_type(&self, other: &CiliatedSurface) -> bool {
        self.canonical() == other.canonical()
    }

    /// Number of triangles in any triangulation. Each triangle has three
    /// sides, each arc contributes two and each boundary segment one, so
    /// `3T = 2N + |P|`.
    pub fn triangle_count(&self) -> Result<usize> {
        let arcs = self.arc_count()? as i64;
        let sides = 2 * arcs + self.total_marked() as i64;
        if sides % 3 != 0 {
            return Err(Error::NonIntegral { surface: self.clone(), sides });
        }
        Ok((sides / 3) as usize)
    }
}

impl fmt::Display for CiliatedSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{};", self.genus, self.boundary_count(), self.punctures)?;
        for (i, p) in self.marked.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for CiliatedSurface {
    type Err = Error;

    /// Parses the compact form `g,b,s;p1,p2,...,pb`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidSurface(format!("{msg} in {text:?}"));
        let (head, tail) = text.trim().split_once(';').ok_or_else(|| bad("missing ';'"))?;
        let nums: Vec<u32> = head
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad("malformed g,b,s"))?;
        let [genus, boundary, punctures] = nums[..] else {
            return Err(bad("expected three numbers before ';'"));
        };
        let marked: Vec<u32> = tail
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad("malformed marked-point list"))?;
        if marked.len() != boundary as usize {
            return Err(bad("marked-point list length differs from b"));
        }
        CiliatedSurface::new(genus, punctures, marked)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassTag {
    Empty,
    SingleVertex,
    TwoVertices,
    Pentagon,
    AnnulusOneOne,
    PuncturedDigon,
    General,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceClass {
    pub tag: ClassTag,
    pub surface: CiliatedSurface,
}
