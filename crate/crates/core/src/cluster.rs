//! Signed adjacency matrices of triangulations, matrix mutation, and the
//! check that flips and mutations agree.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arcs::{Arc, ArcModel};
use crate::complexes::{ball, flip_closure};
use crate::error::{Error, Result};
use crate::surface::CiliatedSurface;
use crate::triangulation::{ExplicitTriangulation, GluedTriangulation};

/// Labels plus a skew-symmetric integer matrix indexed by them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Seed {
    pub labels: Vec<String>,
    pub matrix: Vec<Vec<i64>>,
}

impl Seed {
    pub fn new(labels: Vec<String>, matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = labels.len();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Parse { line: 0, msg: format!("matrix is not {n}x{n}") });
        }
        let seed = Seed { labels, matrix };
        if !seed.is_skew_symmetric() {
            return Err(Error::Parse { line: 0, msg: "matrix is not skew-symmetric".into() });
        }
        Ok(seed)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        let n = self.matrix.len();
        (0..n).all(|i| (0..n).all(|j| self.matrix[i][j] == -self.matrix[j][i]))
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.matrix.iter().flatten().map(|x| x.abs()).max().unwrap_or(0)
    }

    /// The same seed with its indices listed in the order of `labels`.
    pub fn reindexed(&self, labels: &[String]) -> Option<Seed> {
        if labels.len() != self.labels.len() {
            return None;
        }
        let idx: Option<Vec<usize>> = labels.iter().map(|l| self.labels.iter().position(|m| m == l)).collect();
        let idx = idx?;
        let matrix = idx.iter().map(|&i| idx.iter().map(|&j| self.matrix[i][j]).collect()).collect();
        Some(Seed { labels: labels.to_vec(), matrix })
    }
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "labels")?;
        for l in &self.labels {
            write!(f, " {l}")?;
        }
        writeln!(f)?;
        for row in &self.matrix {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Seed {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (_, head) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty seed".into() })?;
        let mut words = head.split_whitespace();
        if words.next() != Some("labels") {
            return Err(Error::Parse { line: 1, msg: "expected `labels ...`".into() });
        }
        let labels: Vec<String> = words.map(str::to_string).collect();
        let mut matrix = Vec::new();
        for (no, line) in lines {
            let row: std::result::Result<Vec<i64>, _> = line.split_whitespace().map(str::parse).collect();
            matrix.push(row.map_err(|e| Error::Parse { line: no + 1, msg: e.to_string() })?);
        }
        Seed::new(labels, matrix)
    }
}

/// Matrix of a glued triangulation, indexed by its arcs in gluing order and
/// labelled `a~b`. A counterclockwise triangle with consecutive interior
/// sides `i` then `j` contributes `+1` at `(j, i)` and `-1` at `(i, j)`.
pub fn b_matrix_glued(t: &GluedTriangulation) -> Result<Seed> {
    if t.surface().puncture_count() > 0 {
        return Err(Error::Punctured(t.surface().clone()));
    }
    let n = t.gluing().len();
    let pos = t.side_positions();
    for &(a, b) in t.gluing() {
        if a == b {
            return Err(Error::SelfGlued(a));
        }
        for s in [a, b] {
            if !pos.contains_key(&s) {
                return Err(Error::UnlabeledSide(s.to_string()));
            }
        }
    }
    let mut matrix = vec![vec![0i64; n]; n];
    for tri in t.triangles() {
        let ids: Vec<Option<usize>> = tri.iter().map(|&s| t.arc_of_side(s)).collect();
        for (k, id) in ids.iter().enumerate() {
            if id.is_some() && ids[k + 1..].contains(id) {
                return Err(Error::SelfFolded(tri[k]));
            }
        }
        for k in 0..tri.len() {
            if let (Some(i), Some(j)) = (ids[k], ids[(k + 1) % tri.len()]) {
                matrix[j][i] += 1;
                matrix[i][j] -= 1;
            }
        }
    }
    let labels = t.gluing().iter().map(|(a, b)| format!("{a}~{b}")).collect();
    Ok(Seed { labels, matrix })
}

/// Matrix of an explicit triangulation, labelled by its arcs.
pub fn b_matrix(t: &ExplicitTriangulation) -> Result<Seed> {
    if t.surface().puncture_count() > 0 {
        return Err(Error::Punctured(t.surface().clone()));
    }
    let glued = GluedTriangulation::from_explicit(t)?;
    let seed = b_matrix_glued(&glued)?;
    Ok(Seed { labels: t.arcs().iter().map(Arc::to_string).collect(), matrix: seed.matrix })
}

/// Matrix mutation at `k`. Label `k` gets a prime appended.
pub fn mutate(s: &Seed, k: usize) -> Result<Seed> {
    let n = s.rank();
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, rank: n });
    }
    let b = &s.matrix;
    let matrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == k || j == k {
                        -b[i][j]
                    } else {
                        b[i][j] + b[i][k].signum() * (b[i][k] * b[k][j]).max(0)
                    }
                })
                .collect()
        })
        .collect();
    let mut labels = s.labels.clone();
    labels[k].push('\'');
    Ok(Seed { labels, matrix })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub from: String,
    pub to: String,
    pub flip: String,
    pub mutated: Seed,
    pub flipped: Seed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeReport {
    pub surface: CiliatedSurface,
    pub edges: usize,
    pub verified: usize,
    pub counterexample: Option<Counterexample>,
}

impl ExchangeReport {
    pub fn all_verified(&self) -> bool {
        self.verified == self.edges && self.counterexample.is_none()
    }
}

/// Checks `B(flip_a t) = mutate(B(t), index of a)` on every edge of the flip
/// graph, matching labels by the flip (`a` becomes its partner).
pub fn exchange_check(surface: &CiliatedSurface) -> Result<ExchangeReport> {
    if surface.puncture_count() > 0 {
        return Err(Error::Punctured(surface.clone()));
    }
    let model = ArcModel::new(surface, None)?;
    let closure = flip_closure(&model)?;
    let seeds: Vec<Seed> = closure.triangulations.iter().map(b_matrix).collect::<Result<_>>()?;
    let mut report = ExchangeReport { surface: surface.clone(), edges: closure.flips.len(), verified: 0, counterexample: None };
    for &(i, j, a, b) in &closure.flips {
        let k = closure.triangulations[i].arcs().iter().position(|x| *x == a).expect("flipped arc is present");
        let mut mutated = mutate(&seeds[i], k)?;
        mutated.labels[k] = b.to_string();
        match mutated.reindexed(&seeds[j].labels) {
            Some(m) if m == seeds[j] => report.verified += 1,
            _ => {
                report.counterexample.get_or_insert(Counterexample {
                    from: closure.triangulations[i].key(),
                    to: closure.triangulations[j].key(),
                    flip: format!("{a}->{b}"),
                    mutated,
                    flipped: seeds[j].clone(),
                });
            }
        }
    }
    Ok(report)
}

/// The same check on a flip ball around a glued triangulation. Flips keep
/// side labels, so the label bijection is the identity.
pub fn exchange_check_ball(t0: &GluedTriangulation, radius: usize) -> Result<ExchangeReport> {
    if t0.surface().puncture_count() > 0 {
        return Err(Error::Punctured(t0.surface().clone()));
    }
    let b = ball(t0, radius)?;
    let mut report = ExchangeReport { surface: t0.surface().clone(), edges: b.graph.edges.len(), verified: 0, counterexample: None };
    for e in &b.graph.edges {
        let &(from, _, side) = b
            .flips
            .iter()
            .find(|&&(x, y, _)| (x.min(y), x.max(y)) == (e.from, e.to))
            .expect("every edge comes from a flip");
        let before = &b.states[from];
        let k = before.arc_of_side(side).ok_or(Error::BoundarySide(side))?;
        let mut mutated = mutate(&b_matrix_glued(before)?, k)?;
        let after = before.flip(side)?;
        let flipped = b_matrix_glued(&after)?;
        mutated.labels[k] = flipped.labels[k].clone();
        if mutated == flipped {
            report.verified += 1;
        } else {
            report.counterexample.get_or_insert(Counterexample {
                from: before.to_string(),
                to: after.to_string(),
                flip: format!("side {side}"),
                mutated,
                flipped,
            });
        }
    }
    Ok(report)
}
