//! Relative homology classes of oriented sides, tracked through flips.
//!
//! Chains are integer vectors over the edges of a fixed reference
//! triangulation. A side's class is its chain reduced modulo the boundaries
//! of the reference triangles, using a Hermite normal form of that lattice.

use std::collections::BTreeMap;

use super::glued::GluedTriangulation;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainClasses {
    lattice: Vec<(usize, Vec<i64>)>,
    chains: BTreeMap<u32, Vec<i64>>,
}

impl ChainClasses {
    /// Classes of the sides of `reference`, which becomes the basis: arc `i`
    /// is basis vector `i` (positive on its first side), boundary sides follow.
    pub fn new(reference: &GluedTriangulation) -> Self {
        let boundary = reference.boundary_sides();
        let dim = reference.gluing().len() + boundary.len();
        let unit = |i: usize, sign: i64| {
            let mut v = vec![0; dim];
            v[i] = sign;
            v
        };
        let mut chains = BTreeMap::new();
        for (i, &(a, b)) in reference.gluing().iter().enumerate() {
            chains.insert(a, unit(i, 1));
            chains.insert(b, unit(i, -1));
        }
        for (j, &s) in boundary.iter().enumerate() {
            chains.insert(s, unit(reference.gluing().len() + j, 1));
        }
        let rows: Vec<Vec<i64>> = reference
            .triangles()
            .iter()
            .map(|tri| {
                let mut row = vec![0; dim];
                for s in tri {
                    add_into(&mut row, &chains[s], 1);
                }
                row
            })
            .collect();
        ChainClasses { lattice: hermite(rows), chains }
    }

    /// Classes after flipping the arc of `side` in `before`.
    pub fn after_flip(&self, before: &GluedTriangulation, side: u32) -> Result<Self> {
        let (_, _, [x, _a1, a2, y, b1, _b2]) = before.quadrilateral(side)?;
        let mut chain = self.chains[&a2].clone();
        add_into(&mut chain, &self.chains[&b1], 1);
        let negated: Vec<i64> = chain.iter().map(|c| -c).collect();
        let mut chains = self.chains.clone();
        chains.insert(x, chain);
        chains.insert(y, negated);
        Ok(ChainClasses { lattice: self.lattice.clone(), chains })
    }

    pub fn chain(&self, side: u32) -> Option<&[i64]> {
        self.chains.get(&side).map(Vec::as_slice)
    }

    /// Canonical representative of the side's class.
    pub fn class(&self, side: u32) -> Vec<i64> {
        let mut v = self.chains.get(&side).cloned().unwrap_or_default();
        for (col, row) in &self.lattice {
            let q = v[*col].div_euclid(row[*col]);
            if q != 0 {
                add_into(&mut v, row, -q);
            }
        }
        v
    }
}

fn add_into(target: &mut [i64], source: &[i64], factor: i64) {
    for (t, s) in target.iter_mut().zip(source) {
        *t += factor * s;
    }
}

/// Row-style Hermite normal form: returns `(pivot column, row)` pairs with
/// positive pivots and entries above each pivot reduced into `[0, pivot)`.
fn hermite(mut rows: Vec<Vec<i64>>) -> Vec<(usize, Vec<i64>)> {
    let dim = rows.first().map_or(0, Vec::len);
    let mut out: Vec<(usize, Vec<i64>)> = Vec::new();
    for col in 0..dim {
        loop {
            rows.retain(|r| r.iter().any(|&x| x != 0));
            let Some(best) = rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r[col] != 0 && r[..col].iter().all(|&x| x == 0))
                .min_by_key(|(_, r)| r[col].abs())
                .map(|(i, _)| i)
            else {
                break;
            };
            let pivot = rows.swap_remove(best);
            let mut done = true;
            for r in rows.iter_mut() {
                if r[col] != 0 {
                    let q = r[col] / pivot[col];
                    add_into(r, &pivot, -q);
                    if r[col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                let mut pivot = pivot;
                if pivot[col] < 0 {
                    pivot.iter_mut().for_each(|x| *x = -*x);
                }
                for (_, prev) in out.iter_mut() {
                    let q = prev[col].div_euclid(pivot[col]);
                    add_into(prev, &pivot, -q);
                }
                out.push((col, pivot));
                break;
            }
            rows.push(pivot);
        }
    }
    out
}
