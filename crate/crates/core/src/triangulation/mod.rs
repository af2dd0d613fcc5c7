//! Ideal triangulations, as explicit arc sets on the finite-type models and as
//! gluing data on arbitrary surfaces, together with flips.

mod explicit;
mod glued;
mod homology;

pub use explicit::ExplicitTriangulation;
pub use glued::{GluedTriangulation, SidePos, Topology, ValidationReport, Violation};
pub use homology::ChainClasses;

use crate::arcs::Arc;
use crate::error::Result;
use crate::surface::CiliatedSurface;

pub fn fan(surface: &CiliatedSurface, winding_bound: Option<u32>) -> Result<ExplicitTriangulation> {
    ExplicitTriangulation::fan(surface, winding_bound)
}

pub fn flippable(t: &ExplicitTriangulation, a: &Arc) -> Result<bool> {
    t.flippable(a)
}

pub fn flip(t: &ExplicitTriangulation, a: &Arc) -> Result<ExplicitTriangulation> {
    t.flip(a)
}

pub fn flip_glued(t: &GluedTriangulation, side: u32) -> Result<GluedTriangulation> {
    t.flip(side)
}

pub fn validate(t: &GluedTriangulation) -> ValidationReport {
    t.validate()
}
