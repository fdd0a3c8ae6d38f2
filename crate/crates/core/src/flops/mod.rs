//! Relations between marked diagrams with the same Richardson orbit, the move
//! engine built on them, and Springer-degree propagation.

mod graph;
mod moves;
mod patterns;
mod structure;

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

pub use graph::{absolute_degrees, explore, to_dot, to_json, DegreeAssignment, EquivalenceGraph};
pub use moves::{find_moves, Move};
pub use patterns::{patterns_for, Mode, PatternId, RelationPattern, Side};
pub use structure::{verify_flop_structure, FlopReport, FlopType};

use crate::atlas::Atlas;
use crate::classical::enumerate_partitions;
use crate::error::Result;
use crate::orbits::{is_even, jm_marked_set, weighted_diagram_from_partition};
use crate::parabolics::enumerate_symplectic_contractions;
use crate::rootkit::{root_system, LieType, NodeSet};

pub(crate) fn ser_ratio<S: Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    r.to_string().serialize(s)
}

/// Marked diagrams with known Springer degree.
///
/// Exceptional types use the atlas entries and the Jacobson–Morozov sets of
/// even records. Classical types use the Jacobson–Morozov sets of even orbits
/// and every extremal contraction that is a symplectic resolution, all of
/// degree one.
pub fn anchors_for(t: LieType, atlas: &Atlas) -> Vec<(NodeSet, u64)> {
    let mut out: BTreeSet<(NodeSet, u64)> = BTreeSet::new();
    if t.family().is_classical() {
        for d in enumerate_partitions(t) {
            let Ok(pd) = weighted_diagram_from_partition(t, &d) else { continue };
            let ws = pd.diagram;
            if is_even(&ws) {
                out.insert((jm_marked_set(&ws).marks, 1));
            } else {
                for q in enumerate_symplectic_contractions(&ws) {
                    out.insert((q.marks, 1));
                }
            }
        }
    } else {
        for rec in atlas.records_for(t) {
            if is_even(&rec.weights) {
                out.insert((jm_marked_set(&rec.weights).marks, 1));
            }
            for p in &rec.polarizations {
                if let Some(d) = p.degree {
                    out.insert((p.marks, d));
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Explores the component of `marks` and resolves its degrees from the anchors.
pub fn component_degrees(
    t: LieType,
    marks: NodeSet,
    mode: Mode,
    atlas: &Atlas,
) -> Result<(EquivalenceGraph, DegreeAssignment)> {
    let rs = root_system(t);
    let g = explore(&rs, marks, mode)?;
    let d = absolute_degrees(&g, &anchors_for(t, atlas))?;
    Ok((g, d))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub algebra: LieType,
    pub label: String,
    pub marks: NodeSet,
    pub stored: Option<u64>,
    pub propagated: Option<u64>,
    pub component_size: usize,
    pub distinct_degrees: usize,
    pub agrees: bool,
}

/// For every stored polarization, compares its degree with the full-mode
/// propagation and counts distinct degrees in its component.
pub fn check_atlas_degrees(atlas: &Atlas) -> Result<Vec<DegreeCheck>> {
    let mut out = Vec::new();
    for rec in atlas.records() {
        for p in &rec.polarizations {
            let (g, d) = component_degrees(rec.algebra, p.marks, Mode::Full, atlas)?;
            let propagated = d.absolute(p.marks);
            let distinct = match &d {
                DegreeAssignment::Absolute(m) => m.values().collect::<BTreeSet<_>>().len(),
                DegreeAssignment::Relative(m) => m.values().collect::<BTreeSet<_>>().len(),
            };
            let agrees = match (p.degree, propagated) {
                (Some(a), Some(b)) => a == b,
                _ => true,
            };
            out.push(DegreeCheck {
                algebra: rec.algebra,
                label: rec.label.clone(),
                marks: p.marks,
                stored: p.degree,
                propagated,
                component_size: g.len(),
                distinct_degrees: distinct,
                agrees,
            });
        }
    }
    Ok(out)
}
