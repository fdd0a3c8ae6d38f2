//! Standard parabolics as marked diagrams and the extremal-contraction check.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::{ideal_n, jm_marked_set, orbit_dimension, WeightedDiagram};
use crate::rootkit::{root_system, LieType, NodeSet, Root};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MarkedDiagram {
    pub lie_type: LieType,
    pub marks: NodeSet,
}

impl MarkedDiagram {
    pub fn new(lie_type: LieType, marks: NodeSet) -> Result<Self> {
        if !marks.is_subset(NodeSet::full(lie_type.rank())) {
            return Err(Error::InvalidNodes(format!("{marks} is not inside {lie_type}")));
        }
        Ok(MarkedDiagram { lie_type, marks })
    }

    pub fn parse(lie_type: LieType, s: &str) -> Result<Self> {
        MarkedDiagram::new(lie_type, NodeSet::parse(s, lie_type.rank())?)
    }

    pub fn borel(lie_type: LieType) -> Self {
        MarkedDiagram {
            lie_type,
            marks: NodeSet::full(lie_type.rank()),
        }
    }
}

/// Positive roots with a nonzero coefficient on some marked node.
pub fn nilradical_roots(md: &MarkedDiagram) -> Vec<Root> {
    root_system(md.lie_type)
        .positive_roots()
        .iter()
        .filter(|b| b.meets(md.marks))
        .cloned()
        .collect()
}

pub fn dim_nilradical(md: &MarkedDiagram) -> usize {
    root_system(md.lie_type)
        .positive_roots()
        .iter()
        .filter(|b| b.meets(md.marks))
        .count()
}

/// Whether P_p ⊆ P_q, i.e. q's marks are among p's.
pub fn contains(p: &MarkedDiagram, q: &MarkedDiagram) -> Result<bool> {
    if p.lie_type != q.lie_type {
        return Err(Error::TypeMismatch(
            p.lie_type.to_string(),
            q.lie_type.to_string(),
        ));
    }
    Ok(q.marks.is_subset(p.marks))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContractionReport {
    pub contains_jm: bool,
    pub n_contained: bool,
    pub witness: Option<Root>,
    pub dim_u_p: usize,
    pub dim_u_q: usize,
    pub dim_n: usize,
    pub dim_orbit: usize,
    pub balanced: bool,
    pub passes: bool,
}

pub fn check_extremal_contraction(ws: &WeightedDiagram, q: &MarkedDiagram) -> ContractionReport {
    assert_eq!(ws.lie_type, q.lie_type, "diagram and parabolic must share a type");
    let jm = jm_marked_set(ws);
    let n = ideal_n(ws);
    let witness = n.iter().filter(|b| !b.meets(q.marks)).min().cloned();
    let dim_u_p = dim_nilradical(&jm);
    let dim_u_q = dim_nilradical(q);
    let dim_orbit = orbit_dimension(ws);
    let contains_jm = q.marks.is_subset(jm.marks);
    let n_contained = witness.is_none();
    let balanced = 2 * dim_u_q == dim_orbit;
    ContractionReport {
        contains_jm,
        n_contained,
        witness,
        dim_u_p,
        dim_u_q,
        dim_n: n.len(),
        dim_orbit,
        balanced,
        passes: contains_jm && n_contained && balanced,
    }
}

/// Every Γ with Θ₂ ⊆ Γ ⊆ Θ₁ ∪ Θ₂ passing the check, in lexicographic order.
pub fn enumerate_symplectic_contractions(ws: &WeightedDiagram) -> Vec<MarkedDiagram> {
    let theta2 = ws.theta(2);
    let mut out: Vec<MarkedDiagram> = ws
        .theta(1)
        .subsets()
        .map(|s| MarkedDiagram {
            lie_type: ws.lie_type,
            marks: theta2.union(s),
        })
        .filter(|q| check_extremal_contraction(ws, q).passes)
        .collect();
    out.sort_by_key(|a| a.marks);
    out
}
