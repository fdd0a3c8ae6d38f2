//! Structural checks on the orbits attached to the four stratified Mukai flop
//! types: A_{n−1,k}, D_{2n+1}, E6,I and E6,II.

use serde::Serialize;

use crate::classical::Partition;
use crate::error::{Error, Result};
use crate::orbits::{ideal_n, orbit_dimension, weighted_diagram_from_partition, WeightedDiagram};
use crate::parabolics::{nilradical_roots, MarkedDiagram};
use crate::rootkit::{Family, LieType, NodeSet, Root};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FlopType {
    /// sl_n with the pair (k, n − k).
    A { n: usize, k: usize },
    /// so_{2m} with m odd and the spin pair.
    D { rank: usize },
    /// E6 with (α1, α6).
    E6I,
    /// E6 with (α3, α5).
    E6II,
}

impl FlopType {
    pub fn lie_type(self) -> Result<LieType> {
        match self {
            FlopType::A { n, .. } => LieType::new(Family::A, n.saturating_sub(1)),
            FlopType::D { rank } => LieType::new(Family::D, rank),
            FlopType::E6I | FlopType::E6II => LieType::new(Family::E, 6),
        }
    }

    pub fn pair(self) -> Result<(usize, usize)> {
        match self {
            FlopType::A { n, k } => {
                if k == 0 || 2 * k > n || 2 * k == n {
                    return Err(Error::InvalidNodes(format!(
                        "k = {k} does not give a dual pair in sl_{n}"
                    )));
                }
                Ok((k, n - k))
            }
            FlopType::D { rank } => {
                if rank < 5 || rank % 2 == 0 {
                    return Err(Error::InvalidType(format!(
                        "flops of type D need odd rank at least 5, got {rank}"
                    )));
                }
                Ok((rank - 1, rank))
            }
            FlopType::E6I => Ok((1, 6)),
            FlopType::E6II => Ok((3, 5)),
        }
    }

    /// The Jordan type of the orbit for the classical flop types.
    pub fn partition(self) -> Option<Partition> {
        match self {
            FlopType::A { n, k } => {
                let mut parts = vec![2; k];
                parts.extend(std::iter::repeat_n(1, n - 2 * k));
                Partition::new(parts).ok()
            }
            FlopType::D { rank } => {
                let mut parts = vec![2; rank - 1];
                parts.extend([1, 1]);
                Partition::new(parts).ok()
            }
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlopReport {
    pub flop_type: FlopType,
    pub lie_type: LieType,
    pub pair: (usize, usize),
    pub weights: WeightedDiagram,
    pub dim_orbit: usize,
    pub dim_n: usize,
    pub dim_intersection: usize,
    pub n_equals_intersection: bool,
    pub offending_root: Option<Root>,
    pub q: NodeSet,
    pub q_dual: NodeSet,
    pub partition: Option<Partition>,
    pub partition_matches: Option<bool>,
    pub passes: bool,
}

pub fn verify_flop_structure(flop_type: FlopType) -> Result<FlopReport> {
    let t = flop_type.lie_type()?;
    let (i, j) = flop_type.pair()?;
    let mut weights = vec![0u8; t.rank()];
    weights[i - 1] = 1;
    weights[j - 1] = 1;
    let ws = WeightedDiagram::new(t, weights)?;
    let q = NodeSet::single(i);
    let q_dual = NodeSet::single(j);
    let uq = nilradical_roots(&MarkedDiagram { lie_type: t, marks: q });
    let uq_dual = nilradical_roots(&MarkedDiagram { lie_type: t, marks: q_dual });
    let inter: Vec<Root> = uq.iter().filter(|r| uq_dual.contains(r)).cloned().collect();
    let n = ideal_n(&ws);
    let offending_root = n
        .iter()
        .filter(|r| !inter.contains(r))
        .chain(inter.iter().filter(|r| !n.contains(r)))
        .min()
        .cloned();
    let partition = flop_type.partition();
    let partition_matches = match &partition {
        Some(d) => Some(weighted_diagram_from_partition(t, d)?.diagram == ws),
        None => None,
    };
    let n_equals_intersection = offending_root.is_none();
    Ok(FlopReport {
        flop_type,
        lie_type: t,
        pair: (i, j),
        dim_orbit: orbit_dimension(&ws),
        weights: ws,
        dim_n: n.len(),
        dim_intersection: inter.len(),
        n_equals_intersection,
        offending_root,
        q,
        q_dual,
        partition,
        partition_matches,
        passes: n_equals_intersection && partition_matches.unwrap_or(true),
    })
}
