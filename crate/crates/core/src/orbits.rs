//! Weighted Dynkin diagrams and the grading they induce.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classical::{validate_partition, Partition};
use crate::error::{Error, Result};
use crate::parabolics::MarkedDiagram;
use crate::rootkit::{root_system, Family, LieType, NodeSet, Root};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightedDiagram {
    pub lie_type: LieType,
    pub weights: Vec<u8>,
}

impl WeightedDiagram {
    pub fn new(lie_type: LieType, weights: Vec<u8>) -> Result<Self> {
        if weights.len() != lie_type.rank() {
            return Err(Error::InvalidWeights(format!(
                "{} weights given for {lie_type}",
                weights.len()
            )));
        }
        if let Some(w) = weights.iter().find(|&&w| w > 2) {
            return Err(Error::InvalidWeights(format!("weight {w} is not in {{0,1,2}}")));
        }
        Ok(WeightedDiagram { lie_type, weights })
    }

    pub fn zero(lie_type: LieType) -> Self {
        WeightedDiagram {
            lie_type,
            weights: vec![0; lie_type.rank()],
        }
    }

    /// Nodes carrying weight `w`.
    pub fn theta(&self, w: u8) -> NodeSet {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == w)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn eval(&self, root: &Root) -> i32 {
        root.pair(&self.weights)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Grading {
    pub dims: BTreeMap<i32, usize>,
}

impl Grading {
    pub fn dim(&self, i: i32) -> usize {
        self.dims.get(&i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }
}

pub fn grading(ws: &WeightedDiagram) -> Grading {
    let rs = root_system(ws.lie_type);
    let mut dims = BTreeMap::new();
    dims.insert(0, rs.rank());
    for beta in rs.positive_roots() {
        let v = ws.eval(beta);
        if v == 0 {
            *dims.entry(0).or_insert(0) += 2;
        } else {
            *dims.entry(v).or_insert(0) += 1;
            *dims.entry(-v).or_insert(0) += 1;
        }
    }
    Grading { dims }
}

/// dim g − dim g₀ − dim g₁.
pub fn orbit_dimension(ws: &WeightedDiagram) -> usize {
    let g = grading(ws);
    ws.lie_type.dimension() - g.dim(0) - g.dim(1)
}

pub fn is_even(ws: &WeightedDiagram) -> bool {
    grading(ws).dims.keys().all(|i| i % 2 == 0)
}

pub fn jm_marked_set(ws: &WeightedDiagram) -> MarkedDiagram {
    MarkedDiagram {
        lie_type: ws.lie_type,
        marks: ws.theta(1).union(ws.theta(2)),
    }
}

/// Positive roots β with β(h) ≥ 2.
pub fn ideal_n(ws: &WeightedDiagram) -> Vec<Root> {
    root_system(ws.lie_type)
        .positive_roots()
        .iter()
        .filter(|b| ws.eval(b) >= 2)
        .cloned()
        .collect()
}

/// The diagram of a classical orbit, with a flag for very even D orbits,
/// where the diagram returned is the one for label I.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionDiagram {
    pub diagram: WeightedDiagram,
    pub very_even: bool,
}

/// The sl₂ eigenvalues {d−1, d−3, …, 1−d} of every part, descending.
pub fn h_multiset(d: &Partition) -> Vec<i64> {
    let mut h: Vec<i64> = Vec::new();
    for &p in d.parts() {
        let p = p as i64;
        let mut v = p - 1;
        while v >= 1 - p {
            h.push(v);
            v -= 2;
        }
    }
    h.sort_unstable_by(|a, b| b.cmp(a));
    h
}

pub fn weighted_diagram_from_partition(t: LieType, d: &Partition) -> Result<PartitionDiagram> {
    validate_partition(t, d).map_err(|v| Error::InvalidPartition(v.to_string()))?;
    let n = t.rank();
    let h = h_multiset(d);
    let mut weights = vec![0i64; n];
    match t.family() {
        Family::A => {
            for i in 0..n {
                weights[i] = h[i] - h[i + 1];
            }
        }
        Family::B | Family::C | Family::D => {
            let top = &h[..n];
            for i in 0..n - 1 {
                weights[i] = top[i] - top[i + 1];
            }
            weights[n - 1] = match t.family() {
                Family::B => top[n - 1],
                Family::C => 2 * top[n - 1],
                _ => top[n - 2] + top[n - 1],
            };
        }
        _ => {
            return Err(Error::InvalidType(format!(
                "{t} has no partition labels"
            )))
        }
    }
    let weights: Vec<u8> = weights
        .into_iter()
        .map(|w| u8::try_from(w).map_err(|_| Error::InvalidWeights(format!("weight {w}"))))
        .collect::<Result<_>>()?;
    let very_even = t.family() == Family::D && d.parts().iter().all(|p| p % 2 == 0);
    Ok(PartitionDiagram {
        diagram: WeightedDiagram::new(t, weights)?,
        very_even,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wd(t: &str, w: &[u8]) -> WeightedDiagram {
        WeightedDiagram::new(t.parse().unwrap(), w.to_vec()).unwrap()
    }

    fn from_partition(t: &str, parts: &[usize]) -> PartitionDiagram {
        let d = Partition::new(parts.to_vec()).unwrap();
        weighted_diagram_from_partition(t.parse().unwrap(), &d).unwrap()
    }

    #[test]
    fn b3_grading() {
        let g = grading(&wd("B3", &[1, 0, 1]));
        assert_eq!(g.dim(0), 5);
        assert_eq!(g.dim(1), 4);
        assert_eq!(g.dim(2), 2);
        assert_eq!(g.dim(3), 2);
        assert_eq!(g.dim(-3), 2);
        assert_eq!(g.total(), 21);
    }

    #[test]
    fn zero_orbit() {
        let ws = WeightedDiagram::zero("E7".parse().unwrap());
        let g = grading(&ws);
        assert_eq!(g.dims.len(), 1);
        assert_eq!(g.dim(0), 133);
        assert_eq!(orbit_dimension(&ws), 0);
    }

    #[test]
    fn f4a3_is_even() {
        let ws = wd("F4", &[0, 2, 0, 0]);
        assert!(is_even(&ws));
        assert_eq!(jm_marked_set(&ws).marks.to_vec(), vec![2]);
        assert_eq!(orbit_dimension(&ws), 40);
    }

    #[test]
    fn dimensions() {
        assert_eq!(orbit_dimension(&wd("A4", &[2, 1, 1, 2])), 18);
        assert_eq!(orbit_dimension(&wd("B3", &[1, 0, 1])), 12);
        assert!(!is_even(&wd("A4", &[2, 1, 1, 2])));
        assert_eq!(jm_marked_set(&wd("A4", &[2, 1, 1, 2])).marks.len(), 4);
    }

    #[test]
    fn ideal_of_minimal_a4() {
        let n = ideal_n(&wd("A4", &[1, 0, 0, 1]));
        assert_eq!(n.len(), 1);
        assert_eq!(n[0].coeffs, vec![1, 1, 1, 1]);
    }

    #[test]
    fn rejects_bad_weights() {
        assert!(WeightedDiagram::new("A2".parse().unwrap(), vec![3, 0]).is_err());
        assert!(WeightedDiagram::new("A2".parse().unwrap(), vec![1]).is_err());
    }

    #[test]
    fn partitions_to_diagrams() {
        assert_eq!(from_partition("A4", &[4, 1]).diagram.weights, vec![2, 1, 1, 2]);
        assert_eq!(from_partition("A4", &[2, 1, 1, 1]).diagram.weights, vec![1, 0, 0, 1]);
        assert_eq!(from_partition("B3", &[3, 2, 2]).diagram.weights, vec![1, 0, 1]);
        assert_eq!(from_partition("C2", &[4]).diagram.weights, vec![2, 2]);
        assert_eq!(from_partition("C2", &[2, 2]).diagram.weights, vec![0, 2]);
        assert_eq!(from_partition("D4", &[7, 1]).diagram.weights, vec![2, 2, 2, 2]);
        assert_eq!(
            from_partition("D5", &[2, 2, 2, 2, 1, 1]).diagram.weights,
            vec![0, 0, 0, 1, 1]
        );
        let ve = from_partition("D4", &[2, 2, 2, 2]);
        assert!(ve.very_even);
        assert_eq!(ve.diagram.weights, vec![0, 0, 0, 2]);
    }

    #[test]
    fn rejects_invalid_partitions() {
        let d = Partition::new(vec![4, 2, 2]).unwrap();
        assert!(weighted_diagram_from_partition("D4".parse().unwrap(), &d).is_err());
        let d = Partition::new(vec![3, 1]).unwrap();
        assert!(weighted_diagram_from_partition("A4".parse().unwrap(), &d).is_err());
    }
}
