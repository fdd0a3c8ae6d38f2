use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use num_rational::Ratio;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::moves::{find_moves, Move};
use super::patterns::Mode;
use crate::error::{Error, Result};
use crate::rootkit::{LieType, NodeSet, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceGraph {
    pub lie_type: LieType,
    pub mode: Mode,
    pub start: NodeSet,
    /// Each node with its degree relative to `start`.
    pub nodes: BTreeMap<NodeSet, Ratio<i64>>,
    /// Every move found from every node, in discovery order.
    pub edges: Vec<Move>,
}

impl EquivalenceGraph {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, marks: NodeSet) -> bool {
        self.nodes.contains_key(&marks)
    }

    pub fn members(&self) -> Vec<NodeSet> {
        self.nodes.keys().copied().collect()
    }

    /// Whether every node has relative degree 1.
    pub fn ratio_uniform(&self) -> bool {
        self.nodes.values().all(|r| r.is_one())
    }
}

pub fn explore(rs: &RootSystem, start: NodeSet, mode: Mode) -> Result<EquivalenceGraph> {
    let mut nodes: BTreeMap<NodeSet, Ratio<i64>> = BTreeMap::new();
    let mut parent: BTreeMap<NodeSet, NodeSet> = BTreeMap::new();
    let mut edges = Vec::new();
    let mut queue = VecDeque::new();
    nodes.insert(start, Ratio::one());
    queue.push_back(start);
    while let Some(v) = queue.pop_front() {
        let dv = nodes[&v];
        for mv in find_moves(rs, v, mode) {
            let expected = dv * mv.ratio;
            match nodes.get(&mv.target) {
                Some(&known) if known != expected => {
                    return Err(Error::InconsistentCycle(format!(
                        "{} reaches {} with relative degree {} via {} {}, but it was recorded as {} along {}",
                        v,
                        mv.target,
                        expected,
                        mv.label,
                        mv.patch,
                        known,
                        path_to(&parent, start, mv.target)
                    )));
                }
                Some(_) => {}
                None => {
                    nodes.insert(mv.target, expected);
                    parent.insert(mv.target, v);
                    queue.push_back(mv.target);
                }
            }
            edges.push(mv);
        }
    }
    Ok(EquivalenceGraph {
        lie_type: rs.lie_type(),
        mode,
        start,
        nodes,
        edges,
    })
}

fn path_to(parent: &BTreeMap<NodeSet, NodeSet>, start: NodeSet, end: NodeSet) -> String {
    let mut path = vec![end];
    let mut cur = end;
    while cur != start {
        match parent.get(&cur) {
            Some(&p) => {
                path.push(p);
                cur = p;
            }
            None => break,
        }
    }
    path.reverse();
    path.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" -> ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeAssignment {
    Absolute(BTreeMap<NodeSet, u64>),
    /// No anchor lies in the component.
    Relative(BTreeMap<NodeSet, Ratio<i64>>),
}

impl DegreeAssignment {
    pub fn is_anchored(&self) -> bool {
        matches!(self, DegreeAssignment::Absolute(_))
    }

    pub fn absolute(&self, marks: NodeSet) -> Option<u64> {
        match self {
            DegreeAssignment::Absolute(m) => m.get(&marks).copied(),
            DegreeAssignment::Relative(_) => None,
        }
    }
}

/// Scales relative degrees by the anchors inside the component.
pub fn absolute_degrees(g: &EquivalenceGraph, anchors: &[(NodeSet, u64)]) -> Result<DegreeAssignment> {
    let mut scale: Option<(Ratio<i64>, NodeSet, u64)> = None;
    for &(marks, degree) in anchors {
        let Some(&rel) = g.nodes.get(&marks) else { continue };
        let s = Ratio::from_integer(degree as i64) / rel;
        match scale {
            Some((known, at, d)) if known != s => {
                return Err(Error::Degree(format!(
                    "anchors disagree: {at} has degree {d} but {marks} has degree {degree}"
                )));
            }
            Some(_) => {}
            None => scale = Some((s, marks, degree)),
        }
    }
    let Some((s, _, _)) = scale else {
        return Ok(DegreeAssignment::Relative(g.nodes.clone()));
    };
    let mut out = BTreeMap::new();
    for (&marks, &rel) in &g.nodes {
        let d = s * rel;
        if !d.is_integer() || d <= Ratio::from_integer(0) {
            return Err(Error::Degree(format!(
                "{marks} would get the non-integral degree {d}"
            )));
        }
        out.insert(marks, d.to_integer().to_u64().expect("positive"));
    }
    Ok(DegreeAssignment::Absolute(out))
}

/// Undirected edges, one per unordered pair and label.
fn undirected(g: &EquivalenceGraph) -> Vec<&Move> {
    let mut seen = Vec::new();
    let mut out = Vec::new();
    for mv in &g.edges {
        let key = if mv.source <= mv.target {
            (mv.source, mv.target, mv.label.clone())
        } else {
            (mv.target, mv.source, mv.label.clone())
        };
        if !seen.contains(&key) {
            seen.push(key);
            out.push(mv);
        }
    }
    out
}

fn node_id(marks: NodeSet) -> String {
    let inner: Vec<String> = marks.iter().map(|n| format!("a{n}")).collect();
    if inner.is_empty() {
        "empty".into()
    } else {
        inner.join("_")
    }
}

fn degree_text(g: &EquivalenceGraph, degrees: Option<&DegreeAssignment>, marks: NodeSet) -> String {
    match degrees {
        Some(DegreeAssignment::Absolute(m)) => format!("deg {}", m[&marks]),
        _ => format!("rel {}", g.nodes[&marks]),
    }
}

pub fn to_dot(g: &EquivalenceGraph, degrees: Option<&DegreeAssignment>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph \"{} {}\" {{", g.lie_type, g.start);
    let _ = writeln!(s, "  node [shape=box];");
    for &marks in g.nodes.keys() {
        let _ = writeln!(
            s,
            "  {} [label=\"{}\\n{}\"];",
            node_id(marks),
            marks,
            degree_text(g, degrees, marks)
        );
    }
    for mv in undirected(g) {
        let (a, b, r) = if mv.source <= mv.target {
            (mv.source, mv.target, mv.ratio)
        } else {
            (mv.target, mv.source, mv.ratio.recip())
        };
        let _ = writeln!(
            s,
            "  {} -- {} [label=\"{} {} x{}\"];",
            node_id(a),
            node_id(b),
            mv.pattern,
            mv.label,
            r
        );
    }
    s.push_str("}\n");
    s
}

#[derive(Serialize)]
struct JsonNode {
    marks: NodeSet,
    relative: String,
    degree: Option<u64>,
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    lie_type: LieType,
    mode: Mode,
    start: NodeSet,
    anchored: bool,
    nodes: Vec<JsonNode>,
    edges: Vec<&'a Move>,
}

pub fn to_json(g: &EquivalenceGraph, degrees: Option<&DegreeAssignment>) -> serde_json::Value {
    let nodes = g
        .nodes
        .iter()
        .map(|(&marks, rel)| JsonNode {
            marks,
            relative: rel.to_string(),
            degree: degrees.and_then(|d| d.absolute(marks)),
        })
        .collect();
    let view = JsonGraph {
        lie_type: g.lie_type,
        mode: g.mode,
        start: g.start,
        anchored: degrees.is_some_and(|d| d.is_anchored()),
        nodes,
        edges: undirected(g),
    };
    serde_json::to_value(view).expect("graph views serialize")
}
