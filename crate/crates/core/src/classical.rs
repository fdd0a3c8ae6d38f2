//! Partitions, the resolvability classification for classical orbits and the
//! Θ₁-interleaving construction of contraction candidates.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::{is_even, weighted_diagram_from_partition, WeightedDiagram};
use crate::parabolics::{check_extremal_contraction, ContractionReport, MarkedDiagram};
use crate::rootkit::{Family, LieType, NodeSet};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts into weakly decreasing order.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }
}

/// Reads composition-like lists "[4,1]" or "4,1" without sorting.
pub fn parse_composition(s: &str) -> Result<Vec<usize>> {
    let body = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
    if body.is_empty() {
        return Err(Error::InvalidPartition("empty list".into()));
    }
    body.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidPartition(format!("cannot read part '{}'", tok.trim())))
        })
        .collect()
}

impl From<Partition> for Vec<usize> {
    fn from(d: Partition) -> Self {
        d.parts
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_composition(s)?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            log::warn!("parts of {s} are not weakly decreasing; sorting them");
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    WrongSize { expected: usize, found: usize },
    EvenPartOddMultiplicity(usize),
    OddPartOddMultiplicity(usize),
    NotClassical(LieType),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongSize { expected, found } => {
                write!(f, "parts sum to {found}, expected {expected}")
            }
            Violation::EvenPartOddMultiplicity(p) => {
                write!(f, "even part {p} has odd multiplicity")
            }
            Violation::OddPartOddMultiplicity(p) => write!(f, "odd part {p} has odd multiplicity"),
            Violation::NotClassical(t) => write!(f, "{t} is not a classical type"),
        }
    }
}

/// Size of the natural representation.
pub fn natural_dimension(t: LieType) -> Option<usize> {
    let n = t.rank();
    match t.family() {
        Family::A => Some(n + 1),
        Family::B => Some(2 * n + 1),
        Family::C | Family::D => Some(2 * n),
        _ => None,
    }
}

pub fn validate_partition(t: LieType, d: &Partition) -> std::result::Result<(), Violation> {
    let expected = natural_dimension(t).ok_or(Violation::NotClassical(t))?;
    if d.size() != expected {
        return Err(Violation::WrongSize {
            expected,
            found: d.size(),
        });
    }
    for (p, m) in d.multiplicities() {
        match t.family() {
            Family::B | Family::D if p % 2 == 0 && m % 2 == 1 => {
                return Err(Violation::EvenPartOddMultiplicity(p))
            }
            Family::C if p % 2 == 1 && m % 2 == 1 => {
                return Err(Violation::OddPartOddMultiplicity(p))
            }
            _ => {}
        }
    }
    Ok(())
}

pub fn dual_partition(d: &Partition) -> Partition {
    let first = d.parts[0];
    let parts = (1..=first)
        .map(|k| d.parts.iter().filter(|&&p| p >= k).count())
        .collect();
    Partition { parts }
}

fn partitions_of(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for p in (1..=n.min(max)).rev() {
        prefix.push(p);
        partitions_of(n - p, p, prefix, out);
        prefix.pop();
    }
}

/// Every valid partition for a classical type, in reverse lexicographic order.
pub fn enumerate_partitions(t: LieType) -> Vec<Partition> {
    let Some(size) = natural_dimension(t) else {
        return Vec::new();
    };
    let mut raw = Vec::new();
    partitions_of(size, size, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|parts| Partition { parts })
        .filter(|d| validate_partition(t, d).is_ok())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    II,
    #[serde(rename = "iii-a")]
    IIIa,
    #[serde(rename = "iii-b-1")]
    IIIb1,
    #[serde(rename = "iii-b-2")]
    IIIb2,
    #[serde(rename = "iii-b-3")]
    IIIb3,
    #[serde(rename = "even")]
    Even,
    #[serde(rename = "none")]
    Unresolvable,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseTag::I => "i",
            CaseTag::II => "ii",
            CaseTag::IIIa => "iii-a",
            CaseTag::IIIb1 => "iii-b-1",
            CaseTag::IIIb2 => "iii-b-2",
            CaseTag::IIIb3 => "iii-b-3",
            CaseTag::Even => "even",
            CaseTag::Unresolvable => "none",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Resolvability {
    pub resolvable: bool,
    pub clause: CaseTag,
    /// Length of the odd prefix for clauses ii and iii-a.
    pub q: Option<usize>,
    /// Position index t of the odd pair for clause iii-b.
    pub t: Option<usize>,
}

/// Number of leading odd parts, when the odd parts form a prefix.
fn odd_prefix(d: &Partition) -> Option<usize> {
    let q = d.parts.iter().take_while(|p| *p % 2 == 1).count();
    if d.parts[q..].iter().all(|p| p % 2 == 0) {
        Some(q)
    } else {
        None
    }
}

pub fn admits_symplectic_resolution_classical(t: LieType, d: &Partition) -> Result<Resolvability> {
    validate_partition(t, d).map_err(|v| Error::InvalidPartition(v.to_string()))?;
    let found = |clause, q, tt| Resolvability {
        resolvable: true,
        clause,
        q,
        t: tt,
    };
    let prefix = odd_prefix(d);
    match t.family() {
        Family::A => return Ok(found(CaseTag::I, None, None)),
        Family::B => {
            if let Some(q) = prefix.filter(|q| q % 2 == 1) {
                return Ok(found(CaseTag::II, Some(q), None));
            }
        }
        Family::C => {
            if let Some(q) = prefix.filter(|q| q % 2 == 0) {
                return Ok(found(CaseTag::II, Some(q), None));
            }
        }
        Family::D => {
            if let Some(q) = prefix.filter(|q| q % 2 == 0 && *q >= 4) {
                return Ok(found(CaseTag::IIIa, Some(q), None));
            }
            let odd: Vec<usize> = (0..d.len()).filter(|&i| d.parts[i] % 2 == 1).collect();
            if odd.len() == 2 && odd[0].is_multiple_of(2) && odd[1] == odd[0] + 1 {
                let tt = odd[1].div_ceil(2);
                let k = d.len();
                let clause = if tt == 1 {
                    CaseTag::IIIb1
                } else if k == 2 * tt {
                    CaseTag::IIIb2
                } else {
                    CaseTag::IIIb3
                };
                return Ok(found(clause, None, Some(tt)));
            }
        }
        _ => unreachable!("validated as classical"),
    }
    let ws = weighted_diagram_from_partition(t, d)?.diagram;
    if is_even(&ws) {
        // All-even partitions in type D fall outside the listed clauses but
        // their Jacobson–Morozov resolution is already symplectic.
        return Ok(found(CaseTag::Even, None, None));
    }
    Ok(Resolvability {
        resolvable: false,
        clause: CaseTag::Unresolvable,
        q: None,
        t: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaSplit {
    pub theta0: NodeSet,
    pub theta1: NodeSet,
    pub theta2: NodeSet,
    pub case_tag: CaseTag,
    pub splits: Vec<(NodeSet, NodeSet)>,
}

/// Odd positions of the increasing list go to the first half.
fn interleave(nodes: NodeSet) -> (NodeSet, NodeSet) {
    let mut first = NodeSet::EMPTY;
    let mut second = NodeSet::EMPTY;
    for (k, v) in nodes.iter().enumerate() {
        if k % 2 == 0 {
            first.insert(v);
        } else {
            second.insert(v);
        }
    }
    (first, second)
}

pub fn theta_split(t: LieType, d: &Partition) -> Result<ThetaSplit> {
    let ws = weighted_diagram_from_partition(t, d)?.diagram;
    let res = admits_symplectic_resolution_classical(t, d)?;
    Ok(theta_split_for(&ws, res.clause))
}

fn theta_split_for(ws: &WeightedDiagram, clause: CaseTag) -> ThetaSplit {
    let n = ws.lie_type.rank();
    let theta0 = ws.theta(0);
    let theta1 = ws.theta(1);
    let theta2 = ws.theta(2);
    if theta1.is_empty() {
        return ThetaSplit {
            theta0,
            theta1,
            theta2,
            case_tag: CaseTag::Even,
            splits: Vec::new(),
        };
    }
    let mut splits = Vec::new();
    match clause {
        CaseTag::IIIb1 if theta1.contains(n) => {
            let (first, second) = interleave(theta1.without(n));
            splits.push((first, second.with(n)));
        }
        CaseTag::IIIb2 => {
            let (first, second) = interleave(theta1);
            splits.push((first, second));
            if first.contains(n - 1) && second.contains(n) {
                let first_p = first.without(n - 1).with(n);
                let second_p = second.without(n).with(n - 1);
                let same = (first_p == first && second_p == second)
                    || (first_p == second && second_p == first);
                if !same {
                    splits.push((first_p, second_p));
                }
            }
        }
        _ => splits.push(interleave(theta1)),
    }
    ThetaSplit {
        theta0,
        theta1,
        theta2,
        case_tag: clause,
        splits,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateKind {
    /// Built from a half of Θ₁ together with Θ₂.
    Contraction,
    /// Built from the Levi type of a degree-one polarization.
    LeviType,
    /// The Jacobson–Morozov parabolic of an even orbit.
    JacobsonMorozov,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub name: String,
    pub kind: CandidateKind,
    pub marked: MarkedDiagram,
    /// Whether the classification predicts an extremal contraction that is a
    /// symplectic resolution.
    pub predicted: bool,
    pub report: ContractionReport,
}

impl Candidate {
    pub fn agrees(&self) -> bool {
        self.predicted == self.report.passes
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateReport {
    pub lie_type: LieType,
    pub partition: Partition,
    pub weights: WeightedDiagram,
    pub resolvability: Resolvability,
    pub split: ThetaSplit,
    pub candidates: Vec<Candidate>,
}

pub fn resolution_candidates(t: LieType, d: &Partition) -> Result<CandidateReport> {
    let ws = weighted_diagram_from_partition(t, d)?.diagram;
    let resolvability = admits_symplectic_resolution_classical(t, d)?;
    let split = theta_split_for(&ws, resolvability.clause);
    let mut candidates = Vec::new();
    let mut push = |name: &str, kind, marks: NodeSet, predicted: bool| {
        let marked = MarkedDiagram { lie_type: t, marks };
        let report = check_extremal_contraction(&ws, &marked);
        candidates.push(Candidate {
            name: name.to_string(),
            kind,
            marked,
            predicted,
            report,
        });
    };
    if split.case_tag == CaseTag::Even {
        push("P", CandidateKind::JacobsonMorozov, split.theta2, true);
    } else {
        let (q1_pred, q2_pred) = match split.case_tag {
            CaseTag::I | CaseTag::IIIb2 => (true, true),
            CaseTag::II | CaseTag::IIIa | CaseTag::IIIb1 => (false, true),
            _ => (false, false),
        };
        for (k, (first, second)) in split.splits.iter().enumerate() {
            let tick = if k == 0 { "" } else { "'" };
            push(
                &format!("Q1{tick}"),
                CandidateKind::Contraction,
                first.union(split.theta2),
                q1_pred,
            );
            push(
                &format!("Q2{tick}"),
                CandidateKind::Contraction,
                second.union(split.theta2),
                q2_pred,
            );
        }
        if split.case_tag == CaseTag::IIIb3 {
            let tt = resolvability.t.expect("iii-b carries t");
            for (k, marked) in levi_type_polarizations(t, d, tt)?.into_iter().enumerate() {
                push(&format!("L{}", k + 1), CandidateKind::LeviType, marked.marks, false);
            }
        }
    }
    Ok(CandidateReport {
        lie_type: t,
        partition: d.clone(),
        weights: ws,
        resolvability,
        split,
        candidates,
    })
}

/// Blocks of the general-linear factors read off a partition: each value
/// contributes half its multiplicity; the leftover sums to twice the rank of
/// the remaining orthogonal or symplectic factor.
pub fn levi_blocks(dual: &Partition) -> (Vec<usize>, usize) {
    let mut blocks = Vec::new();
    let mut rest = 0;
    for (&p, &m) in dual.multiplicities().iter().rev() {
        blocks.extend(std::iter::repeat_n(p, m / 2));
        rest += p * (m % 2);
    }
    (blocks, rest)
}

/// Marked diagrams of the polarizations with Levi type d′, where d′ raises
/// d_{2t−1} and lowers d_{2t} by one.
pub fn levi_type_polarizations(t: LieType, d: &Partition, tt: usize) -> Result<Vec<MarkedDiagram>> {
    let mut parts = d.parts.clone();
    parts[2 * tt - 2] += 1;
    parts[2 * tt - 1] -= 1;
    parts.retain(|&p| p > 0);
    let d_prime = Partition::new(parts)?;
    let (blocks, _) = levi_blocks(&dual_partition(&d_prime));
    flag_to_marked(t, &blocks)
}

/// Marked diagrams of the parabolic stabilizing a flag with the given
/// successive dimensions (isotropic flags for B, C, D).
pub fn flag_to_marked(t: LieType, flag: &[usize]) -> Result<Vec<MarkedDiagram>> {
    let n = t.rank();
    if flag.contains(&0) {
        return Err(Error::InvalidFlag("flag steps must be positive".into()));
    }
    let total: usize = flag.iter().sum();
    let sums: Vec<usize> = flag
        .iter()
        .scan(0, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
        .collect();
    let md = |marks| MarkedDiagram { lie_type: t, marks };
    match t.family() {
        Family::A => {
            if total != n + 1 {
                return Err(Error::InvalidFlag(format!(
                    "flag sums to {total}, expected {}",
                    n + 1
                )));
            }
            Ok(vec![md(sums[..sums.len() - 1].iter().copied().collect())])
        }
        Family::B | Family::C | Family::D => {
            if total > n {
                return Err(Error::InvalidFlag(format!(
                    "isotropic flag sums to {total}, above the rank {n}"
                )));
            }
            if t.family() != Family::D {
                return Ok(vec![md(sums.iter().copied().collect())]);
            }
            let low: NodeSet = sums.iter().copied().filter(|&s| s < n - 1).collect();
            if sums.contains(&(n - 1)) {
                Ok(vec![md(low.with(n - 1).with(n))])
            } else if sums.contains(&n) {
                Ok(vec![md(low.with(n)), md(low.with(n - 1))])
            } else {
                Ok(vec![md(low)])
            }
        }
        _ => Err(Error::InvalidType(format!("{t} has no flag model"))),
    }
}

pub fn richardson_type_a(flag: &[usize]) -> Result<Partition> {
    let sorted = Partition::new(flag.to_vec())
        .map_err(|e| Error::InvalidFlag(e.to_string()))?;
    Ok(dual_partition(&sorted))
}
