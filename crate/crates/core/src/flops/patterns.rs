//! The relation table: which marked diagrams of a whole patch may replace
//! each other, with the local Springer degrees of each side.

use std::fmt;

use serde::Serialize;

use crate::rootkit::{Family, LieType, NodeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PatternId {
    R1B,
    R1C,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Only the stratified Mukai flops (R8, R9, R10).
    #[default]
    DegreePreserving,
    /// Every relation.
    Full,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::DegreePreserving => f.write_str("degree_preserving"),
            Mode::Full => f.write_str("full"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Side {
    /// Marked nodes in the standard labels of the pattern diagram.
    pub marks: NodeSet,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationPattern {
    pub id: PatternId,
    /// Short name of the move, e.g. "A6" or "E6,II".
    pub label: String,
    pub diagram: LieType,
    /// Any two sides are related.
    pub sides: Vec<Side>,
    pub degree_preserving: bool,
}

fn side(nodes: &[usize], degree: u32) -> Side {
    Side {
        marks: nodes.iter().copied().collect(),
        degree,
    }
}

fn pattern(id: PatternId, label: String, diagram: LieType, sides: Vec<Side>) -> RelationPattern {
    let degree_preserving = matches!(id, PatternId::R8 | PatternId::R9 | PatternId::R10);
    RelationPattern {
        id,
        label,
        diagram,
        sides,
        degree_preserving,
    }
}

/// Relations whose diagram is exactly `t`.
pub fn patterns_for(t: LieType) -> Vec<RelationPattern> {
    let n = t.rank();
    let mut out = Vec::new();
    match t.family() {
        Family::A => {
            for i in 1..=n {
                let j = n + 1 - i;
                if i < j {
                    out.push(pattern(
                        PatternId::R8,
                        format!("A{n}"),
                        t,
                        vec![side(&[i], 1), side(&[j], 1)],
                    ));
                }
            }
        }
        Family::B if (n + 1).is_multiple_of(3) => {
            let k = (n + 1) / 3;
            out.push(pattern(
                PatternId::R1B,
                format!("B{n}"),
                t,
                vec![side(&[2 * k - 1], 1), side(&[2 * k], 2)],
            ));
        }
        Family::C if (n + 1).is_multiple_of(3) => {
            let k = (n + 1) / 3;
            out.push(pattern(
                PatternId::R1C,
                format!("C{n}"),
                t,
                vec![side(&[2 * k], 1), side(&[2 * k - 1], 2)],
            ));
        }
        Family::D => {
            if n == 4 {
                out.push(pattern(
                    PatternId::R2,
                    "D4".into(),
                    t,
                    vec![side(&[2], 1), side(&[3, 4], 2)],
                ));
            }
            if n >= 7 && (n - 1).is_multiple_of(3) {
                let k = (n - 1) / 3;
                out.push(pattern(
                    PatternId::R3,
                    format!("D{n}"),
                    t,
                    vec![side(&[2 * k], 1), side(&[2 * k + 1], 2)],
                ));
            }
            if n >= 5 && n % 2 == 1 {
                out.push(pattern(
                    PatternId::R9,
                    format!("D{n}"),
                    t,
                    vec![side(&[n - 1], 1), side(&[n], 1)],
                ));
            }
        }
        Family::G => out.push(pattern(
            PatternId::R4,
            "G2".into(),
            t,
            vec![side(&[2], 1), side(&[1], 2)],
        )),
        Family::F => out.push(pattern(
            PatternId::R5,
            "F4".into(),
            t,
            vec![side(&[2], 1), side(&[3], 4), side(&[1, 4], 6)],
        )),
        Family::E if n == 6 => {
            out.push(pattern(
                PatternId::R6,
                "E6".into(),
                t,
                vec![side(&[4], 1), side(&[2, 5], 3)],
            ));
            out.push(pattern(
                PatternId::R10,
                "E6,I".into(),
                t,
                vec![side(&[1], 1), side(&[6], 1)],
            ));
            out.push(pattern(
                PatternId::R10,
                "E6,II".into(),
                t,
                vec![side(&[3], 1), side(&[5], 1)],
            ));
        }
        Family::E if n == 8 => out.push(pattern(
            PatternId::R7,
            "E8".into(),
            t,
            vec![side(&[5], 1), side(&[2, 3], 10)],
        )),
        _ => {}
    }
    out
}

/// Whether some relation in the given mode has a side with two marks.
pub fn has_pair_sides(mode: Mode) -> bool {
    mode == Mode::Full
}
