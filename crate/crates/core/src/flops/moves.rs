use num_rational::Ratio;
use serde::Serialize;

use super::patterns::{has_pair_sides, patterns_for, Mode, PatternId};
use crate::rootkit::{classify_subdiagram, maximal_patch, Family, NodeSet, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Move {
    pub source: NodeSet,
    pub target: NodeSet,
    pub pattern: PatternId,
    pub label: String,
    pub patch: NodeSet,
    pub labeling: Vec<usize>,
    /// deg(target) / deg(source).
    #[serde(serialize_with = "super::ser_ratio")]
    pub ratio: Ratio<i64>,
}

/// Every replacement of a whole patch by another side of a relation.
pub fn find_moves(rs: &RootSystem, marks: NodeSet, mode: Mode) -> Vec<Move> {
    let mut seeds: Vec<NodeSet> = marks.iter().map(NodeSet::single).collect();
    if has_pair_sides(mode) {
        let nodes = marks.to_vec();
        for (a, &x) in nodes.iter().enumerate() {
            for &y in &nodes[a + 1..] {
                seeds.push(NodeSet::single(x).with(y));
            }
        }
    }
    let ambient = rs.lie_type();
    let mut out: Vec<Move> = Vec::new();
    for seed in seeds {
        let patch = maximal_patch(rs, marks, seed).expect("seeds are drawn from the marks");
        if patch.is_empty() {
            continue;
        }
        let ids = classify_subdiagram(rs, patch);
        let Some(first) = ids.first() else { continue };
        let patterns: Vec<_> = patterns_for(first.classified_type)
            .into_iter()
            .filter(|p| mode == Mode::Full || p.degree_preserving)
            .collect();
        for pat in &patterns {
            if pat.id == PatternId::R2 && !(ambient.family() == Family::D && ambient.rank() == 4) {
                log::debug!("skipping D4 relation on the embedded patch {patch} of {ambient}");
                continue;
            }
            for id in &ids {
                for (s, src) in pat.sides.iter().enumerate() {
                    if id.map_labels(src.marks) != seed {
                        continue;
                    }
                    for (k, dst) in pat.sides.iter().enumerate() {
                        if k == s {
                            continue;
                        }
                        let target = marks.minus(seed).union(id.map_labels(dst.marks));
                        if target == marks {
                            continue;
                        }
                        if out.iter().any(|m| m.target == target && m.label == pat.label && m.patch == patch) {
                            continue;
                        }
                        out.push(Move {
                            source: marks,
                            target,
                            pattern: pat.id,
                            label: pat.label.clone(),
                            patch,
                            labeling: id.labeling.clone(),
                            ratio: Ratio::new(i64::from(dst.degree), i64::from(src.degree)),
                        });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootkit::build_root_system;

    fn ns(s: &str, rank: usize) -> NodeSet {
        NodeSet::parse(s, rank).unwrap()
    }

    #[test]
    fn e8_chain_moves() {
        let rs = build_root_system("E8".parse().unwrap());
        let m = find_moves(&rs, ns("1,4", 8), Mode::DegreePreserving);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].target, ns("3,4", 8));
        assert_eq!(m[0].label, "A2");
        assert_eq!(m[0].patch, ns("1,3", 8));

        let m = find_moves(&rs, ns("3,4", 8), Mode::DegreePreserving);
        let targets: Vec<NodeSet> = m.iter().map(|x| x.target).collect();
        assert_eq!(targets, vec![ns("1,4", 8), ns("3,7", 8)]);
        assert_eq!(m[1].label, "A6");
        assert_eq!(m[1].patch, ns("2,4,5,6,7,8", 8));
    }

    #[test]
    fn e7_flipped_e6() {
        let rs = build_root_system("E7".parse().unwrap());
        let m = find_moves(&rs, ns("2,3,7", 7), Mode::Full);
        let hit = m
            .iter()
            .find(|x| x.target == ns("4,7", 7))
            .expect("E6 move present");
        assert_eq!(hit.pattern, PatternId::R6);
        assert_eq!(hit.ratio, Ratio::new(1, 3));
        assert_eq!(hit.labeling, vec![6, 2, 5, 4, 3, 1]);
    }

    #[test]
    fn d7_patch_in_e8() {
        let rs = build_root_system("E8".parse().unwrap());
        let m = find_moves(&rs, ns("1,4", 8), Mode::Full);
        let hit = m.iter().find(|x| x.pattern == PatternId::R3).unwrap();
        assert_eq!(hit.target, ns("1,5", 8));
        assert_eq!(hit.ratio, Ratio::new(1, 2));
    }
}
