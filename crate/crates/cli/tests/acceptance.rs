//! One test per acceptance criterion. Each prints a single PASS/FAIL line;
//! run with `--nocapture` to see them, or `--test-threads=1` to keep them in
//! order.

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;

use num_rational::Ratio;

use nilorb_core::atlas::Atlas;
use nilorb_core::classical::{
    admits_symplectic_resolution_classical, dual_partition, enumerate_partitions,
    resolution_candidates, CaseTag, CandidateKind,
};
use nilorb_core::flops::{
    absolute_degrees, anchors_for, explore, find_moves, verify_flop_structure, FlopType, Mode, PatternId,
};
use nilorb_core::oracle::{
    centralizer_dimension, flag_nilradical_matrices, generic_element, richardson_orbit,
    MatrixAlgebraRealization,
};
use nilorb_core::orbits::{grading, ideal_n, is_even, jm_marked_set, orbit_dimension, weighted_diagram_from_partition};
use nilorb_core::parabolics::{
    check_extremal_contraction, dim_nilradical, enumerate_symplectic_contractions, nilradical_roots,
};
use nilorb_core::{root_system, Family, LieType, MarkedDiagram, NodeSet, Partition, Root, WeightedDiagram};

fn t(s: &str) -> LieType {
    s.parse().unwrap()
}

fn ns(t: LieType, s: &str) -> NodeSet {
    NodeSet::parse(s, t.rank()).unwrap()
}

fn atlas() -> Atlas {
    Atlas::bundled().expect("bundled atlas loads")
}

fn weights(atlas: &Atlas, ty: LieType, label: &str) -> WeightedDiagram {
    atlas.find(ty, label).unwrap_or_else(|| panic!("{ty} {label} in atlas")).weights.clone()
}

fn verdict(id: u32, failures: &[String], summary: &str) {
    if failures.is_empty() {
        println!("AC{id} PASS {summary}");
    } else {
        println!("AC{id} FAIL {summary}");
        for f in failures {
            println!("    {f}");
        }
    }
    assert!(failures.is_empty(), "AC{id}: {} failing checks\n{}", failures.len(), failures.join("\n"));
}

fn expect(failures: &mut Vec<String>, ok: bool, what: impl Into<String>) {
    if !ok {
        failures.push(what.into());
    }
}

#[test]
fn ac01_f4_c3_contraction_numbers() {
    let a = atlas();
    let f4 = t("F4");
    let ws = weights(&a, f4, "C3");
    let mut fails = Vec::new();
    let good = check_extremal_contraction(&ws, &MarkedDiagram::new(f4, ns(f4, "3,4")).unwrap());
    expect(&mut fails, good.passes, format!("{{a3,a4}} should pass: {good:?}"));
    expect(
        &mut fails,
        good.dim_u_p as i64 - good.dim_u_q as i64 == 2 && good.dim_u_q as i64 - good.dim_n as i64 == 2,
        format!("differences {} and {}", good.dim_u_p - good.dim_u_q, good.dim_u_q - good.dim_n),
    );
    let bad = check_extremal_contraction(&ws, &MarkedDiagram::new(f4, ns(f4, "1,4")).unwrap());
    let alpha2_2alpha3 = Root { coeffs: vec![0, 1, 2, 0] };
    expect(&mut fails, !bad.passes && !bad.n_contained, format!("{{a1,a4}} should fail n in u(Q): {bad:?}"));
    expect(
        &mut fails,
        bad.witness.as_ref() == Some(&alpha2_2alpha3),
        format!("witness {:?}, expected a2+2a3", bad.witness.as_ref().map(Root::to_string)),
    );
    verdict(
        1,
        &fails,
        &format!(
            "F4 C3: dim u(P) - dim u(Q) = {} = dim u(Q) - dim n; {{a1,a4}} rejected by {}",
            good.dim_u_p - good.dim_u_q,
            bad.witness.map(|w| w.to_string()).unwrap_or_default()
        ),
    );
}

#[test]
fn ac02_exceptional_table_rows() {
    let a = atlas();
    // (algebra, orbit label in the atlas, polarization)
    let rows = [
        ("F4", "C3", "3,4"),
        ("E6", "2A1", "1"),
        ("E6", "2A1", "6"),
        ("E6", "A2+2A1", "3"),
        ("E6", "A2+2A1", "5"),
        ("E6", "A3", "1,2"),
        ("E6", "A3", "2,6"),
        ("E6", "A4+A1", "3,5"),
        ("E6", "D5(a1)", "2,3,6"),
        ("E6", "D5(a1)", "1,2,5"),
        ("E7", "D4(a1)+A1", "2,7"),
        ("E7", "D5+A1", "1,3,5"),
        ("E7", "D6(a1)", "1,2,3,7"),
        ("E8", "A4+A2+A1", "3"),
        ("E8", "A6+A1", "4"),
        ("E8", "D6(a1)", "1,2,3"),
        ("E8", "E7(a1)", "1,2,3,7,8"),
    ];
    let mut fails = Vec::new();
    for (ty, label, marks) in rows {
        let ty = t(ty);
        let ws = weights(&a, ty, label);
        let q = MarkedDiagram::new(ty, ns(ty, marks)).unwrap();
        let r = check_extremal_contraction(&ws, &q);
        println!(
            "    {ty} {label} {}: marks in JM {} n in u(Q) {} balanced {} -> {}",
            q.marks,
            r.contains_jm,
            r.n_contained,
            r.balanced,
            if r.passes { "pass" } else { "fail" }
        );
        if !r.passes {
            let mut why = Vec::new();
            if !r.contains_jm {
                why.push("marks outside the weight-1 and weight-2 nodes".to_string());
            }
            if let Some(w) = &r.witness {
                why.push(format!("root {w} of n outside u(Q)"));
            }
            if !r.balanced {
                why.push(format!("2 dim u(Q) = {} but dim O = {}", 2 * r.dim_u_q, r.dim_orbit));
            }
            let found: Vec<String> = enumerate_symplectic_contractions(&ws)
                .iter()
                .map(|m| m.marks.to_string())
                .collect();
            fails.push(format!(
                "{ty} {label} {}: {}; passing contractions for this orbit: {}",
                q.marks,
                why.join(", "),
                found.join(" ")
            ));
        }
    }
    verdict(2, &fails, &format!("{} table rows checked", rows.len()));
}

#[test]
fn ac03_e8_d7a2() {
    let a = atlas();
    let e8 = t("E8");
    let rs = root_system(e8);
    let ws = weights(&a, e8, "D7(a2)");
    let mut fails = Vec::new();
    let contractions = enumerate_symplectic_contractions(&ws);
    expect(&mut fails, contractions.is_empty(), format!("contractions {contractions:?}"));

    let small = explore(&rs, ns(e8, "1,5"), Mode::DegreePreserving).unwrap();
    let large = explore(&rs, ns(e8, "1,4"), Mode::DegreePreserving).unwrap();
    let expect_small: BTreeSet<NodeSet> = ["1,5", "2,5"].iter().map(|s| ns(e8, s)).collect();
    let expect_large: BTreeSet<NodeSet> = ["1,4", "3,4", "3,7", "5,7"].iter().map(|s| ns(e8, s)).collect();
    expect(&mut fails, small.members().into_iter().collect::<BTreeSet<_>>() == expect_small, format!("small component {:?}", small.members()));
    expect(&mut fails, large.members().into_iter().collect::<BTreeSet<_>>() == expect_large, format!("large component {:?}", large.members()));
    // every degree-preserving component through a polarization of this orbit
    for p in &a.find(e8, "D7(a2)").unwrap().polarizations {
        let g = explore(&rs, p.marks, Mode::DegreePreserving).unwrap();
        let comp: BTreeSet<NodeSet> = g.members().into_iter().collect();
        expect(&mut fails, comp == expect_small || comp == expect_large, format!("{} lies in {comp:?}", p.marks));
    }

    let labels: BTreeSet<String> = large.edges.iter().map(|m| m.label.clone()).collect();
    let want: BTreeSet<String> = ["A2", "A6", "E6,II"].iter().map(|s| s.to_string()).collect();
    expect(&mut fails, labels == want, format!("move labels on the chain {labels:?}"));
    let chain = [("1,4", "3,4", "A2"), ("3,4", "3,7", "A6"), ("3,7", "5,7", "E6,II")];
    for (x, y, lab) in chain {
        let ok = large
            .edges
            .iter()
            .any(|m| m.source == ns(e8, x) && m.target == ns(e8, y) && m.label == lab);
        expect(&mut fails, ok, format!("no {lab} move {x} -> {y}"));
    }

    let anchors = anchors_for(e8, &a);
    let ds = absolute_degrees(&small, &anchors).unwrap();
    let dl = absolute_degrees(&large, &anchors).unwrap();
    let small_deg: BTreeSet<u64> = small.members().iter().filter_map(|&m| ds.absolute(m)).collect();
    let large_deg: BTreeSet<u64> = large.members().iter().filter_map(|&m| dl.absolute(m)).collect();
    expect(&mut fails, small_deg == BTreeSet::from([1]) && small.members().iter().all(|&m| ds.absolute(m).is_some()), format!("small degrees {small_deg:?}"));
    expect(&mut fails, large_deg == BTreeSet::from([2]) && large.members().iter().all(|&m| dl.absolute(m).is_some()), format!("large degrees {large_deg:?}"));

    // ratios alone: anchor only {a1,a5} at 1 and propagate through all relations
    let full = explore(&rs, ns(e8, "1,5"), Mode::Full).unwrap();
    let df = absolute_degrees(&full, &[(ns(e8, "1,5"), 1)]).unwrap();
    for m in &expect_large {
        expect(&mut fails, df.absolute(*m) == Some(2), format!("full propagation gives {m} degree {:?}", df.absolute(*m)));
    }
    verdict(3, &fails, "E8 D7(a2): no extremal contraction; components of sizes 2 and 4 with degrees 1 and 2");
}

#[test]
fn ac04_e7_degree_three() {
    let e7 = t("E7");
    let rs = root_system(e7);
    let start = ns(e7, "2,3,7");
    let mut fails = Vec::new();
    let moves = find_moves(&rs, start, Mode::Full);
    let mv = moves.iter().find(|m| m.target == ns(e7, "4,7"));
    match mv {
        Some(m) => {
            let identity: Vec<usize> = (1..=6).collect();
            println!("    {} -> {} via {} {} on {} labeling {:?} ratio {}", m.source, m.target, m.pattern, m.label, m.patch, m.labeling, m.ratio);
            expect(&mut fails, m.pattern == PatternId::R6, format!("pattern {}", m.pattern));
            expect(&mut fails, m.labeling != identity, "labeling is not flipped");
            expect(&mut fails, m.ratio == Ratio::new(1, 3), format!("ratio {}", m.ratio));
        }
        None => fails.push("no move {a2,a3,a7} -> {a4,a7}".into()),
    }
    // the even orbit E7(a5) has JM set {a4,a7}, whose map has degree one
    let ws = WeightedDiagram::new(e7, vec![0, 0, 0, 2, 0, 0, 2]).unwrap();
    expect(&mut fails, jm_marked_set(&ws).marks == ns(e7, "4,7"), "JM set of (0,0,0,2,0,0,2)");
    let g = explore(&rs, start, Mode::Full).unwrap();
    let d = absolute_degrees(&g, &[(ns(e7, "4,7"), 1)]).unwrap();
    expect(&mut fails, d.absolute(start) == Some(3), format!("degree {:?}", d.absolute(start)));
    verdict(4, &fails, &format!("E7 {{a2,a3,a7}} has degree {:?}", d.absolute(start)));
}

#[test]
fn ac05_degree_tables() {
    let a = atlas();
    let mut fails = Vec::new();
    // (type, JM anchor of an even orbit, weights of that orbit, queried marks, degree)
    let cases: [(&str, &[u8], &str, u64); 6] = [
        ("G2", &[0, 2], "1", 2),
        ("F4", &[0, 2, 0, 0], "3", 4),
        ("F4", &[0, 2, 0, 0], "1,4", 6),
        ("E6", &[0, 0, 0, 2, 0, 0], "2,5", 3),
        ("E8", &[0, 0, 0, 0, 2, 0, 0, 0], "2,3", 10),
        ("D4", &[0, 2, 0, 0], "3,4", 2),
    ];
    for (ty, w, marks, want) in cases {
        let ty = t(ty);
        let ws = WeightedDiagram::new(ty, w.to_vec()).unwrap();
        assert!(is_even(&ws));
        let jm = jm_marked_set(&ws).marks;
        let m = ns(ty, marks);
        let g = explore(&root_system(ty), m, Mode::Full).unwrap();
        let got = absolute_degrees(&g, &[(jm, 1)]).unwrap().absolute(m);
        println!("    {ty} {m}: {got:?} (anchor {jm})");
        expect(&mut fails, got == Some(want), format!("{ty} {m}: {got:?}, expected {want}"));
    }
    // the D4 anchor comes from a partition: [3,3,1,1] is even with JM set {a2}
    let d4 = t("D4");
    let pd = weighted_diagram_from_partition(d4, &"[3,3,1,1]".parse().unwrap()).unwrap();
    expect(&mut fails, jm_marked_set(&pd.diagram).marks == ns(d4, "2") && is_even(&pd.diagram), "D4 [3,3,1,1] JM {a2}");

    let unresolvable = [("E7", "A4+A1"), ("E7", "D5(a1)"), ("E8", "E6(a1)+A1"), ("E8", "E7(a3)")];
    for (ty, label) in unresolvable {
        let ty = t(ty);
        let rec = a.find(ty, label).unwrap();
        for p in &rec.polarizations {
            let g = explore(&root_system(ty), p.marks, Mode::Full).unwrap();
            expect(&mut fails, g.ratio_uniform(), format!("{ty} {label}: component of {} is not ratio-uniform", p.marks));
            let d = absolute_degrees(&g, &anchors_for(ty, &a)).unwrap();
            let all: BTreeSet<Option<u64>> = g.members().iter().map(|&m| d.absolute(m)).collect();
            expect(&mut fails, all == BTreeSet::from([Some(2)]) && p.degree == Some(2), format!("{ty} {label}: degrees {all:?} stored {:?}", p.degree));
            println!("    {ty} {label} {}: component {} ratio-uniform {}", p.marks, g.len(), g.ratio_uniform());
        }
    }
    verdict(5, &fails, "degree tables reproduced from anchors and ratios");
}

fn classical_types() -> Vec<LieType> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push(LieType::new(Family::A, n).unwrap());
    }
    for n in 2..=8 {
        out.push(LieType::new(Family::B, n).unwrap());
        out.push(LieType::new(Family::C, n).unwrap());
    }
    for n in 4..=8 {
        out.push(LieType::new(Family::D, n).unwrap());
    }
    out
}

#[test]
fn ac06_classical_exhaustive() {
    let mut fails = Vec::new();
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut types: Vec<(LieType, Vec<Partition>)> =
        classical_types().into_iter().map(|ty| (ty, enumerate_partitions(ty))).collect();
    // smallest instance of the last subcase, one rank past the sweep
    types.push((t("D9"), vec!["[4,4,3,3,2,2]".parse().unwrap()]));
    for (ty, parts) in types {
        let n = ty.rank();
        for d in parts {
            let pd = weighted_diagram_from_partition(ty, &d).unwrap();
            let ws = &pd.diagram;
            let g = grading(ws);
            let dim = orbit_dimension(ws);
            let n_dim = ideal_n(ws).len();
            expect(&mut fails, dim == g.dim(1) + 2 * n_dim, format!("{ty} {d}: dim O {dim} vs g1 {} + 2 n {n_dim}", g.dim(1)));
            let res = admits_symplectic_resolution_classical(ty, &d).unwrap();
            let theta1 = ws.theta(1);
            let exhaustive = enumerate_symplectic_contractions(ws);
            if theta1.is_empty() {
                *counts.entry("even".into()).or_default() += 1;
                let jm = jm_marked_set(ws);
                expect(&mut fails, check_extremal_contraction(ws, &jm).passes, format!("{ty} {d}: JM set fails"));
                continue;
            }
            let odd = theta1.len() % 2 == 1;
            let parity_ok = match res.clause {
                CaseTag::I | CaseTag::II | CaseTag::IIIa | CaseTag::IIIb3 => !odd,
                CaseTag::IIIb1 => odd && theta1.contains(n),
                CaseTag::IIIb2 => !odd && theta1.contains(n - 1) && theta1.contains(n),
                _ => true,
            };
            expect(&mut fails, parity_ok, format!("{ty} {d}: |theta1| = {} in case {}", theta1.len(), res.clause));
            *counts.entry(res.clause.to_string()).or_default() += 1;
            let rc = resolution_candidates(ty, &d).unwrap();
            let passes = |name: &str| rc.candidates.iter().find(|c| c.name == name).map(|c| c.report.passes);
            let show = || {
                rc.candidates
                    .iter()
                    .map(|c| format!("{}={}:{}", c.name, c.marked.marks, if c.report.passes { "pass" } else { "fail" }))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let ok = match res.clause {
                CaseTag::I => passes("Q1") == Some(true) && passes("Q2") == Some(true),
                CaseTag::II | CaseTag::IIIa | CaseTag::IIIb1 => {
                    passes("Q2") == Some(true) && passes("Q1") == Some(false)
                }
                CaseTag::IIIb2 => {
                    let names: Vec<&str> = rc
                        .candidates
                        .iter()
                        .filter(|c| c.kind == CandidateKind::Contraction)
                        .map(|c| c.name.as_str())
                        .collect();
                    names.iter().all(|nm| passes(nm) == Some(true))
                }
                CaseTag::IIIb3 => {
                    exhaustive.is_empty()
                        && rc
                            .candidates
                            .iter()
                            .filter(|c| c.kind == CandidateKind::LeviType)
                            .all(|c| 2 * dim_nilradical(&c.marked) == dim)
                }
                _ => exhaustive.is_empty(),
            };
            expect(&mut fails, ok, format!("{ty} {d} {} case {}: {}", weights_text(ws), res.clause, show()));
        }
    }
    let summary: Vec<String> = counts.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    verdict(6, &fails, &format!("classical orbits up to rank 8 ({})", summary.join(" ")));
}

fn weights_text(ws: &WeightedDiagram) -> String {
    let w: Vec<String> = ws.weights.iter().map(u8::to_string).collect();
    format!("({})", w.join(","))
}

/// Distinct rearrangements of a composition.
fn rearrangements(parts: &[usize]) -> BTreeSet<Vec<usize>> {
    if parts.len() <= 1 {
        return BTreeSet::from([parts.to_vec()]);
    }
    let mut out = BTreeSet::new();
    for i in 0..parts.len() {
        let mut rest = parts.to_vec();
        let head = rest.remove(i);
        for mut tail in rearrangements(&rest) {
            tail.insert(0, head);
            out.insert(tail);
        }
    }
    out
}

fn gaps(marks: NodeSet, rank: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut last = 0;
    for m in marks.iter() {
        out.push(m - last);
        last = m;
    }
    out.push(rank + 1 - last);
    out
}

fn multinomial(parts: &[usize]) -> usize {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in parts {
        *counts.entry(p).or_default() += 1;
    }
    let fact = |k: usize| (1..=k).product::<usize>();
    fact(parts.len()) / counts.values().map(|&c| fact(c)).product::<usize>()
}

#[test]
fn ac07_type_a_components() {
    let mut fails = Vec::new();
    let mut explored = 0;
    for n in 1..=7 {
        let ty = LieType::new(Family::A, n).unwrap();
        let rs = root_system(ty);
        for marks in NodeSet::full(n).subsets() {
            explored += 1;
            let g = match explore(&rs, marks, Mode::DegreePreserving) {
                Ok(g) => g,
                Err(e) => {
                    fails.push(format!("{ty} {marks}: {e}"));
                    continue;
                }
            };
            let comp = gaps(marks, n);
            let want: BTreeSet<NodeSet> = rearrangements(&comp)
                .into_iter()
                .map(|c| {
                    let mut s = NodeSet::EMPTY;
                    let mut acc = 0;
                    for p in &c[..c.len() - 1] {
                        acc += p;
                        s.insert(acc);
                    }
                    s
                })
                .collect();
            let got: BTreeSet<NodeSet> = g.members().into_iter().collect();
            if got != want || got.len() != multinomial(&comp) {
                fails.push(format!("{ty} {marks}: component of size {} vs {} rearrangements", got.len(), multinomial(&comp)));
            }
            for mv in &g.edges {
                let back = find_moves(&rs, mv.target, Mode::DegreePreserving)
                    .into_iter()
                    .any(|b| b.target == mv.source && b.patch == mv.patch && b.ratio == mv.ratio.recip());
                if !back {
                    fails.push(format!("{ty}: move {} -> {} has no inverse", mv.source, mv.target));
                }
                if g.nodes[&mv.source] * mv.ratio != g.nodes[&mv.target] {
                    fails.push(format!("{ty}: ratio along {} -> {} disagrees", mv.source, mv.target));
                }
            }
        }
    }
    verdict(7, &fails, &format!("{explored} marked diagrams of A1..A7"));
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn ac08_matrix_oracle() {
    let mut fails = Vec::new();
    let mut count = 0;
    for n in 2..=7 {
        let ty = LieType::new(Family::A, n - 1).unwrap();
        let real = MatrixAlgebraRealization::new(ty).unwrap();
        for flag in compositions(n) {
            count += 1;
            let basis = flag_nilradical_matrices(&real, &flag).unwrap();
            let (x, jordan) = generic_element(&real, &basis, 11).unwrap();
            let mut sorted = flag.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let expected = dual_partition(&Partition::new(sorted).unwrap());
            let dim_o = real.dimension() - centralizer_dimension(&real, &x);
            if jordan != expected || dim_o != 2 * basis.len() {
                fails.push(format!("sl{n} flag {flag:?}: jordan {jordan} (expected {expected}), dim O {dim_o}, 2 dim u {}", 2 * basis.len()));
            }
        }
    }
    let out = Command::new(env!("CARGO_BIN_EXE_nilorb"))
        .args(["oracle-richardson", "A4", "[2,1,1,1]", "--seed", "7", "--json"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let jt = v["results"][0]["report"]["jordan_type"].clone();
    expect(&mut fails, out.status.code() == Some(0), format!("exit {:?}", out.status.code()));
    expect(&mut fails, jt == serde_json::json!([4, 1]), format!("oracle-richardson A4 [2,1,1,1] gave {jt}"));
    let b3 = t("B3");
    let r = richardson_orbit(&MarkedDiagram::new(b3, ns(b3, "3")).unwrap(), 5).unwrap();
    expect(&mut fails, r.jordan_type.to_string() == "[3,2,2]", format!("so7 {{a3}} gave {}", r.jordan_type));
    expect(&mut fails, r.dim_orbit == 2 * r.dim_u, format!("so7 {{a3}} dim O {}", r.dim_orbit));
    verdict(8, &fails, &format!("{count} flags of sl2..sl7, A4 [2,1,1,1] -> {jt}, so7 {{a3}} -> {}", r.jordan_type));
}

#[test]
fn ac09_flop_structure() {
    let mut fails = Vec::new();
    let mut flops = Vec::new();
    for n in 2..=8 {
        for k in 1..n {
            if 2 * k < n {
                flops.push(FlopType::A { n, k });
            }
        }
    }
    flops.extend([FlopType::D { rank: 5 }, FlopType::D { rank: 7 }, FlopType::E6I, FlopType::E6II]);
    for f in &flops {
        let r = verify_flop_structure(*f).unwrap();
        let ty = r.lie_type;
        let q = nilradical_roots(&MarkedDiagram::new(ty, r.q).unwrap());
        let qd = nilradical_roots(&MarkedDiagram::new(ty, r.q_dual).unwrap());
        let inter: BTreeSet<Root> = q.iter().filter(|x| qd.contains(x)).cloned().collect();
        let n_set: BTreeSet<Root> = ideal_n(&r.weights).into_iter().collect();
        expect(&mut fails, inter == n_set && r.n_equals_intersection, format!("{f:?}: n has {} roots, intersection {}", n_set.len(), inter.len()));
        let expected: Option<Vec<usize>> = match *f {
            FlopType::A { n, k } => Some([vec![2; k], vec![1; n - 2 * k]].concat()),
            FlopType::D { rank } => Some([vec![2; rank - 1], vec![1, 1]].concat()),
            _ => None,
        };
        if let Some(parts) = expected {
            let d = Partition::new(parts).unwrap();
            let pd = weighted_diagram_from_partition(ty, &d).unwrap();
            expect(&mut fails, pd.diagram == r.weights, format!("{f:?}: {d} has diagram {:?}", pd.diagram.weights));
        }
        expect(&mut fails, r.passes, format!("{f:?} report fails"));
    }
    verdict(9, &fails, &format!("{} flop types", flops.len()));
}

#[test]
fn ac10_root_system_self_checks() {
    let mut fails = Vec::new();
    for (name, dim) in [("A4", 24), ("F4", 52), ("E8", 248), ("G2", 14)] {
        let rs = root_system(t(name));
        let got = rs.rank() + 2 * rs.positive_roots().len();
        expect(&mut fails, got == dim, format!("{name}: {got}"));
    }
    let mut all = Vec::new();
    for n in 1..=12 {
        all.push(LieType::new(Family::A, n).unwrap());
    }
    for n in 2..=12 {
        all.push(LieType::new(Family::B, n).unwrap());
        all.push(LieType::new(Family::C, n).unwrap());
    }
    for n in 3..=12 {
        all.push(LieType::new(Family::D, n).unwrap());
    }
    for name in ["E6", "E7", "E8", "F4", "G2"] {
        all.push(t(name));
    }
    for ty in &all {
        let defect = root_system(*ty).closure_defect();
        expect(&mut fails, defect.is_empty(), format!("{ty}: {} roots missing", defect.len()));
    }
    verdict(10, &fails, &format!("dimensions and closure for {} types", all.len()));
}
