//! Root systems in Bourbaki labeling, node subsets and subdiagram recognition.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::InvalidType(format!("unknown family '{other}'"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Largest rank supported by the bitmask node sets.
pub const MAX_RANK: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok || rank > MAX_RANK {
            return Err(Error::InvalidType(format!(
                "rank {rank} is not allowed for family {family}"
            )));
        }
        Ok(LieType { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// dim g from the closed formulas.
    pub fn dimension(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let Some(first) = chars.next() else {
            return Err(Error::InvalidType("empty type".into()));
        };
        let family: Family = first.to_string().parse()?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest
            .parse()
            .map_err(|_| Error::InvalidType(format!("cannot read rank in '{s}'")))?;
        LieType::new(family, rank)
    }
}

impl Serialize for LieType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LieType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A set of simple-root nodes. Bit `i` stands for the 1-based node `i + 1`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct NodeSet(u64);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn full(rank: usize) -> Self {
        if rank >= 64 {
            NodeSet(u64::MAX)
        } else {
            NodeSet((1u64 << rank) - 1)
        }
    }

    pub fn single(node: usize) -> Self {
        debug_assert!((1..=MAX_RANK).contains(&node));
        NodeSet(1u64 << (node - 1))
    }

    pub fn from_bits(bits: u64) -> Self {
        NodeSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, node: usize) -> bool {
        (1..=MAX_RANK).contains(&node) && self.0 & (1u64 << (node - 1)) != 0
    }

    pub fn insert(&mut self, node: usize) {
        self.0 |= NodeSet::single(node).0;
    }

    pub fn remove(&mut self, node: usize) {
        self.0 &= !NodeSet::single(node).0;
    }

    pub fn with(mut self, node: usize) -> Self {
        self.insert(node);
        self
    }

    pub fn without(mut self, node: usize) -> Self {
        self.remove(node);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: NodeSet) -> Self {
        NodeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: NodeSet) -> Self {
        NodeSet(self.0 & other.0)
    }

    pub fn minus(self, other: NodeSet) -> Self {
        NodeSet(self.0 & !other.0)
    }

    /// Nodes in increasing order, 1-based.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |i| bits & (1u64 << i) != 0).map(|i| i + 1)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn max_node(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = NodeSet> {
        let nodes = self.to_vec();
        let count = 1u64 << nodes.len();
        (0..count).map(move |mask| {
            let mut s = NodeSet::EMPTY;
            for (k, &node) in nodes.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    s.insert(node);
                }
            }
            s
        })
    }

    /// Parse "a1,a4", "1,4", "{a1, a4}" or an empty string / "-" for the empty set.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches(['{', '['])
            .trim_end_matches(['}', ']'])
            .trim();
        let mut set = NodeSet::EMPTY;
        if body.is_empty() || body == "-" {
            return Ok(set);
        }
        for tok in body.split(',') {
            let tok = tok.trim();
            let digits = tok
                .strip_prefix(['a', 'A'])
                .map(|t| t.strip_prefix('_').unwrap_or(t))
                .unwrap_or(tok);
            let node: usize = digits
                .parse()
                .map_err(|_| Error::InvalidNodes(format!("cannot read node '{tok}'")))?;
            if node == 0 || node > rank {
                return Err(Error::InvalidNodes(format!(
                    "node {node} outside 1..={rank}"
                )));
            }
            if set.contains(node) {
                return Err(Error::InvalidNodes(format!("node {node} repeated")));
            }
            set.insert(node);
        }
        Ok(set)
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = NodeSet::EMPTY;
        for n in iter {
            s.insert(n);
        }
        s
    }
}

impl Ord for NodeSet {
    /// Lexicographic on the increasing node lists.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for NodeSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|n| format!("a{n}")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for NodeSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for NodeSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let nodes = Vec::<usize>::deserialize(deserializer)?;
        let mut set = NodeSet::EMPTY;
        for n in nodes {
            if n == 0 || n > MAX_RANK {
                return Err(serde::de::Error::custom(format!("node {n} out of range")));
            }
            set.insert(n);
        }
        Ok(set)
    }
}

/// A root written in the basis of simple roots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub coeffs: Vec<i32>,
}

impl Root {
    pub fn simple(rank: usize, node: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[node - 1] = 1;
        Root { coeffs }
    }

    pub fn height(&self) -> i32 {
        self.coeffs.iter().sum()
    }

    pub fn support(&self) -> NodeSet {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Whether some node of `set` has a nonzero coefficient.
    pub fn meets(&self, set: NodeSet) -> bool {
        set.iter().any(|n| self.coeffs[n - 1] != 0)
    }

    /// β(h) for the semisimple element with the given node values.
    pub fn pair(&self, weights: &[u8]) -> i32 {
        self.coeffs
            .iter()
            .zip(weights)
            .map(|(&c, &w)| c * i32::from(w))
            .sum()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            match c {
                0 => {}
                1 => terms.push(format!("a{}", i + 1)),
                _ => terms.push(format!("{c}a{}", i + 1)),
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A bond of the Dynkin graph between two 1-based nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bond {
    pub a: usize,
    pub b: usize,
    pub multiplicity: u8,
    /// The longer end for multiple bonds; the arrow points away from it.
    pub longer: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    lie_type: LieType,
    gram: Vec<Vec<i32>>,
    cartan: Vec<Vec<i32>>,
    positive: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
    bonds: Vec<Bond>,
    neighbors: Vec<NodeSet>,
}

/// Integer multiples of the Gram matrix of the simple roots, Bourbaki order.
fn gram_matrix(t: LieType) -> Vec<Vec<i32>> {
    let n = t.rank();
    let mut g = vec![vec![0; n]; n];
    let link = |g: &mut Vec<Vec<i32>>, i: usize, j: usize, v: i32| {
        g[i - 1][j - 1] = v;
        g[j - 1][i - 1] = v;
    };
    match t.family() {
        Family::A => {
            for i in 1..=n {
                g[i - 1][i - 1] = 2;
            }
            for i in 1..n {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::B => {
            for i in 1..n {
                g[i - 1][i - 1] = 4;
                link(&mut g, i, i + 1, -2);
            }
            g[n - 1][n - 1] = 2;
        }
        Family::C => {
            for i in 1..n {
                g[i - 1][i - 1] = 2;
            }
            for i in 1..n - 1 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 1, n, -2);
            g[n - 1][n - 1] = 4;
        }
        Family::D => {
            for i in 1..=n {
                g[i - 1][i - 1] = 2;
            }
            for i in 1..n - 1 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 2, n, -1);
        }
        Family::E => {
            for i in 1..=n {
                g[i - 1][i - 1] = 2;
            }
            link(&mut g, 1, 3, -1);
            link(&mut g, 2, 4, -1);
            for i in 3..n {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::F => {
            g = vec![
                vec![4, -2, 0, 0],
                vec![-2, 4, -2, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ];
        }
        Family::G => {
            g = vec![vec![2, -3], vec![-3, 6]];
        }
    }
    g
}

/// Roots reachable from the simple roots by the root-string rule, ordered by
/// height and then by coefficient vector.
fn close_under_strings(cartan: &[Vec<i32>]) -> Vec<Root> {
    let n = cartan.len();
    let mut known: HashSet<Vec<i32>> = HashSet::new();
    let mut layer: Vec<Vec<i32>> = (1..=n).map(|i| Root::simple(n, i).coeffs).collect();
    let mut out = Vec::new();
    while !layer.is_empty() {
        layer.sort();
        for r in &layer {
            known.insert(r.clone());
        }
        let mut next: Vec<Vec<i32>> = Vec::new();
        let mut seen_next: HashSet<Vec<i32>> = HashSet::new();
        for beta in &layer {
            for i in 0..n {
                if let Some(up) = string_step(cartan, beta, i, &known) {
                    if seen_next.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        out.extend(layer.drain(..).map(|coeffs| Root { coeffs }));
        layer = next;
    }
    out
}

/// β + α_i when it is a root, judged from the roots of lower height in `known`.
fn string_step(
    cartan: &[Vec<i32>],
    beta: &[i32],
    i: usize,
    known: &HashSet<Vec<i32>>,
) -> Option<Vec<i32>> {
    let mut p = 0;
    let mut down = beta.to_vec();
    loop {
        down[i] -= 1;
        if down[i] < 0 || !known.contains(&down) {
            break;
        }
        p += 1;
    }
    let pairing: i32 = (0..beta.len()).map(|j| beta[j] * cartan[i][j]).sum();
    let q = p - pairing;
    if q > 0 {
        let mut up = beta.to_vec();
        up[i] += 1;
        Some(up)
    } else {
        None
    }
}

pub fn build_root_system(t: LieType) -> RootSystem {
    let n = t.rank();
    let gram = gram_matrix(t);
    let cartan: Vec<Vec<i32>> = (0..n)
        .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
        .collect();
    let positive = close_under_strings(&cartan);
    let index = positive
        .iter()
        .enumerate()
        .map(|(k, r)| (r.coeffs.clone(), k))
        .collect();
    let mut bonds = Vec::new();
    let mut neighbors = vec![NodeSet::EMPTY; n];
    for i in 0..n {
        for j in i + 1..n {
            if cartan[i][j] == 0 {
                continue;
            }
            let multiplicity = (cartan[i][j] * cartan[j][i]) as u8;
            let longer = match gram[i][i].cmp(&gram[j][j]) {
                std::cmp::Ordering::Greater => Some(i + 1),
                std::cmp::Ordering::Less => Some(j + 1),
                std::cmp::Ordering::Equal => None,
            };
            bonds.push(Bond {
                a: i + 1,
                b: j + 1,
                multiplicity,
                longer,
            });
            neighbors[i].insert(j + 1);
            neighbors[j].insert(i + 1);
        }
    }
    RootSystem {
        lie_type: t,
        gram,
        cartan,
        positive,
        index,
        bonds,
        neighbors,
    }
}

/// Shared, memoized root systems.
pub fn root_system(t: LieType) -> Arc<RootSystem> {
    static CACHE: OnceLock<Mutex<HashMap<LieType, Arc<RootSystem>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
    guard
        .entry(t)
        .or_insert_with(|| Arc::new(build_root_system(t)))
        .clone()
}

impl RootSystem {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// ⟨α_i^∨, α_j⟩ for 1-based nodes.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i32 {
        self.cartan[i - 1][j - 1]
    }

    /// Squared length of α_i in the integer normalization.
    pub fn length(&self, i: usize) -> i32 {
        self.gram[i - 1][i - 1]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn is_positive_root(&self, coeffs: &[i32]) -> bool {
        self.index.contains_key(coeffs)
    }

    pub fn highest_root(&self) -> &Root {
        self.positive.last().expect("root systems are nonempty")
    }

    /// rank + 2|Φ⁺|.
    pub fn dimension(&self) -> usize {
        self.rank() + 2 * self.positive.len()
    }

    pub fn all_nodes(&self) -> NodeSet {
        NodeSet::full(self.rank())
    }

    pub fn bonds(&self) -> &[Bond] {
        &self.bonds
    }

    pub fn neighbors(&self, node: usize) -> NodeSet {
        self.neighbors[node - 1]
    }

    /// Roots the string rule would add on top of the stored ones. Empty when
    /// the stored set is closed.
    pub fn closure_defect(&self) -> Vec<Root> {
        let known: HashSet<Vec<i32>> = self.positive.iter().map(|r| r.coeffs.clone()).collect();
        let mut extra = Vec::new();
        for beta in &self.positive {
            for i in 0..self.rank() {
                if let Some(up) = string_step(&self.cartan, &beta.coeffs, i, &known) {
                    if !known.contains(&up) {
                        extra.push(Root { coeffs: up });
                    }
                }
            }
        }
        extra.sort();
        extra.dedup();
        extra
    }

    /// Connected components of the induced subgraph on `nodes`, each as a set,
    /// ordered by least node.
    pub fn components(&self, nodes: NodeSet) -> Vec<NodeSet> {
        let mut left = nodes;
        let mut out = Vec::new();
        while let Some(start) = left.iter().next() {
            let comp = self.grow(NodeSet::single(start), nodes);
            left = left.minus(comp);
            out.push(comp);
        }
        out
    }

    fn grow(&self, seed: NodeSet, allowed: NodeSet) -> NodeSet {
        let mut comp = seed;
        let mut queue: VecDeque<usize> = seed.iter().collect();
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v).intersection(allowed).minus(comp).iter() {
                comp.insert(w);
                queue.push_back(w);
            }
        }
        comp
    }

    pub fn is_connected(&self, nodes: NodeSet) -> bool {
        nodes.is_empty() || self.components(nodes).len() == 1
    }
}

/// A recognized connected subdiagram with one Bourbaki labeling.
/// `labeling[k]` is the ambient node carrying standard label `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubdiagramId {
    pub nodes: NodeSet,
    pub classified_type: LieType,
    pub labeling: Vec<usize>,
}

impl SubdiagramId {
    /// Image of a set of standard labels.
    pub fn map_labels(&self, labels: NodeSet) -> NodeSet {
        labels.iter().map(|l| self.labeling[l - 1]).collect()
    }

    /// Standard labels of a set of ambient nodes inside the component.
    pub fn labels_of(&self, ambient: NodeSet) -> NodeSet {
        self.labeling
            .iter()
            .enumerate()
            .filter(|(_, &v)| ambient.contains(v))
            .map(|(k, _)| k + 1)
            .collect()
    }
}

/// Splits the induced subdiagram into components and lists every Bourbaki
/// labeling of each component.
pub fn classify_subdiagram(rs: &RootSystem, nodes: NodeSet) -> Vec<SubdiagramId> {
    let mut out = Vec::new();
    for comp in rs.components(nodes) {
        let t = component_type(rs, comp);
        let std = root_system(t);
        for labeling in isomorphisms(&std, rs, comp) {
            out.push(SubdiagramId {
                nodes: comp,
                classified_type: t,
                labeling,
            });
        }
    }
    out
}

fn component_type(rs: &RootSystem, comp: NodeSet) -> LieType {
    let m = comp.len();
    let ambient_c = rs.lie_type().family() == Family::C;
    let mut candidates: Vec<Family> = vec![Family::A];
    if m >= 2 {
        if m == 2 && ambient_c {
            candidates.push(Family::C);
        } else {
            candidates.push(Family::B);
            if m >= 3 {
                candidates.push(Family::C);
            }
        }
    }
    if m >= 4 {
        candidates.push(Family::D);
    }
    if (6..=8).contains(&m) {
        candidates.push(Family::E);
    }
    if m == 4 {
        candidates.push(Family::F);
    }
    if m == 2 {
        candidates.push(Family::G);
    }
    for family in candidates {
        let t = LieType::new(family, m).expect("candidate ranks are valid");
        if !isomorphisms(&root_system(t), rs, comp).is_empty() {
            return t;
        }
    }
    unreachable!("every connected subdiagram of a Dynkin diagram is of finite type")
}

/// All bijections φ from the labels of `std` onto `comp` with matching Cartan entries.
fn isomorphisms(std: &RootSystem, rs: &RootSystem, comp: NodeSet) -> Vec<Vec<usize>> {
    let m = std.rank();
    if comp.len() != m {
        return Vec::new();
    }
    let targets = comp.to_vec();
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::with_capacity(m);
    let mut used = NodeSet::EMPTY;
    extend_iso(std, rs, &targets, &mut current, &mut used, &mut out);
    out
}

fn extend_iso(
    std: &RootSystem,
    rs: &RootSystem,
    targets: &[usize],
    current: &mut Vec<usize>,
    used: &mut NodeSet,
    out: &mut Vec<Vec<usize>>,
) {
    let k = current.len();
    if k == std.rank() {
        out.push(current.clone());
        return;
    }
    for &v in targets {
        if used.contains(v) {
            continue;
        }
        if rs.cartan_entry(v, v) != 2 {
            continue;
        }
        let fits = current.iter().enumerate().all(|(l, &u)| {
            std.cartan_entry(k + 1, l + 1) == rs.cartan_entry(v, u)
                && std.cartan_entry(l + 1, k + 1) == rs.cartan_entry(u, v)
        });
        if fits {
            current.push(v);
            used.insert(v);
            extend_iso(std, rs, targets, current, used, out);
            used.remove(v);
            current.pop();
        }
    }
}

/// The largest connected subdiagram containing `seed` whose only marked nodes
/// are those of `seed`. Empty when `seed` cannot be joined through unmarked nodes.
pub fn maximal_patch(rs: &RootSystem, marked: NodeSet, seed: NodeSet) -> Result<NodeSet> {
    if seed.is_empty() {
        return Err(Error::InvalidNodes("empty seed".into()));
    }
    if !seed.is_subset(marked) {
        return Err(Error::InvalidNodes(format!(
            "seed {seed} is not contained in the marks {marked}"
        )));
    }
    let allowed = rs.all_nodes().minus(marked).union(seed);
    let patch = rs.grow(seed, allowed);
    if rs.is_connected(patch) {
        Ok(patch)
    } else {
        Ok(NodeSet::EMPTY)
    }
}
