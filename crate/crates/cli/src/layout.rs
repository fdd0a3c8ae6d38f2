use nilorb_core::{Family, LieType};

/// Bond drawn between consecutive nodes of the main line.
fn bond(t: LieType, a: usize) -> &'static str {
    let n = t.rank();
    match (t.family(), a) {
        (Family::B, x) if x == n - 1 => " ⇒ ",
        (Family::C, x) if x == n - 1 => " ⇐ ",
        (Family::F, 2) => " ⇒ ",
        (Family::G, 1) => " ⇚ ",
        _ => " - ",
    }
}

/// Nodes on the main line and the branch node with the main-line node it
/// hangs from.
fn shape(t: LieType) -> (Vec<usize>, Option<(usize, usize)>) {
    let n = t.rank();
    match t.family() {
        Family::D => ((1..n).collect(), Some((n, n - 2))),
        Family::E => {
            let mut line = vec![1];
            line.extend(3..=n);
            (line, Some((2, 4)))
        }
        _ => ((1..=n).collect(), None),
    }
}

/// Renders one label per node in diagram order; a branch node goes on a
/// second line under the node it is attached to.
pub fn render<S: AsRef<str>>(t: LieType, labels: &[S]) -> String {
    let (line, branch) = shape(t);
    let mut top = String::new();
    let mut column = None;
    for (k, &v) in line.iter().enumerate() {
        if k > 0 {
            top.push_str(bond(t, line[k - 1]));
        }
        if branch.is_some_and(|(_, at)| at == v) {
            column = Some(top.chars().count());
        }
        top.push_str(labels[v - 1].as_ref());
    }
    match (branch, column) {
        (Some((b, _)), Some(col)) => {
            let pad = " ".repeat(col);
            format!("{top}\n{pad}|\n{pad}{}", labels[b - 1].as_ref())
        }
        _ => top,
    }
}

pub fn weights_tuple(weights: &[u8]) -> String {
    let inner: Vec<String> = weights.iter().map(u8::to_string).collect();
    format!("({})", inner.join(","))
}

pub fn indent(text: &str, by: usize) -> String {
    let pad = " ".repeat(by);
    text.lines().map(|l| format!("{pad}{l}")).collect::<Vec<_>>().join("\n")
}
