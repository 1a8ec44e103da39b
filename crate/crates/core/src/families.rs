//! Constructors for standard poset shapes.

use crate::poset::Poset;

fn build(name: &str, labels: Vec<String>, edges: &[(usize, usize)]) -> Poset {
    Poset::from_id_edges(name, labels, edges).expect("family construction is acyclic")
}

/// Equioriented chain `1 → 2 → … → n`.
pub fn chain(n: usize) -> Poset {
    a_type(&vec![true; n.saturating_sub(1)])
}

/// Path `1 - 2 - … - n` where step `i` points right iff `forward[i]`.
pub fn a_type(forward: &[bool]) -> Poset {
    let n = forward.len() + 1;
    let labels = (1..=n).map(|i| i.to_string()).collect();
    let edges: Vec<(usize, usize)> = forward
        .iter()
        .enumerate()
        .map(|(i, &f)| if f { (i, i + 1) } else { (i + 1, i) })
        .collect();
    build(&format!("A{n}"), labels, &edges)
}

/// Two chains from a bottom `s` to a top `t` with `left` and `right`
/// elements strictly between. Both arms must be non-empty.
pub fn bipath(left: usize, right: usize) -> Poset {
    assert!(left >= 1 && right >= 1, "bipath arms must be non-empty");
    let mut labels = vec!["s".to_string(), "t".to_string()];
    let mut edges = Vec::new();
    for (arm, len) in [("x", left), ("y", right)] {
        let mut prev = 0;
        for k in 1..=len {
            labels.push(format!("{arm}{k}"));
            let id = labels.len() - 1;
            edges.push((prev, id));
            prev = id;
        }
        edges.push((prev, 1));
    }
    build(&format!("bipath{left}_{right}"), labels, &edges)
}

/// Star with centre `c` and leaves `1..=k`; arrows point away from the
/// centre when `outward`.
pub fn star(k: usize, outward: bool) -> Poset {
    let mut labels = vec!["c".to_string()];
    labels.extend((1..=k).map(|i| i.to_string()));
    let edges: Vec<(usize, usize)> = (1..=k).map(|i| if outward { (0, i) } else { (i, 0) }).collect();
    build(&format!("star{k}"), labels, &edges)
}

/// Cycle with alternating extrema `t1 < t2 > t3 < t4 …` (odd `t` are
/// sources) and `arms[i]` elements strictly inside the equioriented path
/// between `t(i+1)` and `t(i+2)`, indices taken cyclically.
///
/// `arms.len()` must be even and at least 4; the number of sinks is half
/// of it.
pub fn atilde(arms: &[usize]) -> Poset {
    let k = arms.len();
    assert!(
        k >= 4 && k.is_multiple_of(2),
        "need an even number (at least 4) of arms"
    );
    let mut labels: Vec<String> = (1..=k).map(|i| format!("t{i}")).collect();
    let mut edges = Vec::new();
    for (i, &len) in arms.iter().enumerate() {
        let j = (i + 1) % k;
        // The source is whichever of t(i+1), t(j+1) has an even index here.
        let (src, dst) = if i % 2 == 0 { (i, j) } else { (j, i) };
        let mut prev = src;
        for m in 1..=len {
            labels.push(format!("t{}t{}_{m}", src + 1, dst + 1));
            let id = labels.len() - 1;
            edges.push((prev, id));
            prev = id;
        }
        edges.push((prev, dst));
    }
    build(&format!("atilde{}", labels.len()), labels, &edges)
}

/// Rectangular grid `[0,r) × [0,c)` with the product order.
pub fn grid(r: usize, c: usize) -> Poset {
    let labels = (0..r).flat_map(|i| (0..c).map(move |j| format!("{i}_{j}"))).collect();
    let mut edges = Vec::new();
    for i in 0..r {
        for j in 0..c {
            if i + 1 < r {
                edges.push((i * c + j, (i + 1) * c + j));
            }
            if j + 1 < c {
                edges.push((i * c + j, i * c + j + 1));
            }
        }
    }
    build(&format!("grid{r}x{c}"), labels, &edges)
}
