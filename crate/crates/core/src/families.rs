//! Standard graph families and the named constructions used in the game analysis.

use crate::error::GraphError;
use crate::graph::Graph;
use crate::vertex_set::BITSET_CAP;

fn require(
    family: &'static str,
    requirement: &'static str,
    got: usize,
    ok: bool,
) -> Result<(), GraphError> {
    if ok {
        Ok(())
    } else {
        Err(GraphError::FamilyParameter {
            family,
            requirement,
            got,
        })
    }
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    require("path", "n >= 1", n, n >= 1)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    require("cycle", "n >= 3", n, n >= 3)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    require("complete", "n >= 1", n, n >= 1)?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Edgeless graph on `n` vertices.
pub fn empty(n: usize) -> Result<Graph, GraphError> {
    require("empty", "n >= 1", n, n >= 1)?;
    Graph::new(n, &[])
}

/// `K_{1,n-1}`: `n` vertices in total, centre 0.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    require("star", "n >= 2", n, n >= 2)?;
    Graph::from_edges(n, (1..n).map(|v| (0, v)))
}

/// `K_{1,3}` plus an edge between two leaves. Vertex 0 is the star centre,
/// 1 and 2 the joined leaves, 3 the pendant vertex.
pub fn paw() -> Graph {
    Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2)])
        .expect("paw")
        .with_labels(["c", "l1", "l2", "p"])
}

/// `F_{4k}`: the cycle `C_{3k}` with a closed twin added to every third cycle vertex.
///
/// Cycle vertices are `a1..a{3k}` (indices `0..3k`); the twin `b{i}` (index
/// `3k + i - 1`) copies the closed neighbourhood of `a{3i-1}`, so `F_8` has
/// twins `(a2, b1)` and `(a5, b2)`. The result is cubic.
pub fn family_f(k: usize) -> Result<Graph, GraphError> {
    require("F", "k >= 2", k, k >= 2)?;
    if k > BITSET_CAP / 4 {
        return Err(GraphError::CapacityExceeded(k.saturating_mul(4)));
    }
    let c = 3 * k;
    let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    for i in 0..k {
        let twin = c + i;
        let base = 3 * i + 1;
        edges.extend([(twin, base - 1), (twin, base), (twin, base + 1)]);
    }
    let labels = (1..=c)
        .map(|i| format!("a{i}"))
        .chain((1..=k).map(|i| format!("b{i}")));
    Ok(Graph::new(4 * k, &edges)?.with_labels(labels))
}

/// `D_15`: a four-rung ladder closed off by `z1` and `z2`, a diamond-like block
/// on `y1, y2, v2, y3` with closed twins `y2` and `v2`, and a path
/// `z1 - z3 - y3` closing the outer cycle.
pub fn family_d15() -> Graph {
    const LABELS: [&str; 15] = [
        "x1", "x2", "x3", "x4", "u1", "u2", "u3", "u4", "z1", "z2", "y1", "y2", "v2", "y3", "z3",
    ];
    let id = |name: &str| LABELS.iter().position(|&l| l == name).unwrap();
    let edges = [
        ("z1", "x1"),
        ("x1", "x2"),
        ("x2", "x3"),
        ("x3", "x4"),
        ("x4", "z2"),
        ("z1", "u1"),
        ("u1", "u2"),
        ("u2", "u3"),
        ("u3", "u4"),
        ("u4", "z2"),
        ("x1", "u1"),
        ("x2", "u2"),
        ("x3", "u3"),
        ("x4", "u4"),
        ("z2", "y1"),
        ("y1", "y2"),
        ("y1", "v2"),
        ("y2", "v2"),
        ("y2", "y3"),
        ("v2", "y3"),
        ("z1", "z3"),
        ("z3", "y3"),
    ];
    Graph::from_edges(15, edges.iter().map(|&(a, b)| (id(a), id(b))))
        .expect("D_15")
        .with_labels(LABELS)
}

/// `G_r`: `r` blocks glued along the path `y1, ..., y{r+1}`. Block `i` has
/// edges `w_i x_i`, `x_i y_i`, `y_i z_i`, `z_i y_{i+1}`, `y_{i+1} x_i`.
///
/// Layout: `x1..xr` at `0..r`, `y1..y{r+1}` at `r..2r+1`, `z1..zr`, then `w1..wr`.
pub fn family_g(r: usize) -> Result<Graph, GraphError> {
    require("G", "r >= 3", r, r >= 3)?;
    if r > BITSET_CAP / 4 {
        return Err(GraphError::CapacityExceeded(
            r.saturating_mul(4).saturating_add(1),
        ));
    }
    let x = |i: usize| i - 1;
    let y = |i: usize| r + i - 1;
    let z = |i: usize| 2 * r + i;
    let w = |i: usize| 3 * r + i;
    let edges = (1..=r).flat_map(|i| {
        [
            (w(i), x(i)),
            (x(i), y(i)),
            (y(i), z(i)),
            (z(i), y(i + 1)),
            (y(i + 1), x(i)),
        ]
    });
    let labels = (1..=r)
        .map(|i| format!("x{i}"))
        .chain((1..=r + 1).map(|i| format!("y{i}")))
        .chain((1..=r).map(|i| format!("z{i}")))
        .chain((1..=r).map(|i| format!("w{i}")));
    Ok(Graph::from_edges(4 * r + 1, edges)?.with_labels(labels))
}
