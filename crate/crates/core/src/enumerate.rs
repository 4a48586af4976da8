//! Labeled small-graph enumeration.

use crate::error::GraphError;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const MAX_ENUMERATION_ORDER: usize = 7;

/// The vertex pairs of `K_n` in graph6 column order; bit `k` of an edge mask
/// selects `pairs(n)[k]`.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Every connected labeled simple graph on `n` vertices, in increasing edge-mask order.
pub fn connected_labeled(n: usize) -> Result<ConnectedLabeled, GraphError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(GraphError::FamilyParameter {
            family: "enumeration",
            requirement: "1 <= n <= 7",
            got: n,
        });
    }
    let pairs = pairs(n);
    let end = 1u64 << pairs.len();
    Ok(ConnectedLabeled {
        n,
        pairs,
        next_mask: 0,
        end,
    })
}

pub struct ConnectedLabeled {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    end: u64,
}

impl ConnectedLabeled {
    fn rows(&self, mask: u64) -> Vec<VertexSet> {
        let mut rows = vec![VertexSet::EMPTY; self.n];
        let mut m = mask;
        while m != 0 {
            let k = m.trailing_zeros() as usize;
            let (i, j) = self.pairs[k];
            rows[i].insert(j);
            rows[j].insert(i);
            m &= m - 1;
        }
        rows
    }
}

impl Iterator for ConnectedLabeled {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            // connectivity needs at least n-1 edges
            if (mask.count_ones() as usize) + 1 < self.n {
                continue;
            }
            let rows = self.rows(mask);
            if rows_connected(&rows) {
                return Some(Graph::from_rows(rows).expect("valid rows"));
            }
        }
        None
    }
}

fn rows_connected(rows: &[VertexSet]) -> bool {
    let all = VertexSet::full(rows.len());
    let mut seen = VertexSet::singleton(0);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let next = frontier
            .iter()
            .fold(VertexSet::EMPTY, |acc, v| acc | rows[v]);
        frontier = next - seen;
        seen |= next;
    }
    seen == all
}

/// All labeled trees on `n >= 2` vertices, decoded from every Prüfer sequence in
/// lexicographic order. Yields `n^(n-2)` trees.
pub fn labeled_trees(n: usize) -> Result<impl Iterator<Item = Graph>, GraphError> {
    if !(2..=10).contains(&n) {
        return Err(GraphError::FamilyParameter {
            family: "labeled trees",
            requirement: "2 <= n <= 10",
            got: n,
        });
    }
    let len = n - 2;
    let count = (n as u64).pow(len as u32);
    Ok((0..count).map(move |mut code| {
        let mut seq = vec![0usize; len];
        for slot in seq.iter_mut().rev() {
            *slot = (code % n as u64) as usize;
            code /= n as u64;
        }
        prufer_decode(n, &seq)
    }))
}

fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).expect("tree")
}
