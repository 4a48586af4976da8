use std::fmt;

use crate::error::GraphError;
use crate::vertex_set::{VertexSet, BITSET_CAP};

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency is kept as one [`VertexSet`] per vertex holding its open
/// neighbourhood. Optional labels are carried for display only and are
/// ignored by equality.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::from_edges(n, edges.iter().copied())
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, labels: None })
    }

    /// Builds a graph from adjacency rows, validating symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = rows.len();
        check_order(n)?;
        let all = VertexSet::full(n);
        for (v, row) in rows.iter().enumerate() {
            if !row.is_subset(all) {
                let bad = (*row - all).first().unwrap_or(0);
                return Err(GraphError::VertexOutOfRange(v, bad, n));
            }
            if row.contains(v) {
                return Err(GraphError::SelfLoop(v));
            }
            for u in row.iter() {
                if !rows[u].contains(v) {
                    return Err(GraphError::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph {
            adj: rows,
            labels: None,
        })
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        assert_eq!(labels.len(), self.order(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.len()).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    /// `N(v)`.
    #[inline]
    pub fn open_nbhd(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N[v]`.
    #[inline]
    pub fn closed_nbhd(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// `N(S)`, the union of open neighbourhoods.
    pub fn open_nbhd_of(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    /// `N[S]`.
    pub fn closed_nbhd_of(&self, set: VertexSet) -> VertexSet {
        self.open_nbhd_of(set) | set
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Index of the vertex carrying `label`, if labels are present.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start) & within;
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.open_nbhd_of(frontier) & within;
            frontier = next - seen;
            seen |= next;
        }
        seen
    }

    /// Whether the subgraph induced by `set` is connected. The empty set counts as connected.
    pub fn induces_connected(&self, set: VertexSet) -> bool {
        match set.first() {
            None => true,
            Some(v) => self.component_within(v, set) == set,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.induces_connected(self.vertices())
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.order() && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|r| r.len() == n - 1)
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn has_universal_vertex(&self) -> bool {
        let all = self.vertices();
        (0..self.order()).any(|v| self.closed_nbhd(v) == all)
    }

    /// An ordered pair `(u, v)` of distinct vertices with `N[u] ⊆ N[v]`, if one exists.
    ///
    /// Only adjacent pairs can contain one another, so each edge is checked in
    /// both directions.
    pub fn inclusive_pair(&self) -> Option<(usize, usize)> {
        self.edges().find_map(|(u, v)| {
            let (nu, nv) = (self.closed_nbhd(u), self.closed_nbhd(v));
            if nu.is_subset(nv) {
                Some((u, v))
            } else if nv.is_subset(nu) {
                Some((v, u))
            } else {
                None
            }
        })
    }

    pub fn is_non_inclusive(&self) -> bool {
        self.inclusive_pair().is_none()
    }

    /// Cartesian product. Vertex `(g, h)` gets index `g * n(H) + h`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.product(other, |g_adj, g_eq, h_adj, h_eq| {
            (g_adj && h_eq) || (g_eq && h_adj)
        })
    }

    /// Direct (tensor) product. Vertex `(g, h)` gets index `g * n(H) + h`.
    pub fn direct_product(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.product(other, |g_adj, _, h_adj, _| g_adj && h_adj)
    }

    fn product<F>(&self, other: &Graph, rule: F) -> Result<Graph, GraphError>
    where
        F: Fn(bool, bool, bool, bool) -> bool,
    {
        let (ng, nh) = (self.order(), other.order());
        check_order(ng * nh)?;
        let mut rows = vec![VertexSet::EMPTY; ng * nh];
        for g in 0..ng {
            for h in 0..nh {
                let row = &mut rows[g * nh + h];
                for g2 in 0..ng {
                    for h2 in 0..nh {
                        if rule(
                            self.has_edge(g, g2),
                            g == g2,
                            other.has_edge(h, h2),
                            h == h2,
                        ) {
                            row.insert(g2 * nh + h2);
                        }
                    }
                }
            }
        }
        Graph::from_rows(rows)
    }

    /// Generalized corona `G ⊙ (H_1, ..., H_n)`: the disjoint union of `G` and
    /// every `H_i`, with each vertex of `H_i` joined to vertex `i` of `G`.
    ///
    /// `G` keeps indices `0..n(G)`; the copies of `H_1, H_2, ...` follow in order.
    pub fn generalized_corona(&self, attached: &[Graph]) -> Result<Graph, GraphError> {
        let n = self.order();
        if attached.len() != n {
            return Err(GraphError::CoronaArity {
                expected: n,
                got: attached.len(),
            });
        }
        let total = n + attached.iter().map(Graph::order).sum::<usize>();
        check_order(total)?;
        let mut edges: Vec<(usize, usize)> = self.edges().collect();
        let mut offset = n;
        for (i, h) in attached.iter().enumerate() {
            edges.extend(h.edges().map(|(a, b)| (a + offset, b + offset)));
            edges.extend((0..h.order()).map(|a| (i, a + offset)));
            offset += h.order();
        }
        Graph::new(total, &edges)
    }

    /// The corona `G ⊙ K_1`: one pendant vertex per vertex of `G`.
    pub fn corona(&self) -> Result<Graph, GraphError> {
        let k1 = Graph::new(1, &[]).expect("K_1");
        self.generalized_corona(&vec![k1; self.order()])
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        assert_eq!(perm.len(), self.order());
        Graph::new(
            self.order(),
            &self
                .edges()
                .map(|(u, v)| (perm[u], perm[v]))
                .collect::<Vec<_>>(),
        )
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n == 0 {
        Err(GraphError::Empty)
    } else if n > BITSET_CAP {
        Err(GraphError::CapacityExceeded(n))
    } else {
        Ok(())
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}-{}", self.label(u), self.label(v))?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn build_path_and_collapse_duplicates() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.size(), 2);
        let k2 = Graph::new(2, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(k2.size(), 1);
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange(0, 2, 2))
        );
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::new(65, &[]), Err(GraphError::CapacityExceeded(65)));
        assert_eq!(Graph::new(0, &[]), Err(GraphError::Empty));
        assert!(Graph::new(64, &[(0, 63)]).is_ok());
    }

    #[test]
    fn from_rows_rejects_bad_rows() {
        let rows = vec![VertexSet::singleton(0)];
        assert_eq!(Graph::from_rows(rows), Err(GraphError::SelfLoop(0)));
        let rows = vec![VertexSet::singleton(3), VertexSet::EMPTY];
        assert!(matches!(
            Graph::from_rows(rows),
            Err(GraphError::VertexOutOfRange(0, 3, 2))
        ));
    }

    #[test]
    fn cartesian_small_cases() {
        let k2 = complete(2).unwrap();
        let c4 = k2.cartesian_product(&k2).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(c4.size(), 4);
        assert!(c4.degrees().iter().all(|&d| d == 2));
        assert!(c4.is_connected());

        // P_2 □ P_3: 1*3 + 2*2 = 7 edges
        let ladder = path(2)
            .unwrap()
            .cartesian_product(&path(3).unwrap())
            .unwrap();
        assert_eq!((ladder.order(), ladder.size()), (6, 7));

        // C_3 □ K_2: 3*2 + 3*1 = 9 edges
        let prism = cycle(3).unwrap().cartesian_product(&k2).unwrap();
        assert_eq!((prism.order(), prism.size()), (6, 9));
        assert!(prism.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn product_indexing_is_row_major() {
        let p2 = path(2).unwrap();
        let p3 = path(3).unwrap();
        let g = p2.cartesian_product(&p3).unwrap();
        // (0,1) ~ (0,2) and (0,1) ~ (1,1)
        assert!(g.has_edge(1, 2));
        assert!(g.has_edge(1, 4));
        assert!(!g.has_edge(0, 4));
    }

    #[test]
    fn direct_small_cases() {
        let k2 = complete(2).unwrap();
        let c10 = cycle(5).unwrap().direct_product(&k2).unwrap();
        assert_eq!((c10.order(), c10.size()), (10, 10));
        assert!(c10.is_connected());
        assert!(c10.degrees().iter().all(|&d| d == 2));

        let two_k2 = k2.direct_product(&k2).unwrap();
        assert_eq!(two_k2.size(), 2);
        assert!(!two_k2.is_connected());

        // paw × K_2: 2 * 4 * 1 = 8 edges
        let pk = paw().direct_product(&k2).unwrap();
        assert_eq!((pk.order(), pk.size()), (8, 8));
        assert!(pk.is_connected());
    }

    #[test]
    fn product_capacity() {
        let big = path(9).unwrap();
        assert_eq!(
            big.cartesian_product(&big),
            Err(GraphError::CapacityExceeded(81))
        );
        assert!(path(8).unwrap().direct_product(&path(8).unwrap()).is_ok());
    }

    #[test]
    fn corona_cases() {
        let k1 = complete(1).unwrap();
        let k2 = complete(2).unwrap();
        let p4 = k2.generalized_corona(&[k1.clone(), k1.clone()]).unwrap();
        assert!(p4.is_tree());
        assert_eq!(p4.order(), 4);
        let mut degs = p4.degrees();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 2, 2]);

        let c3 = cycle(3).unwrap();
        let sun = c3
            .generalized_corona(&[k1.clone(), k1.clone(), k1.clone()])
            .unwrap();
        assert_eq!(sun, c3.corona().unwrap());
        assert_eq!(sun.order(), 6);
        for v in 0..3 {
            assert_eq!((sun.open_nbhd(v) & sun.leaves()).len(), 1);
        }

        let tri = k1.generalized_corona(&[path(2).unwrap()]).unwrap();
        assert_eq!(tri, complete(3).unwrap());

        assert_eq!(
            k2.generalized_corona(&[k1]),
            Err(GraphError::CoronaArity {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn connectivity() {
        assert!(complete(1).unwrap().is_connected());
        assert!(family_g(3).unwrap().is_connected());
        let k2 = complete(2).unwrap();
        assert!(!k2.direct_product(&k2).unwrap().is_connected());
    }

    #[test]
    fn non_inclusive_cases() {
        let c5 = cycle(5).unwrap();
        assert!(c5.cartesian_product(&c5).unwrap().is_non_inclusive());

        let f8 = family_f(2).unwrap();
        let (u, v) = f8.inclusive_pair().unwrap();
        assert_eq!(f8.closed_nbhd(u), f8.closed_nbhd(v));

        let s4 = star(4).unwrap();
        let (u, v) = s4.inclusive_pair().unwrap();
        assert_eq!((u, v), (1, 0));
        assert!(complete(1).unwrap().is_non_inclusive());
    }

    #[test]
    fn universal_vertex() {
        assert!(star(5).unwrap().has_universal_vertex());
        assert!(!cycle(4).unwrap().has_universal_vertex());
        // the paw's degree-3 vertex is the K_{1,3} centre and sees everything
        let p = paw();
        assert_eq!(p.closed_nbhd(0), p.vertices());
        assert!(p.has_universal_vertex());
    }

    #[test]
    fn induced_connectivity() {
        let p5 = path(5).unwrap();
        assert!(p5.induces_connected(VertexSet::from_iter([1, 2, 3])));
        assert!(!p5.induces_connected(VertexSet::from_iter([0, 2])));
        assert!(p5.induces_connected(VertexSet::EMPTY));
    }
}
