//! Exact domination numbers by exhaustive search over subsets of increasing size.
//!
//! Within a cardinality, subsets are visited in increasing bitmask order, so
//! the returned witness is the numerically smallest optimal set.

use serde::Serialize;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::vertex_set::{KSubsets, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Optimum {
    pub size: usize,
    pub witness: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub gamma: Optimum,
    /// `None` when the graph has an isolated vertex.
    pub gamma_t: Option<Optimum>,
    /// `None` when the graph is disconnected.
    pub gamma_c: Option<Optimum>,
}

pub fn is_dominating(g: &Graph, set: VertexSet) -> bool {
    g.closed_nbhd_of(set) == g.vertices()
}

pub fn is_total_dominating(g: &Graph, set: VertexSet) -> bool {
    g.open_nbhd_of(set) == g.vertices()
}

pub fn is_connected_dominating(g: &Graph, set: VertexSet) -> bool {
    !set.is_empty() && is_dominating(g, set) && g.induces_connected(set)
}

fn minimum<F: Fn(VertexSet) -> bool>(g: &Graph, accept: F) -> Option<Optimum> {
    let n = g.order();
    (1..=n).find_map(|k| {
        KSubsets::new(n, k)
            .find(|&s| accept(s))
            .map(|witness| Optimum { size: k, witness })
    })
}

pub fn domination_number(g: &Graph) -> Optimum {
    minimum(g, |s| is_dominating(g, s)).expect("V(G) dominates")
}

pub fn total_domination_number(g: &Graph) -> Result<Optimum, GraphError> {
    if g.min_degree() == 0 {
        return Err(GraphError::IsolatedVertex);
    }
    Ok(minimum(g, |s| is_total_dominating(g, s)).expect("V(G) totally dominates"))
}

pub fn connected_domination_number(g: &Graph) -> Result<Optimum, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    Ok(minimum(g, |s| is_connected_dominating(g, s)).expect("V(G) is a connected dominating set"))
}

/// Every connected dominating set of size `k`, in increasing bitmask order.
pub fn connected_dominating_sets_of_size(g: &Graph, k: usize) -> Vec<VertexSet> {
    KSubsets::new(g.order(), k)
        .filter(|&s| is_connected_dominating(g, s))
        .collect()
}

pub fn invariant_report(g: &Graph) -> InvariantReport {
    InvariantReport {
        gamma: domination_number(g),
        gamma_t: total_domination_number(g).ok(),
        gamma_c: connected_domination_number(g).ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::connected_labeled;
    use crate::families::*;

    /// Plain scan over all 2^n masks, independent of the k-subset iterator.
    fn brute_min(g: &Graph, pred: impl Fn(VertexSet) -> bool) -> usize {
        (1u64..1 << g.order())
            .map(VertexSet::from_bits)
            .filter(|&s| pred(s))
            .map(VertexSet::len)
            .min()
            .unwrap()
    }

    #[test]
    fn domination_examples() {
        assert_eq!(domination_number(&complete(5).unwrap()).size, 1);
        assert_eq!(domination_number(&cycle(6).unwrap()).size, 2);
        assert_eq!(domination_number(&path(7).unwrap()).size, 3);
    }

    #[test]
    fn total_domination_examples() {
        assert_eq!(
            total_domination_number(&complete(2).unwrap()).unwrap().size,
            2
        );
        assert_eq!(total_domination_number(&star(5).unwrap()).unwrap().size, 2);
        assert_eq!(total_domination_number(&path(4).unwrap()).unwrap().size, 2);
        assert_eq!(
            total_domination_number(&complete(1).unwrap()),
            Err(GraphError::IsolatedVertex)
        );
    }

    #[test]
    fn connected_domination_examples() {
        let g3 = family_g(3).unwrap();
        let opt = connected_domination_number(&g3).unwrap();
        assert_eq!(opt.size, 5);
        let xy: VertexSet = ["x1", "x2", "x3", "y2", "y3"]
            .iter()
            .map(|l| g3.vertex_by_label(l).unwrap())
            .collect();
        assert_eq!(connected_dominating_sets_of_size(&g3, 5), vec![xy]);
        assert_eq!(
            connected_domination_number(&complete(4).unwrap())
                .unwrap()
                .size,
            1
        );

        let k2 = complete(2).unwrap();
        let two_k2 = k2.direct_product(&k2).unwrap();
        assert_eq!(
            connected_domination_number(&two_k2),
            Err(GraphError::Disconnected)
        );
    }

    #[test]
    fn corona_connected_domination_is_base_order() {
        let k1 = complete(1).unwrap();
        let k2 = complete(2).unwrap();
        for base in [
            path(2).unwrap(),
            path(3).unwrap(),
            cycle(4).unwrap(),
            star(4).unwrap(),
        ] {
            let hs: Vec<Graph> = (0..base.order())
                .map(|i| if i % 2 == 0 { k1.clone() } else { k2.clone() })
                .collect();
            let g = base.generalized_corona(&hs).unwrap();
            assert_eq!(connected_domination_number(&g).unwrap().size, base.order());
        }
    }

    #[test]
    fn witness_is_smallest_mask() {
        // P_4: {1,2} = 0b0110 is the only 2-set that is connected and dominating
        let opt = connected_domination_number(&path(4).unwrap()).unwrap();
        assert_eq!(opt.witness, VertexSet::from_iter([1, 2]));
        // C_6: smallest dominating pair by mask is {0,3}
        assert_eq!(
            domination_number(&cycle(6).unwrap()).witness,
            VertexSet::from_iter([0, 3])
        );
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        for n in 2..=5 {
            for g in connected_labeled(n).unwrap() {
                let r = invariant_report(&g);
                assert_eq!(r.gamma.size, brute_min(&g, |s| is_dominating(&g, s)));
                assert_eq!(
                    r.gamma_t.unwrap().size,
                    brute_min(&g, |s| is_total_dominating(&g, s))
                );
                let gc = r.gamma_c.unwrap();
                assert_eq!(gc.size, brute_min(&g, |s| is_connected_dominating(&g, s)));
                assert!(is_dominating(&g, r.gamma.witness));
                assert!(is_total_dominating(&g, r.gamma_t.unwrap().witness));
                assert!(is_connected_dominating(&g, gc.witness));
                assert!(r.gamma.size <= r.gamma_t.unwrap().size);
                assert!(r.gamma.size <= gc.size);
            }
        }
    }
}
