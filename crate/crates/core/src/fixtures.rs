//! Built-in instances and the small-multigraph corpus used by the
//! verification suites.

use itertools::Itertools;
use std::collections::BTreeSet;

use crate::graph::{EdgeLabel, Multigraph};
use crate::matroid::{FpMatrix, RankOracle};

/// 4 vertices, 4 edges: v1v2, v2v3, v2v4, v1v4 (a triangle with a pendant
/// edge v2v3).
pub fn figure1() -> Multigraph {
    Multigraph::new(4, &[(0, 1), (1, 2), (1, 3), (0, 3)])
}

/// The label used alongside `figure1`: v1v2 ↦ 4, v2v3 ↦ 1, v2v4 ↦ 2,
/// v1v4 ↦ 3.
pub fn example31_label() -> EdgeLabel {
    EdgeLabel::new(vec![4, 1, 2, 3]).unwrap()
}

/// Triangle with a pendant edge, ordered so the pendant (bridge) edge is
/// last: edges a1 = v1v3, a2 = v1v2, a3 = v2v3, a4 = v2v4.
pub fn example71_graph() -> Multigraph {
    Multigraph::new(4, &[(0, 2), (0, 1), (1, 2), (1, 3)])
}

/// 5-wheel: outer cycle p0..p4 plus a hub adjacent to all five.
/// 6 vertices, 10 edges.
pub fn figure2_g1() -> Multigraph {
    Multigraph::new(
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (5, 0),
            (5, 1),
            (5, 2),
            (5, 3),
            (5, 4),
        ],
    )
}

/// Outer cycle p0..p4, hub adjacent to p0, p2, p3, p4, chord p0p3.
/// 6 vertices, 10 edges; not isomorphic to the 5-wheel but with the same
/// classical chromatic polynomial.
pub fn figure2_g2() -> Multigraph {
    Multigraph::new(
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (5, 0),
            (5, 2),
            (5, 3),
            (5, 4),
            (0, 3),
        ],
    )
}

/// Vector matroid over F_2 with 7 columns.
pub fn example61_m1() -> RankOracle {
    RankOracle::linear(
        FpMatrix::new(
            2,
            vec![
                vec![1, 1, 1, 1, 0, 0, 0],
                vec![1, 1, 0, 0, 1, 1, 0],
                vec![0, 0, 1, 0, 1, 0, 1],
            ],
        )
        .unwrap(),
    )
}

/// Vector matroid over F_3 with 7 columns.
pub fn example61_m2() -> RankOracle {
    RankOracle::linear(
        FpMatrix::new(
            3,
            vec![
                vec![2, 1, 0, 1, 0, 1, 2],
                vec![1, 1, 1, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 1, 1, 2],
            ],
        )
        .unwrap(),
    )
}

pub fn triangle() -> Multigraph {
    Multigraph::new(3, &[(0, 1), (1, 2), (0, 2)])
}

fn is_connected(vertices: usize, edges: &[(usize, usize)]) -> bool {
    if vertices == 0 {
        return true;
    }
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(parent: &mut Vec<usize>, mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for &(u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru.max(rv)] = ru.min(rv);
        }
    }
    (0..vertices).filter(|&v| find(&mut parent, v) == v).count() == 1
}

fn canonical_form(vertices: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    (0..vertices)
        .permutations(vertices)
        .map(|perm| {
            let mut mapped: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (perm[u], perm[v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            mapped.sort();
            mapped
        })
        .min()
        .unwrap_or_default()
}

/// Every connected multigraph (loops and parallel edges included) with at
/// most `max_edges` edges, one representative per isomorphism class. Edge
/// order within each representative is the canonical sorted order.
pub fn connected_multigraph_corpus(max_edges: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for vertices in 1..=max_edges + 1 {
        let mut seen: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
        let slots: Vec<(usize, usize)> = (0..vertices)
            .flat_map(|i| (i..vertices).map(move |j| (i, j)))
            .collect();
        let min_edges = vertices.saturating_sub(1);
        for m in min_edges..=max_edges {
            for combo in slots.iter().combinations_with_replacement(m) {
                let edges: Vec<(usize, usize)> = combo.into_iter().copied().collect();
                if !is_connected(vertices, &edges) {
                    continue;
                }
                let canon = canonical_form(vertices, &edges);
                if seen.insert(canon.clone()) {
                    out.push(Multigraph::new(vertices, &canon));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_fixtures_shape() {
        let g = figure1();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.component_count_full(), 1);

        for g in [figure2_g1(), figure2_g2()] {
            assert_eq!(g.vertex_count(), 6);
            assert_eq!(g.edge_count(), 10);
            assert_eq!(g.component_count_full(), 1);
        }
    }

    #[test]
    fn example61_matroids_have_rank_3() {
        assert_eq!(example61_m1().full_rank(), 3);
        assert_eq!(example61_m2().full_rank(), 3);
    }

    #[test]
    fn corpus_is_connected_and_deduplicated() {
        let corpus = connected_multigraph_corpus(3);
        for g in &corpus {
            assert_eq!(g.component_count_full(), 1, "{g:?} not connected");
            assert!(g.edge_count() <= 3);
        }
        // connected multigraphs with ≤ 1 edge: K1, K2, a loop
        let tiny = connected_multigraph_corpus(1);
        assert_eq!(tiny.len(), 3);
        // ≤ 2 edges adds: two loops, loop+edge, doubled edge, path P3
        let two = connected_multigraph_corpus(2);
        assert_eq!(two.len(), 3 + 4);
    }
}
